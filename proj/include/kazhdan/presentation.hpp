#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kazhdan/graph.hpp"

namespace kazhdan::presentation {

// One letter g^k of a free-group word; `gen` indexes Presentation::generators.
struct Letter {
    std::size_t gen;
    long long exp;
};

using Word = std::vector<Letter>;

Word letter(std::size_t gen, long long exp = 1);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word commutator(const Word& a, const Word& b);  // a b a⁻¹ b⁻¹
Word power(const Word& w, long long k);
// Freely reduced form; merges adjacent letters on the same generator.
Word reduce(const Word& w);

struct Relator {
    std::string text;    // ASCII form: [a,b], [a,b,c], a^k, lhs=rhs
    Word word;           // relator as a word, lhs·rhs⁻¹ for equations
    int degree = 1;      // Zassenhaus degree assigned by shape
    std::string family;  // e.g. "power", "E2"
};

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Relator> relators;

    // degree → number of relators of that degree.
    std::map<int, std::size_t> degree_multiset() const;
    std::size_t family_count(const std::string& family) const;
    // Throws std::logic_error if a relator names an undeclared generator or
    // has degree < 1.
    void validate() const;
    // Generator line, then one relator per line.
    std::string to_text() const;
};

// Loop-free simple graph; isolated vertices are allowed.
struct SimpleGraph {
    std::size_t vertex_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // 0-based, undirected

    static SimpleGraph from(const graph::WeightedGraph& g);
    static SimpleGraph complete(std::size_t n);
    bool adjacent(std::size_t u, std::size_t v) const;
    void validate() const;
};

// Finite rings with cyclic additive group: 𝔽_p (p prime) or ℤ/m.
struct KmsRing {
    bool field = true;
    unsigned order = 2;

    // Parses "F5", "Fp5", "Z/6", "Zmod6"; 𝔽_q with q not prime is rejected.
    static KmsRing parse(const std::string& text);
    std::string name() const;
};

// Basic KMS group of the graph over the ring. Since (R,+) is generated by 1
// and every edge group is class 2, the relations reduce to x_i^m, the
// centrality relators [x_i,x_j,x_i] for each ordered adjacent pair, and
// [x_i,x_j] for each non-adjacent pair.
Presentation kms_basic_presentation(const SimpleGraph& g, const KmsRing& ring);

struct MixedSizes {
    std::size_t n = 0;
    std::size_t s = 0;
    std::size_t u = 0;
    std::vector<std::size_t> s_i;  // nine block sizes
};

// n = 9s + u, s_i = s+1 for the first u blocks and s otherwise.
MixedSizes gs2_sizes(std::size_t n);

// Mixed KMS group with M_i = 𝔽_p^{s_i} and R_ij = 𝔽_p on every edge.
Presentation kms_mixed_presentation(const SimpleGraph& g, const std::vector<std::size_t>& s_i, unsigned p);

// Commutative unital ring with ℤ-basis α₁ = 1, …, α_s and products
// α_t α_t' = Σ_u c[t][t'][u] α_u.
struct BaseRing {
    bool integers = true;
    unsigned p = 0;  // characteristic when finite
    std::size_t s = 1;
    std::vector<std::vector<std::vector<long long>>> c;

    static BaseRing integer_ring();
    // 𝔽_{p^s} with basis 1, a, …, a^{s−1} where a is a root of the
    // lexicographically first monic irreducible polynomial of degree s.
    static BaseRing finite_field(unsigned p, std::size_t s = 1);
    // Throws InputError unless α₁ = 1 and c is an s×s×s commutative table.
    void validate() const;
};

// Generators e_ij(α_t x_m), 1 ≤ i ≠ j ≤ n, 0 ≤ m ≤ d, 1 ≤ t ≤ s, named
// "e<i>_<j>_a<t>x<m>". Relator families E0–E6; E0 only for finite base
// rings, E6 only for ℤ. Identical relator lines are emitted once.
Presentation explicit_eln_cover_presentation(std::size_t n, std::size_t d, const BaseRing& r0);
std::size_t eln_cover_generator_count(std::size_t n, std::size_t d, std::size_t s);

struct HilbertSeries {
    std::size_t gens = 0;
    std::map<int, double> r;  // degree i → r_i
    std::optional<unsigned> p;

    static HilbertSeries from(const Presentation& pres, std::optional<unsigned> p = std::nullopt);
    static HilbertSeries gs1(std::size_t d, unsigned p);
    static HilbertSeries gs2(std::size_t n, unsigned p);
    double evaluate(double t) const;  // 1 − |X|t + Σ r_i tⁱ
};

struct GsReport {
    bool satisfied = false;
    double best_t = 0;
    double best_value = 0;
    std::optional<double> t_hint;
    std::optional<double> hint_value;
    std::vector<std::pair<std::string, bool>> hypotheses;
};

// Grid search on (0,1) with step 1e−4, then golden-section refinement to
// 1e−10 around the best grid point.
GsReport gs_check(const HilbertSeries& series, std::optional<double> t_hint = std::nullopt);

}  // namespace kazhdan::presentation
