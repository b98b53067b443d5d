#include "kazhdan/presentation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "kazhdan/error.hpp"

namespace kazhdan::presentation {

namespace {

bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Accumulates relators, skipping repeated text.
class Builder {
public:
    explicit Builder(Presentation& p) : p_(p) {}

    void add(std::string text, Word word, int degree, std::string family) {
        if (!seen_.insert(text).second) return;
        p_.relators.push_back({std::move(text), reduce(word), degree, std::move(family)});
    }

private:
    Presentation& p_;
    std::set<std::string> seen_;
};

std::string pow_text(const std::string& g, long long k) { return g + "^" + std::to_string(k); }

std::string comm_text(const std::string& a, const std::string& b) { return "[" + a + "," + b + "]"; }

std::string comm3_text(const std::string& a, const std::string& b, const std::string& c) {
    return "[" + a + "," + b + "," + c + "]";
}

}  // namespace

Word letter(std::size_t gen, long long exp) { return {{gen, exp}}; }

Word inverse(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->exp});
    return out;
}

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Word commutator(const Word& a, const Word& b) { return concat(concat(a, b), concat(inverse(a), inverse(b))); }

Word power(const Word& w, long long k) {
    const Word base = k < 0 ? inverse(w) : w;
    Word out;
    for (long long i = 0; i < std::llabs(k); ++i) out = concat(out, base);
    return out;
}

Word reduce(const Word& w) {
    Word out;
    for (const Letter& l : w) {
        if (l.exp == 0) continue;
        if (!out.empty() && out.back().gen == l.gen) {
            out.back().exp += l.exp;
            if (out.back().exp == 0) out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return out;
}

std::map<int, std::size_t> Presentation::degree_multiset() const {
    std::map<int, std::size_t> m;
    for (const auto& r : relators) ++m[r.degree];
    return m;
}

std::size_t Presentation::family_count(const std::string& family) const {
    return static_cast<std::size_t>(
        std::count_if(relators.begin(), relators.end(), [&](const Relator& r) { return r.family == family; }));
}

void Presentation::validate() const {
    for (const auto& r : relators) {
        if (r.degree < 1) throw std::logic_error("relator " + r.text + " has degree < 1");
        for (const auto& l : r.word)
            if (l.gen >= generators.size()) throw std::logic_error("relator " + r.text + " uses an undeclared generator");
    }
}

std::string Presentation::to_text() const {
    std::ostringstream out;
    out << "generators:";
    for (std::size_t i = 0; i < generators.size(); ++i) out << (i ? "," : " ") << generators[i];
    out << '\n';
    for (const auto& r : relators) out << r.text << '\n';
    return out.str();
}

SimpleGraph SimpleGraph::from(const graph::WeightedGraph& g) {
    SimpleGraph s;
    s.vertex_count = g.vertex_count();
    for (std::size_t e = 0; e < g.edges().size(); e += 2) s.edges.emplace_back(g.edges()[e].tail, g.edges()[e].head);
    return s;
}

SimpleGraph SimpleGraph::complete(std::size_t n) {
    SimpleGraph s;
    s.vertex_count = n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) s.edges.emplace_back(i, j);
    return s;
}

bool SimpleGraph::adjacent(std::size_t u, std::size_t v) const {
    return std::any_of(edges.begin(), edges.end(), [&](const auto& e) {
        return (e.first == u && e.second == v) || (e.first == v && e.second == u);
    });
}

void SimpleGraph::validate() const {
    if (vertex_count == 0) throw InputError("graph needs at least one vertex");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (auto [u, v] : edges) {
        if (u >= vertex_count || v >= vertex_count) throw InputError("edge endpoint out of range");
        if (u == v) throw InputError("graph has a loop");
        if (!seen.insert(std::minmax(u, v)).second) throw InputError("graph has a repeated edge");
    }
}

KmsRing KmsRing::parse(const std::string& text) {
    auto number = [&](std::size_t pos) {
        const std::string digits = text.substr(pos);
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
            throw InputError("cannot parse ring '" + text + "'");
        return static_cast<unsigned>(std::stoul(digits));
    };
    KmsRing r;
    if (text.rfind("Fp", 0) == 0) {
        r.field = true;
        r.order = number(2);
    } else if (text.rfind("F", 0) == 0) {
        r.field = true;
        r.order = number(1);
    } else if (text.rfind("Zmod", 0) == 0) {
        r.field = false;
        r.order = number(4);
    } else if (text.rfind("Z/", 0) == 0) {
        r.field = false;
        r.order = number(2);
    } else {
        throw InputError("unsupported ring '" + text + "'");
    }
    if (r.order < 2) throw InputError("ring order must be at least 2");
    if (r.field && !is_prime(r.order))
        throw InputError("unsupported ring F" + std::to_string(r.order) + ": only prime fields are supported");
    return r;
}

std::string KmsRing::name() const { return (field ? "F" : "Z/") + std::to_string(order); }

Presentation kms_basic_presentation(const SimpleGraph& g, const KmsRing& ring) {
    g.validate();
    if (ring.order < 2 || (ring.field && !is_prime(ring.order))) throw InputError("unsupported ring");
    Presentation p;
    for (std::size_t i = 0; i < g.vertex_count; ++i) p.generators.push_back("x" + std::to_string(i + 1));
    const long long m = ring.order;
    Builder b(p);
    for (std::size_t i = 0; i < g.vertex_count; ++i)
        b.add(pow_text(p.generators[i], m), power(letter(i), m), static_cast<int>(m), "power");
    for (std::size_t i = 0; i < g.vertex_count; ++i)
        for (std::size_t j = 0; j < g.vertex_count; ++j) {
            if (i == j) continue;
            const auto& xi = p.generators[i];
            const auto& xj = p.generators[j];
            if (g.adjacent(i, j)) {
                b.add(comm3_text(xi, xj, xi), commutator(commutator(letter(i), letter(j)), letter(i)), 3, "edge");
            } else if (i < j) {
                b.add(comm_text(xi, xj), commutator(letter(i), letter(j)), 2, "commute");
            }
        }
    p.validate();
    return p;
}

MixedSizes gs2_sizes(std::size_t n) {
    if (n < 9) throw InputError("mixed construction needs n >= 9");
    MixedSizes m;
    m.n = n;
    m.s = n / 9;
    m.u = n % 9;
    for (std::size_t i = 0; i < 9; ++i) m.s_i.push_back(i < m.u ? m.s + 1 : m.s);
    return m;
}

Presentation kms_mixed_presentation(const SimpleGraph& g, const std::vector<std::size_t>& s_i, unsigned p) {
    g.validate();
    if (s_i.size() != g.vertex_count) throw InputError("one module dimension per vertex is required");
    if (std::any_of(s_i.begin(), s_i.end(), [](std::size_t s) { return s == 0; }))
        throw InputError("module dimensions must be positive");
    if (!is_prime(p)) throw InputError("R_ij = F_p needs a prime p");

    Presentation pres;
    std::vector<std::vector<std::size_t>> idx(g.vertex_count);
    for (std::size_t i = 0; i < g.vertex_count; ++i)
        for (std::size_t k = 0; k < s_i[i]; ++k) {
            idx[i].push_back(pres.generators.size());
            pres.generators.push_back("x" + std::to_string(i + 1) + "_" + std::to_string(k + 1));
        }
    const auto& names = pres.generators;
    Builder b(pres);
    for (const auto& block : idx)
        for (std::size_t gk : block) b.add(pow_text(names[gk], p), power(letter(gk), p), static_cast<int>(p), "power");
    for (const auto& block : idx)
        for (std::size_t k = 0; k < block.size(); ++k)
            for (std::size_t l = k + 1; l < block.size(); ++l)
                b.add(comm_text(names[block[k]], names[block[l]]), commutator(letter(block[k]), letter(block[l])), 2,
                      "module");
    for (std::size_t i = 0; i < g.vertex_count; ++i)
        for (std::size_t j = 0; j < g.vertex_count; ++j) {
            if (i == j) continue;
            if (g.adjacent(i, j)) {
                for (std::size_t a : idx[i])
                    for (std::size_t c : idx[j])
                        for (std::size_t e : idx[i])
                            b.add(comm3_text(names[a], names[c], names[e]),
                                  commutator(commutator(letter(a), letter(c)), letter(e)), 3, "edge");
            } else if (i < j) {
                for (std::size_t a : idx[i])
                    for (std::size_t c : idx[j])
                        b.add(comm_text(names[a], names[c]), commutator(letter(a), letter(c)), 2, "commute");
            }
        }
    pres.validate();
    return pres;
}

BaseRing BaseRing::integer_ring() {
    BaseRing r;
    r.integers = true;
    r.s = 1;
    r.c = {{{1}}};
    return r;
}

BaseRing BaseRing::finite_field(unsigned p, std::size_t s) {
    if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
    if (s == 0 || s > 6) throw InputError("field degree must lie in [1,6]");
    // Polynomials over 𝔽_p as coefficient vectors, lowest degree first.
    using Poly = std::vector<long long>;
    auto mod_poly = [&](Poly a, const Poly& m) {
        const std::size_t dm = m.size() - 1;
        for (std::size_t k = a.size(); k-- > dm;) {
            const long long f = a[k] % p;
            if (f == 0) continue;
            for (std::size_t t = 0; t <= dm; ++t) a[k - dm + t] = ((a[k - dm + t] - f * m[t]) % p + p) % p;
        }
        a.resize(std::min(a.size(), dm));
        return a;
    };
    auto has_root_factor = [&](const Poly& m) {
        // Trial division by every monic polynomial of degree 1..s/2.
        for (std::size_t deg = 1; deg * 2 <= s; ++deg) {
            std::size_t count = 1;
            for (std::size_t t = 0; t < deg; ++t) count *= p;
            for (std::size_t code = 0; code < count; ++code) {
                Poly f(deg + 1, 0);
                std::size_t c = code;
                for (std::size_t t = 0; t < deg; ++t) {
                    f[t] = static_cast<long long>(c % p);
                    c /= p;
                }
                f[deg] = 1;
                const Poly r = mod_poly(m, f);
                if (std::all_of(r.begin(), r.end(), [](long long v) { return v == 0; })) return true;
            }
        }
        return false;
    };

    Poly modulus{0, 1};
    if (s > 1) {
        std::size_t count = 1;
        for (std::size_t t = 0; t < s; ++t) count *= p;
        bool found = false;
        for (std::size_t code = 0; code < count && !found; ++code) {
            Poly m(s + 1, 0);
            std::size_t c = code;
            for (std::size_t t = 0; t < s; ++t) {
                m[t] = static_cast<long long>(c % p);
                c /= p;
            }
            m[s] = 1;
            if (!has_root_factor(m)) {
                modulus = m;
                found = true;
            }
        }
        if (!found) throw std::logic_error("no irreducible polynomial found");
    }

    BaseRing r;
    r.integers = false;
    r.p = p;
    r.s = s;
    r.c.assign(s, std::vector<std::vector<long long>>(s, std::vector<long long>(s, 0)));
    for (std::size_t t = 0; t < s; ++t)
        for (std::size_t u = 0; u < s; ++u) {
            Poly prod(t + u + 1, 0);
            prod[t + u] = 1;
            const Poly red = s > 1 ? mod_poly(prod, modulus) : Poly{1};
            for (std::size_t k = 0; k < red.size() && k < s; ++k) r.c[t][u][k] = red[k];
        }
    r.validate();
    return r;
}

void BaseRing::validate() const {
    if (s == 0) throw InputError("base ring needs a nonempty basis");
    if (!integers && !is_prime(p)) throw InputError("finite base ring needs a prime characteristic");
    if (integers && s != 1) throw InputError("the integers have a basis of size 1");
    if (c.size() != s) throw InputError("malformed structure constants");
    for (const auto& row : c) {
        if (row.size() != s) throw InputError("malformed structure constants");
        for (const auto& v : row)
            if (v.size() != s) throw InputError("malformed structure constants");
    }
    for (std::size_t t = 0; t < s; ++t)
        for (std::size_t u = 0; u < s; ++u) {
            const long long delta = (t == u) ? 1 : 0;
            if (c[0][t][u] != delta || c[t][0][u] != delta) throw InputError("alpha_1 must be the identity");
            for (std::size_t k = 0; k < s; ++k)
                if (c[t][u][k] != c[u][t][k]) throw InputError("structure constants are not commutative");
        }
}

std::size_t eln_cover_generator_count(std::size_t n, std::size_t d, std::size_t s) { return n * (n - 1) * (d + 1) * s; }

Presentation explicit_eln_cover_presentation(std::size_t n, std::size_t d, const BaseRing& r0) {
    if (n < 3) throw InputError("needs n >= 3");
    r0.validate();
    const std::size_t s = r0.s;
    Presentation p;
    // gen(i,j,t,m) with 1-based i, j and 0-based t, m.
    std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>, std::size_t> index;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            if (i == j) continue;
            for (std::size_t m = 0; m <= d; ++m)
                for (std::size_t t = 0; t < s; ++t) {
                    index[{i, j, t, m}] = p.generators.size();
                    p.generators.push_back("e" + std::to_string(i) + "_" + std::to_string(j) + "_a" +
                                           std::to_string(t + 1) + "x" + std::to_string(m));
                }
        }
    auto gen = [&](std::size_t i, std::size_t j, std::size_t t, std::size_t m) { return index.at({i, j, t, m}); };
    auto name = [&](std::size_t g) -> const std::string& { return p.generators[g]; };
    Builder b(p);

    // Product Π_u e_ik(α_u x_m)^{c_tt'^u} as text and word.
    auto product = [&](std::size_t i, std::size_t k, std::size_t t, std::size_t t2, std::size_t m) {
        std::string text;
        Word w;
        for (std::size_t u = 0; u < s; ++u) {
            const long long e = r0.c[t][t2][u];
            if (e == 0) continue;
            if (!text.empty()) text += "*";
            text += e == 1 ? name(gen(i, k, u, m)) : pow_text(name(gen(i, k, u, m)), e);
            w = concat(w, letter(gen(i, k, u, m), e));
        }
        if (text.empty()) text = "1";
        return std::make_pair(text, w);
    };

    if (!r0.integers)
        for (std::size_t g = 0; g < p.generators.size(); ++g)
            b.add(pow_text(name(g), r0.p), power(letter(g), r0.p), static_cast<int>(r0.p), "E0");

    std::vector<std::size_t> all(p.generators.size());
    for (std::size_t g = 0; g < all.size(); ++g) all[g] = g;
    struct Key {
        std::size_t i, j, t, m;
    };
    std::vector<Key> keys(p.generators.size());
    for (const auto& [k, g] : index) keys[g] = {std::get<0>(k), std::get<1>(k), std::get<2>(k), std::get<3>(k)};

    // E1 over unordered pairs of distinct generators.
    for (std::size_t g1 = 0; g1 < all.size(); ++g1)
        for (std::size_t g2 = g1 + 1; g2 < all.size(); ++g2) {
            const Key& a = keys[g1];
            const Key& c = keys[g2];
            if (a.i == c.j || a.j == c.i) continue;
            b.add(comm_text(name(g1), name(g2)), commutator(letter(g1), letter(g2)), 2, "E1");
        }

    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t k = 1; k <= n; ++k) {
                if (i == j || j == k || i == k) continue;
                for (std::size_t t = 0; t < s; ++t)
                    for (std::size_t t2 = 0; t2 < s; ++t2)
                        for (std::size_t m = 0; m <= d; ++m) {
                            const auto [rhs, rw] = product(i, k, t, t2, m);
                            const std::size_t a2 = gen(i, j, t, m), b2 = gen(j, k, t2, 0);
                            b.add(comm_text(name(a2), name(b2)) + "=" + rhs,
                                  concat(commutator(letter(a2), letter(b2)), inverse(rw)), 1, "E2");
                            const std::size_t a3 = gen(i, j, t2, 0), b3 = gen(j, k, t, m);
                            b.add(comm_text(name(a3), name(b3)) + "=" + rhs,
                                  concat(commutator(letter(a3), letter(b3)), inverse(rw)), 1, "E3");
                        }
            }

    // E4: [[e_ij(·), e_jk(·)], e_i'k'(·)] with {i,i'}∩{k,k'} = ∅, j ∉ {i,k}.
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t k = 1; k <= n; ++k) {
                if (i == j || j == k || i == k) continue;
                for (std::size_t i2 = 1; i2 <= n; ++i2)
                    for (std::size_t k2 = 1; k2 <= n; ++k2) {
                        if (i2 == k2 || i2 == k || k2 == i) continue;
                        for (std::size_t t = 0; t < s; ++t)
                            for (std::size_t m = 0; m <= d; ++m)
                                for (std::size_t t2 = 0; t2 < s; ++t2)
                                    for (std::size_t m2 = 0; m2 <= d; ++m2)
                                        for (std::size_t t3 = 0; t3 < s; ++t3)
                                            for (std::size_t m3 = 0; m3 <= d; ++m3) {
                                                const std::size_t x = gen(i, j, t, m), y = gen(j, k, t2, m2),
                                                                  z = gen(i2, k2, t3, m3);
                                                b.add(comm3_text(name(x), name(y), name(z)),
                                                      commutator(commutator(letter(x), letter(y)), letter(z)), 3,
                                                      "E4");
                                            }
                    }
            }

    // E5: [e_ij(·), e_jk(·)] = [e_ij'(·), e_j'k(·)] for i ≠ k, j < j', j, j' ∉ {i,k}.
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t k = 1; k <= n; ++k) {
            if (i == k) continue;
            for (std::size_t j = 1; j <= n; ++j)
                for (std::size_t j2 = j + 1; j2 <= n; ++j2) {
                    if (j == i || j == k || j2 == i || j2 == k) continue;
                    for (std::size_t t = 0; t < s; ++t)
                        for (std::size_t m = 0; m <= d; ++m)
                            for (std::size_t t2 = 0; t2 < s; ++t2)
                                for (std::size_t m2 = 0; m2 <= d; ++m2) {
                                    const std::size_t a = gen(i, j, t, m), c = gen(j, k, t2, m2);
                                    const std::size_t a2 = gen(i, j2, t, m), c2 = gen(j2, k, t2, m2);
                                    b.add(comm_text(name(a), name(c)) + "=" + comm_text(name(a2), name(c2)),
                                          concat(commutator(letter(a), letter(c)),
                                                 inverse(commutator(letter(a2), letter(c2)))),
                                          1, "E5");
                                }
                }
        }

    if (r0.integers) {
        const std::size_t e12 = gen(1, 2, 0, 0), e21 = gen(2, 1, 0, 0);
        const Word inner = concat(concat(letter(e12), letter(e21, -1)), letter(e12));
        b.add("(" + name(e12) + "*" + name(e21) + "^-1*" + name(e12) + ")^4", power(inner, 4), 1, "E6");
    }
    p.validate();
    return p;
}

HilbertSeries HilbertSeries::from(const Presentation& pres, std::optional<unsigned> p) {
    HilbertSeries h;
    h.gens = pres.generators.size();
    h.p = p;
    for (const auto& [deg, count] : pres.degree_multiset()) h.r[deg] += static_cast<double>(count);
    return h;
}

HilbertSeries HilbertSeries::gs1(std::size_t d, unsigned p) {
    if (d < 2) throw InputError("needs d >= 2");
    return from(kms_basic_presentation(SimpleGraph::complete(d), KmsRing{true, p}), p);
}

HilbertSeries HilbertSeries::gs2(std::size_t n, unsigned p) {
    const MixedSizes m = gs2_sizes(n);
    HilbertSeries h;
    h.gens = n;
    h.p = p;
    double r2 = 0, r3 = 0;
    for (std::size_t i = 0; i < 9; ++i) {
        const double si = static_cast<double>(m.s_i[i]);
        r2 += si * (si - 1) / 2;
        for (std::size_t j = 0; j < 9; ++j)
            if (i != j) r3 += si * si * static_cast<double>(m.s_i[j]);
    }
    if (r2 > 0) h.r[2] += r2;
    h.r[3] += r3;
    h.r[static_cast<int>(p)] += static_cast<double>(n);
    return h;
}

double HilbertSeries::evaluate(double t) const {
    double v = 1.0 - static_cast<double>(gens) * t;
    for (const auto& [deg, count] : r) v += count * std::pow(t, deg);
    return v;
}

GsReport gs_check(const HilbertSeries& series, std::optional<double> t_hint) {
    if (series.gens == 0 && series.r.empty()) throw InputError("empty series");
    for (const auto& [deg, count] : series.r) {
        if (deg < 1) throw InputError("series degrees must be >= 1");
        if (!std::isfinite(count) || count < 0) throw InputError("series coefficients must be finite and nonnegative");
    }
    constexpr double step = 1e-4;
    constexpr int steps = 10000;
    double best_t = step;
    double best = series.evaluate(step);
    for (int k = 2; k < steps; ++k) {
        const double t = k * step;
        const double v = series.evaluate(t);
        if (v < best) {
            best = v;
            best_t = t;
        }
    }
    double lo = std::max(best_t - step, 1e-12);
    double hi = std::min(best_t + step, 1.0 - 1e-12);
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = hi - inv_phi * (hi - lo);
    double c = lo + inv_phi * (hi - lo);
    double fa = series.evaluate(a), fc = series.evaluate(c);
    while (hi - lo > 1e-10) {
        if (fa < fc) {
            hi = c;
            c = a;
            fc = fa;
            a = hi - inv_phi * (hi - lo);
            fa = series.evaluate(a);
        } else {
            lo = a;
            a = c;
            fa = fc;
            c = lo + inv_phi * (hi - lo);
            fc = series.evaluate(c);
        }
    }
    const double refined = 0.5 * (lo + hi);
    const double refined_value = series.evaluate(refined);
    GsReport out;
    if (refined_value < best) {
        out.best_t = refined;
        out.best_value = refined_value;
    } else {
        out.best_t = best_t;
        out.best_value = best;
    }
    out.satisfied = out.best_value < 0;
    if (t_hint) {
        if (!(*t_hint > 0 && *t_hint < 1)) throw InputError("t hint must lie in (0,1)");
        out.t_hint = t_hint;
        out.hint_value = series.evaluate(*t_hint);
    }
    return out;
}

}  // namespace kazhdan::presentation
