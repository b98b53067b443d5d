#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "kazhdan/error.hpp"
#include "kazhdan/group.hpp"

namespace kazhdan::group {

namespace {

// Multiplication tables are cached up to this order.
constexpr std::size_t kTableCacheOrder = 2048;
constexpr std::size_t kFullAssociativityOrder = 200;
constexpr std::size_t kSampledTriples = 1000;

}  // namespace

IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
    return m;
}

IntMatrix elementary(std::size_t n, std::size_t i, std::size_t j, unsigned r, unsigned m) {
    if (i == j || i >= n || j >= n) throw InputError("elementary matrix needs distinct indices in range");
    IntMatrix e = identity_matrix(n);
    e[i * n + j] = r % m;
    return e;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::size_t n, unsigned m) {
    IntMatrix c(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::uint64_t s = 0;
            for (std::size_t k = 0; k < n; ++k) s += static_cast<std::uint64_t>(a[i * n + k]) * b[k * n + j];
            c[i * n + j] = static_cast<std::uint32_t>(s % m);
        }
    return c;
}

__extension__ using Wide = __int128;

long long determinant_mod(const IntMatrix& a, std::size_t n, unsigned m) {
    // Fraction-free Bareiss elimination over ℤ, reduced at the end.
    std::vector<Wide> w(a.begin(), a.end());
    Wide prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w[k * n + k] == 0) {
            std::size_t p = k + 1;
            while (p < n && w[p * n + k] == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(w[k * n + j], w[p * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                w[i * n + j] = (w[i * n + j] * w[k * n + k] - w[i * n + k] * w[k * n + j]) / prev;
        prev = w[k * n + k];
    }
    Wide det = n == 0 ? 1 : w[(n - 1) * n + (n - 1)] * sign;
    det %= m;
    if (det < 0) det += m;
    return static_cast<long long>(det);
}

std::shared_ptr<const FiniteGroup> FiniteGroup::from_table(const std::vector<std::vector<std::size_t>>& mult,
                                                           std::uint64_t seed) {
    const std::size_t n = mult.size();
    if (n == 0) throw InputError("multiplication table is empty");
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->order_ = n;
    g->table_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (mult[i].size() != n) throw InputError("multiplication table is not square");
        for (std::size_t j = 0; j < n; ++j) {
            if (mult[i][j] >= n) throw InputError("multiplication table entry out of range");
            g->table_[i * n + j] = static_cast<std::uint32_t>(mult[i][j]);
        }
    }
    std::optional<std::size_t> e;
    for (std::size_t i = 0; i < n && !e; ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j) ok = mult[i][j] == j && mult[j][i] == j;
        if (ok) e = i;
    }
    if (!e) throw InputError("multiplication table has no identity");
    g->identity_ = *e;
    g->inverse_.assign(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (mult[i][j] == *e && mult[j][i] == *e) {
                g->inverse_[i] = j;
                break;
            }
    for (std::size_t i = 0; i < n; ++i)
        if (g->inverse_[i] == n) throw InputError("element " + std::to_string(i) + " has no inverse");
    try {
        g->check_axioms(seed);
    } catch (const std::logic_error& err) {
        throw InputError(err.what());
    }
    return g;
}

std::string FiniteGroup::key(const IntMatrix& m) const {
    std::string k(m.size() * 2, '\0');
    for (std::size_t i = 0; i < m.size(); ++i) {
        k[2 * i] = static_cast<char>(m[i] & 0xFF);
        k[2 * i + 1] = static_cast<char>((m[i] >> 8) & 0xFF);
    }
    return k;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::matrix_group(std::size_t n, RingZm ring,
                                                             const std::vector<IntMatrix>& generators,
                                                             std::size_t cap) {
    const unsigned m = ring.modulus;
    if (m < 2 || m > 65535) throw InputError("ring modulus must lie in [2, 65535]");
    if (n == 0) throw InputError("matrix size must be positive");
    std::vector<IntMatrix> gens;
    for (const auto& gen : generators) {
        if (gen.size() != n * n) throw InputError("generator has the wrong size");
        IntMatrix r(gen.size());
        for (std::size_t i = 0; i < gen.size(); ++i) r[i] = gen[i] % m;
        if (std::gcd(determinant_mod(r, n, m), static_cast<long long>(m)) != 1)
            throw InputError("generator is not invertible over Z/" + std::to_string(m));
        gens.push_back(std::move(r));
    }

    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->matrix_dim_ = n;
    g->modulus_ = m;
    const std::size_t n2 = n * n;

    std::vector<std::size_t> parent{0};
    std::vector<std::size_t> via{0};
    auto insert = [&](const IntMatrix& mat) -> std::pair<std::size_t, bool> {
        auto [it, fresh] = g->index_.emplace(g->key(mat), static_cast<std::uint32_t>(g->order_));
        if (fresh) {
            if (g->order_ >= cap)
                throw CapExceeded("group closure exceeds the cap of " + std::to_string(cap) + " elements");
            g->payload_.insert(g->payload_.end(), mat.begin(), mat.end());
            ++g->order_;
        }
        return {it->second, fresh};
    };
    insert(identity_matrix(n));
    for (std::size_t cur = 0; cur < g->order_; ++cur) {
        const IntMatrix here(g->payload_.begin() + static_cast<std::ptrdiff_t>(cur * n2),
                             g->payload_.begin() + static_cast<std::ptrdiff_t>((cur + 1) * n2));
        for (std::size_t s = 0; s < gens.size(); ++s) {
            auto [idx, fresh] = insert(multiply(here, gens[s], n, m));
            if (fresh) {
                parent.push_back(cur);
                via.push_back(s);
            }
        }
    }
    g->identity_ = 0;
    for (const auto& gen : gens) g->generators_.push_back(*g->find(gen));

    // Inverses: generators by powering, everything else along the BFS tree
    // via (p·s)⁻¹ = s⁻¹·p⁻¹.
    std::vector<IntMatrix> gen_inv;
    for (const auto& gen : gens) {
        IntMatrix prev = identity_matrix(n);
        IntMatrix cur = gen;
        while (cur != identity_matrix(n)) {
            prev = cur;
            cur = multiply(cur, gen, n, m);
        }
        gen_inv.push_back(prev);
    }
    g->inverse_.assign(g->order_, 0);
    for (std::size_t i = 1; i < g->order_; ++i)
        g->inverse_[i] = *g->find(multiply(gen_inv[via[i]], g->matrix(g->inverse_[parent[i]]), n, m));

    if (g->order_ <= kTableCacheOrder) {
        std::vector<std::uint32_t> table(g->order_ * g->order_);
        for (std::size_t a = 0; a < g->order_; ++a)
            for (std::size_t b = 0; b < g->order_; ++b)
                table[a * g->order_ + b] = static_cast<std::uint32_t>(g->mult_uncached(a, b));
        g->table_ = std::move(table);
    }
    return g;
}

IntMatrix FiniteGroup::matrix(std::size_t g) const {
    if (!is_matrix_group()) throw InputError("group has no matrix payload");
    const std::size_t n2 = matrix_dim_ * matrix_dim_;
    return IntMatrix(payload_.begin() + static_cast<std::ptrdiff_t>(g * n2),
                     payload_.begin() + static_cast<std::ptrdiff_t>((g + 1) * n2));
}

std::optional<std::size_t> FiniteGroup::find(const IntMatrix& m) const {
    if (!is_matrix_group() || m.size() != matrix_dim_ * matrix_dim_) return std::nullopt;
    IntMatrix r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = m[i] % modulus_;
    const auto it = index_.find(key(r));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t FiniteGroup::mult_uncached(std::size_t a, std::size_t b) const {
    const auto prod = multiply(matrix(a), matrix(b), matrix_dim_, modulus_);
    const auto it = index_.find(key(prod));
    if (it == index_.end()) throw std::logic_error("matrix group is not closed under multiplication");
    return it->second;
}

std::size_t FiniteGroup::mult(std::size_t a, std::size_t b) const {
    if (!table_.empty()) return table_[a * order_ + b];
    return mult_uncached(a, b);
}

std::size_t FiniteGroup::commutator(std::size_t a, std::size_t b) const {
    return mult(mult(a, b), mult(inverse(a), inverse(b)));
}

std::size_t FiniteGroup::power(std::size_t a, std::size_t k) const {
    std::size_t r = identity_;
    for (std::size_t i = 0; i < k; ++i) r = mult(r, a);
    return r;
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
    std::size_t k = 1;
    for (std::size_t cur = a; cur != identity_; cur = mult(cur, a)) ++k;
    return k;
}

std::string FiniteGroup::label(std::size_t g) const {
    if (!is_matrix_group()) return "g" + std::to_string(g);
    std::ostringstream os;
    const auto mat = matrix(g);
    os << '[';
    for (std::size_t i = 0; i < matrix_dim_; ++i) {
        if (i) os << ';';
        for (std::size_t j = 0; j < matrix_dim_; ++j) os << (j ? " " : "") << mat[i * matrix_dim_ + j];
    }
    os << ']';
    return os.str();
}

void FiniteGroup::check_axioms(std::uint64_t seed) const {
    for (std::size_t a = 0; a < order_; ++a) {
        if (mult(identity_, a) != a || mult(a, identity_) != a) throw std::logic_error("identity law fails");
        if (mult(a, inverse_[a]) != identity_ || mult(inverse_[a], a) != identity_)
            throw std::logic_error("inverse law fails at element " + std::to_string(a));
    }
    auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
        if (mult(mult(a, b), c) != mult(a, mult(b, c)))
            throw std::logic_error("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                   std::to_string(c) + ")");
    };
    if (order_ <= kFullAssociativityOrder) {
        for (std::size_t a = 0; a < order_; ++a)
            for (std::size_t b = 0; b < order_; ++b)
                for (std::size_t c = 0; c < order_; ++c) assoc(a, b, c);
        return;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, order_ - 1);
    for (std::size_t t = 0; t < kSampledTriples; ++t) assoc(pick(rng), pick(rng), pick(rng));
}

}  // namespace kazhdan::group
