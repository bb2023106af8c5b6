#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "echelon.hpp"
#include "error.hpp"
#include "matrix.hpp"
#include "random.hpp"

namespace locmat {

inline SparseVector vectorize(const Matrix& a) { return to_sparse(a.entries()); }

inline Matrix unvectorize(const FieldSpec& spec, std::size_t n, const SparseVector& v)
{
    return Matrix(spec, n, to_dense(spec, n * n, v));
}

/// A linear subspace of M_n(F), stored as the RREF of vectorized matrices.
/// Equality is structural equality of the echelon bases.
class MatSubspace {
public:
    MatSubspace(const FieldSpec& spec, std::size_t n) : n_(n), echelon_(spec, n * n) {}

    const FieldSpec& spec() const { return echelon_.spec(); }
    std::size_t ambient_size() const { return n_; }
    std::size_t dim() const { return echelon_.rank(); }
    const Echelon& echelon() const { return echelon_; }

    /// The echelon basis as matrices, ordered by pivot.
    std::vector<Matrix> basis() const
    {
        std::vector<Matrix> out;
        out.reserve(dim());
        for (const auto& [pivot, row] : echelon_.rows())
            out.push_back(unvectorize(spec(), n_, row));
        return out;
    }

    bool contains(const Matrix& a) const
    {
        check(a);
        return echelon_.contains(vectorize(a));
    }

    /// S is a subset of *this.
    bool contains(const MatSubspace& s) const
    {
        check(s);
        for (const auto& [pivot, row] : s.echelon_.rows())
            if (!echelon_.contains(row))
                return false;
        return true;
    }

    /// Adds a to the subspace; false if it was already contained.
    bool insert(const Matrix& a)
    {
        check(a);
        return echelon_.insert(vectorize(a));
    }

    bool insert_vector(const SparseVector& v) { return echelon_.insert(v); }

    friend bool operator==(const MatSubspace& a, const MatSubspace& b)
    {
        return a.n_ == b.n_ && a.echelon_ == b.echelon_;
    }

private:
    void check(const Matrix& a) const
    {
        if (!(a.spec() == spec()))
            throw SpecMismatchError("matrix over " + a.spec().to_string() + " vs subspace over " + spec().to_string());
        if (a.size() != n_)
            throw SizeMismatchError("matrix of size " + std::to_string(a.size()) + " vs subspace of M_" +
                                    std::to_string(n_));
    }

    void check(const MatSubspace& s) const
    {
        if (!(s.spec() == spec()) || s.n_ != n_)
            throw SizeMismatchError("subspaces live in different ambient algebras");
    }

    std::size_t n_;
    Echelon echelon_;
};

inline MatSubspace span(const FieldSpec& spec, std::size_t n, const std::vector<Matrix>& mats)
{
    MatSubspace s(spec, n);
    for (const auto& m : mats)
        s.insert(m);
    return s;
}

/// Span of a nonempty list; the ambient algebra is read off the first matrix.
inline MatSubspace span(const std::vector<Matrix>& mats)
{
    if (mats.empty())
        throw PreconditionError("span of an empty list needs an explicit field and size");
    return span(mats.front().spec(), mats.front().size(), mats);
}

inline bool contains(const MatSubspace& s, const Matrix& a) { return s.contains(a); }
inline std::size_t dim(const MatSubspace& s) { return s.dim(); }
inline bool equals(const MatSubspace& s, const MatSubspace& t) { return s == t; }

inline MatSubspace sum(const MatSubspace& s, const MatSubspace& t)
{
    if (!(s.spec() == t.spec()) || s.ambient_size() != t.ambient_size())
        throw SizeMismatchError("sum of subspaces of different ambient algebras");
    MatSubspace out = s;
    for (const auto& [pivot, row] : t.echelon().rows())
        out.insert_vector(row);
    return out;
}

inline MatSubspace full_algebra(const FieldSpec& spec, std::size_t n)
{
    MatSubspace s(spec, n);
    for (std::size_t k = 0; k < n * n; ++k)
        s.insert_vector({{k, FieldElement::one(spec)}});
    return s;
}

/// F * 1
inline MatSubspace scalar_line(const FieldSpec& spec, std::size_t n) { return span(spec, n, {identity(spec, n)}); }

inline bool is_scalar(const Matrix& a) { return scalar_line(a.spec(), a.size()).contains(a); }

/// Trace-zero matrices: spanned by e_ij (i != j) and e_ii - e_nn.
inline MatSubspace sl(const FieldSpec& spec, std::size_t n)
{
    if (n == 0)
        throw PreconditionError("sl: n must be at least 1");
    MatSubspace s(spec, n);
    const auto one = FieldElement::one(spec);
    const auto minus_one = -one;
    const std::size_t last = (n - 1) * n + (n - 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j)
                s.insert_vector({{i * n + j, one}});
            else if (i + 1 < n)
                s.insert_vector({{i * n + i, one}, {last, minus_one}});
        }
    return s;
}

/// [M_n, M_n]: span of every bracket of matrix units.
///
/// [e_ij, e_kl] = d_jk e_il - d_li e_kj, so pairs with j != k and l != i
/// bracket to zero and are skipped.
inline MatSubspace commutator_subspace(const FieldSpec& spec, std::size_t n)
{
    MatSubspace s(spec, n);
    const auto one = FieldElement::one(spec);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    if (j != k && l != i)
                        continue;
                    std::map<std::size_t, FieldElement> acc;
                    auto bump = [&](std::size_t at, const FieldElement& by) {
                        auto [it, fresh] = acc.emplace(at, by);
                        if (!fresh)
                            it->second += by;
                    };
                    if (j == k)
                        bump(i * n + l, one);
                    if (l == i)
                        bump(k * n + j, -one);
                    SparseVector v;
                    for (auto& [c, x] : acc)
                        if (!x.is_zero())
                            v.emplace_back(c, x);
                    if (!v.empty())
                        s.insert_vector(v);
                }
    return s;
}

/// S + F * 1
inline MatSubspace plus_scalars(const MatSubspace& s)
{
    MatSubspace out = s;
    out.insert(identity(s.spec(), s.ambient_size()));
    return out;
}

/// Smallest subspace containing the seed and closed under [e_ij, -] for all
/// matrix units, i.e. the Lie ideal of gl(n) generated by the seed.
inline MatSubspace lie_ideal_closure(const std::vector<Matrix>& seed, const FieldSpec& spec, std::size_t n)
{
    MatSubspace s = span(spec, n, seed);
    std::vector<Matrix> units;
    units.reserve(n * n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            units.push_back(matrix_unit(spec, n, i, j));

    // Each productive round raises the dimension, which is bounded by n^2.
    for (std::size_t round = 0; round < n * n; ++round) {
        const std::size_t before = s.dim();
        for (const auto& b : s.basis())
            for (const auto& e : units)
                s.insert(commutator(e, b));
        if (s.dim() == before)
            break;
    }
    return s;
}

/// The commutant {x in M_N : xg = gx for every generator g}.
inline MatSubspace commutant(const FieldSpec& spec, std::size_t size, const std::vector<Matrix>& generators)
{
    const std::size_t width = size * size;
    Echelon equations(spec, width);
    for (const auto& g : generators) {
        // ([x, g])_{rs} = sum_t x_rt g_ts - g_rt x_ts
        for (std::size_t r = 0; r < size; ++r)
            for (std::size_t s = 0; s < size; ++s) {
                std::map<std::size_t, FieldElement> acc;
                for (std::size_t t = 0; t < size; ++t) {
                    const auto& gts = g[t * size + s];
                    if (!gts.is_zero()) {
                        auto [it, fresh] = acc.emplace(r * size + t, gts);
                        if (!fresh)
                            it->second += gts;
                    }
                    const auto& grt = g[r * size + t];
                    if (!grt.is_zero()) {
                        auto [it, fresh] = acc.emplace(t * size + s, -grt);
                        if (!fresh)
                            it->second -= grt;
                    }
                }
                SparseVector row;
                for (auto& [c, x] : acc)
                    if (!x.is_zero())
                        row.emplace_back(c, x);
                if (!row.empty())
                    equations.insert(row);
            }
    }
    MatSubspace out(spec, size);
    for (const auto& v : equations.kernel_basis())
        out.insert_vector(v);
    return out;
}

/// Centralizer of the embedded copy {a (x) 1_k : a in M_n} inside M_{nk}.
/// Equals 1_n (x) M_k, of dimension k^2.
inline MatSubspace centralizer_of_embedded(const FieldSpec& spec, std::size_t n, std::size_t k)
{
    if (n == 0 || k == 0)
        throw PreconditionError("centralizer_of_embedded: n and k must be at least 1");
    std::vector<Matrix> generators;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            generators.push_back(embed_unital(matrix_unit(spec, n, i, j), k));
    return commutant(spec, n * k, generators);
}

struct SeedClosure {
    Matrix seed;
    std::size_t closure_dim;
    bool generates_all;
};

/// Evidence for the simplicity of pgl(n) = gl(n) / F*1.
///
/// Each seed is closed together with the identity, so a closure equal to M_n
/// means the seed generates everything modulo the center.
struct PglEvidence {
    std::size_t ambient_n;
    FieldSpec field;
    std::size_t seed_count;
    bool all_generate;
    bool char_divides_n;
    /// Set when sl(n) was verified to be a proper ideal containing F*1.
    std::optional<std::size_t> proper_ideal_dim;
    std::vector<SeedClosure> closures;

    /// The outcome predicted by "pgl(n) is simple unless char F = p > 0 divides n".
    bool consistent() const { return char_divides_n ? proper_ideal_dim.has_value() : all_generate; }
};

/// Off-diagonal units, e_11 - e_22, then `random_count` random non-scalar matrices.
inline std::vector<Matrix> default_pgl_seeds(const FieldSpec& spec, std::size_t n, std::size_t random_count,
                                             std::uint64_t rng_seed = default_rng_seed)
{
    if (n < 2)
        throw PreconditionError("pgl seeds need n >= 2: every 1x1 matrix is scalar");
    std::vector<Matrix> seeds;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            if (i != j)
                seeds.push_back(matrix_unit(spec, n, i, j));
    if (n >= 2)
        seeds.push_back(matrix_unit(spec, n, 1, 1) - matrix_unit(spec, n, 2, 2));
    Rng rng(rng_seed);
    while (seeds.size() < n * (n - 1) + 1 + random_count) {
        auto m = random_matrix(spec, n, rng);
        if (!is_scalar(m))
            seeds.push_back(std::move(m));
    }
    return seeds;
}

inline PglEvidence pgl_simplicity_evidence(const FieldSpec& spec, std::size_t n, const std::vector<Matrix>& seeds)
{
    if (n < 2)
        throw PreconditionError("pgl_simplicity_evidence: n must be at least 2");
    const auto one = identity(spec, n);
    const auto full = full_algebra(spec, n);

    PglEvidence ev{n, spec, seeds.size(), true, false, std::nullopt, {}};
    for (const auto& seed : seeds) {
        if (seed.size() != n || !(seed.spec() == spec))
            throw SizeMismatchError("seed is not in M_" + std::to_string(n) + " over " + spec.to_string());
        if (is_scalar(seed))
            throw PreconditionError("seed lies in F*1 and generates nothing modulo the center");
        const auto closure = lie_ideal_closure({seed, one}, spec, n);
        const bool everything = closure == full;
        ev.all_generate = ev.all_generate && everything;
        ev.closures.push_back({seed, closure.dim(), everything});
    }

    const auto c = spec.characteristic();
    ev.char_divides_n = c != 0 && n % c == 0;
    if (ev.char_divides_n) {
        const auto trace_zero = sl(spec, n);
        bool bracket_closed = true;
        for (std::size_t i = 1; i <= n && bracket_closed; ++i)
            for (std::size_t j = 1; j <= n && bracket_closed; ++j) {
                const auto e = matrix_unit(spec, n, i, j);
                for (const auto& b : trace_zero.basis())
                    if (!trace_zero.contains(commutator(e, b))) {
                        bracket_closed = false;
                        break;
                    }
            }
        if (bracket_closed && trace_zero.contains(one) && trace_zero.dim() < n * n)
            ev.proper_ideal_dim = trace_zero.dim();
    }
    return ev;
}

} // namespace locmat
