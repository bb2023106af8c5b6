#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "echelon.hpp"
#include "error.hpp"
#include "matrix.hpp"
#include "primes.hpp"
#include "subspace.hpp"

namespace locmat {

/// A linear endomorphism of M_n(F), stored as the n^2 x n^2 matrix acting on
/// row-major vectorizations: column (i, j) holds the image of e_ij.
class EndoMatrix {
public:
    explicit EndoMatrix(Matrix action) : n_(isqrt(action.size())), action_(std::move(action)) {}

    std::size_t ambient_size() const { return n_; }
    const Matrix& action() const { return action_; }
    const FieldSpec& spec() const { return action_.spec(); }

    Matrix apply(const Matrix& a) const
    {
        if (a.size() != n_)
            throw SizeMismatchError("endomorphism of M_" + std::to_string(n_) + " applied to M_" +
                                    std::to_string(a.size()));
        const std::size_t w = n_ * n_;
        Matrix out(spec(), n_);
        for (std::size_t c = 0; c < w; ++c) {
            const auto& x = a[c];
            if (x.is_zero())
                continue;
            for (std::size_t r = 0; r < w; ++r) {
                const auto& m = action_[r * w + c];
                if (!m.is_zero())
                    out[r] += m * x;
            }
        }
        return out;
    }

    /// (a * b)(x) = a(b(x))
    friend EndoMatrix operator*(const EndoMatrix& a, const EndoMatrix& b) { return EndoMatrix(a.action_ * b.action_); }
    friend EndoMatrix operator-(const EndoMatrix& a, const EndoMatrix& b) { return EndoMatrix(a.action_ - b.action_); }
    friend bool operator==(const EndoMatrix&, const EndoMatrix&) = default;

    bool is_zero() const { return action_.is_zero(); }

private:
    static std::size_t isqrt(std::size_t w)
    {
        std::size_t n = 0;
        while ((n + 1) * (n + 1) <= w)
            ++n;
        if (n * n != w)
            throw SizeMismatchError("endomorphism matrix size " + std::to_string(w) + " is not a square");
        return n;
    }

    std::size_t n_;
    Matrix action_;
};

inline Matrix apply(const EndoMatrix& d, const Matrix& a) { return d.apply(a); }

/// Lie bracket of endomorphisms, [d1, d2] = d1 d2 - d2 d1.
inline EndoMatrix bracket(const EndoMatrix& a, const EndoMatrix& b) { return a * b - b * a; }

/// A subspace of End(M_n(F)), held as a subspace of M_{n^2}(F).
class DerSpace {
public:
    DerSpace(const FieldSpec& spec, std::size_t n) : n_(n), space_(spec, n * n) {}
    DerSpace(std::size_t n, MatSubspace space) : n_(n), space_(std::move(space)) {}

    std::size_t ambient_size() const { return n_; }
    std::size_t dim() const { return space_.dim(); }
    const MatSubspace& space() const { return space_; }

    std::vector<EndoMatrix> basis() const
    {
        std::vector<EndoMatrix> out;
        for (auto& m : space_.basis())
            out.emplace_back(std::move(m));
        return out;
    }

    bool contains(const EndoMatrix& d) const { return space_.contains(d.action()); }
    bool insert(const EndoMatrix& d) { return space_.insert(d.action()); }

    friend bool operator==(const DerSpace&, const DerSpace&) = default;

private:
    std::size_t n_;
    MatSubspace space_;
};

/// The inner derivation x |-> [a, x].
inline EndoMatrix ad(const Matrix& a)
{
    const std::size_t n = a.size();
    const std::size_t w = n * n;
    Matrix action(a.spec(), w);
    // ad(a)(e_ij)[r, s] = a[r, i] d_js - d_ri a[j, s]
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t col = i * n + j;
            for (std::size_t r = 0; r < n; ++r)
                action[(r * n + j) * w + col] += a[r * n + i];
            for (std::size_t s = 0; s < n; ++s)
                action[(i * n + s) * w + col] -= a[j * n + s];
        }
    return EndoMatrix(std::move(action));
}

/// Every derivation of M_n(F), as the kernel of the Leibniz system.
///
/// Unknowns are the n^4 entries x[(r,s),(i,j)] = D(e_ij)[r,s]. For each pair of
/// units and each output entry (r, s), D(e_ij e_kl) = D(e_ij) e_kl + e_ij D(e_kl) reads
///   d_jk x[(r,s),(i,l)] - d_sl x[(r,k),(i,j)] - d_ri x[(j,s),(k,l)] = 0.
inline DerSpace der_space(const FieldSpec& spec, std::size_t n)
{
    if (n == 0)
        throw PreconditionError("der_space: n must be at least 1");
    const std::size_t w = n * n;
    auto unknown = [&](std::size_t r, std::size_t s, std::size_t i, std::size_t j) {
        return (r * n + s) * w + (i * n + j);
    };
    const auto one = FieldElement::one(spec);
    const auto minus_one = -one;

    Echelon equations(spec, w * w);
    std::map<std::size_t, FieldElement> acc;
    auto bump = [&](std::size_t at, const FieldElement& by) {
        auto [it, fresh] = acc.emplace(at, by);
        if (!fresh)
            it->second += by;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    for (std::size_t r = 0; r < n; ++r)
                        for (std::size_t s = 0; s < n; ++s) {
                            acc.clear();
                            if (j == k)
                                bump(unknown(r, s, i, l), one);
                            if (s == l)
                                bump(unknown(r, k, i, j), minus_one);
                            if (r == i)
                                bump(unknown(j, s, k, l), minus_one);
                            SparseVector row;
                            for (auto& [c, x] : acc)
                                if (!x.is_zero())
                                    row.emplace_back(c, x);
                            if (!row.empty())
                                equations.insert(row);
                        }

    MatSubspace space(spec, w);
    for (const auto& v : equations.kernel_basis())
        space.insert_vector(v);
    return DerSpace(n, std::move(space));
}

/// span{ad(e_ij)}
inline DerSpace inder_space(const FieldSpec& spec, std::size_t n)
{
    DerSpace out(spec, n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            out.insert(ad(matrix_unit(spec, n, i, j)));
    return out;
}

inline bool check_der_equals_inder(const FieldSpec& spec, std::size_t n)
{
    return der_space(spec, n) == inder_space(spec, n);
}

/// Kernel of a |-> ad(a); the center of M_n(F).
inline MatSubspace ad_kernel(const FieldSpec& spec, std::size_t n)
{
    const auto one = FieldElement::one(spec);
    Echelon equations(spec, n * n);
    // ad(a)[(r,s),(i,j)] = a[r,i] d_js - d_ri a[j,s]
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    std::map<std::size_t, FieldElement> acc;
                    if (j == s)
                        acc.emplace(r * n + i, one);
                    if (r == i) {
                        auto [it, fresh] = acc.emplace(j * n + s, -one);
                        if (!fresh)
                            it->second -= one;
                    }
                    SparseVector row;
                    for (auto& [c, x] : acc)
                        if (!x.is_zero())
                            row.emplace_back(c, x);
                    if (!row.empty())
                        equations.insert(row);
                }
    MatSubspace out(spec, n);
    for (const auto& v : equations.kernel_basis())
        out.insert_vector(v);
    return out;
}

/// Derivations D with D(sl(n)) inside the center F*1.
inline DerSpace lemma1_kernel(const FieldSpec& spec, std::size_t n)
{
    if (n < 2)
        throw PreconditionError("lemma1_kernel: n must be at least 2");
    const auto der = der_space(spec, n);
    const auto der_basis = der.basis();
    const auto trace_zero = sl(spec, n).basis();
    const std::size_t d = der_basis.size();

    // images[q][m] = D_q(s_m)
    std::vector<std::vector<Matrix>> images(d);
    for (std::size_t q = 0; q < d; ++q)
        for (const auto& s : trace_zero)
            images[q].push_back(der_basis[q].apply(s));

    // sum_q lambda_q D_q(s_m) is scalar: off-diagonal entries vanish and
    // every diagonal entry equals the (1,1) entry.
    Echelon constraints(spec, d);
    for (std::size_t m = 0; m < trace_zero.size(); ++m)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                if (r == 0 && c == 0)
                    continue;
                std::vector<FieldElement> row;
                row.reserve(d);
                for (std::size_t q = 0; q < d; ++q) {
                    const auto& y = images[q][m];
                    row.push_back(r == c ? y[r * n + r] - y[0] : y[r * n + c]);
                }
                constraints.insert(to_sparse(row));
            }

    DerSpace out(spec, n);
    for (const auto& lambda : constraints.kernel_basis()) {
        Matrix combo(spec, n * n);
        for (const auto& [q, x] : lambda)
            combo += x * der_basis[q].action();
        out.insert(EndoMatrix(std::move(combo)));
    }
    return out;
}

/// Outcome of asking whether a (x) 1 = b + 1 (x) c has a solution with
/// b in sl(m) and c in M_{m / p^k}, over F_p.
struct Thm3Verdict {
    std::uint64_t p;
    std::uint64_t k;
    std::size_t m;
    std::size_t block;        // p^k
    std::size_t multiplicity; // m / p^k
    FieldElement witness_trace;
    FieldElement lifted_trace; // tr(a (x) 1_{m/p^k})
    std::size_t rank_coefficients;
    std::size_t rank_augmented;

    bool feasible() const { return rank_coefficients == rank_augmented; }
};

inline Thm3Verdict thm3_witness_infeasible(std::uint64_t p, std::uint64_t k, std::size_t m,
                                           const std::optional<Matrix>& witness = std::nullopt)
{
    if (!is_prime(p))
        throw NotPrimeError("thm3: " + std::to_string(p) + " is not prime");
    if (k == 0)
        throw PreconditionError("thm3: exponent k must be at least 1");
    if (m == 0)
        throw PreconditionError("thm3: m must be at least 1");
    const auto v = valuation(m, p);
    if (v != k)
        throw PreconditionError("thm3: nu_" + std::to_string(p) + "(" + std::to_string(m) + ") = " +
                                std::to_string(v) + " != k = " + std::to_string(k));

    const auto spec = FieldSpec::prime_field(p);
    std::size_t block = 1;
    for (std::uint64_t e = 0; e < k; ++e)
        block *= p;
    const std::size_t q = m / block;

    const Matrix a = witness.value_or(matrix_unit(spec, block, 1, 1));
    if (a.size() != block || !(a.spec() == spec))
        throw PreconditionError("thm3: witness must lie in M_" + std::to_string(block) + " over " + spec.to_string());
    if (trace(a).is_zero())
        throw PreconditionError("thm3: witness must have nonzero trace");

    const Matrix lifted = embed_unital(a, q);

    // Unknowns: b[r,s] at r*m + s, c[u,v] at m^2 + u*q + v; the right-hand side
    // sits in the last column of the augmented system.
    const std::size_t rhs = m * m + q * q;
    const auto one = FieldElement::one(spec);
    Echelon system(spec, rhs + 1);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t s = 0; s < m; ++s) {
            SparseVector row{{r * m + s, one}};
            if (r / q == s / q)
                row.emplace_back(m * m + (r % q) * q + (s % q), one);
            const auto& y = lifted[r * m + s];
            if (!y.is_zero())
                row.emplace_back(rhs, -y);
            system.insert(row);
        }
    SparseVector trace_row;
    for (std::size_t r = 0; r < m; ++r)
        trace_row.emplace_back(r * m + r, one);
    system.insert(trace_row);

    const std::size_t rank_aug = system.rank();
    const bool inconsistent = system.rows().count(rhs) != 0;
    return Thm3Verdict{p, k, m, block, q, trace(a), trace(lifted), rank_aug - (inconsistent ? 1 : 0), rank_aug};
}

} // namespace locmat
