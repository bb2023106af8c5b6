#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace locmat {

/// Dense square matrix over an exact field.
///
/// Entries are addressed 1-based through at()/set() to match the e_ij notation;
/// entries() exposes the row-major storage, which is also the vectorization
/// used by subspaces (entry (i, j) sits at (i - 1) * n + (j - 1)).
class Matrix {
public:
    Matrix(const FieldSpec& spec, std::size_t n)
        : spec_(spec), n_(n), entries_(n * n, FieldElement::zero(spec))
    {
    }

    Matrix(const FieldSpec& spec, std::size_t n, std::vector<FieldElement> entries)
        : spec_(spec), n_(n), entries_(std::move(entries))
    {
        if (entries_.size() != n * n)
            throw SizeMismatchError("matrix of size " + std::to_string(n) + " needs " + std::to_string(n * n) +
                                    " entries, got " + std::to_string(entries_.size()));
        for (const auto& x : entries_)
            if (!(x.spec() == spec_))
                throw SpecMismatchError("matrix entry over " + x.spec().to_string() + " in a matrix over " +
                                        spec_.to_string());
    }

    const FieldSpec& spec() const { return spec_; }
    std::size_t size() const { return n_; }
    const std::vector<FieldElement>& entries() const { return entries_; }

    const FieldElement& at(std::size_t i, std::size_t j) const { return entries_[offset(i, j)]; }
    void set(std::size_t i, std::size_t j, FieldElement value)
    {
        if (!(value.spec() == spec_))
            throw SpecMismatchError("entry over " + value.spec().to_string() + " in a matrix over " + spec_.to_string());
        entries_[offset(i, j)] = std::move(value);
    }

    // 0-based raw access for the library internals.
    const FieldElement& operator[](std::size_t flat) const { return entries_[flat]; }
    FieldElement& operator[](std::size_t flat) { return entries_[flat]; }

    bool is_zero() const
    {
        for (const auto& x : entries_)
            if (!x.is_zero())
                return false;
        return true;
    }

    Matrix& operator+=(const Matrix& b)
    {
        check_compatible(b);
        for (std::size_t k = 0; k < entries_.size(); ++k)
            entries_[k] += b.entries_[k];
        return *this;
    }

    Matrix& operator-=(const Matrix& b)
    {
        check_compatible(b);
        for (std::size_t k = 0; k < entries_.size(); ++k)
            entries_[k] -= b.entries_[k];
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator-(Matrix a)
    {
        for (auto& x : a.entries_)
            x = -x;
        return a;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        a.check_compatible(b);
        const std::size_t n = a.n_;
        Matrix c(a.spec_, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t t = 0; t < n; ++t) {
                const auto& ait = a.entries_[i * n + t];
                if (ait.is_zero())
                    continue;
                for (std::size_t j = 0; j < n; ++j) {
                    const auto& btj = b.entries_[t * n + j];
                    if (!btj.is_zero())
                        c.entries_[i * n + j] += ait * btj;
                }
            }
        return c;
    }

    friend Matrix operator*(const FieldElement& s, Matrix a)
    {
        if (!(s.spec() == a.spec_))
            throw SpecMismatchError("scalar over " + s.spec().to_string() + " times matrix over " + a.spec_.to_string());
        for (auto& x : a.entries_)
            x *= s;
        return a;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.spec_ == b.spec_ && a.n_ == b.n_ && a.entries_ == b.entries_;
    }

private:
    std::size_t offset(std::size_t i, std::size_t j) const
    {
        if (i < 1 || i > n_ || j < 1 || j > n_)
            throw IndexError("index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range for size " +
                             std::to_string(n_));
        return (i - 1) * n_ + (j - 1);
    }

    void check_compatible(const Matrix& b) const
    {
        if (!(spec_ == b.spec_))
            throw SpecMismatchError("matrix field mismatch: " + spec_.to_string() + " vs " + b.spec_.to_string());
        if (n_ != b.n_)
            throw SizeMismatchError("matrix size mismatch: " + std::to_string(n_) + " vs " + std::to_string(b.n_));
    }

    FieldSpec spec_;
    std::size_t n_;
    std::vector<FieldElement> entries_;
};

inline Matrix identity(const FieldSpec& spec, std::size_t n)
{
    Matrix m(spec, n);
    for (std::size_t i = 0; i < n; ++i)
        m[i * n + i] = FieldElement::one(spec);
    return m;
}

/// The matrix unit e_ij (1-based indices).
inline Matrix matrix_unit(const FieldSpec& spec, std::size_t n, std::size_t i, std::size_t j)
{
    Matrix m(spec, n);
    m.set(i, j, FieldElement::one(spec));
    return m;
}

inline Matrix mat_mul(const Matrix& a, const Matrix& b) { return a * b; }
inline Matrix mat_add(const Matrix& a, const Matrix& b) { return a + b; }
inline Matrix scalar_mul(const FieldElement& s, const Matrix& a) { return s * a; }

/// [a, b] = ab - ba
inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

inline FieldElement trace(const Matrix& a)
{
    auto t = FieldElement::zero(a.spec());
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
        t += a[i * n + i];
    return t;
}

/// Kronecker product; the left factor indexes blocks:
/// (a (x) b)[(i-1)k + s, (j-1)k + t] = a[i,j] * b[s,t].
inline Matrix kron(const Matrix& a, const Matrix& b)
{
    if (!(a.spec() == b.spec()))
        throw SpecMismatchError("kron field mismatch: " + a.spec().to_string() + " vs " + b.spec().to_string());
    const std::size_t n = a.size();
    const std::size_t k = b.size();
    const std::size_t nk = n * k;
    Matrix c(a.spec(), nk);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto& aij = a[i * n + j];
            if (aij.is_zero())
                continue;
            for (std::size_t s = 0; s < k; ++s)
                for (std::size_t t = 0; t < k; ++t) {
                    const auto& bst = b[s * k + t];
                    if (!bst.is_zero())
                        c[(i * k + s) * nk + (j * k + t)] = aij * bst;
                }
        }
    return c;
}

/// The unital embedding M_n -> M_{nk}, a |-> a (x) 1_k.
inline Matrix embed_unital(const Matrix& a, std::size_t k)
{
    if (k == 0)
        throw PreconditionError("embed_unital: multiplicity must be at least 1");
    return kron(a, identity(a.spec(), k));
}

} // namespace locmat
