#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace locmat {

/// A sparse coordinate vector: (column, value) pairs, columns strictly
/// increasing, values nonzero.
using SparseVector = std::vector<std::pair<std::size_t, FieldElement>>;

namespace detail {

/// x + alpha * y
inline SparseVector axpy(const SparseVector& x, const FieldElement& alpha, const SparseVector& y)
{
    SparseVector out;
    out.reserve(x.size() + y.size());
    auto ix = x.begin();
    auto iy = y.begin();
    while (ix != x.end() || iy != y.end()) {
        if (iy == y.end() || (ix != x.end() && ix->first < iy->first)) {
            out.push_back(*ix++);
        } else if (ix == x.end() || iy->first < ix->first) {
            out.emplace_back(iy->first, alpha * iy->second);
            ++iy;
        } else {
            auto v = ix->second + alpha * iy->second;
            if (!v.is_zero())
                out.emplace_back(ix->first, std::move(v));
            ++ix;
            ++iy;
        }
    }
    return out;
}

inline const FieldElement* lookup(const SparseVector& v, std::size_t col)
{
    auto it = std::lower_bound(v.begin(), v.end(), col, [](const auto& e, std::size_t c) { return e.first < c; });
    return it != v.end() && it->first == col ? &it->second : nullptr;
}

} // namespace detail

/// Builds a SparseVector from dense values, dropping zeros.
inline SparseVector to_sparse(const std::vector<FieldElement>& dense)
{
    SparseVector v;
    for (std::size_t c = 0; c < dense.size(); ++c)
        if (!dense[c].is_zero())
            v.emplace_back(c, dense[c]);
    return v;
}

inline std::vector<FieldElement> to_dense(const FieldSpec& spec, std::size_t width, const SparseVector& v)
{
    std::vector<FieldElement> dense(width, FieldElement::zero(spec));
    for (const auto& [c, x] : v)
        dense[c] = x;
    return dense;
}

/// Incrementally maintained reduced row echelon form over F^width.
///
/// Rows are keyed by pivot column. Every stored row has a 1 at its pivot and a
/// 0 in every other row's pivot column, so the stored basis is the unique RREF
/// of the span and two Echelon values span the same space iff they compare equal.
class Echelon {
public:
    Echelon(const FieldSpec& spec, std::size_t width) : spec_(spec), width_(width) {}

    const FieldSpec& spec() const { return spec_; }
    std::size_t width() const { return width_; }
    std::size_t rank() const { return rows_.size(); }
    const std::map<std::size_t, SparseVector>& rows() const { return rows_; }

    /// Residue of v after eliminating every pivot column; zero iff v is in the span.
    SparseVector reduce(const SparseVector& v) const
    {
        check(v);
        SparseVector r = v;
        // Subtracting a pivot row only touches its own pivot and free columns,
        // so the pivot entries of v can be read off once up front.
        for (const auto& [c, x] : v) {
            auto it = rows_.find(c);
            if (it != rows_.end())
                r = detail::axpy(r, -x, it->second);
        }
        return r;
    }

    bool contains(const SparseVector& v) const { return reduce(v).empty(); }

    /// Adds v to the span; returns false if it was already there.
    bool insert(const SparseVector& v)
    {
        SparseVector r = reduce(v);
        if (r.empty())
            return false;
        const std::size_t pivot = r.front().first;
        const auto scale = r.front().second.inv();
        for (auto& [c, x] : r)
            x *= scale;
        for (auto& [c, row] : rows_)
            if (const auto* x = detail::lookup(row, pivot))
                row = detail::axpy(row, -*x, r);
        rows_.emplace(pivot, std::move(r));
        return true;
    }

    /// Basis of {x : <row, x> = 0 for every stored row}, one vector per free column.
    std::vector<SparseVector> kernel_basis() const
    {
        std::vector<SparseVector> out;
        std::vector<bool> is_pivot(width_, false);
        for (const auto& [c, row] : rows_)
            is_pivot[c] = true;
        for (std::size_t f = 0; f < width_; ++f) {
            if (is_pivot[f])
                continue;
            SparseVector k;
            for (const auto& [c, row] : rows_)
                if (const auto* x = detail::lookup(row, f))
                    k.emplace_back(c, -*x);
            k.emplace_back(f, FieldElement::one(spec_));
            std::sort(k.begin(), k.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            out.push_back(std::move(k));
        }
        return out;
    }

    friend bool operator==(const Echelon& a, const Echelon& b)
    {
        return a.spec_ == b.spec_ && a.width_ == b.width_ && a.rows_ == b.rows_;
    }

private:
    void check(const SparseVector& v) const
    {
        if (!v.empty() && v.back().first >= width_)
            throw SizeMismatchError("vector column " + std::to_string(v.back().first) + " exceeds width " +
                                    std::to_string(width_));
        for (const auto& [c, x] : v)
            if (!(x.spec() == spec_))
                throw SpecMismatchError("vector over " + x.spec().to_string() + " in a space over " + spec_.to_string());
    }

    FieldSpec spec_;
    std::size_t width_;
    std::map<std::size_t, SparseVector> rows_;
};

} // namespace locmat
