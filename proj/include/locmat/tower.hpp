#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"
#include "primes.hpp"
#include "steinitz.hpp"
#include "subspace.hpp"

namespace locmat {

/// A chain M_{n_1} -> M_{n_2} -> ... -> M_{n_r} of unital embeddings
/// a |-> a (x) 1_{n_{i+1}/n_i}, a finite stand-in for a unital locally matrix
/// algebra. Levels are 0-based indices into sizes().
class Tower {
public:
    Tower(const FieldSpec& spec, std::vector<std::size_t> sizes, std::optional<SteinitzNumber> declared_limit = {})
        : spec_(spec), sizes_(std::move(sizes)), limit_(std::move(declared_limit))
    {
        if (sizes_.empty())
            throw PreconditionError("tower needs at least one level");
        for (std::size_t i = 0; i < sizes_.size(); ++i) {
            if (sizes_[i] == 0)
                throw PreconditionError("tower level sizes must be at least 1");
            if (i > 0 && (sizes_[i] <= sizes_[i - 1] || sizes_[i] % sizes_[i - 1] != 0))
                throw PreconditionError("broken divisibility chain: " + std::to_string(sizes_[i - 1]) +
                                        " does not properly divide " + std::to_string(sizes_[i]));
            if (limit_ && !divides(SteinitzNumber::from_nat(sizes_[i]), *limit_))
                throw PreconditionError("level size " + std::to_string(sizes_[i]) +
                                        " does not divide the declared limit " + limit_->to_string());
        }
    }

    const FieldSpec& spec() const { return spec_; }
    const std::vector<std::size_t>& sizes() const { return sizes_; }
    std::size_t levels() const { return sizes_.size(); }
    std::size_t size_at(std::size_t level) const
    {
        if (level >= sizes_.size())
            throw IndexError("tower has no level " + std::to_string(level));
        return sizes_[level];
    }
    const std::optional<SteinitzNumber>& declared_limit() const { return limit_; }

private:
    FieldSpec spec_;
    std::vector<std::size_t> sizes_;
    std::optional<SteinitzNumber> limit_;
};

struct TowerElement {
    std::size_t level;
    Matrix value;
};

inline Tower make_tower(const FieldSpec& spec, std::vector<std::size_t> sizes,
                        std::optional<SteinitzNumber> declared_limit = {})
{
    return Tower(spec, std::move(sizes), std::move(declared_limit));
}

/// lcm of the level sizes; for a chain this is the top size.
inline SteinitzNumber tower_steinitz(const Tower& t)
{
    SteinitzNumber s;
    for (auto n : t.sizes())
        s = lcm(s, SteinitzNumber::from_nat(n));
    return s;
}

/// Element of the given level, checked against the level's size and field.
inline TowerElement element_at(const Tower& t, std::size_t level, Matrix value)
{
    if (value.size() != t.size_at(level) || !(value.spec() == t.spec()))
        throw SizeMismatchError("element does not live in level " + std::to_string(level) + " (M_" +
                                std::to_string(t.size_at(level)) + " over " + t.spec().to_string() + ")");
    return {level, std::move(value)};
}

/// Pushes an element up the chain through the unital embeddings.
inline TowerElement lift(const Tower& t, const TowerElement& e, std::size_t to)
{
    if (to < e.level)
        throw PreconditionError("cannot lift from level " + std::to_string(e.level) + " down to " + std::to_string(to));
    t.size_at(to);
    if (e.value.size() != t.size_at(e.level))
        throw SizeMismatchError("element size does not match its level");
    const std::size_t ratio = t.size_at(to) / t.size_at(e.level);
    return {to, ratio == 1 ? e.value : embed_unital(e.value, ratio)};
}

/// [M_n, M_n] + F*1 at size n, computed as sl(n) + F*1.
inline MatSubspace commutator_plus_scalars(const FieldSpec& spec, std::size_t n) { return plus_scalars(sl(spec, n)); }

inline bool membership_in_commutator_plus_scalars(const TowerElement& e)
{
    return commutator_plus_scalars(e.value.spec(), e.value.size()).contains(e.value);
}

/// Whether every matrix unit of the level, hence every element, lies in [A,A] + F*1.
inline bool universal_decomposition(const Tower& t, std::size_t level)
{
    const std::size_t n = t.size_at(level);
    const auto target = commutator_plus_scalars(t.spec(), n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            if (!target.contains(matrix_unit(t.spec(), n, i, j)))
                return false;
    return true;
}

struct LevelTrace {
    std::size_t level;
    std::size_t size;
    std::size_t multiplicity; // size / p^k
    FieldElement trace;       // tr(a (x) 1)
    bool excluded;            // not in [A,A] + F*1
};

struct NonmembershipReport {
    std::uint64_t p;
    std::uint64_t k;
    std::size_t base_level; // the level of size p^k
    FieldElement base_trace;
    bool base_excluded;
    std::vector<LevelTrace> levels; // every level above the base

    bool pass() const
    {
        if (!base_excluded || base_trace.is_zero())
            return false;
        for (const auto& l : levels)
            if (!l.excluded || l.trace.is_zero())
                return false;
        return true;
    }
};

/// Lifts a trace-nonzero element of the level M_{p^k} (default e_11) through
/// every higher level and records that it never enters [A,A] + F*1.
inline NonmembershipReport theorem1_nonmembership_witness(const Tower& t, std::uint64_t p, std::uint64_t k,
                                                          const std::optional<Matrix>& witness = std::nullopt)
{
    if (!is_prime(p))
        throw NotPrimeError("witness: " + std::to_string(p) + " is not prime");
    if (t.spec() != FieldSpec::prime_field(p))
        throw PreconditionError("witness needs a tower over Fp:" + std::to_string(p) + ", got " + t.spec().to_string());
    if (k == 0)
        throw PreconditionError("witness needs k >= 1");

    std::size_t pk = 1;
    for (std::uint64_t e = 0; e < k; ++e)
        pk *= p;
    std::optional<std::size_t> base;
    for (std::size_t level = 0; level < t.levels(); ++level) {
        const auto m = t.size_at(level);
        if (m == pk)
            base = level;
        if (m >= pk && valuation(m, p) != k)
            throw PreconditionError("tower is inconsistent with nu_" + std::to_string(p) + " = " + std::to_string(k) +
                                    ": nu_" + std::to_string(p) + "(" + std::to_string(m) +
                                    ") = " + std::to_string(valuation(m, p)));
    }
    if (!base)
        throw PreconditionError("tower has no level of size " + std::to_string(pk));

    Matrix a = witness.value_or(matrix_unit(t.spec(), pk, 1, 1));
    const TowerElement start = element_at(t, *base, std::move(a));
    if (trace(start.value).is_zero())
        throw PreconditionError("witness must have nonzero trace");

    NonmembershipReport report{p, k, *base, trace(start.value), !membership_in_commutator_plus_scalars(start), {}};
    for (std::size_t level = *base + 1; level < t.levels(); ++level) {
        const auto lifted = lift(t, start, level);
        report.levels.push_back({level, t.size_at(level), t.size_at(level) / pk, trace(lifted.value),
                                 !membership_in_commutator_plus_scalars(lifted)});
    }
    return report;
}

struct AbsorbedUnit {
    std::size_t i, j;   // e_ij of the lower level, 1-based
    FieldElement trace; // trace of its lift
    bool contained;     // lift lies in [A_to, A_to]
};

struct AbsorptionReport {
    std::uint64_t p;
    std::size_t from, to;
    std::size_t ratio;
    std::vector<AbsorbedUnit> units;
    bool contained; // the whole lifted algebra lies in [A_to, A_to]

    bool pass() const { return contained; }
};

/// Checks A_from (x) 1 inside [A_to, A_to] one matrix unit at a time.
inline AbsorptionReport absorption_witness(const Tower& t, std::uint64_t p, std::size_t from, std::size_t to)
{
    if (t.spec() != FieldSpec::prime_field(p))
        throw PreconditionError("absorption needs a tower over Fp:" + std::to_string(p) + ", got " +
                                t.spec().to_string());
    if (from >= to)
        throw PreconditionError("absorption needs from < to");
    const std::size_t lower = t.size_at(from);
    const std::size_t upper = t.size_at(to);
    const std::size_t ratio = upper / lower;
    if (ratio % p != 0)
        throw PreconditionError(std::to_string(p) + " does not divide the ratio " + std::to_string(upper) + "/" +
                                std::to_string(lower) + " = " + std::to_string(ratio));

    const auto brackets = commutator_subspace(t.spec(), upper);
    AbsorptionReport report{p, from, to, ratio, {}, true};
    MatSubspace lifted_algebra(t.spec(), upper);
    for (std::size_t i = 1; i <= lower; ++i)
        for (std::size_t j = 1; j <= lower; ++j) {
            const auto lifted = lift(t, {from, matrix_unit(t.spec(), lower, i, j)}, to);
            const bool inside = brackets.contains(lifted.value);
            report.units.push_back({i, j, trace(lifted.value), inside});
            lifted_algebra.insert(lifted.value);
        }
    report.contained = brackets.contains(lifted_algebra);
    return report;
}

} // namespace locmat
