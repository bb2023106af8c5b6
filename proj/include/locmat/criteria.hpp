#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "primes.hpp"
#include "steinitz.hpp"
#include "tower.hpp"

namespace locmat {

enum class Subject {
    QuotientLie,  // A^(-) / F*1
    Inder,
    InderDerived, // [Inder(A), Inder(A)]
    Der,
    DerDerived,   // [Der(A), Der(A)]
};

/// Which branch of the criterion decided the verdict.
enum class Branch {
    Char0,
    NuZero,
    NuInfinite,
    NuFinite,
    Unconditional, // the derived algebras are simple for every A
};

inline std::string to_string(Subject s)
{
    switch (s) {
    case Subject::QuotientLie: return "quotient";
    case Subject::Inder: return "inder";
    case Subject::InderDerived: return "inder_derived";
    case Subject::Der: return "der";
    case Subject::DerDerived: return "der_derived";
    }
    return "?";
}

inline std::string to_string(Branch b)
{
    switch (b) {
    case Branch::Char0: return "char0";
    case Branch::NuZero: return "nu_zero";
    case Branch::NuInfinite: return "nu_infinite";
    case Branch::NuFinite: return "nu_finite";
    case Branch::Unconditional: return "unconditional";
    }
    return "?";
}

struct Reason {
    Branch branch;
    std::uint64_t characteristic;
    std::optional<std::uint64_t> k; // set for NuFinite

    std::string to_string() const
    {
        return k ? locmat::to_string(branch) + "(" + std::to_string(*k) + ")" : locmat::to_string(branch);
    }
};

struct SimplicityVerdict {
    Subject subject;
    bool simple;
    Reason reason;
};

namespace detail {

inline void check_characteristic(std::uint64_t c)
{
    if (c == 2)
        throw UnsupportedCharacteristicError("characteristic 2 is excluded: the ground field must have "
                                             "characteristic different from 2");
    if (c != 0 && !is_prime(c))
        throw PreconditionError("characteristic " + std::to_string(c) + " is neither 0 nor a prime");
}

inline Reason classify(std::uint64_t c, const SteinitzNumber& s)
{
    check_characteristic(c);
    if (c == 0)
        return {Branch::Char0, 0, std::nullopt};
    const auto e = s.nu(c);
    if (e.is_zero())
        return {Branch::NuZero, c, std::nullopt};
    if (e.is_infinite())
        return {Branch::NuInfinite, c, std::nullopt};
    return {Branch::NuFinite, c, e.value()};
}

} // namespace detail

/// A^(-)/F*1 is simple iff char F = 0, or char F = p with nu_p(s) in {0, inf}.
inline SimplicityVerdict theorem1_decide(std::uint64_t characteristic, const SteinitzNumber& s)
{
    const auto reason = detail::classify(characteristic, s);
    return {Subject::QuotientLie, reason.branch != Branch::NuFinite, reason};
}

/// ([Inder, Inder], Inder)
inline std::pair<SimplicityVerdict, SimplicityVerdict> corollary_decide(std::uint64_t characteristic,
                                                                          const SteinitzNumber& s)
{
    const auto t1 = theorem1_decide(characteristic, s);
    return {{Subject::InderDerived, true, {Branch::Unconditional, characteristic, std::nullopt}},
            {Subject::Inder, t1.simple, t1.reason}};
}

/// ([Der, Der], Der), topological simplicity.
inline std::pair<SimplicityVerdict, SimplicityVerdict> theorem3_decide(std::uint64_t characteristic,
                                                                         const SteinitzNumber& s)
{
    const auto t1 = theorem1_decide(characteristic, s);
    return {{Subject::DerDerived, true, {Branch::Unconditional, characteristic, std::nullopt}},
            {Subject::Der, t1.simple, t1.reason}};
}

struct DecompositionCheck {
    std::size_t level;
    std::size_t size;
    bool universal; // every element lies in [A,A] + F*1
};

/// Cross-check of the decision procedure against the finite-level linear algebra.
struct CrossValidation {
    std::uint64_t characteristic;
    Tower tower;
    SteinitzNumber steinitz;
    bool from_declared_limit; // steinitz is the declared limit, not the lcm of the sizes
    SimplicityVerdict quotient;
    SimplicityVerdict der;
    std::optional<NonmembershipReport> nonmembership;
    std::vector<AbsorptionReport> absorption;
    std::vector<DecompositionCheck> decomposition;
    bool pass;
};

/// Decides simplicity for the tower's Steinitz number (the declared limit when
/// present) and confirms the verdict with the matching finite-level evidence.
inline CrossValidation cross_validate(std::uint64_t characteristic, const Tower& t)
{
    detail::check_characteristic(characteristic);
    if (t.spec().characteristic() != characteristic)
        throw PreconditionError("tower over " + t.spec().to_string() + " does not match characteristic " +
                                std::to_string(characteristic));

    const bool declared = t.declared_limit().has_value();
    const SteinitzNumber s = declared ? *t.declared_limit() : tower_steinitz(t);
    const auto quotient = theorem1_decide(characteristic, s);
    const auto der = theorem3_decide(characteristic, s).second;

    CrossValidation out{characteristic, t, s, declared, quotient, der, std::nullopt, {}, {}, true};
    switch (quotient.reason.branch) {
    case Branch::Char0:
    case Branch::NuZero:
        for (std::size_t level = 0; level < t.levels(); ++level) {
            const bool universal = universal_decomposition(t, level);
            out.decomposition.push_back({level, t.size_at(level), universal});
            out.pass = out.pass && universal;
        }
        break;
    case Branch::NuInfinite:
        for (std::size_t i = 0; i < t.levels(); ++i)
            for (std::size_t j = i + 1; j < t.levels(); ++j)
                if ((t.size_at(j) / t.size_at(i)) % characteristic == 0) {
                    auto report = absorption_witness(t, characteristic, i, j);
                    out.pass = out.pass && report.pass();
                    out.absorption.push_back(std::move(report));
                }
        // A p^inf tower must exhibit at least one p-divisible step.
        out.pass = out.pass && !out.absorption.empty();
        break;
    case Branch::NuFinite:
        out.nonmembership = theorem1_nonmembership_witness(t, characteristic, *quotient.reason.k);
        out.pass = out.nonmembership->pass();
        break;
    case Branch::Unconditional:
        break;
    }
    out.pass = out.pass && der.simple == quotient.simple;
    return out;
}

struct CatalogEntry {
    std::string name;
    std::uint64_t characteristic;
    Tower tower;
    bool expected_quotient_simple;
    bool expected_der_simple;
};

struct CatalogOutcome {
    CatalogEntry entry;
    std::optional<CrossValidation> result;
    std::string error; // nonempty when cross-validation raised
    bool pass;
};

inline CatalogOutcome evaluate(const CatalogEntry& entry)
{
    try {
        auto result = cross_validate(entry.characteristic, entry.tower);
        const bool matches = result.quotient.simple == entry.expected_quotient_simple &&
                             result.der.simple == entry.expected_der_simple;
        const bool pass = matches && result.pass;
        return {entry, std::move(result), "", pass};
    } catch (const Error& e) {
        return {entry, std::nullopt, e.what(), false};
    }
}

} // namespace locmat
