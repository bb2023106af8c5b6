#pragma once

#include <cstdint>
#include <random>

#include "field.hpp"
#include "matrix.hpp"

namespace locmat {

/// Reproducible default seed for every randomized sweep.
inline constexpr std::uint64_t default_rng_seed = 0xC0FFEE;

using Rng = std::mt19937_64;

namespace detail {

// Reduce raw engine output directly; std::uniform_int_distribution is not
// specified bit-for-bit across standard libraries.
inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi)
{
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(rng() % span);
}

} // namespace detail

/// Uniform over F_p; over Q a small fraction num/den with |num| <= 6, 1 <= den <= 4.
inline FieldElement random_element(const FieldSpec& spec, Rng& rng)
{
    if (!spec.is_rationals())
        return FieldElement::from_int(spec, static_cast<std::int64_t>(rng() % spec.characteristic()));
    const auto num = detail::uniform(rng, -6, 6);
    const auto den = detail::uniform(rng, 1, 4);
    return FieldElement::from_int(spec, num) / FieldElement::from_int(spec, den);
}

inline FieldElement random_nonzero_element(const FieldSpec& spec, Rng& rng)
{
    while (true) {
        auto x = random_element(spec, rng);
        if (!x.is_zero())
            return x;
    }
}

inline Matrix random_matrix(const FieldSpec& spec, std::size_t n, Rng& rng)
{
    Matrix m(spec, n);
    for (std::size_t k = 0; k < n * n; ++k)
        m[k] = random_element(spec, rng);
    return m;
}

/// Random matrix with nonzero trace.
inline Matrix random_trace_nonzero(const FieldSpec& spec, std::size_t n, Rng& rng)
{
    while (true) {
        auto m = random_matrix(spec, n, rng);
        if (!trace(m).is_zero())
            return m;
    }
}

} // namespace locmat
