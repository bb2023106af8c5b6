#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace locmat {

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1U)
            result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

} // namespace detail

/// Deterministic Miller-Rabin; the witness set below is exact for all 64-bit inputs.
inline bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    constexpr std::array<std::uint64_t, 12> witnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto w : witnesses) {
        if (n == w)
            return true;
        if (n % w == 0)
            return false;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (auto w : witnesses) {
        std::uint64_t x = detail::pow_mod(w, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = detail::mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

/// Prime factorization by trial division, primes ascending. factorize(1) is empty.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> factorize(std::uint64_t n)
{
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0)
            continue;
        std::uint64_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

/// Exponent of the prime p in the natural number n (n >= 1).
inline std::uint64_t valuation(std::uint64_t n, std::uint64_t p)
{
    std::uint64_t e = 0;
    while (n != 0 && n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

} // namespace locmat
