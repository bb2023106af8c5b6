#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <string_view>

#include "error.hpp"
#include "primes.hpp"

namespace locmat {

/// An element of {0, 1, 2, ...} extended by a top element "inf".
class Exponent {
public:
    constexpr Exponent() = default;
    constexpr explicit Exponent(std::uint64_t value) : value_(value) {}

    static constexpr Exponent infinity()
    {
        Exponent e;
        e.infinite_ = true;
        return e;
    }

    constexpr bool is_infinite() const { return infinite_; }
    constexpr bool is_zero() const { return !infinite_ && value_ == 0; }

    std::uint64_t value() const
    {
        if (infinite_)
            throw PreconditionError("exponent is infinite");
        return value_;
    }

    /// Addition with t + inf = inf + t = inf + inf = inf.
    friend Exponent operator+(Exponent a, Exponent b)
    {
        if (a.infinite_ || b.infinite_)
            return infinity();
        if (a.value_ > std::numeric_limits<std::uint64_t>::max() - b.value_)
            throw Error("exponent overflow");
        return Exponent(a.value_ + b.value_);
    }

    friend Exponent max(Exponent a, Exponent b) { return a < b ? b : a; }

    // Lexicographic on (infinite_, value_): every finite value sorts below inf.
    friend constexpr auto operator<=>(const Exponent&, const Exponent&) = default;

    std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

private:
    bool infinite_ = false;
    std::uint64_t value_ = 0;
};

/// A supernatural number prod p^{r_p} with finitely many nonzero exponents.
///
/// The factor map never stores a zero exponent, so two values are equal exactly
/// when their maps are equal. The empty map is the number 1.
class SteinitzNumber {
public:
    using FactorMap = std::map<std::uint64_t, Exponent>;

    SteinitzNumber() = default;

    /// Validates that every key is prime and drops zero exponents.
    static SteinitzNumber from_factors(const FactorMap& factors)
    {
        SteinitzNumber s;
        for (const auto& [p, e] : factors) {
            if (!is_prime(p))
                throw NotPrimeError(std::to_string(p) + " is not prime");
            if (!e.is_zero())
                s.factors_.emplace(p, e);
        }
        return s;
    }

    static SteinitzNumber from_nat(std::uint64_t n)
    {
        if (n == 0)
            throw PreconditionError("from_nat: 0 is not a Steinitz number");
        SteinitzNumber s;
        for (const auto& [p, e] : factorize(n))
            s.factors_.emplace(p, Exponent(e));
        return s;
    }

    /// Grammar: "1" | factor ("*" factor)*, factor = prime ["^" (nat | "inf")].
    static SteinitzNumber parse(std::string_view text);

    const FactorMap& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }

    Exponent nu(std::uint64_t p) const
    {
        if (!is_prime(p))
            throw NotPrimeError("nu: " + std::to_string(p) + " is not prime");
        auto it = factors_.find(p);
        return it == factors_.end() ? Exponent{} : it->second;
    }

    /// Canonical text form; primes ascending, "^1" elided, "inf" for infinity.
    std::string to_string() const
    {
        if (factors_.empty())
            return "1";
        std::string out;
        for (const auto& [p, e] : factors_) {
            if (!out.empty())
                out += '*';
            out += std::to_string(p);
            if (e != Exponent(1))
                out += '^' + e.to_string();
        }
        return out;
    }

    friend SteinitzNumber operator*(const SteinitzNumber& a, const SteinitzNumber& b)
    {
        SteinitzNumber out = a;
        for (const auto& [p, e] : b.factors_) {
            auto [it, inserted] = out.factors_.emplace(p, e);
            if (!inserted)
                it->second = it->second + e;
        }
        return out;
    }

    friend bool operator==(const SteinitzNumber&, const SteinitzNumber&) = default;

private:
    FactorMap factors_;
};

inline SteinitzNumber mul(const SteinitzNumber& a, const SteinitzNumber& b) { return a * b; }

inline SteinitzNumber lcm(const SteinitzNumber& a, const SteinitzNumber& b)
{
    SteinitzNumber::FactorMap out = a.factors();
    for (const auto& [p, e] : b.factors()) {
        auto [it, inserted] = out.emplace(p, e);
        if (!inserted)
            it->second = max(it->second, e);
    }
    return SteinitzNumber::from_factors(out);
}

/// True iff nu_p(a) <= nu_p(b) for every prime p.
inline bool divides(const SteinitzNumber& a, const SteinitzNumber& b)
{
    for (const auto& [p, e] : a.factors()) {
        auto it = b.factors().find(p);
        if (it == b.factors().end() || it->second < e)
            return false;
    }
    return true;
}

inline Exponent nu(const SteinitzNumber& s, std::uint64_t p) { return s.nu(p); }

inline std::string format(const SteinitzNumber& s) { return s.to_string(); }

inline SteinitzNumber parse_steinitz(std::string_view text) { return SteinitzNumber::parse(text); }

namespace detail {

inline std::uint64_t parse_nat(std::string_view token, std::string_view context)
{
    std::uint64_t value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc{} || ptr != last)
        throw ParseError("invalid number '" + std::string(token) + "' in '" + std::string(context) + "'");
    return value;
}

inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

} // namespace detail

inline SteinitzNumber SteinitzNumber::parse(std::string_view text)
{
    const std::string_view body = detail::trim(text);
    if (body.empty())
        throw ParseError("empty Steinitz expression");
    if (body == "1")
        return {};

    SteinitzNumber result;
    std::string_view rest = body;
    while (true) {
        const auto star = rest.find('*');
        const std::string_view factor = detail::trim(rest.substr(0, star));
        if (factor.empty())
            throw ParseError("empty factor in '" + std::string(body) + "'");

        const auto caret = factor.find('^');
        const std::uint64_t p = detail::parse_nat(detail::trim(factor.substr(0, caret)), body);
        if (!is_prime(p))
            throw NotPrimeError(std::to_string(p) + " is not prime");

        Exponent e(1);
        if (caret != std::string_view::npos) {
            const std::string_view exp = detail::trim(factor.substr(caret + 1));
            e = exp == "inf" ? Exponent::infinity() : Exponent(detail::parse_nat(exp, body));
        }
        if (!e.is_zero()) {
            SteinitzNumber::FactorMap one{{p, e}};
            result = result * SteinitzNumber::from_factors(one);
        }

        if (star == std::string_view::npos)
            break;
        rest = rest.substr(star + 1);
    }
    return result;
}

} // namespace locmat
