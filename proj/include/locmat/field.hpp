#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "error.hpp"
#include "primes.hpp"
#include "steinitz.hpp"

namespace locmat {

/// The ground field: the rationals or the prime field with p elements.
class FieldSpec {
public:
    enum class Kind { Rationals, PrimeField };

    static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }

    static FieldSpec prime_field(std::uint64_t p)
    {
        if (!is_prime(p))
            throw NotPrimeError("prime field order " + std::to_string(p) + " is not prime");
        // Residue products go through 128-bit intermediates, sums must not wrap.
        if (p >= (std::uint64_t{1} << 63))
            throw PreconditionError("prime field order too large");
        return FieldSpec(Kind::PrimeField, p);
    }

    /// "Q" or "Fp:<p>".
    static FieldSpec parse(std::string_view text)
    {
        const auto body = detail::trim(text);
        if (body == "Q")
            return rationals();
        if (body.substr(0, 3) == "Fp:")
            return prime_field(detail::parse_nat(body.substr(3), body));
        throw ParseError("unknown field '" + std::string(body) + "' (expected Q or Fp:<p>)");
    }

    /// Field with the given characteristic: 0 gives Q, a prime p gives F_p.
    static FieldSpec of_characteristic(std::uint64_t c) { return c == 0 ? rationals() : prime_field(c); }

    Kind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == Kind::Rationals; }
    std::uint64_t characteristic() const { return p_; }

    std::string to_string() const { return is_rationals() ? "Q" : "Fp:" + std::to_string(p_); }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    FieldSpec(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

    Kind kind_;
    std::uint64_t p_;
};

/// An exact scalar tagged with its field.
///
/// Rationals are kept in lowest terms with positive denominator (gmp canonical
/// form); residues are kept in [0, p).
class FieldElement {
public:
    static FieldElement zero(const FieldSpec& spec) { return from_int(spec, 0); }
    static FieldElement one(const FieldSpec& spec) { return from_int(spec, 1); }

    static FieldElement from_int(const FieldSpec& spec, std::int64_t k)
    {
        if (spec.is_rationals())
            return FieldElement(spec, mpq_class(mpz_class(static_cast<long>(k))));
        const auto p = static_cast<__int128>(spec.characteristic());
        auto r = static_cast<__int128>(k) % p;
        if (r < 0)
            r += p;
        return FieldElement(spec, static_cast<std::uint64_t>(r));
    }

    static FieldElement from_rational(const FieldSpec& spec, const mpq_class& q)
    {
        if (spec.is_rationals()) {
            mpq_class c = q;
            c.canonicalize();
            return FieldElement(spec, c);
        }
        const mpz_class p(std::to_string(spec.characteristic()));
        mpz_class den = q.get_den() % p;
        if (den == 0)
            throw DivisionByZeroError("denominator " + q.get_den().get_str() + " vanishes in " + spec.to_string());
        mpz_class num = q.get_num() % p;
        if (num < 0)
            num += p;
        return FieldElement(spec, static_cast<std::uint64_t>(std::stoull(num.get_str())))
            / FieldElement(spec, static_cast<std::uint64_t>(std::stoull(den.get_str())));
    }

    /// Accepts integers and fractions "a/b" with an optional sign.
    static FieldElement parse(const FieldSpec& spec, std::string_view text)
    {
        const auto body = detail::trim(text);
        mpq_class q;
        if (body.empty() || q.set_str(std::string(body), 10) != 0)
            throw ParseError("invalid field element '" + std::string(body) + "'");
        if (q.get_den() == 0)
            throw DivisionByZeroError("zero denominator in '" + std::string(body) + "'");
        q.canonicalize();
        return from_rational(spec, q);
    }

    const FieldSpec& spec() const { return spec_; }

    bool is_zero() const
    {
        if (const auto* r = std::get_if<std::uint64_t>(&value_))
            return *r == 0;
        return sgn(std::get<mpq_class>(value_)) == 0;
    }

    bool is_one() const
    {
        if (const auto* r = std::get_if<std::uint64_t>(&value_))
            return *r == 1;
        return std::get<mpq_class>(value_) == 1;
    }

    /// Residue in [0, p); only valid over a prime field.
    std::uint64_t residue() const
    {
        if (spec_.is_rationals())
            throw PreconditionError("residue() on a rational element");
        return std::get<std::uint64_t>(value_);
    }

    /// Rational value; only valid over Q.
    const mpq_class& rational() const
    {
        if (!spec_.is_rationals())
            throw PreconditionError("rational() on a prime-field element");
        return std::get<mpq_class>(value_);
    }

    FieldElement inv() const
    {
        if (is_zero())
            throw DivisionByZeroError("inverse of zero");
        if (spec_.is_rationals())
            return FieldElement(spec_, mpq_class(1) / std::get<mpq_class>(value_));
        const auto p = spec_.characteristic();
        return FieldElement(spec_, detail::pow_mod(std::get<std::uint64_t>(value_), p - 2, p));
    }

    std::string to_string() const
    {
        if (const auto* r = std::get_if<std::uint64_t>(&value_))
            return std::to_string(*r);
        return std::get<mpq_class>(value_).get_str();
    }

    FieldElement operator-() const
    {
        if (spec_.is_rationals())
            return FieldElement(spec_, mpq_class(-std::get<mpq_class>(value_)));
        const auto r = std::get<std::uint64_t>(value_);
        return FieldElement(spec_, r == 0 ? 0 : spec_.characteristic() - r);
    }

    FieldElement& operator+=(const FieldElement& b)
    {
        check_spec(b);
        if (spec_.is_rationals()) {
            std::get<mpq_class>(value_) += std::get<mpq_class>(b.value_);
        } else {
            auto& r = std::get<std::uint64_t>(value_);
            r += std::get<std::uint64_t>(b.value_);
            if (r >= spec_.characteristic())
                r -= spec_.characteristic();
        }
        return *this;
    }

    FieldElement& operator-=(const FieldElement& b)
    {
        check_spec(b);
        if (spec_.is_rationals()) {
            std::get<mpq_class>(value_) -= std::get<mpq_class>(b.value_);
        } else {
            auto& r = std::get<std::uint64_t>(value_);
            const auto s = std::get<std::uint64_t>(b.value_);
            r = r >= s ? r - s : r + (spec_.characteristic() - s);
        }
        return *this;
    }

    FieldElement& operator*=(const FieldElement& b)
    {
        check_spec(b);
        if (spec_.is_rationals()) {
            std::get<mpq_class>(value_) *= std::get<mpq_class>(b.value_);
        } else {
            auto& r = std::get<std::uint64_t>(value_);
            r = detail::mul_mod(r, std::get<std::uint64_t>(b.value_), spec_.characteristic());
        }
        return *this;
    }

    FieldElement& operator/=(const FieldElement& b)
    {
        check_spec(b);
        return *this *= b.inv();
    }

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

    friend bool operator==(const FieldElement& a, const FieldElement& b)
    {
        return a.spec_ == b.spec_ && a.value_ == b.value_;
    }

private:
    FieldElement(const FieldSpec& spec, std::uint64_t residue) : spec_(spec), value_(residue) {}
    FieldElement(const FieldSpec& spec, mpq_class q) : spec_(spec), value_(std::move(q)) {}

    void check_spec(const FieldElement& b) const
    {
        if (!(spec_ == b.spec_))
            throw SpecMismatchError("field mismatch: " + spec_.to_string() + " vs " + b.spec_.to_string());
    }

    FieldSpec spec_;
    std::variant<std::uint64_t, mpq_class> value_;
};

inline FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }
inline FieldElement sub(const FieldElement& a, const FieldElement& b) { return a - b; }
inline FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }
inline FieldElement neg(const FieldElement& a) { return -a; }
inline FieldElement inv(const FieldElement& a) { return a.inv(); }
inline FieldElement from_int(const FieldSpec& spec, std::int64_t k) { return FieldElement::from_int(spec, k); }
inline bool is_zero(const FieldElement& a) { return a.is_zero(); }

} // namespace locmat
