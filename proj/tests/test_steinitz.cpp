#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <numeric>
#include <random>

#include <locmat/steinitz.hpp>

using namespace locmat;

namespace {

SteinitzNumber random_steinitz(std::mt19937_64& rng)
{
    constexpr std::array<std::uint64_t, 5> primes{2, 3, 5, 7, 11};
    SteinitzNumber::FactorMap f;
    for (auto p : primes) {
        const auto roll = rng() % 8;
        if (roll < 3)
            continue;
        f[p] = roll == 7 ? Exponent::infinity() : Exponent(rng() % 5);
    }
    return SteinitzNumber::from_factors(f);
}

} // namespace

TEST_CASE("parse reads the grammar")
{
    CHECK(SteinitzNumber::parse("1").is_one());
    const auto s = SteinitzNumber::parse("2^inf*3^2");
    CHECK(s.factors() == SteinitzNumber::FactorMap{{2, Exponent::infinity()}, {3, Exponent(2)}});
    CHECK(SteinitzNumber::parse("5") == SteinitzNumber::from_nat(5));
    // repeated factors multiply
    CHECK(SteinitzNumber::parse("2*2^3") == SteinitzNumber::from_nat(16));
}

TEST_CASE("parse errors")
{
    CHECK_THROWS_AS(SteinitzNumber::parse("4^2"), NotPrimeError);
    CHECK_THROWS_AS(SteinitzNumber::parse(""), ParseError);
    CHECK_THROWS_AS(SteinitzNumber::parse("2^"), ParseError);
    CHECK_THROWS_AS(SteinitzNumber::parse("2**3"), ParseError);
    CHECK_THROWS_AS(SteinitzNumber::parse("2^x"), ParseError);
    CHECK_THROWS_AS(SteinitzNumber::parse("1*2"), NotPrimeError);
}

TEST_CASE("explicit zero exponents are dropped")
{
    CHECK(SteinitzNumber::parse("3^0").is_one());
    CHECK(SteinitzNumber::parse("2^0*5").factors().size() == 1);
}

TEST_CASE("from_nat factors naturals")
{
    CHECK(SteinitzNumber::from_nat(12).factors() == SteinitzNumber::FactorMap{{2, Exponent(2)}, {3, Exponent(1)}});
    CHECK(SteinitzNumber::from_nat(1).is_one());
    CHECK(SteinitzNumber::from_nat(97).factors() == SteinitzNumber::FactorMap{{97, Exponent(1)}});
    CHECK_THROWS_AS(SteinitzNumber::from_nat(0), PreconditionError);
}

TEST_CASE("mul adds exponents with absorbing infinity")
{
    const auto a = SteinitzNumber::parse("2^inf");
    const auto b = SteinitzNumber::parse("2^3*5");
    CHECK(mul(a, b) == SteinitzNumber::parse("2^inf*5"));
    CHECK(mul(b, SteinitzNumber{}) == b);
    CHECK(mul(SteinitzNumber::parse("3^2"), SteinitzNumber::parse("3")) == SteinitzNumber::parse("3^3"));
}

TEST_CASE("exponent arithmetic")
{
    const auto inf = Exponent::infinity();
    CHECK(Exponent(4) + inf == inf);
    CHECK(inf + Exponent(4) == inf);
    CHECK(inf + inf == inf);
    CHECK(Exponent(3) < inf);
    CHECK(Exponent(3) < Exponent(4));
    CHECK_THROWS_AS(inf.value(), PreconditionError);
    CHECK_THROWS_AS(Exponent(~std::uint64_t{0}) + Exponent(1), Error);
}

TEST_CASE("lcm is pointwise max")
{
    CHECK(lcm(SteinitzNumber::parse("2*3"), SteinitzNumber::parse("2^2")) == SteinitzNumber::parse("2^2*3"));
    const auto s = SteinitzNumber::parse("2^inf*7^3");
    CHECK(lcm(s, s) == s);

    // Fold over {3, 6, 12, 24}, checked against the integer lcm.
    SteinitzNumber acc;
    std::uint64_t int_lcm = 1;
    for (std::uint64_t n : {3, 6, 12, 24}) {
        acc = lcm(acc, SteinitzNumber::from_nat(n));
        int_lcm = std::lcm(int_lcm, n);
    }
    CHECK(int_lcm == 24);
    CHECK(acc == SteinitzNumber::from_nat(int_lcm));
    CHECK(acc == SteinitzNumber::parse("2^3*3"));
}

TEST_CASE("divides")
{
    CHECK(divides(SteinitzNumber::parse("2"), SteinitzNumber::parse("2^inf")));
    CHECK_FALSE(divides(SteinitzNumber::parse("3"), SteinitzNumber::parse("2^inf")));
    CHECK(divides(SteinitzNumber{}, SteinitzNumber::parse("5^2")));
    CHECK_FALSE(divides(SteinitzNumber::parse("2^inf"), SteinitzNumber::parse("2^100")));

    // On naturals it agrees with integer divisibility.
    for (std::uint64_t a = 1; a <= 60; ++a)
        for (std::uint64_t b = 1; b <= 60; ++b)
            REQUIRE(divides(SteinitzNumber::from_nat(a), SteinitzNumber::from_nat(b)) == (b % a == 0));
}

TEST_CASE("nu")
{
    const auto s = SteinitzNumber::parse("3^2*2^inf");
    CHECK(nu(s, 3) == Exponent(2));
    CHECK(nu(s, 2) == Exponent::infinity());
    CHECK(nu(SteinitzNumber{}, 5) == Exponent(0));
    CHECK_THROWS_AS(nu(s, 4), NotPrimeError);
}

TEST_CASE("format is canonical")
{
    CHECK(format(SteinitzNumber::parse("3^2*2^inf")) == "2^inf*3^2");
    CHECK(format(SteinitzNumber{}) == "1");
    CHECK(format(SteinitzNumber::parse("5^1")) == "5");
}

TEST_CASE("randomized Steinitz laws")
{
    std::mt19937_64 rng(0xC0FFEE);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto a = random_steinitz(rng);
        const auto b = random_steinitz(rng);
        const auto c = random_steinitz(rng);
        REQUIRE(mul(a, b) == mul(b, a));
        REQUIRE(mul(mul(a, b), c) == mul(a, mul(b, c)));
        REQUIRE(mul(a, SteinitzNumber{}) == a);
        REQUIRE(divides(a, mul(a, b)));

        const auto l = lcm(a, b);
        REQUIRE(divides(a, l));
        REQUIRE(divides(b, l));
        if (divides(a, c) && divides(b, c))
            REQUIRE(divides(l, c));
        // a * b * c is an upper bound of a and b, so lcm must divide it
        const auto upper = mul(mul(a, b), c);
        REQUIRE((divides(a, upper) && divides(b, upper)));
        REQUIRE(divides(l, upper));
        // and lcm is least: dropping one unit of any finite exponent breaks it
        for (const auto& [p, e] : l.factors()) {
            if (e.is_infinite())
                continue;
            auto smaller = l.factors();
            smaller[p] = Exponent(e.value() - 1);
            const auto below = SteinitzNumber::from_factors(smaller);
            REQUIRE_FALSE((divides(a, below) && divides(b, below)));
        }

        for (std::uint64_t p : {2, 3, 5, 7, 11})
            REQUIRE(nu(mul(a, b), p) == nu(a, p) + nu(b, p));

        REQUIRE(SteinitzNumber::parse(format(a)) == a);
    }
}

TEST_CASE("from_nat is a monoid homomorphism")
{
    for (std::uint64_t m = 1; m <= 80; ++m)
        for (std::uint64_t n = 1; n <= 80; ++n)
            REQUIRE(SteinitzNumber::from_nat(m * n) == mul(SteinitzNumber::from_nat(m), SteinitzNumber::from_nat(n)));
}

TEST_CASE("primality")
{
    for (std::uint64_t n = 0; n < 2000; ++n) {
        bool prime = n >= 2;
        for (std::uint64_t d = 2; d * d <= n && prime; ++d)
            prime = n % d != 0;
        REQUIRE(is_prime(n) == prime);
    }
    CHECK(is_prime(2305843009213693951ULL)); // 2^61 - 1
    CHECK_FALSE(is_prime(3215031751ULL));     // strong pseudoprime to bases 2, 3, 5, 7
}
