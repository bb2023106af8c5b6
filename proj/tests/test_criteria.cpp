#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <locmat/criteria.hpp>

using namespace locmat;

namespace {

SteinitzNumber st(const char* s) { return SteinitzNumber::parse(s); }

} // namespace

TEST_CASE("theorem1_decide examples")
{
    const auto v0 = theorem1_decide(0, st("3^2*5"));
    CHECK(v0.simple);
    CHECK(v0.reason.branch == Branch::Char0);
    CHECK(v0.subject == Subject::QuotientLie);

    const auto fin = theorem1_decide(3, st("3^2*2^inf"));
    CHECK_FALSE(fin.simple);
    CHECK(fin.reason.branch == Branch::NuFinite);
    REQUIRE(fin.reason.k);
    CHECK(*fin.reason.k == 2);
    CHECK(fin.reason.to_string() == "nu_finite(2)");

    const auto inf = theorem1_decide(3, st("3^inf"));
    CHECK(inf.simple);
    CHECK(inf.reason.branch == Branch::NuInfinite);

    const auto zero = theorem1_decide(5, st("2^inf*3"));
    CHECK(zero.simple);
    CHECK(zero.reason.branch == Branch::NuZero);
}

TEST_CASE("corollary and theorem 3 decisions")
{
    auto [derived, inder] = corollary_decide(3, st("3^2*2^inf"));
    CHECK(derived.subject == Subject::InderDerived);
    CHECK(derived.simple);
    CHECK(derived.reason.branch == Branch::Unconditional);
    CHECK(inder.subject == Subject::Inder);
    CHECK_FALSE(inder.simple);

    CHECK(corollary_decide(0, st("2^inf")).second.simple);
    CHECK(corollary_decide(5, st("2^inf")).second.simple);
    CHECK(corollary_decide(5, st("2^inf")).first.simple);

    auto [der_derived, der] = theorem3_decide(3, st("3*2^inf"));
    CHECK(der_derived.subject == Subject::DerDerived);
    CHECK(der_derived.simple);
    CHECK(der.subject == Subject::Der);
    CHECK_FALSE(der.simple);
    CHECK(theorem3_decide(0, st("2^inf")).second.simple);
}

TEST_CASE("characteristic guards")
{
    CHECK_THROWS_AS(theorem1_decide(2, st("3")), UnsupportedCharacteristicError);
    CHECK_THROWS_AS(corollary_decide(2, st("3")), UnsupportedCharacteristicError);
    CHECK_THROWS_AS(theorem3_decide(2, st("2^inf")), UnsupportedCharacteristicError);
    CHECK_THROWS_AS(theorem1_decide(9, st("3")), PreconditionError);
    CHECK_THROWS_AS(theorem1_decide(1, st("3")), PreconditionError);
    try {
        theorem1_decide(2, st("3"));
    } catch (const UnsupportedCharacteristicError& e) {
        CHECK(std::string(e.what()).find("characteristic different from 2") != std::string::npos);
    }
}

TEST_CASE("verdicts depend only on nu_p")
{
    std::mt19937_64 rng(31);
    const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11};
    const auto random_with = [&](std::uint64_t p, Exponent e) {
        SteinitzNumber::FactorMap f;
        for (auto q : primes) {
            if (q == p)
                continue;
            const auto roll = rng() % 6;
            if (roll == 5)
                f[q] = Exponent::infinity();
            else if (roll > 1)
                f[q] = Exponent(roll);
        }
        if (!e.is_zero())
            f[p] = e;
        return SteinitzNumber::from_factors(f);
    };
    for (std::uint64_t p : {3, 5, 7, 11})
        for (int trial = 0; trial < 200; ++trial) {
            const auto roll = rng() % 5;
            const Exponent e = roll == 4 ? Exponent::infinity() : Exponent(roll);
            const auto a = random_with(p, e);
            const auto b = random_with(p, e);
            const auto va = theorem1_decide(p, a);
            const auto vb = theorem1_decide(p, b);
            REQUIRE(va.simple == vb.simple);
            REQUIRE(va.reason.branch == vb.reason.branch);
            REQUIRE(va.simple == (e.is_zero() || e.is_infinite()));
            // Der and Inder verdicts carry the same condition
            REQUIRE(theorem3_decide(p, a).second.simple == va.simple);
            REQUIRE(corollary_decide(p, a).second.simple == va.simple);
            REQUIRE(theorem3_decide(p, a).first.simple);
            REQUIRE(corollary_decide(p, a).first.simple);
        }
}

TEST_CASE("cross_validate: finite nu")
{
    const auto t = make_tower(FieldSpec::prime_field(3), {3, 6, 12, 24}, st("3*2^inf"));
    const auto cv = cross_validate(3, t);
    CHECK(cv.pass);
    CHECK_FALSE(cv.quotient.simple);
    CHECK_FALSE(cv.der.simple);
    CHECK(cv.from_declared_limit);
    REQUIRE(cv.nonmembership);
    CHECK(cv.nonmembership->levels.size() == 3);
    CHECK(cv.absorption.empty());
}

TEST_CASE("cross_validate: growing nu")
{
    const auto t = make_tower(FieldSpec::prime_field(3), {3, 9, 27}, st("3^inf"));
    const auto cv = cross_validate(3, t);
    CHECK(cv.pass);
    CHECK(cv.quotient.simple);
    CHECK(cv.quotient.reason.branch == Branch::NuInfinite);
    REQUIRE(cv.absorption.size() == 3);
    CHECK(cv.absorption[0].from == 0);
    CHECK(cv.absorption[0].to == 1);
    CHECK(cv.absorption[1].to == 2);
    CHECK(cv.absorption[2].from == 1);
}

TEST_CASE("cross_validate: char 0 and nu zero")
{
    const auto cv0 = cross_validate(0, make_tower(FieldSpec::rationals(), {2, 4, 8}));
    CHECK(cv0.pass);
    CHECK(cv0.quotient.simple);
    CHECK_FALSE(cv0.from_declared_limit);
    CHECK(cv0.steinitz == st("2^3"));
    REQUIRE(cv0.decomposition.size() == 3);
    for (const auto& d : cv0.decomposition)
        CHECK(d.universal);

    const auto cv5 = cross_validate(5, make_tower(FieldSpec::prime_field(5), {2, 6, 12}, st("2^inf*3")));
    CHECK(cv5.pass);
    CHECK(cv5.quotient.reason.branch == Branch::NuZero);
}

TEST_CASE("cross_validate: without a declared limit the top size decides")
{
    const auto cv = cross_validate(3, make_tower(FieldSpec::prime_field(3), {3, 9, 27}));
    CHECK(cv.steinitz == st("3^3"));
    CHECK_FALSE(cv.quotient.simple);
    REQUIRE(cv.nonmembership);
    CHECK(cv.nonmembership->k == 3);
    CHECK(cv.nonmembership->base_level == 2);
    CHECK(cv.pass);
}

TEST_CASE("cross_validate guards")
{
    CHECK_THROWS_AS(cross_validate(3, make_tower(FieldSpec::prime_field(5), {5, 10})), PreconditionError);
    CHECK_THROWS_AS(cross_validate(2, make_tower(FieldSpec::prime_field(2), {2, 4})), UnsupportedCharacteristicError);
}

TEST_CASE("evaluate compares against expectations")
{
    const auto t = make_tower(FieldSpec::prime_field(5), {5, 10}, st("5*2^inf"));
    CHECK(evaluate({"ok", 5, t, false, false}).pass);
    const auto wrong = evaluate({"wrong", 5, t, true, true});
    CHECK_FALSE(wrong.pass);
    REQUIRE(wrong.result);
    CHECK(wrong.result->pass);

    const auto broken = evaluate({"broken", 3, t, false, false});
    CHECK_FALSE(broken.pass);
    CHECK_FALSE(broken.result);
    CHECK_FALSE(broken.error.empty());
}
