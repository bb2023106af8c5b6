// Acceptance run: one line per criterion with wall time against its budget.
// Exit status is nonzero if any criterion fails or runs over time.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <locmat/locmat.hpp>

#include "cli.hpp"

using namespace locmat;

namespace {

const std::vector<FieldSpec>& grid_fields()
{
    static const std::vector<FieldSpec> f{FieldSpec::rationals(), FieldSpec::prime_field(3), FieldSpec::prime_field(5)};
    return f;
}

struct Criterion {
    int id;
    std::string name;
    double budget_s;
    std::function<std::string()> body; // empty string on success, else the first failure
};

SteinitzNumber random_steinitz(std::mt19937_64& rng)
{
    SteinitzNumber::FactorMap f;
    for (std::uint64_t p : {2, 3, 5, 7, 11}) {
        const auto roll = rng() % 8;
        if (roll < 3)
            continue;
        f[p] = roll == 7 ? Exponent::infinity() : Exponent(rng() % 5);
    }
    return SteinitzNumber::from_factors(f);
}

std::string steinitz_suite()
{
    std::mt19937_64 rng(default_rng_seed);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto a = random_steinitz(rng), b = random_steinitz(rng), c = random_steinitz(rng);
        if (mul(a, b) != mul(b, a))
            return "mul not commutative on " + format(a) + ", " + format(b);
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            return "mul not associative";
        const auto l = lcm(a, b);
        if (!divides(a, l) || !divides(b, l))
            return "lcm is not an upper bound";
        if (divides(a, c) && divides(b, c) && !divides(l, c))
            return "lcm is not least";
        for (std::uint64_t p : {2, 3, 5, 7, 11})
            if (nu(mul(a, b), p) != nu(a, p) + nu(b, p))
                return "nu not additive at " + std::to_string(p);
        if (SteinitzNumber::parse(format(a)) != a)
            return "round trip failed for " + format(a);
    }
    return {};
}

std::string commutator_identity()
{
    for (const auto& spec : grid_fields())
        for (std::size_t n = 1; n <= 6; ++n)
            if (commutator_subspace(spec, n) != sl(spec, n))
                return "[M,M] != sl at n=" + std::to_string(n) + " over " + spec.to_string();
    return {};
}

std::string decomposition_dichotomy()
{
    for (const auto& spec : grid_fields())
        for (std::size_t n = 1; n <= 6; ++n) {
            const auto c = spec.characteristic();
            const bool full = plus_scalars(sl(spec, n)) == full_algebra(spec, n);
            if (full != (c == 0 || n % c != 0))
                return "dichotomy fails at n=" + std::to_string(n) + " over " + spec.to_string();
        }
    return {};
}

std::string kronecker()
{
    Rng rng(default_rng_seed);
    for (const auto& spec : grid_fields())
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t n = 2 + trial % 2, k = 3 - trial % 2;
            const auto a = random_matrix(spec, n, rng), c = random_matrix(spec, n, rng);
            const auto b = random_matrix(spec, k, rng), d = random_matrix(spec, k, rng);
            if (trace(kron(a, b)) != trace(a) * trace(b))
                return "trace not multiplicative over " + spec.to_string();
            if (kron(a, b) * kron(c, d) != kron(a * c, b * d))
                return "mixed product fails over " + spec.to_string();
        }
    for (const auto& spec : grid_fields())
        for (auto [n, k] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 2}, {3, 3}})
            if (centralizer_of_embedded(spec, n, k).dim() != k * k)
                return "centralizer dim wrong at (" + std::to_string(n) + "," + std::to_string(k) + ")";
    return {};
}

std::string derivations()
{
    for (const auto& spec : grid_fields())
        for (std::size_t n = 2; n <= 5; ++n) {
            const auto der = der_space(spec, n);
            if (der.dim() != n * n - 1)
                return "dim Der(M_" + std::to_string(n) + ") = " + std::to_string(der.dim()) + " over " +
                       spec.to_string();
            if (der != inder_space(spec, n))
                return "Der != Inder at n=" + std::to_string(n) + " over " + spec.to_string();
        }
    return {};
}

std::string lemma1()
{
    for (const auto& spec : grid_fields())
        for (std::size_t n : {4, 5})
            if (const auto d = lemma1_kernel(spec, n).dim(); d != 0)
                return "kernel dim " + std::to_string(d) + " at n=" + std::to_string(n) + " over " + spec.to_string();
    return {};
}

std::string finite_nu_witness()
{
    const auto f3 = FieldSpec::prime_field(3);
    const auto r = theorem1_nonmembership_witness(make_tower(f3, {3, 6, 12, 24}, SteinitzNumber::parse("3*2^inf")), 3, 1);
    if (!r.pass())
        return "char 3 witness entered [A,A] + F*1";
    const std::vector<std::int64_t> ledger{2, 1, 2};
    if (r.levels.size() != ledger.size())
        return "char 3 ledger has the wrong length";
    for (std::size_t i = 0; i < ledger.size(); ++i)
        if (r.levels[i].trace != from_int(f3, ledger[i]))
            return "char 3 ledger entry " + std::to_string(i + 1) + " is " + r.levels[i].trace.to_string();
    const auto r5 = theorem1_nonmembership_witness(make_tower(FieldSpec::prime_field(5), {5, 10}), 5, 1);
    if (!r5.pass() || r5.levels.size() != 1)
        return "char 5 witness failed";
    return {};
}

std::string absorption()
{
    const auto t = make_tower(FieldSpec::prime_field(3), {3, 9, 27}, SteinitzNumber::parse("3^inf"));
    for (std::size_t to : {1, 2}) {
        const auto r = absorption_witness(t, 3, 0, to);
        if (r.units.size() != 9)
            return "expected 9 basis elements";
        for (const auto& u : r.units)
            if (!u.contained)
                return "e_" + std::to_string(u.i) + std::to_string(u.j) + " not absorbed at level " +
                       std::to_string(to + 1);
        if (!r.pass())
            return "level-1 algebra not contained at level " + std::to_string(to + 1);
    }
    return {};
}

std::string thm3()
{
    using Case = std::tuple<std::uint64_t, std::uint64_t, std::size_t>;
    Rng rng(default_rng_seed);
    for (auto [p, k, m] : {Case{3, 1, 6}, Case{3, 1, 12}, Case{5, 1, 10}, Case{3, 2, 18}}) {
        const auto tag = "(" + std::to_string(p) + "," + std::to_string(k) + "," + std::to_string(m) + ")";
        const auto v = thm3_witness_infeasible(p, k, m);
        if (v.feasible())
            return tag + " is feasible";
        for (int w = 0; w < 5; ++w) {
            const auto a = random_trace_nonzero(FieldSpec::prime_field(p), v.block, rng);
            if (thm3_witness_infeasible(p, k, m, a).feasible())
                return tag + " feasible for a random witness";
        }
    }
    return {};
}

std::string pgl()
{
    std::vector<FieldSpec> specs{FieldSpec::rationals(), FieldSpec::prime_field(3), FieldSpec::prime_field(5)};
    for (const auto& spec : specs)
        for (std::size_t n : {2, 3, 4}) {
            const auto c = spec.characteristic();
            const auto ev = pgl_simplicity_evidence(spec, n, default_pgl_seeds(spec, n, 25));
            const auto tag = " at n=" + std::to_string(n) + " over " + spec.to_string();
            if (!ev.consistent())
                return "inconsistent evidence" + tag;
            if (c != 0 && n % c == 0) {
                if (!ev.proper_ideal_dim || *ev.proper_ideal_dim != n * n - 1)
                    return "sl(n) not confirmed as a proper ideal" + tag;
            } else if (!ev.all_generate) {
                return "some seed does not generate M_n" + tag;
            }
        }
    return {};
}

std::string catalog()
{
    const char* argv[] = {"locmat", "--json", "verify", "--catalog", LOCMAT_CATALOG};
    std::ostringstream out, err;
    const int code = cli::run(5, argv, out, err, false);
    if (code != 0)
        return "verify exited " + std::to_string(code) + ": " + err.str();
    return {};
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "Steinitz algebra laws", 5, steinitz_suite},
        {2, "commutator subspace = sl(n)", 10, commutator_identity},
        {3, "sl(n) + F*1 dichotomy", 5, decomposition_dichotomy},
        {4, "Kronecker trace, mixed product, centralizer", 10, kronecker},
        {5, "Der = Inder, dim n^2 - 1", 120, derivations},
        {6, "Lemma 1 kernel vanishes", 60, lemma1},
        {7, "finite-nu nonmembership witness", 5, finite_nu_witness},
        {8, "p-power absorption", 5, absorption},
        {9, "Theorem 3(2) infeasibility", 30, thm3},
        {10, "pgl ideal-closure evidence", 60, pgl},
        {11, "catalog cross-validation", 120, catalog},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string failure;
        try {
            failure = c.body();
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (failure.empty() && secs >= c.budget_s)
            failure = "over time budget";
        const bool pass = failure.empty();
        failures += pass ? 0 : 1;
        std::printf("[%s] %2d. %-45s %8.3f s / %5.0f s%s%s\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                    c.budget_s, pass ? "" : "  ", failure.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
