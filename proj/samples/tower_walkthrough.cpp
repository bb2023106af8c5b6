// Walk a tower of matrix algebras over F_3 and show where sl(n) + scalars stops being everything.
#include <iostream>

#include <locmat/locmat.hpp>

int main()
{
    using namespace locmat;
    const auto f3 = FieldSpec::prime_field(3);
    const auto t = make_tower(f3, {2, 6, 18}, SteinitzNumber::parse("2*3^inf"));

    std::cout << "Steinitz number of the chain: " << format(tower_steinitz(t)) << "\n";
    for (std::size_t level = 0; level < t.levels(); ++level)
        std::cout << "  M_" << t.size_at(level) << ": [A,A] + F*1 is everything: "
                  << (universal_decomposition(t, level) ? "yes" : "no") << "\n";

    const auto report = absorption_witness(t, 3, 0, 1);
    std::cout << "units of M_2 land in [M_6, M_6] + F*1 after lifting: "
              << (report.pass() ? "yes" : "no") << "\n";

    const auto verdict = theorem1_decide(3, *t.declared_limit());
    std::cout << "quotient Lie algebra simple: " << (verdict.simple ? "yes" : "no")
              << " (" << verdict.reason.to_string() << ")\n";
}
