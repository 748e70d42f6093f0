// Audits ball quotients and a few other surfaces and threefolds against
// the hyperbolic inequalities, printing one line per manifold.

#include "chiy/chiy.hpp"

#include <iostream>

int main()
{
    using namespace chiy;

    std::vector<ManifoldChernData> manifolds = {
        ball_quotient(2), ball_quotient(3), projective_space(2), hypersurface(2, 5),
        product(hypersurface(1, 3), hypersurface(1, 4)), complex_torus(3),
    };

    for (const auto& m : manifolds) {
        AuditReport r = hyperbolic_audit(m);
        std::cout << m.name << ": chi_y = " << to_polynomial(evaluate_genus(m)) << "; ";
        for (const auto& c : r.checks)
            std::cout << "A_" << c.index << " " << c.left << " vs " << c.right << " (" << to_string(c.verdict) << ") ";
        std::cout << (r.full_cpn_pattern ? "[CP^n pattern]" : "") << '\n';
    }

    // K_2 in dimension 3 as a universal polynomial
    std::cout << "K_2 (n=3) = " << k_table(3)[2] << '\n';
}
