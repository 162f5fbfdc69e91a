#include "lagrforge/verify/verify.hpp"

namespace lagrforge::verify {

KineticCheck kinetic_identity_check(const LieData& lie, const LagrangianFamily* family, const sym::SampleOptions& opts) {
    if (lie.r() != 1 || lie.n() != 2)
        throw ShapeMismatch("kinetic identity needs one group parameter and two coordinates, got r=" +
                            std::to_string(lie.r()) + ", n=" + std::to_string(lie.n()));
    const Expr x1(lie.vars.field[0]);
    const Expr x2(lie.vars.field[1]);
    const Expr v1(lie.vars.jet[0][0]);
    const Expr v2(lie.vars.jet[1][0]);

    KineticCheck out;
    out.momentum = sym::substitute(sym::canonicalize(x1 * v2 - v1 * x2), lie.onshell);
    out.twice_energy = sym::substitute(sym::canonicalize(v1 * v1 + v2 * v2), lie.onshell);
    out.verdict = sym::equals(out.momentum, out.twice_energy, opts);

    if (family && family->free_params.size() == 2) {
        sym::Substitution values{{family->free_params[0], Expr(0)},
                                 {family->free_params[1], Expr(Rational(-1, 2))}};
        out.specialized = family->specialized(values).components.at(0);
    }
    return out;
}

}  // namespace lagrforge::verify
