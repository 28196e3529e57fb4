#ifndef TWISTDER_EXTEND_HPP
#define TWISTDER_EXTEND_HPP

#include "twistder/affine.hpp"
#include "twistder/derlie.hpp"
#include "twistder/descent.hpp"

namespace twistder {

// One descent instance with the caches every computation shares: the scalar
// extension A tensor E, the twisted form B, and the Lie algebra of A tensor E.
class ExtensionProblem {
public:
    ExtensionProblem(QAlgebra a, CocycleData cd);

    const QAlgebra& a() const { return a_; }
    const CocycleData& cocycle() const { return cd_; }
    const EAlgebra& a_e() const { return a_e_; }
    const QAlgebra& b() const { return form_.b; }
    const AffineMatrixSpace<ExtElem>& g_e() const { return g_e_; }

private:
    QAlgebra a_;
    CocycleData cd_;
    EAlgebra a_e_;
    TwistedForm form_;
    AffineMatrixSpace<ExtElem> g_e_;
};

// The affine space {P^{-1} M P + (P^{-1})' P : M in g_E} intersected with
// the rational matrices, computed by expanding the g_E coordinates in the
// power basis of E and imposing that every generator component vanishes.
AffineMatrixSpace<RatFunc> formula_extension_space(const ExtensionProblem& p);

// Set equality of the formula route and the direct Leibniz solver, plus
// nonemptiness and the identification of the homogeneous part with the
// F-linear derivations of B.
CheckReport cross_validate(const ExtensionProblem& p);

} // namespace twistder

#endif
