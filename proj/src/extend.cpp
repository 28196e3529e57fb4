#include "twistder/extend.hpp"

namespace twistder {

namespace {

TwistedForm validated_form(const QAlgebra& a, const EAlgebra& a_e, const CocycleData& cd) {
    CheckReport r = validate_cocycle(a_e, cd);
    for (const auto& item : r.items)
        if (!item.pass) throw Error("invalid cocycle: " + item.name);
    return build_twisted_form(a, cd);
}

} // namespace

ExtensionProblem::ExtensionProblem(QAlgebra a, CocycleData cd)
    : a_(std::move(a)),
      cd_(std::move(cd)),
      a_e_(extend_to(a_, cd_.field())),
      form_(validated_form(a_, a_e_, cd_)),
      g_e_(lie_algebra(a_e_)) {}

AffineMatrixSpace<RatFunc> formula_extension_space(const ExtensionProblem& p) {
    const ExtFieldPtr& field = p.cocycle().field();
    std::size_t n = p.a().dim();
    std::size_t d = field->degree();
    const auto& g_basis = p.g_e().basis();
    std::size_t r = g_basis.size();

    const EMatrix& p_inv = p.cocycle().p_inv();
    const EMatrix& p_mat = p.cocycle().p();
    EMatrix n0 = p_inv.derive() * p_mat; // (P^{-1})' P

    // generators of the linear part: T_{i,k} = P^{-1} (theta^k M_i) P
    std::vector<EMatrix> gens;
    gens.reserve(r * d);
    ExtElem theta = field->generator();
    for (std::size_t i = 0; i < r; ++i) {
        ExtElem power = field->one();
        for (std::size_t k = 0; k < d; ++k) {
            gens.push_back(p_inv * (power * g_basis[i]) * p_mat);
            power = power * theta;
        }
    }

    // rationality constraints: for each matrix entry, every theta^c component
    // with c >= 1 of sum x_g gens[g] + n0 must vanish
    std::size_t unknowns = gens.size();
    std::vector<std::vector<RatFunc>> rows;
    std::vector<RatFunc> rhs;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 1; c < d; ++c) {
                std::vector<RatFunc> row(unknowns);
                for (std::size_t g = 0; g < unknowns; ++g)
                    row[g] = gens[g].at(a, b).coeffs()[c];
                rows.push_back(std::move(row));
                rhs.push_back(-n0.at(a, b).coeffs()[c]);
            }

    auto sol = solve_linear(rows, rhs, unknowns, RatFunc(), RatFunc(1));
    if (!sol.consistent) return AffineMatrixSpace<RatFunc>::empty_space(n);

    auto to_rational_matrix = [&](const std::vector<RatFunc>& x, bool with_point) {
        FMatrix out(n, n, RatFunc());
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                RatFunc acc = with_point ? n0.at(a, b).coeffs()[0] : RatFunc();
                for (std::size_t g = 0; g < unknowns; ++g) {
                    if (x[g].is_zero()) continue;
                    acc += x[g] * gens[g].at(a, b).coeffs()[0];
                }
                out.at(a, b) = acc;
            }
        return out;
    };

    FMatrix point = to_rational_matrix(sol.particular, true);
    std::vector<FMatrix> basis;
    for (const auto& h : sol.nullspace) basis.push_back(to_rational_matrix(h, false));
    return AffineMatrixSpace<RatFunc>::make(n, std::move(point), std::move(basis));
}

CheckReport cross_validate(const ExtensionProblem& p) {
    CheckReport report;
    auto formula = formula_extension_space(p);
    auto direct = direct_extension_space(p.b());
    bool equal = affine_equal(formula, direct);
    report.add("formula space equals direct space", equal);
    bool nonempty = !formula.is_empty() && !direct.is_empty();
    report.add("extension space is nonempty", nonempty,
               nonempty ? "" : "contradicts the nonemptiness guarantee for valid cocycles");
    auto lie_b = lie_algebra(p.b());
    bool homog = !formula.is_empty() && !lie_b.is_empty() &&
                 formula.dimension() == lie_b.dimension() &&
                 formula.basis() == lie_b.basis();
    report.add("homogeneous part equals the derivation Lie algebra of the form", homog);
    if (!formula.is_empty()) {
        bool point_ok = verify_derivation(p.b(), formula.point());
        for (const auto& h : formula.basis())
            point_ok = point_ok && verify_derivation(p.b(), formula.point() + h);
        report.add("every representative satisfies the Leibniz extension equations", point_ok);
    }
    return report;
}

} // namespace twistder
