#include "gts/ratapprox.hpp"

#include <cmath>

#include "gts/errors.hpp"

namespace gts {

namespace {

bool remainder_negligible(const Polynomial& residual, const Polynomial& reference, double tol) {
    if (residual.domain() == Domain::ExactRational) return residual.is_zero();
    double scale = 0.0;
    for (const auto& c : reference.coeffs()) scale = std::max(scale, std::fabs(c.float64()));
    for (const auto& c : residual.coeffs())
        if (std::fabs(c.float64()) > tol * (1.0 + scale)) return false;
    return true;
}

Polynomial congruence_residual(const RationalApproximant& R, const Polynomial& G,
                               const Polynomial& h) {
    return divmod(G * R.v - R.u, h).remainder;
}

}  // namespace

RationalApproximant rational_fit(const HermiteData& data, int deg_u, int deg_v) {
    if (deg_u < 0 || deg_v < 0) throw Error("degrees must be >= 0");
    const NodeSet& ns = data.nodeset;
    const Domain dom = ns.domain();
    const int n = ns.n();
    const int k = deg_u + deg_v + 1;
    if (k > n) {
        int du = std::min(deg_u, n - 1);
        throw DegenerateTableError(
            "degree split rejected: deg_u + deg_v + 1 = " + std::to_string(k) + " exceeds n = " +
            std::to_string(n) + ", not square; nearest square split is deg_u = " +
            std::to_string(du) + ", deg_v = " + std::to_string(n - 1 - du));
    }

    Osculant osc = osculate_vandermonde(data);
    const Polynomial& h = osc.h;
    const Polynomial& G = osc.g;

    // columns for the b_j unknowns: remainder of G * x^j mod h
    std::vector<Polynomial> gx(static_cast<std::size_t>(deg_v) + 1, Polynomial(dom));
    gx[0] = G;
    Polynomial xpoly = Polynomial::x(dom);
    for (int j = 1; j <= deg_v; ++j)
        gx[static_cast<std::size_t>(j)] = divmod(gx[static_cast<std::size_t>(j - 1)] * xpoly, h).remainder;

    // unknowns: a_0..a_{deg_u}, b_1..b_{deg_v}; equation per remainder
    // coefficient c:  sum_j b_j [G x^j]_c - a_c = -[G]_c.
    // Solve the leading k x k block; the remaining equations are that the
    // congruence holds, verified below.
    DenseMatrix A(k, k, dom);
    std::vector<Scalar> rhs;
    rhs.reserve(static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c) {
        if (c <= deg_u) A.at(c, c) = -Scalar::one(dom);
        for (int j = 1; j <= deg_v; ++j)
            A.at(c, deg_u + j) = gx[static_cast<std::size_t>(j)].coeff(c);
        rhs.push_back(-G.coeff(c));
    }

    std::vector<Scalar> sol;
    try {
        sol = solve_linear(A, rhs);
    } catch (const SingularMatrixError&) {
        throw DegenerateTableError(
            "rational interpolation is unattainable for degree split deg_u = " +
            std::to_string(deg_u) + ", deg_v = " + std::to_string(deg_v) +
            " (singular linear system)");
    }

    std::vector<Scalar> ucoef(sol.begin(), sol.begin() + deg_u + 1);
    std::vector<Scalar> vcoef;
    vcoef.reserve(static_cast<std::size_t>(deg_v) + 1);
    vcoef.push_back(Scalar::one(dom));
    for (int j = 1; j <= deg_v; ++j) vcoef.push_back(sol[static_cast<std::size_t>(deg_u + j)]);

    RationalApproximant R{Polynomial(dom, std::move(ucoef)), Polynomial(dom, std::move(vcoef)),
                          ns};

    if (k < n) {
        Polynomial residual = congruence_residual(R, G, h);
        if (!remainder_negligible(residual, G * R.v, 1e-8))
            throw DegenerateTableError(
                "rational interpolation is unattainable for degree split deg_u = " +
                std::to_string(deg_u) + ", deg_v = " + std::to_string(deg_v) +
                " (over-determined congruence is inconsistent)");
    }

    for (const auto& nd : ns.nodes()) {
        Scalar vx = eval(R.v, nd.x);
        bool vanished;
        if (dom == Domain::ExactRational) {
            vanished = vx.is_zero();
        } else {
            double scale = 0.0;
            for (const auto& c : R.v.coeffs()) scale = std::max(scale, std::fabs(c.float64()));
            vanished = std::fabs(vx.float64()) <= 1e-12 * (1.0 + scale);
        }
        if (vanished)
            throw PoleAtNodeError("denominator vanishes at node " + nd.x.to_string() +
                                  "; interpolation conditions would be lost");
    }
    return R;
}

Scalar rational_eval(const RationalApproximant& R, const Scalar& x) {
    Scalar vx = eval(R.v, x);
    if (R.u.domain() == Domain::ExactRational) {
        if (vx.is_zero()) throw PoleError("pole at x = " + x.to_string());
    } else {
        double scale = 0.0;
        for (const auto& c : R.v.coeffs()) scale = std::max(scale, std::fabs(c.float64()));
        if (std::fabs(vx.float64()) <= 1e-12 * (1.0 + scale))
            throw PoleError("pole at x = " + x.to_string());
    }
    return eval(R.u, x) / vx;
}

double sampled_fv_derivative_max(const Expr& f, const RationalApproximant& R, double a, double b,
                                 int grid) {
    if (R.u.domain() != Domain::Float64)
        throw MixedDomainError("sampled_fv_derivative_max requires the Float64 domain");
    if (!(a < b)) throw DomainError("interval must satisfy a < b");
    if (grid < 2) throw Error("grid must be >= 2");
    const int n = R.nodeset.n();
    double nfact = 1.0;
    for (int i = 2; i <= n; ++i) nfact *= i;

    double m = 0.0;
    for (int i = 0; i < grid; ++i) {
        double t = a + (b - a) * i / (grid - 1);
        Jet jf = jet_eval(f, Scalar(t), n);
        std::vector<Scalar> jv = taylor_coeffs_at(R.v, Scalar(t), n);
        double cn = 0.0;
        for (int j = 0; j <= n; ++j)
            cn += jf.coeff(j).float64() * jv[static_cast<std::size_t>(n - j)].float64();
        m = std::max(m, std::fabs(cn * nfact));
    }
    return m;
}

double rational_remainder_bound_with_max(const RationalApproximant& R, double fv_max, double x) {
    const int n = R.nodeset.n();
    double nfact = 1.0;
    for (int i = 2; i <= n; ++i) nfact *= i;

    Scalar vx = eval(R.v, Scalar(x));
    double vscale = 0.0;
    for (const auto& c : R.v.coeffs()) vscale = std::max(vscale, std::fabs(c.float64()));
    if (std::fabs(vx.float64()) <= 1e-12 * (1.0 + vscale))
        throw PoleError("pole at x = " + fmt_double(x));

    double hx = eval(build_modulus(R.nodeset), Scalar(x)).float64();
    return 1.05 * fv_max * std::fabs(hx) / (nfact * std::fabs(vx.float64()));
}

double rational_remainder_bound(const Expr& f, const RationalApproximant& R, double x, double a,
                                double b) {
    if (x < a || x > b) throw DomainError("evaluation point outside [a, b]");
    return rational_remainder_bound_with_max(R, sampled_fv_derivative_max(f, R, a, b), x);
}

bool verify_congruence(const RationalApproximant& R, const HermiteData& data) {
    Osculant osc = osculate_vandermonde(data);
    Polynomial residual = congruence_residual(R, osc.g, osc.h);
    return remainder_negligible(residual, osc.g * R.v, 1e-8);
}

}  // namespace gts
