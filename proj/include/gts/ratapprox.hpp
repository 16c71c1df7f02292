#ifndef GTS_RATAPPROX_HPP
#define GTS_RATAPPROX_HPP

#include "gts/interp.hpp"

namespace gts {

/// u/v with v(0) = 1 and (G v - u) = 0 mod h for the osculant G of the data.
struct RationalApproximant {
    Polynomial u;
    Polynomial v;
    NodeSet nodeset;
};

/// Linearized multipoint-Pade fit: writes v = 1 + b_1 x + ... + b_{deg_v}
/// x^{deg_v}, u = a_0 + ... + a_{deg_u} x^{deg_u} and imposes
/// remainder(G v - u, h) = 0. Requires deg_u + deg_v + 1 <= n; with
/// deg_u + deg_v + 1 < n the extra congruence equations must be consistent.
/// Throws DegenerateTableError (unattainable split or singular system) or
/// PoleAtNodeError (solution with v(x_i) = 0).
RationalApproximant rational_fit(const HermiteData& data, int deg_u, int deg_v);

/// u(x)/v(x); PoleError when |v(x)| <= 1e-12 * (1 + max|v coeff|).
Scalar rational_eval(const RationalApproximant& R, const Scalar& x);

/// max over a uniform grid of |[f v]^(n)(t)|, computed per point as the
/// Cauchy product of the jets of f and v. Float64 only.
double sampled_fv_derivative_max(const Expr& f, const RationalApproximant& R, double a, double b,
                                 int grid = 1024);

/// 1.05 * max|[f v]^(n)| * |h(x)| / (n! |v(x)|), the n-th derivative sampled
/// on a 1024-point grid over [a, b]. Float64 only.
double rational_remainder_bound(const Expr& f, const RationalApproximant& R, double x, double a,
                                double b);

/// The bound above with a precomputed sampled max (shared across a table).
double rational_remainder_bound_with_max(const RationalApproximant& R, double fv_max, double x);

/// Recomputes G from the data and checks remainder(G v - u, h) = 0 (exact in
/// ExactRational, coefficientwise <= 1e-8 relative in Float64).
bool verify_congruence(const RationalApproximant& R, const HermiteData& data);

}  // namespace gts

#endif
