#ifndef GTS_INTERP_HPP
#define GTS_INTERP_HPP

#include <utility>
#include <vector>

#include "gts/expr.hpp"
#include "gts/jet.hpp"
#include "gts/modulus.hpp"
#include "gts/poly.hpp"

namespace gts {

/// Derivative targets per node: values[i][k] = f^(k)(x_i), 0 <= k < m_i.
struct HermiteData {
    NodeSet nodeset;
    std::vector<std::vector<Scalar>> values;

    HermiteData(NodeSet ns, std::vector<std::vector<Scalar>> vals);
    Domain domain() const { return nodeset.domain(); }
    int n() const { return nodeset.n(); }
};

HermiteData hermite_data_from_expr(const Expr& f, const NodeSet& ns);

/// The unique g with deg(g) < n matching all derivative conditions, plus the
/// modulus h it was computed against.
struct Osculant {
    Polynomial g;
    Polynomial h;
    NodeSet nodeset;
};

/// Brute-force route: build the confluent Vandermonde system for the
/// conditions and solve it.
Osculant osculate_vandermonde(const HermiteData& data);

/// Idempotents s_i of the factor ring mod h: sum s_i = 1, s_i*s_j = delta_ij
/// s_i, and (x-x_i)^{m_i} * s_i = 0, all mod h.
struct SpectralBasis {
    std::vector<Polynomial> s;
};

/// CRT construction: s_i = (w_i * h_i) mod h with h_i = h/(x-x_i)^{m_i} and
/// w_i the order-(m_i-1) reciprocal series of h_i at x_i.
SpectralBasis spectral_basis(const NodeSet& ns);

/// Spectral route: g = (sum_i T_i * s_i) mod h with T_i the node-i truncated
/// Taylor polynomial of the data.
Osculant osculate_spectral(const HermiteData& data);

enum class OsculateMethod { Vandermonde, Spectral };

Osculant osculate(const HermiteData& data, OsculateMethod m = OsculateMethod::Vandermonde);

struct ValueWithBound {
    double value;      // g(x)
    double abs_err_bound;  // 1.05 * max|f^(n)| * |h(x)| / n!
};

/// Float64. Sampled-range bound: valid whenever the grid brackets the true
/// extremum of f^(n) on [a, b].
ValueWithBound taylor_value_with_bound(const Expr& f, const NodeSet& ns, double x, double a,
                                       double b);

/// A point c in (a, b) with f^(n)(c) = n! (f(x)-g(x))/h(x), located by a
/// 2048-point scan plus bisection. Throws WitnessNotBracketedError when the
/// scan finds no bracket.
double c_witness(const Expr& f, const NodeSet& ns, double x, double a, double b);

/// lim_{x->x_i} (f-g)/h = (f^(m_i)(x_i) - g^(m_i)(x_i)) / h^(m_i)(x_i).
Scalar singular_limit(const Expr& f, const HermiteData& data, const Osculant& osc, int node_index);

}  // namespace gts

#endif
