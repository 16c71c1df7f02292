#include "gts/interp.hpp"

#include <cmath>

#include "gts/errors.hpp"

namespace gts {

HermiteData::HermiteData(NodeSet ns, std::vector<std::vector<Scalar>> vals)
    : nodeset(std::move(ns)), values(std::move(vals)) {
    if (values.size() != static_cast<std::size_t>(nodeset.r()))
        throw Error("hermite data needs one value list per node");
    for (int i = 0; i < nodeset.r(); ++i) {
        const auto& vi = values[static_cast<std::size_t>(i)];
        if (static_cast<int>(vi.size()) != nodeset.node(i).multiplicity)
            throw Error("value list length must equal the node multiplicity");
        for (const auto& v : vi)
            if (v.domain() != nodeset.domain())
                throw MixedDomainError("hermite values in a different domain than the nodes");
    }
}

HermiteData hermite_data_from_expr(const Expr& f, const NodeSet& ns) {
    std::vector<std::vector<Scalar>> values;
    values.reserve(static_cast<std::size_t>(ns.r()));
    for (const auto& nd : ns.nodes()) {
        Jet j = jet_eval(f, nd.x, nd.multiplicity - 1);
        std::vector<Scalar> vi;
        vi.reserve(static_cast<std::size_t>(nd.multiplicity));
        for (int k = 0; k < nd.multiplicity; ++k)
            vi.push_back(factorial(ns.domain(), k) * j.coeff(k));
        values.push_back(std::move(vi));
    }
    return HermiteData(ns, std::move(values));
}

Osculant osculate_vandermonde(const HermiteData& data) {
    const NodeSet& ns = data.nodeset;
    const Domain dom = ns.domain();
    const int n = ns.n();

    // row per condition (i,k): entries d^k/dx^k [x^j] at x_i
    DenseMatrix A(n, n, dom);
    std::vector<Scalar> rhs;
    rhs.reserve(static_cast<std::size_t>(n));
    int row = 0;
    for (int i = 0; i < ns.r(); ++i) {
        const Scalar& xi = ns.node(i).x;
        for (int k = 0; k < ns.node(i).multiplicity; ++k) {
            for (int j = k; j < n; ++j) {
                Scalar ff = Scalar::one(dom);  // j (j-1) ... (j-k+1)
                for (int t = 0; t < k; ++t) ff = ff * Scalar::from_int(dom, j - t);
                Scalar p = Scalar::one(dom);  // x_i^{j-k}
                for (int t = 0; t < j - k; ++t) p = p * xi;
                A.at(row, j) = ff * p;
            }
            rhs.push_back(data.values[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
            ++row;
        }
    }

    std::vector<Scalar> coeffs = solve_linear(A, rhs);
    return Osculant{Polynomial(dom, std::move(coeffs)), build_modulus(ns), ns};
}

SpectralBasis spectral_basis(const NodeSet& ns) {
    const Domain dom = ns.domain();
    const Polynomial h = build_modulus(ns);
    SpectralBasis basis;
    basis.s.reserve(static_cast<std::size_t>(ns.r()));

    for (const auto& nd : ns.nodes()) {
        // h_i = h / (x - x_i)^{m_i}
        Polynomial factor = Polynomial::constant(Scalar::one(dom));
        Polynomial lin(dom, {-nd.x, Scalar::one(dom)});
        for (int k = 0; k < nd.multiplicity; ++k) factor = factor * lin;
        Polynomial hi = divmod(h, factor).quotient;

        // w_i: reciprocal series of h_i at x_i, truncated to order m_i - 1
        std::vector<Scalar> t = taylor_coeffs_at(hi, nd.x, nd.multiplicity - 1);
        std::vector<Scalar> r(static_cast<std::size_t>(nd.multiplicity), Scalar::zero(dom));
        r[0] = Scalar::one(dom) / t[0];
        for (int k = 1; k < nd.multiplicity; ++k) {
            Scalar acc = Scalar::zero(dom);
            for (int j = 1; j <= k; ++j)
                acc = acc + t[static_cast<std::size_t>(j)] * r[static_cast<std::size_t>(k - j)];
            r[static_cast<std::size_t>(k)] = -(acc / t[0]);
        }
        Polynomial wi(dom);
        Polynomial pw = Polynomial::constant(Scalar::one(dom));  // (x - x_i)^k
        for (int k = 0; k < nd.multiplicity; ++k) {
            wi = wi + r[static_cast<std::size_t>(k)] * pw;
            pw = pw * lin;
        }

        basis.s.push_back(divmod(wi * hi, h).remainder);
    }
    return basis;
}

Osculant osculate_spectral(const HermiteData& data) {
    const NodeSet& ns = data.nodeset;
    const Domain dom = ns.domain();
    const Polynomial h = build_modulus(ns);
    SpectralBasis basis = spectral_basis(ns);

    Polynomial acc(dom);
    for (int i = 0; i < ns.r(); ++i) {
        const Node& nd = ns.node(i);
        // T_i = sum_{k < m_i} v_{i,k} (x - x_i)^k / k!
        Polynomial ti(dom);
        Polynomial lin(dom, {-nd.x, Scalar::one(dom)});
        Polynomial pw = Polynomial::constant(Scalar::one(dom));
        for (int k = 0; k < nd.multiplicity; ++k) {
            Scalar coeff = data.values[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] /
                           factorial(dom, k);
            ti = ti + coeff * pw;
            pw = pw * lin;
        }
        acc = acc + ti * basis.s[static_cast<std::size_t>(i)];
    }
    return Osculant{divmod(acc, h).remainder, h, ns};
}

Osculant osculate(const HermiteData& data, OsculateMethod m) {
    return m == OsculateMethod::Vandermonde ? osculate_vandermonde(data) : osculate_spectral(data);
}

namespace {
constexpr double kBoundSafety = 1.05;

double factorial_d(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

void check_float_interval(const NodeSet& ns, double x, double a, double b) {
    if (ns.domain() != Domain::Float64)
        throw MixedDomainError("this diagnostic requires the Float64 domain");
    if (!(a < b)) throw DomainError("interval must satisfy a < b");
    if (x < a || x > b) throw DomainError("evaluation point outside [a, b]");
    for (const auto& nd : ns.nodes())
        if (nd.x.float64() < a || nd.x.float64() > b)
            throw DomainError("node " + nd.x.to_string() + " outside [a, b]");
}
}  // namespace

ValueWithBound taylor_value_with_bound(const Expr& f, const NodeSet& ns, double x, double a,
                                       double b) {
    check_float_interval(ns, x, a, b);
    Osculant osc = osculate_vandermonde(hermite_data_from_expr(f, ns));
    const int n = ns.n();
    auto [lo, hi] = derivative_range(f, n, a, b);
    double mn = kBoundSafety * std::max(std::fabs(lo), std::fabs(hi));
    double hx = eval(osc.h, Scalar(x)).float64();
    double gx = eval(osc.g, Scalar(x)).float64();
    return {gx, mn * std::fabs(hx) / factorial_d(n)};
}

double c_witness(const Expr& f, const NodeSet& ns, double x, double a, double b) {
    check_float_interval(ns, x, a, b);
    Osculant osc = osculate_vandermonde(hermite_data_from_expr(f, ns));
    const int n = ns.n();

    for (const auto& nd : ns.nodes())
        if (x == nd.x.float64()) throw DomainError("witness point must not be a node");
    double hx = eval(osc.h, Scalar(x)).float64();
    if (hx == 0.0) throw DomainError("h vanishes at the witness point");
    double fx = derivative_at(f, Scalar(x), 0).float64();
    double gx = eval(osc.g, Scalar(x)).float64();
    double q = factorial_d(n) * (fx - gx) / hx;

    auto fn = [&](double t) { return derivative_at(f, Scalar(t), n).float64(); };

    constexpr int kScan = 2048;
    const double detect_tol = 1e-9 * (1.0 + std::fabs(q));
    const double target_tol = 1e-8 * (1.0 + std::fabs(q));

    std::vector<double> ts, ds;
    ts.reserve(kScan);
    ds.reserve(kScan);
    double smin = 0.0, smax = 0.0;
    for (int i = 1; i <= kScan; ++i) {
        double t = a + (b - a) * i / (kScan + 1);
        double d = fn(t) - q;
        if (i == 1) {
            smin = smax = d + q;
        } else {
            smin = std::min(smin, d + q);
            smax = std::max(smax, d + q);
        }
        ts.push_back(t);
        ds.push_back(d);
    }

    bool all_small = true;
    for (double d : ds)
        if (std::fabs(d) > detect_tol) {
            all_small = false;
            break;
        }
    if (all_small) return 0.5 * (a + b);  // constant n-th derivative: any c works

    for (int i = 0; i < kScan; ++i) {
        if (std::fabs(ds[static_cast<std::size_t>(i)]) <= detect_tol)
            return ts[static_cast<std::size_t>(i)];
        if (i + 1 < kScan) {
            double d0 = ds[static_cast<std::size_t>(i)];
            double d1 = ds[static_cast<std::size_t>(i + 1)];
            if ((d0 < 0) != (d1 < 0)) {
                double lo = ts[static_cast<std::size_t>(i)];
                double hi = ts[static_cast<std::size_t>(i + 1)];
                double dlo = d0;
                for (int it = 0; it < 200; ++it) {
                    double mid = 0.5 * (lo + hi);
                    double dm = fn(mid) - q;
                    if (std::fabs(dm) <= target_tol) return mid;
                    if ((dm < 0) == (dlo < 0)) {
                        lo = mid;
                        dlo = dm;
                    } else {
                        hi = mid;
                    }
                }
                return 0.5 * (lo + hi);
            }
        }
    }
    throw WitnessNotBracketedError(
        q, smin, smax,
        "no witness bracketed: q = " + fmt_double(q) + " outside sampled f^(n) range [" +
            fmt_double(smin) + ", " + fmt_double(smax) + "]");
}

Scalar singular_limit(const Expr& f, const HermiteData& data, const Osculant& osc,
                      int node_index) {
    if (node_index < 0 || node_index >= data.nodeset.r()) throw Error("node index out of range");
    const Node& nd = data.nodeset.node(node_index);
    const int m = nd.multiplicity;
    Scalar fm = derivative_at(f, nd.x, m);
    Scalar gm = eval(derivative(osc.g, m), nd.x);
    Scalar hm = eval(derivative(osc.h, m), nd.x);
    return (fm - gm) / hm;
}

}  // namespace gts
