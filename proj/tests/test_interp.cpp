#include <doctest.h>

#include <cmath>

#include "gts/errors.hpp"
#include "gts/interp.hpp"

#include "helpers.hpp"

using namespace gts;
using gts_test::ex;
using gts_test::fl;
using gts_test::poly_exact;

namespace {
// frozen oracle values for f = exp on nodes {0:2, 1:2}
// (exact 4x4 solve with the symbol e: g = 1 + x + (2e-5)x^2 + (3-e)x^3)
constexpr double kG2 = 2 * M_E - 5;
constexpr double kG3 = 3 - M_E;
constexpr double kGHalf = 0.625 + 0.375 * M_E;
}  // namespace

TEST_CASE("hermite data from expressions") {
    NodeSet ns({{fl(0), 2}, {fl(1), 2}});
    HermiteData d = hermite_data_from_expr(*parse_expr("exp(x)"), ns);
    CHECK(d.values[0][0].float64() == doctest::Approx(1.0));
    CHECK(d.values[0][1].float64() == doctest::Approx(1.0));
    CHECK(d.values[1][0].float64() == doctest::Approx(M_E));
    CHECK(d.values[1][1].float64() == doctest::Approx(M_E));

    HermiteData d2 = hermite_data_from_expr(*parse_expr("x^3"), NodeSet({{ex(1), 2}}));
    CHECK(d2.values[0][0] == ex(1));
    CHECK(d2.values[0][1] == ex(3));

    HermiteData d3 = hermite_data_from_expr(*parse_expr("sin(x)"), NodeSet({{ex(0), 3}}));
    CHECK(d3.values[0][0] == ex(0));
    CHECK(d3.values[0][1] == ex(1));
    CHECK(d3.values[0][2] == ex(0));
}

TEST_CASE("vandermonde osculant for exp on {0:2,1:2}") {
    NodeSet ns({{fl(0), 2}, {fl(1), 2}});
    Osculant osc = osculate_vandermonde(hermite_data_from_expr(*parse_expr("exp(x)"), ns));
    REQUIRE(osc.g.degree() == 3);
    CHECK(std::fabs(osc.g.coeff(0).float64() - 1.0) <= 1e-12);
    CHECK(std::fabs(osc.g.coeff(1).float64() - 1.0) <= 1e-12);
    CHECK(std::fabs(osc.g.coeff(2).float64() - kG2) <= 1e-12);
    CHECK(std::fabs(osc.g.coeff(3).float64() - kG3) <= 1e-12);
    CHECK(osc.h == gts_test::poly_float({0, 0, 1, -2, 1}));
}

TEST_CASE("single node reproduces the classical Taylor polynomial") {
    Osculant osc =
        osculate_vandermonde(hermite_data_from_expr(*parse_expr("exp(x)"), NodeSet({{ex(0), 3}})));
    CHECK(osc.g == poly_exact({1, 1, Rational(1, 2)}));

    Osculant spec =
        osculate_spectral(hermite_data_from_expr(*parse_expr("exp(x)"), NodeSet({{ex(0), 3}})));
    CHECK(spec.g == osc.g);
}

TEST_CASE("a low-degree polynomial is its own osculant") {
    gts_test::Rng rng(5001);
    for (int rep = 0; rep < 20; ++rep) {
        NodeSet ns = rng.exact_nodeset(3, 3);
        Polynomial f = rng.poly(Domain::ExactRational, std::max(0, ns.n() - 1));
        HermiteData data =
            hermite_data_from_expr(*parse_expr(gts_test::poly_to_expr_text(f)), ns);
        CHECK(osculate_vandermonde(data).g == f);
    }
}

TEST_CASE("spectral basis for two simple nodes is the Lagrange basis") {
    SpectralBasis b = spectral_basis(NodeSet({{ex(0), 1}, {ex(1), 1}}));
    CHECK(b.s[0] == poly_exact({1, -1}));
    CHECK(b.s[1] == poly_exact({0, 1}));

    SpectralBasis single = spectral_basis(NodeSet({{ex(5), 4}}));
    CHECK(single.s[0] == poly_exact({1}));
}

TEST_CASE("spectral basis identities mod h") {
    gts_test::Rng rng(5002);
    for (int rep = 0; rep < 20; ++rep) {
        NodeSet ns = rng.exact_nodeset(4, 3);
        Polynomial h = build_modulus(ns);
        SpectralBasis basis = spectral_basis(ns);

        Polynomial sum(Domain::ExactRational);
        for (const auto& s : basis.s) sum = sum + s;
        CHECK(divmod(sum, h).remainder == poly_exact({1}));

        for (int i = 0; i < ns.r(); ++i) {
            const Polynomial& si = basis.s[static_cast<std::size_t>(i)];
            CHECK(divmod(si * si - si, h).remainder.is_zero());
            // (x - x_i)^{m_i} s_i = 0 mod h
            Polynomial lin(Domain::ExactRational, {-ns.node(i).x, ex(1)});
            Polynomial pw = poly_exact({1});
            for (int k = 0; k < ns.node(i).multiplicity; ++k) pw = pw * lin;
            CHECK(divmod(pw * si, h).remainder.is_zero());
            for (int j = i + 1; j < ns.r(); ++j)
                CHECK(divmod(si * basis.s[static_cast<std::size_t>(j)], h).remainder.is_zero());
        }
    }
}

TEST_CASE("spectral route equals linear interpolation on two simple nodes") {
    NodeSet ns({{ex(0), 1}, {ex(1), 1}});
    HermiteData data(ns, {{ex(2, 3)}, {ex(7, 2)}});
    Osculant osc = osculate_spectral(data);
    // f(0)(1-x) + f(1)x
    CHECK(osc.g == poly_exact({Rational(2, 3), Rational(7, 2) - Rational(2, 3)}));
}

TEST_CASE("the two osculation routes agree exactly") {
    gts_test::Rng rng(5003);
    for (int rep = 0; rep < 30; ++rep) {
        NodeSet ns = rng.exact_nodeset(4, 4);
        HermiteData data(ns, rng.hermite_values(ns));
        Osculant a = osculate_vandermonde(data);
        Osculant b = osculate_spectral(data);
        CHECK(a.g == b.g);
        CHECK(a.g.degree() < ns.n());
        // conditions hold exactly
        for (int i = 0; i < ns.r(); ++i)
            for (int k = 0; k < ns.node(i).multiplicity; ++k)
                CHECK(eval(derivative(a.g, k), ns.node(i).x) ==
                      data.values[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
    }
}

TEST_CASE("float cross-method agreement for exp") {
    NodeSet ns({{fl(0), 2}, {fl(1), 2}});
    HermiteData data = hermite_data_from_expr(*parse_expr("exp(x)"), ns);
    Osculant a = osculate_vandermonde(data);
    Osculant b = osculate_spectral(data);
    for (int k = 0; k <= 3; ++k)
        CHECK(std::fabs(a.g.coeff(k).float64() - b.g.coeff(k).float64()) <= 1e-12);
}

TEST_CASE("taylor_value_with_bound on the worked example") {
    ExprPtr f = parse_expr("exp(x)");
    NodeSet ns({{fl(0), 2}, {fl(1), 2}});
    auto r = taylor_value_with_bound(*f, ns, 0.5, 0.0, 1.0);
    CHECK(std::fabs(r.value - kGHalf) <= 1e-9);
    double expected_bound = 1.05 * M_E * (1.0 / 16.0) / 24.0;
    CHECK(std::fabs(r.abs_err_bound - expected_bound) <= 1e-12);
    double err = std::fabs(std::exp(0.5) - r.value);
    CHECK(err <= r.abs_err_bound);

    // at a node the remainder term vanishes
    auto rn = taylor_value_with_bound(*f, ns, 1.0, 0.0, 1.0);
    CHECK(rn.abs_err_bound == 0.0);
    CHECK(std::fabs(rn.value - M_E) <= 1e-12);

    // polynomial of degree < n: zero error, zero bound
    auto rp = taylor_value_with_bound(*parse_expr("x^2"), NodeSet({{fl(0), 2}, {fl(1), 1}}), 0.5,
                                      0.0, 1.0);
    CHECK(rp.abs_err_bound == 0.0);
    CHECK(std::fabs(rp.value - 0.25) <= 1e-12);
}

TEST_CASE("c_witness finds the mean-value point") {
    ExprPtr f = parse_expr("exp(x)");
    NodeSet ns({{fl(0), 2}, {fl(1), 2}});
    double c = c_witness(*f, ns, 0.5, 0.0, 1.0);
    CHECK(c > 0.0);
    CHECK(c < 1.0);
    // e^c must equal q = 4! (f-g)(1/2) / h(1/2); frozen oracle c = 0.5166394809463889
    CHECK(std::fabs(c - 0.5166394809463889) <= 1e-4);
    double q = 384.0 * (std::exp(0.5) - kGHalf);
    CHECK(std::fabs(std::exp(c) - q) <= 1e-6 * (1.0 + std::fabs(q)));
}

TEST_CASE("c_witness returns the midpoint for a constant n-th derivative") {
    // f = x^3 on three simple nodes: f - g = h, so q = 3! = f''' everywhere
    NodeSet ns({{fl(0), 1}, {fl(1), 1}, {fl(2), 1}});
    double c = c_witness(*parse_expr("x^3"), ns, 0.5, 0.0, 2.0);
    CHECK(c == doctest::Approx(1.0));
}

TEST_CASE("c_witness on sin between 0 and pi") {
    NodeSet ns({{fl(0), 1}, {fl(M_PI), 1}});
    double c = c_witness(*parse_expr("sin(x)"), ns, M_PI / 2, 0.0, M_PI);
    // -sin(c) = q = -8/pi^2; the leftmost solution is 0.9451238454093936
    CHECK(std::fabs(c - 0.9451238454093936) <= 1e-3);
    CHECK(std::fabs(std::sin(c) - 8.0 / (M_PI * M_PI)) <= 1e-6);
}

TEST_CASE("c_witness reports an unbracketed q") {
    // x pressed against the node: the quotient is dominated by cancellation
    // noise and escapes the sampled range of f^(n)
    ExprPtr f = parse_expr("exp(x)");
    NodeSet ns({{fl(0), 2}, {fl(1), 2}});
    CHECK_THROWS_AS(c_witness(*f, ns, 1e-150, 0.0, 1.0), WitnessNotBracketedError);
    try {
        c_witness(*f, ns, 1e-150, 0.0, 1.0);
    } catch (const WitnessNotBracketedError& e) {
        CHECK(std::string(e.what()).find("outside sampled") != std::string::npos);
        CHECK(e.sampled_lo <= e.sampled_hi);
    }
}

TEST_CASE("witness preconditions") {
    ExprPtr f = parse_expr("exp(x)");
    NodeSet ns({{fl(0), 2}, {fl(1), 2}});
    CHECK_THROWS_AS(c_witness(*f, ns, 1.0, 0.0, 1.0), DomainError);   // x is a node
    CHECK_THROWS_AS(c_witness(*f, ns, 2.0, 0.0, 1.0), DomainError);   // x outside
    CHECK_THROWS_AS(taylor_value_with_bound(*f, ns, 0.5, 0.25, 1.0), DomainError);  // node outside
}

TEST_CASE("singular_limit matches the L'Hospital value") {
    ExprPtr f = parse_expr("exp(x)");
    NodeSet ns({{fl(0), 2}, {fl(1), 2}});
    HermiteData data = hermite_data_from_expr(*f, ns);
    Osculant osc = osculate_vandermonde(data);
    double lim = singular_limit(*f, data, osc, 0).float64();
    CHECK(std::fabs(lim - (11 - 4 * M_E) / 2) <= 1e-12);
    CHECK(lim >= 1.0 / 24);
    CHECK(lim <= M_E / 24);

    // single-node case h = x^3: (1 - 0)/6
    NodeSet ns3({{fl(0), 3}});
    HermiteData d3 = hermite_data_from_expr(*f, ns3);
    Osculant o3 = osculate_vandermonde(d3);
    CHECK(std::fabs(singular_limit(*f, d3, o3, 0).float64() - 1.0 / 6) <= 1e-14);

    // polynomial with degree < n has limit 0 exactly
    NodeSet nse({{ex(0), 2}, {ex(1), 1}});
    ExprPtr p = parse_expr("1+x");
    HermiteData dp = hermite_data_from_expr(*p, nse);
    Osculant op = osculate_vandermonde(dp);
    CHECK(singular_limit(*p, dp, op, 0) == ex(0));
    CHECK(singular_limit(*p, dp, op, 1) == ex(0));
}

TEST_CASE("osculant equals the euclidean remainder for polynomial f") {
    gts_test::Rng rng(5004);
    for (int rep = 0; rep < 20; ++rep) {
        NodeSet ns = rng.exact_nodeset(3, 3);
        Polynomial f = rng.poly(Domain::ExactRational, 10);
        HermiteData data =
            hermite_data_from_expr(*parse_expr(gts_test::poly_to_expr_text(f)), ns);
        Osculant osc = osculate_vandermonde(data);
        CHECK(osc.g == divmod(f, build_modulus(ns)).remainder);
    }
}

TEST_CASE("mean-value quotient stays inside the sampled derivative range") {
    gts_test::Rng rng(5005);
    for (const char* text : {"exp(x)", "sin(x)", "1/(1+x^2)"}) {
        ExprPtr f = parse_expr(text);
        for (int rep = 0; rep < 3; ++rep) {
            NodeSet ns = rng.float_nodeset(3, 2, 0.05, 0.95, 0.15, 6);
            Osculant osc = osculate_vandermonde(hermite_data_from_expr(*f, ns));
            int n = ns.n();
            double nfact = 1.0;
            for (int i = 2; i <= n; ++i) nfact *= i;
            auto [lo, hi] = derivative_range(*f, n, 0.0, 1.0);
            double delta = 1e-6 * (1.0 + std::max(std::fabs(lo), std::fabs(hi)));
            for (int t = 0; t < 10; ++t) {
                double x = rng.real(0.0, 1.0);
                bool near_node = false;
                for (const auto& nd : ns.nodes())
                    if (std::fabs(x - nd.x.float64()) < 0.02) near_node = true;
                if (near_node) continue;
                double fx = derivative_at(*f, fl(x), 0).float64();
                double gx = eval(osc.g, fl(x)).float64();
                double hx = eval(osc.h, fl(x)).float64();
                double q = nfact * (fx - gx) / hx;
                CHECK(q >= lo - delta);
                CHECK(q <= hi + delta);
            }
        }
    }
}
