#ifndef GTS_TESTS_HELPERS_HPP
#define GTS_TESTS_HELPERS_HPP

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gts/interp.hpp"
#include "gts/modulus.hpp"
#include "gts/poly.hpp"
#include "gts/scalar.hpp"

namespace gts_test {

using namespace gts;

inline Scalar ex(long n, long d = 1) { return Scalar(Rational(n, d)); }
inline Scalar fl(double v) { return Scalar(v); }

inline Polynomial poly_exact(std::initializer_list<Rational> coeffs) {
    std::vector<Scalar> v;
    for (const auto& c : coeffs) v.push_back(Scalar(c));
    return Polynomial(Domain::ExactRational, std::move(v));
}

inline Polynomial poly_float(std::initializer_list<double> coeffs) {
    std::vector<Scalar> v;
    for (double c : coeffs) v.push_back(Scalar(c));
    return Polynomial(Domain::Float64, std::move(v));
}

// deterministic generator for property tests
struct Rng {
    std::mt19937 g;
    explicit Rng(std::uint32_t seed) : g(seed) {}

    long int_in(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(g);
    }
    double real(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(g);
    }
    Rational rational(long nmax = 9, long dmax = 9) {
        return Rational(int_in(-nmax, nmax), int_in(1, dmax));
    }
    Rational nonzero_rational(long nmax = 9, long dmax = 9) {
        for (;;) {
            Rational r = rational(nmax, dmax);
            if (!r.is_zero()) return r;
        }
    }

    Polynomial poly(Domain dom, int maxdeg, long nmax = 9) {
        int deg = static_cast<int>(int_in(0, maxdeg));
        std::vector<Scalar> c;
        for (int i = 0; i <= deg; ++i) {
            if (dom == Domain::ExactRational)
                c.push_back(Scalar(rational(nmax)));
            else
                c.push_back(Scalar(real(-static_cast<double>(nmax), static_cast<double>(nmax))));
        }
        return Polynomial(dom, std::move(c));
    }

    // distinct exact nodes drawn from quarters in [-3, 3]
    NodeSet exact_nodeset(int rmax, int mmax) {
        int r = static_cast<int>(int_in(1, rmax));
        std::vector<Node> nodes;
        std::vector<long> used;
        for (int i = 0; i < r; ++i) {
            long q;
            for (;;) {
                q = int_in(-12, 12);
                bool dup = false;
                for (long u : used) dup = dup || u == q;
                if (!dup) break;
            }
            used.push_back(q);
            nodes.push_back({Scalar(Rational(q, 4)), static_cast<int>(int_in(1, mmax))});
        }
        return NodeSet(std::move(nodes));
    }

    // well-separated float nodes in [lo, hi] with minimum gap
    NodeSet float_nodeset(int rmax, int mmax, double lo, double hi, double min_gap,
                          int nmax = 1000) {
        for (;;) {
            int r = static_cast<int>(int_in(1, rmax));
            std::vector<double> xs;
            bool ok = true;
            for (int i = 0; i < r && ok; ++i) {
                double x = real(lo, hi);
                for (double other : xs)
                    if (std::fabs(x - other) < min_gap) ok = false;
                xs.push_back(x);
            }
            if (!ok) continue;
            std::vector<Node> nodes;
            int n = 0;
            for (double x : xs) {
                int m = static_cast<int>(int_in(1, mmax));
                n += m;
                nodes.push_back({Scalar(x), m});
            }
            if (n > nmax) continue;
            return NodeSet(std::move(nodes));
        }
    }

    std::vector<std::vector<Scalar>> hermite_values(const NodeSet& ns, long nmax = 9) {
        std::vector<std::vector<Scalar>> vals;
        for (const auto& nd : ns.nodes()) {
            std::vector<Scalar> vi;
            for (int k = 0; k < nd.multiplicity; ++k) {
                if (ns.domain() == Domain::ExactRational)
                    vi.push_back(Scalar(rational(nmax)));
                else
                    vi.push_back(Scalar(real(-static_cast<double>(nmax), static_cast<double>(nmax))));
            }
            vals.push_back(std::move(vi));
        }
        return vals;
    }
};

// expression text for an exact polynomial, e.g. "(1/2)+(-3)*x^2"
inline std::string poly_to_expr_text(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = 0; k <= p.degree(); ++k) {
        Scalar c = p.coeff(k);
        if (c.is_zero()) continue;
        if (!out.empty()) out += "+";
        out += "(" + c.to_string() + ")";
        if (k >= 1) out += "*x^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

// ---- high-precision central finite differences (criterion oracle) ----

using bigfloat = boost::multiprecision::cpp_bin_float_50;

enum class CorpusFn { Exp, Sin, XExpX, Runge };

inline const char* corpus_fn_text(CorpusFn f) {
    switch (f) {
        case CorpusFn::Exp: return "exp(x)";
        case CorpusFn::Sin: return "sin(x)";
        case CorpusFn::XExpX: return "x*exp(x)";
        case CorpusFn::Runge: return "1/(1+x^2)";
    }
    return "";
}

inline bigfloat corpus_eval(CorpusFn f, const bigfloat& x) {
    switch (f) {
        case CorpusFn::Exp: return exp(x);
        case CorpusFn::Sin: return sin(x);
        case CorpusFn::XExpX: return x * exp(x);
        case CorpusFn::Runge: return 1 / (1 + x * x);
    }
    return 0;
}

/// k-th central difference with the given step, evaluated in 50-digit
/// arithmetic so cancellation cannot eat the 1e-5 comparison budget.
inline double central_difference(CorpusFn f, double x, int k, double step) {
    bigfloat h(step), acc(0);
    bigfloat binom(1);  // C(k, i), updated incrementally
    for (int i = 0; i <= k; ++i) {
        bigfloat arg = bigfloat(x) + (bigfloat(k) / 2 - i) * h;
        bigfloat term = binom * corpus_eval(f, arg);
        acc += (i % 2) ? -term : term;
        binom = binom * (k - i) / (i + 1);
    }
    return static_cast<double>(acc / pow(h, k));
}

// ---- spawning the CLI binary ----

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string shell_quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) {
        if (c == '\'')
            q += "'\\''";
        else
            q += c;
    }
    return q + "'";
}

inline std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

inline CliResult run_cli(const std::vector<std::string>& args) {
    static int counter = 0;
    std::string tag = std::to_string(static_cast<long>(getpid())) + "_" + std::to_string(counter++);
    std::string out_path = "/tmp/gts_test_out_" + tag;
    std::string err_path = "/tmp/gts_test_err_" + tag;

    std::string cmd = shell_quote(GTS_CLI_PATH);
    for (const auto& a : args) cmd += " " + shell_quote(a);
    cmd += " > " + out_path + " 2> " + err_path;

    int status = std::system(cmd.c_str());
    CliResult r;
    r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

}  // namespace gts_test

#endif
