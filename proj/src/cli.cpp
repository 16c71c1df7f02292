#include "gts/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>

#include "gts/errors.hpp"
#include "gts/interp.hpp"
#include "gts/ratapprox.hpp"

namespace gts::cli {

namespace {

using nlohmann::json;

struct RunConfig {
    std::string subcommand;
    std::string f_text;
    std::string nodes_text;
    std::string domain_text;   // "a:b"
    std::string eval_text;
    std::string witness_text;
    std::string backend = "float";
    std::string csv_path;
    std::string json_path;
    int grid = 0;
    int deg_num = -1;
    int deg_den = -1;
};

double factorial_d(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ", ";
        out += parts[i];
    }
    return out;
}

std::string poly_line(const Polynomial& p) {
    if (p.is_zero()) return "0";
    return join(p.coeff_strings());
}

Scalar parse_scalar_or_throw(Domain dom, const std::string& text, const char* what) {
    auto s = Scalar::parse(dom, text);
    if (!s) throw SyntaxError(0, "number", std::string("invalid ") + what + " '" + text + "'");
    return *s;
}

NodeSet narrow_nodes(const NodeSet& ns) {
    if (ns.domain() == Domain::Float64) return ns;
    std::vector<Node> nodes;
    nodes.reserve(static_cast<std::size_t>(ns.r()));
    for (const auto& nd : ns.nodes()) nodes.push_back({Scalar(nd.x.to_double()), nd.multiplicity});
    std::optional<std::pair<Scalar, Scalar>> iv;
    if (ns.interval())
        iv = std::make_pair(Scalar(ns.interval()->first.to_double()),
                            Scalar(ns.interval()->second.to_double()));
    return NodeSet(std::move(nodes), std::move(iv));
}

struct CommonInputs {
    Domain dom = Domain::Float64;
    ExprPtr f;
    std::optional<NodeSet> nodes;
    double a = 0.0, b = 0.0;
    bool domain_defaulted = false;
};

CommonInputs prepare(const RunConfig& cfg, std::ostream& err, bool need_f) {
    CommonInputs in;
    if (cfg.backend == "exact")
        in.dom = Domain::ExactRational;
    else if (cfg.backend == "float")
        in.dom = Domain::Float64;
    else
        throw SyntaxError(0, "exact|float", "invalid backend '" + cfg.backend + "'");

    if (need_f) in.f = parse_expr(cfg.f_text);

    std::optional<std::pair<Scalar, Scalar>> interval;
    if (!cfg.domain_text.empty()) {
        auto colon = cfg.domain_text.find(':');
        if (colon == std::string::npos)
            throw SyntaxError(0, "a:b", "invalid --domain '" + cfg.domain_text + "'");
        Scalar a = parse_scalar_or_throw(in.dom, cfg.domain_text.substr(0, colon), "domain endpoint");
        Scalar b = parse_scalar_or_throw(in.dom, cfg.domain_text.substr(colon + 1), "domain endpoint");
        interval = std::make_pair(a, b);
    }

    in.nodes = NodeSet::parse(cfg.nodes_text, in.dom, interval);
    if (!cfg.domain_text.empty()) {
        in.a = in.nodes->interval()->first.to_double();
        in.b = in.nodes->interval()->second.to_double();
    } else {
        in.a = in.nodes->node(0).x.to_double();
        in.b = in.nodes->node(in.nodes->r() - 1).x.to_double();
        in.domain_defaulted = true;
        err << "warning: --domain omitted; defaulting to [" << fmt_double(in.a) << ", "
            << fmt_double(in.b) << "] (error bounds depend on the interval)\n";
    }
    if (in.dom == Domain::Float64 && in.nodes->n() > 20)
        err << "warning: n = " << in.nodes->n()
            << " > 20; the confluent Vandermonde system degrades in float; consider --backend "
               "exact\n";
    return in;
}

json config_echo(const RunConfig& cfg, const CommonInputs& in) {
    json c;
    c["subcommand"] = cfg.subcommand;
    if (!cfg.f_text.empty()) c["f"] = cfg.f_text;
    c["nodes"] = in.nodes->to_text();
    c["domain"] = {fmt_double(in.a), fmt_double(in.b)};
    c["backend"] = cfg.backend;
    if (!cfg.eval_text.empty()) c["eval"] = cfg.eval_text;
    if (!cfg.witness_text.empty()) c["witness"] = cfg.witness_text;
    if (cfg.grid > 0) c["grid"] = cfg.grid;
    if (cfg.deg_num >= 0) c["deg_num"] = cfg.deg_num;
    if (cfg.deg_den >= 0) c["deg_den"] = cfg.deg_den;
    return c;
}

void write_json(const std::string& path, const json& doc, std::ostream& out) {
    if (path == "-") {
        out << doc.dump(2) << "\n";
        return;
    }
    std::ofstream os(path);
    if (!os) throw Error("cannot open '" + path + "' for writing");
    os << doc.dump(2) << "\n";
}

void write_text(const std::string& path, const std::string& body, std::ostream& out) {
    if (path.empty()) {
        out << body;
        return;
    }
    std::ofstream os(path);
    if (!os) throw Error("cannot open '" + path + "' for writing");
    os << body;
}

// float-domain evaluation helper: f(x) through an order-0 jet
double eval_f(const Expr& f, double x) { return derivative_at(f, Scalar(x), 0).float64(); }

int cmd_interp(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    CommonInputs in = prepare(cfg, err, true);
    const NodeSet& ns = *in.nodes;
    const int n = ns.n();

    HermiteData data = hermite_data_from_expr(*in.f, ns);
    Osculant osc = osculate_vandermonde(data);
    out << "g coefficients (ascending): " << poly_line(osc.g) << "\n";

    json doc;
    doc["config"] = config_echo(cfg, in);
    doc["coefficients"] = json{{"g", osc.g.coeff_strings()}};
    json diagnostics = json::object();

    // float copies for bounds / tables / witness, built on first use
    NodeSet fns = narrow_nodes(ns);
    std::optional<Osculant> fosc_cache;
    auto fosc = [&]() -> const Osculant& {
        if (!fosc_cache)
            fosc_cache = ns.domain() == Domain::Float64
                             ? osc
                             : osculate_vandermonde(hermite_data_from_expr(*in.f, fns));
        return *fosc_cache;
    };
    std::optional<double> mn_cache;
    auto mn = [&]() {
        if (!mn_cache) {
            auto range = derivative_range(*in.f, n, in.a, in.b);
            mn_cache = 1.05 * std::max(std::fabs(range.first), std::fabs(range.second));
        }
        return *mn_cache;
    };

    if (!cfg.eval_text.empty()) {
        Scalar x = parse_scalar_or_throw(in.dom, cfg.eval_text, "--eval point");
        double xd = x.to_double();
        if (xd < in.a || xd > in.b) throw DomainError("--eval point outside [a, b]");
        std::string gx_str, fx_str, err_str;
        if (in.dom == Domain::ExactRational) {
            Scalar gx = eval(osc.g, x);
            gx_str = gx.to_string();
            try {
                Scalar fx = derivative_at(*in.f, x, 0);
                fx_str = fx.to_string();
                err_str = (fx - gx).abs().to_string();
            } catch (const DomainError&) {
                // f has no exact value here; report the float diagnostics
                double fd = eval_f(*in.f, xd);
                fx_str = fmt_double(fd);
                err_str = fmt_double(std::fabs(fd - gx.to_double()));
            }
        } else {
            double gx = eval(osc.g, Scalar(xd)).float64();
            double fx = eval_f(*in.f, xd);
            gx_str = fmt_double(gx);
            fx_str = fmt_double(fx);
            err_str = fmt_double(std::fabs(fx - gx));
        }
        double hx = eval(fosc().h, Scalar(xd)).float64();
        double bound = mn() * std::fabs(hx) / factorial_d(n);
        out << "g(" << x.to_string() << ") = " << gx_str << "\n";
        out << "f(" << x.to_string() << ") = " << fx_str << "\n";
        out << "abs_err = " << err_str << "\n";
        out << "bound = " << fmt_double(bound) << "\n";
        diagnostics["eval"] = {{"x", x.to_string()},
                               {"g", gx_str},
                               {"f", fx_str},
                               {"abs_err", err_str},
                               {"bound", fmt_double(bound)}};
    }

    if (!cfg.witness_text.empty()) {
        Scalar xw = parse_scalar_or_throw(in.dom, cfg.witness_text, "--witness point");
        double xd = xw.to_double();
        double c = c_witness(*in.f, fns, xd, in.a, in.b);
        double hx = eval(fosc().h, Scalar(xd)).float64();
        double q = factorial_d(n) * (eval_f(*in.f, xd) - eval(fosc().g, Scalar(xd)).float64()) / hx;
        double residual = std::fabs(derivative_at(*in.f, Scalar(c), n).float64() - q);
        out << "witness c = " << fmt_double(c) << "\n";
        out << "witness residual = " << fmt_double(residual) << "\n";
        diagnostics["witness_c"] = c;
        diagnostics["witness_residual"] = residual;
    }

    if (cfg.grid > 0) {
        std::string body = "x,f,g,abs_err,bound\n";
        json rows = json::array();
        for (int i = 0; i < cfg.grid; ++i) {
            double x = in.a + (in.b - in.a) * i / (cfg.grid - 1);
            double fx = eval_f(*in.f, x);
            double gx = eval(fosc().g, Scalar(x)).float64();
            double errv = std::fabs(fx - gx);
            double hx = eval(fosc().h, Scalar(x)).float64();
            double bound = mn() * std::fabs(hx) / factorial_d(n);
            body += fmt_double(x) + "," + fmt_double(fx) + "," + fmt_double(gx) + "," +
                    fmt_double(errv) + "," + fmt_double(bound) + "\n";
            rows.push_back(
                {{"x", x}, {"f", fx}, {"g", gx}, {"abs_err", errv}, {"bound", bound}});
        }
        write_text(cfg.csv_path, body, out);
        doc["table"] = rows;
    }

    doc["diagnostics"] = diagnostics;
    if (!cfg.json_path.empty()) write_json(cfg.json_path, doc, out);
    return 0;
}

int cmd_rational(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    CommonInputs in = prepare(cfg, err, true);
    const NodeSet& ns = *in.nodes;

    HermiteData data = hermite_data_from_expr(*in.f, ns);
    RationalApproximant R = rational_fit(data, cfg.deg_num, cfg.deg_den);
    out << "u coefficients (ascending): " << poly_line(R.u) << "\n";
    out << "v coefficients (ascending): " << poly_line(R.v) << "\n";

    json doc;
    doc["config"] = config_echo(cfg, in);
    doc["coefficients"] = json{{"u", R.u.coeff_strings()}, {"v", R.v.coeff_strings()}};
    json diagnostics = json::object();

    NodeSet fns = narrow_nodes(ns);
    std::optional<RationalApproximant> fR_cache;
    auto fR = [&]() -> const RationalApproximant& {
        if (!fR_cache)
            fR_cache = ns.domain() == Domain::Float64
                           ? R
                           : rational_fit(hermite_data_from_expr(*in.f, fns), cfg.deg_num,
                                          cfg.deg_den);
        return *fR_cache;
    };
    std::optional<double> fv_max_cache;
    auto fv_max = [&]() {
        if (!fv_max_cache) fv_max_cache = sampled_fv_derivative_max(*in.f, fR(), in.a, in.b);
        return *fv_max_cache;
    };

    if (!cfg.eval_text.empty()) {
        Scalar x = parse_scalar_or_throw(in.dom, cfg.eval_text, "--eval point");
        double xd = x.to_double();
        if (xd < in.a || xd > in.b) throw DomainError("--eval point outside [a, b]");
        Scalar val = rational_eval(R, x);
        double bound = rational_remainder_bound_with_max(fR(), fv_max(), xd);
        std::string fx_str, err_str;
        if (in.dom == Domain::ExactRational) {
            try {
                Scalar fx = derivative_at(*in.f, x, 0);
                fx_str = fx.to_string();
                err_str = (fx - val).abs().to_string();
            } catch (const DomainError&) {
                double fd = eval_f(*in.f, xd);
                fx_str = fmt_double(fd);
                err_str = fmt_double(std::fabs(fd - val.to_double()));
            }
        } else {
            double fx = eval_f(*in.f, xd);
            fx_str = fmt_double(fx);
            err_str = fmt_double(std::fabs(fx - val.float64()));
        }
        out << "u_over_v(" << x.to_string() << ") = " << val.to_string() << "\n";
        out << "f(" << x.to_string() << ") = " << fx_str << "\n";
        out << "abs_err = " << err_str << "\n";
        out << "bound = " << fmt_double(bound) << "\n";
        diagnostics["eval"] = {{"x", x.to_string()},
                               {"u_over_v", val.to_string()},
                               {"f", fx_str},
                               {"abs_err", err_str},
                               {"bound", fmt_double(bound)}};
    }

    if (cfg.grid > 0) {
        std::string body = "x,f,u_over_v,abs_err,bound,pole\n";
        json rows = json::array();
        for (int i = 0; i < cfg.grid; ++i) {
            double x = in.a + (in.b - in.a) * i / (cfg.grid - 1);
            double fx = eval_f(*in.f, x);
            std::string uv, errv, bnd, pole = "0";
            try {
                double val = rational_eval(fR(), Scalar(x)).float64();
                double bound = rational_remainder_bound_with_max(fR(), fv_max(), x);
                uv = fmt_double(val);
                errv = fmt_double(std::fabs(fx - val));
                bnd = fmt_double(bound);
                rows.push_back({{"x", x},
                                {"f", fx},
                                {"u_over_v", val},
                                {"abs_err", std::fabs(fx - val)},
                                {"bound", bound},
                                {"pole", false}});
            } catch (const PoleError&) {
                pole = "1";
                rows.push_back({{"x", x}, {"f", fx}, {"pole", true}});
            }
            body += fmt_double(x) + "," + fmt_double(fx) + "," + uv + "," + errv + "," + bnd +
                    "," + pole + "\n";
        }
        write_text(cfg.csv_path, body, out);
        doc["table"] = rows;
    }

    doc["diagnostics"] = diagnostics;
    if (!cfg.json_path.empty()) write_json(cfg.json_path, doc, out);
    return 0;
}

int cmd_rolle(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    CommonInputs in = prepare(cfg, err, false);
    const NodeSet& ns = *in.nodes;
    NodeSet fns = narrow_nodes(ns);

    std::vector<int> table = zero_count_table(ns);
    out << "k #h^(k) numeric\n";
    json rows = json::array();
    for (int k = 0; k < ns.n(); ++k) {
        int numeric = verify_rolle_numeric(fns, k);
        out << k << " " << table[static_cast<std::size_t>(k)] << " " << numeric << "\n";
        rows.push_back({k, table[static_cast<std::size_t>(k)], numeric});
    }
    out << "#h^(n-1) = " << table.back() << "\n";

    if (!cfg.json_path.empty()) {
        json doc;
        doc["config"] = config_echo(cfg, in);
        doc["diagnostics"] = json{{"rolle_table", rows}};
        write_json(cfg.json_path, doc, out);
    }
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"polynomial and rational approximation with explicit remainder bounds"};
    app.require_subcommand(1);

    auto add_common = [&cfg](CLI::App* sub, bool need_f) {
        if (need_f) sub->add_option("--f", cfg.f_text, "function expression")->required();
        sub->add_option("--nodes", cfg.nodes_text, "node list, e.g. 0:2,1:2")->required();
        sub->add_option("--domain", cfg.domain_text, "interval a:b");
        sub->add_option("--backend", cfg.backend, "exact|float")->capture_default_str();
        sub->add_option("--json-out", cfg.json_path, "write a JSON report to this path ('-' = stdout)");
    };

    CLI::App* interp = app.add_subcommand("interp", "osculating polynomial with remainder bound");
    add_common(interp, true);
    auto* ieval = interp->add_option("--eval", cfg.eval_text, "evaluate g at this point");
    auto* igrid = interp->add_option("--grid", cfg.grid, "CSV error table with this many rows")
                      ->check(CLI::Range(2, 10000000));
    ieval->excludes(igrid);
    interp->add_option("--witness", cfg.witness_text, "report a mean-value witness c for this x");
    interp->add_option("--csv", cfg.csv_path, "write the error table to this path");

    CLI::App* rational = app.add_subcommand("rational", "multipoint rational approximation");
    add_common(rational, true);
    rational->add_option("--deg-num", cfg.deg_num, "numerator degree")->required();
    rational->add_option("--deg-den", cfg.deg_den, "denominator degree")->required();
    auto* reval = rational->add_option("--eval", cfg.eval_text, "evaluate u/v at this point");
    auto* rgrid = rational->add_option("--grid", cfg.grid, "CSV error table with this many rows")
                      ->check(CLI::Range(2, 10000000));
    reval->excludes(rgrid);
    rational->add_option("--csv", cfg.csv_path, "write the error table to this path");

    CLI::App* rolle = app.add_subcommand("rolle", "zero-counting table for h and its derivatives");
    rolle->add_option("--f", cfg.f_text, "ignored; accepted for interface uniformity");
    rolle->add_option("--nodes", cfg.nodes_text, "node list, e.g. 0:2,1:2")->required();
    rolle->add_option("--domain", cfg.domain_text, "interval a:b");
    rolle->add_option("--backend", cfg.backend, "exact|float")->capture_default_str();
    rolle->add_option("--json-out", cfg.json_path, "write a JSON report to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            return app.exit(e, out, err);
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(interp)) {
            cfg.subcommand = "interp";
            return cmd_interp(cfg, out, err);
        }
        if (app.got_subcommand(rational)) {
            cfg.subcommand = "rational";
            return cmd_rational(cfg, out, err);
        }
        cfg.subcommand = "rolle";
        return cmd_rolle(cfg, out, err);
    } catch (const SyntaxError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const DuplicateNodeError& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        // numeric failures: singular systems, degenerate tables, poles,
        // unbracketed witnesses
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace gts::cli
