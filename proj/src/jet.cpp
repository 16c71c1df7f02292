#include "gts/jet.hpp"

#include <cmath>

#include "gts/errors.hpp"

namespace gts {

namespace {

// series arithmetic on coefficient vectors of fixed length K+1
using Series = std::vector<Scalar>;

struct Ctx {
    Domain dom;
    int K;

    Series zero() const {
        return Series(static_cast<std::size_t>(K) + 1, Scalar::zero(dom));
    }
    Series constant(const Scalar& c) const {
        Series s = zero();
        s[0] = c;
        return s;
    }
    Scalar num(long n) const { return Scalar::from_int(dom, n); }

    Series add(const Series& a, const Series& b) const {
        Series out = zero();
        for (int k = 0; k <= K; ++k) out[k] = a[k] + b[k];
        return out;
    }
    Series sub(const Series& a, const Series& b) const {
        Series out = zero();
        for (int k = 0; k <= K; ++k) out[k] = a[k] - b[k];
        return out;
    }
    Series neg(const Series& a) const {
        Series out = zero();
        for (int k = 0; k <= K; ++k) out[k] = -a[k];
        return out;
    }
    Series mul(const Series& a, const Series& b) const {
        Series out = zero();
        for (int i = 0; i <= K; ++i) {
            if (a[i].is_zero()) continue;
            for (int j = 0; i + j <= K; ++j) out[i + j] = out[i + j] + a[i] * b[j];
        }
        return out;
    }
    Series div(const Series& p, const Series& q) const {
        if (q[0].is_zero()) throw PoleError("division by a series with zero constant term");
        Series out = zero();
        for (int k = 0; k <= K; ++k) {
            Scalar acc = p[k];
            for (int j = 0; j < k; ++j) acc = acc - out[j] * q[k - j];
            out[k] = acc / q[0];
        }
        return out;
    }

    [[noreturn]] void exact_only_at(const char* fname, const char* point) const {
        throw DomainError(std::string("exact ") + fname + " is only available at argument " +
                          point + "; use the float backend");
    }

    Series exp_(const Series& u) const {
        Series out = zero();
        if (dom == Domain::ExactRational) {
            if (!u[0].is_zero()) exact_only_at("exp", "0");
            out[0] = num(1);
        } else {
            out[0] = Scalar(std::exp(u[0].float64()));
        }
        for (int k = 1; k <= K; ++k) {
            Scalar acc = Scalar::zero(dom);
            for (int j = 1; j <= k; ++j) acc = acc + num(j) * u[j] * out[k - j];
            out[k] = acc / num(k);
        }
        return out;
    }

    Series log_(const Series& u) const {
        Series out = zero();
        if (dom == Domain::ExactRational) {
            if (!(u[0] == num(1))) exact_only_at("log", "1");
            out[0] = num(0);
        } else {
            if (u[0].float64() <= 0.0)
                throw DomainError("log of nonpositive value " + u[0].to_string());
            out[0] = Scalar(std::log(u[0].float64()));
        }
        for (int k = 1; k <= K; ++k) {
            Scalar acc = num(k) * u[k];
            for (int j = 1; j < k; ++j) acc = acc - num(j) * out[j] * u[k - j];
            out[k] = acc / (num(k) * u[0]);
        }
        return out;
    }

    Series sqrt_(const Series& u) const {
        Series out = zero();
        if (dom == Domain::ExactRational) {
            auto root = u[0].rational().sqrt_exact();
            if (!root) exact_only_at("sqrt", "a perfect square");
            out[0] = Scalar(*root);
        } else {
            if (u[0].float64() < 0.0)
                throw DomainError("sqrt of negative value " + u[0].to_string());
            if (u[0].float64() == 0.0 && K >= 1)
                throw DomainError("sqrt is not differentiable at 0");
            out[0] = Scalar(std::sqrt(u[0].float64()));
        }
        if (K >= 1 && out[0].is_zero()) throw DomainError("sqrt series requires a nonzero value");
        Scalar two_r0 = num(2) * out[0];
        for (int k = 1; k <= K; ++k) {
            Scalar acc = u[k];
            for (int j = 1; j < k; ++j) acc = acc - out[j] * out[k - j];
            out[k] = acc / two_r0;
        }
        return out;
    }

    // sin and cos advance together through the same recurrence
    std::pair<Series, Series> sin_cos(const Series& u, bool hyperbolic) const {
        Series s = zero(), c = zero();
        if (dom == Domain::ExactRational) {
            if (!u[0].is_zero()) exact_only_at(hyperbolic ? "sinh/cosh" : "sin/cos", "0");
            s[0] = num(0);
            c[0] = num(1);
        } else {
            double v = u[0].float64();
            s[0] = Scalar(hyperbolic ? std::sinh(v) : std::sin(v));
            c[0] = Scalar(hyperbolic ? std::cosh(v) : std::cos(v));
        }
        for (int k = 1; k <= K; ++k) {
            Scalar sa = Scalar::zero(dom), ca = Scalar::zero(dom);
            for (int j = 1; j <= k; ++j) {
                sa = sa + num(j) * u[j] * c[k - j];
                ca = ca + num(j) * u[j] * s[k - j];
            }
            s[k] = sa / num(k);
            c[k] = hyperbolic ? ca / num(k) : -(ca / num(k));
        }
        return {std::move(s), std::move(c)};
    }

    Series atan_(const Series& u) const {
        Series out = zero();
        if (dom == Domain::ExactRational) {
            if (!u[0].is_zero()) exact_only_at("atan", "0");
            out[0] = num(0);
        } else {
            out[0] = Scalar(std::atan(u[0].float64()));
        }
        if (K == 0) return out;
        // atan(u)' = u' / (1 + u^2)
        Series denom = add(constant(num(1)), mul(u, u));
        Series uprime = zero();
        for (int k = 0; k < K; ++k) uprime[k] = num(k + 1) * u[k + 1];
        Series w = div(uprime, denom);
        for (int k = 1; k <= K; ++k) out[k] = w[k - 1] / num(k);
        return out;
    }

    Series pow_int(const Series& base, long e) const {
        if (e == 0) return constant(num(1));
        bool invert = e < 0;
        unsigned long m = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
        Series acc = constant(num(1));
        Series sq = base;
        while (m) {
            if (m & 1) acc = mul(acc, sq);
            m >>= 1;
            if (m) sq = mul(sq, sq);
        }
        if (invert) return div(constant(num(1)), acc);
        return acc;
    }
};

// integer-valued constant exponent, if the subtree has no variable
std::optional<long> constant_integer_exponent(const Expr& e, const Ctx& ctx);

Series eval_series(const Expr& e, const Scalar& center, const Ctx& ctx) {
    switch (e.kind) {
        case Expr::Kind::Number:
            return ctx.constant(ctx.dom == Domain::ExactRational
                                    ? Scalar(e.number)
                                    : Scalar(e.number.to_double()));
        case Expr::Kind::Var: {
            Series s = ctx.constant(center);
            if (ctx.K >= 1) s[1] = ctx.num(1);
            return s;
        }
        case Expr::Kind::Pi:
            if (ctx.dom == Domain::ExactRational)
                throw DomainError("pi is not rational; use the float backend");
            return ctx.constant(Scalar(M_PI));
        case Expr::Kind::E:
            if (ctx.dom == Domain::ExactRational)
                throw DomainError("e is not rational; use the float backend");
            return ctx.constant(Scalar(M_E));
        case Expr::Kind::Neg: return ctx.neg(eval_series(*e.a, center, ctx));
        case Expr::Kind::Add:
            return ctx.add(eval_series(*e.a, center, ctx), eval_series(*e.b, center, ctx));
        case Expr::Kind::Sub:
            return ctx.sub(eval_series(*e.a, center, ctx), eval_series(*e.b, center, ctx));
        case Expr::Kind::Mul:
            return ctx.mul(eval_series(*e.a, center, ctx), eval_series(*e.b, center, ctx));
        case Expr::Kind::Div:
            return ctx.div(eval_series(*e.a, center, ctx), eval_series(*e.b, center, ctx));
        case Expr::Kind::Pow: {
            Series base = eval_series(*e.a, center, ctx);
            if (auto k = constant_integer_exponent(*e.b, ctx)) {
                if (*k < 0 && base[0].is_zero())
                    throw PoleError("negative power of a series with zero constant term");
                return ctx.pow_int(base, *k);
            }
            // general exponent: exp(b * log(a))
            Series expo = eval_series(*e.b, center, ctx);
            return ctx.exp_(ctx.mul(expo, ctx.log_(base)));
        }
        case Expr::Kind::Fn: {
            Series u = eval_series(*e.a, center, ctx);
            switch (e.fn) {
                case UnaryFn::Exp: return ctx.exp_(u);
                case UnaryFn::Log: return ctx.log_(u);
                case UnaryFn::Sqrt: return ctx.sqrt_(u);
                case UnaryFn::Sin: return ctx.sin_cos(u, false).first;
                case UnaryFn::Cos: return ctx.sin_cos(u, false).second;
                case UnaryFn::Tan: {
                    auto [s, c] = ctx.sin_cos(u, false);
                    return ctx.div(s, c);
                }
                case UnaryFn::Atan: return ctx.atan_(u);
                case UnaryFn::Sinh: return ctx.sin_cos(u, true).first;
                case UnaryFn::Cosh: return ctx.sin_cos(u, true).second;
            }
            throw Error("unhandled function kind");
        }
    }
    throw Error("unhandled expression kind");
}

bool has_var(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Var: return true;
        case Expr::Kind::Number:
        case Expr::Kind::Pi:
        case Expr::Kind::E: return false;
        case Expr::Kind::Neg:
        case Expr::Kind::Fn: return has_var(*e.a);
        default: return has_var(*e.a) || has_var(*e.b);
    }
}

std::optional<long> constant_integer_exponent(const Expr& e, const Ctx& ctx) {
    if (has_var(e)) return std::nullopt;
    // order-0 evaluation of the exponent subtree
    Ctx c0{ctx.dom, 0};
    Scalar v = eval_series(e, Scalar::zero(ctx.dom), c0)[0];
    if (ctx.dom == Domain::ExactRational) return v.rational().to_long();
    double d = v.float64();
    double r = std::rint(d);
    if (std::fabs(d - r) <= 1e-12 && std::fabs(r) < 1e15) return static_cast<long>(r);
    return std::nullopt;
}

}  // namespace

Jet jet_eval(const Expr& f, const Scalar& center, int order) {
    if (order < 0) throw Error("jet order must be >= 0");
    Ctx ctx{center.domain(), order};
    return Jet(center, eval_series(f, center, ctx));
}

Scalar derivative_at(const Expr& f, const Scalar& x, int k) {
    Jet j = jet_eval(f, x, k);
    return factorial(x.domain(), k) * j.coeff(k);
}

std::pair<double, double> derivative_range(const Expr& f, int k, double a, double b, int grid) {
    if (grid < 2) throw Error("derivative_range grid must be >= 2");
    if (!(a < b)) throw Error("derivative_range requires a < b");
    double lo = 0.0, hi = 0.0;
    bool first = true;
    for (int i = 0; i < grid; ++i) {
        double t = a + (b - a) * i / (grid - 1);
        double v = derivative_at(f, Scalar(t), k).float64();
        if (first) {
            lo = hi = v;
            first = false;
        } else {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    return {lo, hi};
}

}  // namespace gts
