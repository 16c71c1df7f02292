#include "gts/poly.hpp"

#include <algorithm>
#include <cmath>

#include "gts/errors.hpp"

namespace gts {

Polynomial::Polynomial(Domain d, std::vector<Scalar> coeffs) : dom_(d), c_(std::move(coeffs)) {
    for (const auto& s : c_)
        if (s.domain() != dom_) throw MixedDomainError("polynomial coefficients span mixed domains");
    normalize();
}

void Polynomial::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::constant(Scalar c) {
    Domain d = c.domain();
    return Polynomial(d, {std::move(c)});
}

Polynomial Polynomial::x(Domain d) {
    return Polynomial(d, {Scalar::zero(d), Scalar::one(d)});
}

Polynomial Polynomial::monomial(Scalar c, int k) {
    Domain d = c.domain();
    std::vector<Scalar> v(static_cast<std::size_t>(k) + 1, Scalar::zero(d));
    v.back() = std::move(c);
    return Polynomial(d, std::move(v));
}

Scalar Polynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Scalar::zero(dom_);
    return c_[static_cast<std::size_t>(k)];
}

Scalar Polynomial::leading() const {
    if (c_.empty()) return Scalar::zero(dom_);
    return c_.back();
}

std::vector<std::string> Polynomial::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& s : c_) out.push_back(s.to_string());
    return out;
}

namespace {
void check_domains(const Polynomial& p, const Polynomial& q) {
    if (p.domain() != q.domain())
        throw MixedDomainError("polynomial operands in different domains");
}
}  // namespace

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    check_domains(p, q);
    Domain d = p.domain();
    std::vector<Scalar> out(std::max(p.coeffs().size(), q.coeffs().size()), Scalar::zero(d));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = p.coeff(static_cast<int>(i)) + q.coeff(static_cast<int>(i));
    return Polynomial(d, std::move(out));
}

Polynomial operator-(const Polynomial& p) {
    std::vector<Scalar> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(-c);
    return Polynomial(p.domain(), std::move(out));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    check_domains(p, q);
    Domain d = p.domain();
    if (p.is_zero() || q.is_zero()) return Polynomial(d);
    std::vector<Scalar> out(p.coeffs().size() + q.coeffs().size() - 1, Scalar::zero(d));
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (p.coeffs()[i].is_zero()) continue;
        for (std::size_t j = 0; j < q.coeffs().size(); ++j)
            out[i + j] = out[i + j] + p.coeffs()[i] * q.coeffs()[j];
    }
    return Polynomial(d, std::move(out));
}

Polynomial operator*(const Scalar& s, const Polynomial& p) {
    if (s.domain() != p.domain()) throw MixedDomainError("scalar and polynomial domains differ");
    std::vector<Scalar> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(s * c);
    return Polynomial(p.domain(), std::move(out));
}

bool operator==(const Polynomial& p, const Polynomial& q) {
    if (p.domain() != q.domain()) return false;
    if (p.coeffs().size() != q.coeffs().size()) return false;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        if (!(p.coeffs()[i] == q.coeffs()[i])) return false;
    return true;
}

Polynomial derivative(const Polynomial& p, int k) {
    if (k < 0) throw Error("negative derivative order");
    Polynomial cur = p;
    Domain d = p.domain();
    for (int step = 0; step < k; ++step) {
        if (cur.coeffs().size() <= 1) return Polynomial(d);
        std::vector<Scalar> out;
        out.reserve(cur.coeffs().size() - 1);
        for (std::size_t i = 1; i < cur.coeffs().size(); ++i)
            out.push_back(Scalar::from_int(d, static_cast<long>(i)) * cur.coeffs()[i]);
        cur = Polynomial(d, std::move(out));
    }
    return cur;
}

Scalar eval(const Polynomial& p, const Scalar& x) {
    if (x.domain() != p.domain()) throw MixedDomainError("evaluation point domain differs");
    Scalar acc = Scalar::zero(p.domain());
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
    return acc;
}

DivModResult divmod(const Polynomial& p, const Polynomial& d) {
    check_domains(p, d);
    if (d.is_zero()) throw DivisionByZeroPolynomialError("polynomial division by zero");
    Domain dom = p.domain();
    if (p.degree() < d.degree()) return {Polynomial(dom), p};

    std::vector<Scalar> rem(p.coeffs().begin(), p.coeffs().end());
    const int dd = d.degree();
    const Scalar lead = d.leading();
    std::vector<Scalar> quot(static_cast<std::size_t>(p.degree() - dd) + 1, Scalar::zero(dom));
    for (int k = p.degree() - dd; k >= 0; --k) {
        Scalar q = rem[static_cast<std::size_t>(k + dd)] / lead;
        quot[static_cast<std::size_t>(k)] = q;
        if (q.is_zero()) continue;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(k + j)] =
                rem[static_cast<std::size_t>(k + j)] - q * d.coeff(j);
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {Polynomial(dom, std::move(quot)), Polynomial(dom, std::move(rem))};
}

bool equal_mod(const Polynomial& p, const Polynomial& q, const Polynomial& h, double tol) {
    Polynomial rp = divmod(p, h).remainder;
    Polynomial rq = divmod(q, h).remainder;
    if (p.domain() == Domain::ExactRational) return rp == rq;
    double scale = 0.0;
    for (const auto& c : rp.coeffs()) scale = std::max(scale, std::fabs(c.float64()));
    for (const auto& c : rq.coeffs()) scale = std::max(scale, std::fabs(c.float64()));
    int top = std::max(rp.degree(), rq.degree());
    for (int k = 0; k <= top; ++k) {
        double delta = std::fabs(rp.coeff(k).to_double() - rq.coeff(k).to_double());
        if (delta > tol * (1.0 + scale)) return false;
    }
    return true;
}

std::vector<Scalar> taylor_coeffs_at(const Polynomial& p, const Scalar& c, int K) {
    if (c.domain() != p.domain()) throw MixedDomainError("center domain differs");
    Domain dom = p.domain();
    // repeated synthetic division by (x - c)
    std::vector<Scalar> work(p.coeffs().begin(), p.coeffs().end());
    std::vector<Scalar> out;
    out.reserve(static_cast<std::size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) {
        if (work.empty()) {
            out.push_back(Scalar::zero(dom));
            continue;
        }
        Scalar rem = Scalar::zero(dom);
        for (auto it = work.rbegin(); it != work.rend(); ++it) rem = rem * c + *it;
        out.push_back(rem);
        // deflate: work <- (work - rem) / (x - c)
        std::vector<Scalar> next(work.size() > 1 ? work.size() - 1 : 0, Scalar::zero(dom));
        Scalar carry = Scalar::zero(dom);
        for (std::size_t i = work.size(); i-- > 1;) {
            carry = work[i] + carry * c;
            next[i - 1] = carry;
        }
        work = std::move(next);
    }
    return out;
}

}  // namespace gts
