#include "gts/scalar.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>

namespace gts {

std::string domain_name(Domain d) {
    return d == Domain::ExactRational ? "exact" : "float";
}

std::string fmt_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

// ---- Rational ----

Rational::Rational(long num, long den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error("rational division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

std::optional<Rational> Rational::parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::string s(text);
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        // "p/q" with integer parts
        mpq_class q;
        if (q.set_str(s, 10) != 0) return std::nullopt;
        if (q.get_den() == 0) return std::nullopt;
        q.canonicalize();
        return Rational(q);
    }
    // decimal with optional exponent; exact by construction
    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
        neg = s[i] == '-';
        ++i;
    }
    std::string digits;
    long frac_len = 0;
    bool saw_digit = false, saw_dot = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c >= '0' && c <= '9') {
            digits += c;
            saw_digit = true;
            if (saw_dot) ++frac_len;
        } else if (c == '.' && !saw_dot) {
            saw_dot = true;
        } else {
            break;
        }
    }
    if (!saw_digit) return std::nullopt;
    long expo = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            eneg = s[i] == '-';
            ++i;
        }
        if (i >= s.size()) return std::nullopt;
        long ev = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') return std::nullopt;
            ev = ev * 10 + (s[i] - '0');
            if (ev > 100000) return std::nullopt;
        }
        expo = eneg ? -ev : ev;
    }
    if (i != s.size()) return std::nullopt;

    mpz_class num(digits.empty() ? "0" : digits);
    if (neg) num = -num;
    long p10 = expo - frac_len;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(p10)));
    mpq_class q;
    if (p10 >= 0) {
        q = mpq_class(num * scale);
    } else {
        q = mpq_class(num, scale);
    }
    q.canonicalize();
    return Rational(q);
}

std::optional<Rational> Rational::sqrt_exact() const {
    if (sgn(v_) < 0) return std::nullopt;
    mpz_class num = v_.get_num(), den = v_.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(mpq_class(rn, rd));
}

std::optional<long> Rational::to_long() const {
    if (!is_integer()) return std::nullopt;
    if (!v_.get_num().fits_slong_p()) return std::nullopt;
    return v_.get_num().get_si();
}

std::string Rational::to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

// ---- Scalar ----

Scalar Scalar::zero(Domain d) {
    return d == Domain::ExactRational ? Scalar(Rational(0)) : Scalar(0.0);
}

Scalar Scalar::from_int(Domain d, long n) {
    return d == Domain::ExactRational ? Scalar(Rational(n)) : Scalar(static_cast<double>(n));
}

std::optional<Scalar> Scalar::parse(Domain d, std::string_view text) {
    auto r = Rational::parse(text);
    if (!r) return std::nullopt;
    if (d == Domain::ExactRational) return Scalar(std::move(*r));
    return Scalar(r->to_double());
}

bool Scalar::is_zero() const {
    return is_exact() ? rational().is_zero() : float64() == 0.0;
}

int Scalar::sign() const {
    if (is_exact()) return rational().sign();
    double v = float64();
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

double Scalar::to_double() const {
    return is_exact() ? rational().to_double() : float64();
}

std::string Scalar::to_string() const {
    return is_exact() ? rational().to_string() : fmt_double(float64());
}

Scalar Scalar::operator-() const {
    return is_exact() ? Scalar(-rational()) : Scalar(-float64());
}

Scalar Scalar::abs() const {
    return is_exact() ? Scalar(rational().abs()) : Scalar(std::fabs(float64()));
}

namespace {
void check_same_domain(const Scalar& a, const Scalar& b) {
    if (a.domain() != b.domain())
        throw MixedDomainError("mixed coefficient domains (" + domain_name(a.domain()) + " vs " +
                               domain_name(b.domain()) + ")");
}
}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
    check_same_domain(a, b);
    if (a.is_exact()) return Scalar(a.rational() + b.rational());
    return Scalar(a.float64() + b.float64());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    check_same_domain(a, b);
    if (a.is_exact()) return Scalar(a.rational() - b.rational());
    return Scalar(a.float64() - b.float64());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    check_same_domain(a, b);
    if (a.is_exact()) return Scalar(a.rational() * b.rational());
    return Scalar(a.float64() * b.float64());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    check_same_domain(a, b);
    if (a.is_exact()) return Scalar(a.rational() / b.rational());
    return Scalar(a.float64() / b.float64());
}

bool operator==(const Scalar& a, const Scalar& b) {
    check_same_domain(a, b);
    if (a.is_exact()) return a.rational() == b.rational();
    return a.float64() == b.float64();
}

bool operator<(const Scalar& a, const Scalar& b) {
    check_same_domain(a, b);
    if (a.is_exact()) return a.rational() < b.rational();
    return a.float64() < b.float64();
}

Scalar factorial(Domain d, int k) {
    Scalar f = Scalar::one(d);
    for (int i = 2; i <= k; ++i) f = f * Scalar::from_int(d, i);
    return f;
}

// ---- DenseMatrix / solve ----

DenseMatrix::DenseMatrix(int rows, int cols, Domain d)
    : rows_(rows), cols_(cols), dom_(d),
      e_(static_cast<std::size_t>(rows) * cols, Scalar::zero(d)) {}

DenseMatrix::DenseMatrix(int rows, int cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols),
      dom_(entries.empty() ? Domain::Float64 : entries.front().domain()), e_(std::move(entries)) {
    if (e_.size() != static_cast<std::size_t>(rows_) * cols_)
        throw Error("matrix entry count does not match rows*cols");
    for (const auto& s : e_)
        if (s.domain() != dom_) throw MixedDomainError("matrix entries span mixed domains");
}

std::vector<Scalar> solve_linear(const DenseMatrix& A, const std::vector<Scalar>& b) {
    const int n = A.rows();
    if (A.cols() != n) throw Error("solve_linear requires a square matrix");
    if (static_cast<int>(b.size()) != n) throw Error("right-hand side length mismatch");
    const Domain dom = A.domain();
    for (const auto& s : b)
        if (s.domain() != dom) throw MixedDomainError("matrix and rhs domains differ");

    // augmented working copy
    DenseMatrix M = A;
    std::vector<Scalar> rhs = b;

    double pivot_floor = 0.0;
    if (dom == Domain::Float64) {
        double amax = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) amax = std::max(amax, std::fabs(M.at(i, j).float64()));
        pivot_floor = 1e-12 * amax;
    }

    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        if (dom == Domain::ExactRational) {
            for (int r = col; r < n; ++r)
                if (!M.at(r, col).is_zero()) {
                    pivot = r;
                    break;
                }
        } else {
            double best = pivot_floor;
            for (int r = col; r < n; ++r) {
                double mag = std::fabs(M.at(r, col).float64());
                if (mag > best) {
                    best = mag;
                    pivot = r;
                }
            }
        }
        if (pivot < 0)
            throw SingularMatrixError("singular matrix: no usable pivot in column " +
                                      std::to_string(col));
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(M.at(pivot, j), M.at(col, j));
            std::swap(rhs[pivot], rhs[col]);
        }
        for (int r = col + 1; r < n; ++r) {
            if (M.at(r, col).is_zero()) continue;
            Scalar factor = M.at(r, col) / M.at(col, col);
            M.at(r, col) = Scalar::zero(dom);
            for (int j = col + 1; j < n; ++j)
                M.at(r, j) = M.at(r, j) - factor * M.at(col, j);
            rhs[r] = rhs[r] - factor * rhs[col];
        }
    }

    std::vector<Scalar> x(static_cast<std::size_t>(n), Scalar::zero(dom));
    for (int r = n - 1; r >= 0; --r) {
        Scalar acc = rhs[r];
        for (int j = r + 1; j < n; ++j) acc = acc - M.at(r, j) * x[j];
        x[r] = acc / M.at(r, r);
    }
    return x;
}

}  // namespace gts
