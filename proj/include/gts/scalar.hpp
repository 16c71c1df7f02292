#ifndef GTS_SCALAR_HPP
#define GTS_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gts/errors.hpp"

namespace gts {

/// Coefficient domain of a computation. Fixed per computation, never mixed.
enum class Domain { ExactRational, Float64 };

std::string domain_name(Domain d);

/// Shortest decimal string that round-trips to the same double.
std::string fmt_double(double v);

/// Arbitrary-precision rational, always canonical: lowest terms, positive
/// denominator.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den);
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Accepts "p/q", integers, and decimals with optional exponent
    /// ("-3", "1/3", "2.5", "1e-3"). All of these are exact.
    static std::optional<Rational> parse(std::string_view text);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    /// Exact square root, if the value is the square of a rational.
    std::optional<Rational> sqrt_exact() const;
    /// Integer value when is_integer() and it fits a long.
    std::optional<long> to_long() const;

    double to_double() const { return v_.get_d(); }
    /// "p/q", or "p" when the denominator is 1.
    std::string to_string() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ + b.v_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ - b.v_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ * b.v_));
    }
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  private:
    mpq_class v_;
};

/// A number in one of the two coefficient domains.
class Scalar {
  public:
    Scalar() : v_(Rational(0)) {}
    explicit Scalar(Rational r) : v_(std::move(r)) {}
    explicit Scalar(double d) : v_(d) {}

    static Scalar zero(Domain d);
    static Scalar one(Domain d) { return from_int(d, 1); }
    static Scalar from_int(Domain d, long n);
    /// Node/number text in the given domain; "p/q" divides in Float64.
    static std::optional<Scalar> parse(Domain d, std::string_view text);

    Domain domain() const {
        return std::holds_alternative<Rational>(v_) ? Domain::ExactRational : Domain::Float64;
    }
    bool is_exact() const { return std::holds_alternative<Rational>(v_); }
    const Rational& rational() const { return std::get<Rational>(v_); }
    double float64() const { return std::get<double>(v_); }

    bool is_zero() const;
    int sign() const;
    double to_double() const;
    /// "p/q" in the exact domain, shortest round-trip decimal in Float64.
    std::string to_string() const;

    Scalar operator-() const;
    Scalar abs() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);  // throws on /0 (exact)

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b);
    friend bool operator<=(const Scalar& a, const Scalar& b) { return a < b || a == b; }
    friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return b <= a; }

  private:
    std::variant<Rational, double> v_;
};

/// k! in the given domain.
Scalar factorial(Domain d, int k);

/// Row-major dense matrix of Scalars, all in one domain.
class DenseMatrix {
  public:
    DenseMatrix(int rows, int cols, Domain d);
    DenseMatrix(int rows, int cols, std::vector<Scalar> entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Domain domain() const { return dom_; }

    Scalar& at(int r, int c) { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return e_[static_cast<std::size_t>(r) * cols_ + c]; }

  private:
    int rows_;
    int cols_;
    Domain dom_;
    std::vector<Scalar> e_;
};

/// Solves A x = b by Gaussian elimination. Exact in ExactRational; partial
/// pivoting in Float64 with pivots below 1e-12 * max|entry| treated as zero.
/// Throws SingularMatrixError when no usable pivot exists.
std::vector<Scalar> solve_linear(const DenseMatrix& A, const std::vector<Scalar>& b);

}  // namespace gts

#endif
