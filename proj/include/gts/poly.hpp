#ifndef GTS_POLY_HPP
#define GTS_POLY_HPP

#include <limits>
#include <utility>
#include <vector>

#include "gts/scalar.hpp"

namespace gts {

/// degree() of the zero polynomial.
inline constexpr int kNegInfDegree = std::numeric_limits<int>::min();

/// Dense univariate polynomial, coefficients ascending by degree, all in one
/// domain. Normalized: no zero leading coefficient (the zero polynomial has
/// an empty coefficient list).
class Polynomial {
  public:
    explicit Polynomial(Domain d) : dom_(d) {}
    Polynomial(Domain d, std::vector<Scalar> coeffs);

    static Polynomial constant(Scalar c);
    static Polynomial x(Domain d);
    /// c * x^k
    static Polynomial monomial(Scalar c, int k);

    Domain domain() const { return dom_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? kNegInfDegree : static_cast<int>(c_.size()) - 1; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    /// Coefficient of x^k; zero beyond the degree.
    Scalar coeff(int k) const;
    Scalar leading() const;

    std::vector<std::string> coeff_strings() const;

  private:
    Domain dom_;
    std::vector<Scalar> c_;

    void normalize();
};

Polynomial operator+(const Polynomial& p, const Polynomial& q);
Polynomial operator-(const Polynomial& p, const Polynomial& q);
Polynomial operator*(const Polynomial& p, const Polynomial& q);
Polynomial operator*(const Scalar& s, const Polynomial& p);
Polynomial operator-(const Polynomial& p);
bool operator==(const Polynomial& p, const Polynomial& q);
inline bool operator!=(const Polynomial& p, const Polynomial& q) { return !(p == q); }

/// k-fold formal derivative.
Polynomial derivative(const Polynomial& p, int k = 1);

/// Horner-scheme value p(x).
Scalar eval(const Polynomial& p, const Scalar& x);

struct DivModResult {
    Polynomial quotient;
    Polynomial remainder;
};

/// Euclidean division: p = quotient * d + remainder, deg(remainder) < deg(d).
/// Throws DivisionByZeroPolynomialError when d is zero.
DivModResult divmod(const Polynomial& p, const Polynomial& d);

/// True iff p and q leave the same remainder upon division by h. Exact in
/// ExactRational; coefficientwise |delta| <= tol*(1+max|coeff|) in Float64.
bool equal_mod(const Polynomial& p, const Polynomial& q, const Polynomial& h, double tol = 1e-9);

/// Coefficients of p in powers of (x - c), up to order K (inclusive).
/// Entry k equals p^(k)(c)/k!.
std::vector<Scalar> taylor_coeffs_at(const Polynomial& p, const Scalar& c, int K);

}  // namespace gts

#endif
