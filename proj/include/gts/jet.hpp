#ifndef GTS_JET_HPP
#define GTS_JET_HPP

#include <utility>
#include <vector>

#include "gts/expr.hpp"
#include "gts/scalar.hpp"

namespace gts {

/// Truncated Taylor series of a function at a center: coeffs[k] = f^(k)/k!.
class Jet {
  public:
    Jet(Scalar center, std::vector<Scalar> coeffs)
        : center_(std::move(center)), c_(std::move(coeffs)) {}

    const Scalar& center() const { return center_; }
    int order() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    const Scalar& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }

  private:
    Scalar center_;
    std::vector<Scalar> c_;
};

/// Propagates truncated Taylor arithmetic through the expression.
/// In ExactRational, elementary functions are available only where their
/// value is rational (exp/sin/cos/tan/atan/sinh/cosh of 0, log of 1, sqrt of
/// a perfect square); anything else throws DomainError. Division by a series
/// with zero constant term throws PoleError.
Jet jet_eval(const Expr& f, const Scalar& center, int order);

/// f^(k)(x) = k! * jet coefficient k.
Scalar derivative_at(const Expr& f, const Scalar& x, int k);

/// Min/max of f^(k) sampled on a uniform grid (endpoints included) over
/// [a, b]. Heuristic range estimate; Float64 only.
std::pair<double, double> derivative_range(const Expr& f, int k, double a, double b,
                                           int grid = 1024);

}  // namespace gts

#endif
