#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace qb {

using Complex = std::complex<double>;

// Error hierarchy. Every library failure derives from Error.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : Error {
  using Error::Error;
};

// Raised at the k-th pole of a meromorphic factor.
struct PoleError : DomainError {
  PoleError(int k, const std::string& what) : DomainError(what), index(k) {}
  int index;
};

struct NonConvergence : Error {
  using Error::Error;
};

struct ParamError : Error {
  using Error::Error;
};

struct IntegerOrderError : Error {
  using Error::Error;
};

struct UnknownIdentity : Error {
  using Error::Error;
};

// Base q together with truncation policy. Immutable after construction.
//
// The logarithm of the base is stored next to the base so that factors of
// the form 1 - q^y can be evaluated as -expm1(y ln q) without cancellation.
// squared() yields the base q^2 with ln(q^2) = 2 ln q exactly.
class QContext {
 public:
  explicit QContext(double q, double rel_tol = 1e-14, double abs_tol = 1e-300,
                    std::size_t max_terms = 10000);

  double q() const { return q_; }
  double log_q() const { return log_q_; }
  double rel_tol() const { return rel_tol_; }
  double abs_tol() const { return abs_tol_; }
  std::size_t max_terms() const { return max_terms_; }

  // q^y
  double pow(double y) const { return std::exp(y * log_q_); }
  // 1 - q^y, accurate when q^y is close to 1.
  double one_minus_pow(double y) const { return -std::expm1(y * log_q_); }

  QContext squared() const;
  QContext with_max_terms(std::size_t max_terms) const;
  QContext with_tolerances(double rel_tol, double abs_tol) const;

 private:
  QContext(double q, double log_q, double rel_tol, double abs_tol,
           std::size_t max_terms, int);

  double q_;
  double log_q_;
  double rel_tol_;
  double abs_tol_;
  std::size_t max_terms_;
};

// Result of a truncated series or product.
struct SeriesEval {
  Complex value{0.0, 0.0};
  std::size_t terms_used = 0;
  bool converged = false;
  double tail_estimate = 0.0;
};

// Order nu with integer snapping.
struct OrderParam {
  OrderParam(double v, double threshold = 1e-9) : nu(v), integer_threshold(threshold) {}

  double nu;
  double integer_threshold;

  bool is_integer() const { return std::abs(nu - std::round(nu)) < integer_threshold; }
  int as_integer() const { return static_cast<int>(std::lround(nu)); }
  // The snapped value used by evaluations.
  double value() const { return is_integer() ? std::round(nu) : nu; }
  OrderParam negated() const { return OrderParam(-nu, integer_threshold); }
  OrderParam shifted(double d) const { return OrderParam(nu + d, integer_threshold); }
};

enum class Representation { PowerSeries, Laurent, Auto };

// Two sides of an identity evaluated at one point.
struct Sides {
  Complex lhs;
  Complex rhs;
  Complex residual() const { return lhs - rhs; }
};

// Principal branch power with a non-negative zero imaginary part, so that
// values on the negative real axis use arg z = +pi.
Complex principal_pow(Complex z, double p);
Complex principal_sqrt(Complex z);
Complex principal_log(Complex z);

}  // namespace qb
