#include "qbessel/context.hpp"

#include <limits>

namespace qb {

namespace {

void validate(double q, double rel_tol, double abs_tol, std::size_t max_terms) {
  if (!(q > 0.0 && q < 1.0)) {
    throw ParamError("QContext: q must satisfy 0 < q < 1, got " + std::to_string(q));
  }
  if (!(rel_tol > 0.0)) throw ParamError("QContext: rel_tol must be positive");
  if (!(abs_tol >= 0.0)) throw ParamError("QContext: abs_tol must be non-negative");
  if (max_terms < 1) throw ParamError("QContext: max_terms must be at least 1");
}

Complex normalize_axis(Complex z) {
  // -0.0 in the imaginary part would select arg z = -pi on the negative axis.
  if (z.imag() == 0.0) return Complex(z.real(), 0.0);
  return z;
}

}  // namespace

QContext::QContext(double q, double rel_tol, double abs_tol, std::size_t max_terms)
    : q_(q), log_q_(0.0), rel_tol_(rel_tol), abs_tol_(abs_tol), max_terms_(max_terms) {
  validate(q, rel_tol, abs_tol, max_terms);
  log_q_ = std::log(q);
}

QContext::QContext(double q, double log_q, double rel_tol, double abs_tol,
                   std::size_t max_terms, int)
    : q_(q), log_q_(log_q), rel_tol_(rel_tol), abs_tol_(abs_tol), max_terms_(max_terms) {}

QContext QContext::squared() const {
  return QContext(q_ * q_, 2.0 * log_q_, rel_tol_, abs_tol_, max_terms_, 0);
}

QContext QContext::with_max_terms(std::size_t max_terms) const {
  validate(q_, rel_tol_, abs_tol_, max_terms);
  return QContext(q_, log_q_, rel_tol_, abs_tol_, max_terms, 0);
}

QContext QContext::with_tolerances(double rel_tol, double abs_tol) const {
  validate(q_, rel_tol, abs_tol, max_terms_);
  return QContext(q_, log_q_, rel_tol, abs_tol, max_terms_, 0);
}

Complex principal_pow(Complex z, double p) {
  if (z == Complex(0.0, 0.0)) {
    if (p > 0.0) return Complex(0.0, 0.0);
    if (p == 0.0) return Complex(1.0, 0.0);
    return Complex(std::numeric_limits<double>::infinity(), 0.0);
  }
  if (z.imag() == 0.0 && z.real() > 0.0) return Complex(std::pow(z.real(), p), 0.0);
  return std::exp(p * std::log(normalize_axis(z)));
}

Complex principal_sqrt(Complex z) {
  if (z.imag() == 0.0 && z.real() >= 0.0) return Complex(std::sqrt(z.real()), 0.0);
  return std::sqrt(normalize_axis(z));
}

Complex principal_log(Complex z) {
  if (z.imag() == 0.0 && z.real() > 0.0) return Complex(std::log(z.real()), 0.0);
  return std::log(normalize_axis(z));
}

}  // namespace qb
