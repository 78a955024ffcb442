#include <cmath>
#include <numbers>

#include "qbessel/bessel.hpp"
#include "qbessel/macdonald.hpp"
#include "qbessel/verify.hpp"

namespace qb::verify {

double classical_bessel_I(double nu, double z) {
  if (z < 0.0) throw DomainError("classical_bessel_I: z >= 0 required");
  const double r = std::round(nu);
  if (std::abs(nu - r) < 1e-12) nu = std::abs(r);
  if (z == 0.0) {
    if (nu == 0.0) return 1.0;
    if (nu > 0.0) return 0.0;
    throw DomainError("classical_bessel_I: unbounded at z = 0");
  }
  const double h = z / 2.0;
  const double y = h * h;
  double t = std::pow(h, nu) / std::tgamma(nu + 1.0);
  double sum = 0.0;
  for (int k = 0; k < 500; ++k) {
    sum += t;
    if (std::abs(t) <= 1e-17 * std::abs(sum) && k > 2) break;
    t *= y / ((k + 1.0) * (nu + k + 1.0));
  }
  return sum;
}

namespace {

double k_noninteger(double nu, double z) {
  return std::numbers::pi / (2.0 * std::sin(nu * std::numbers::pi)) *
         (classical_bessel_I(-nu, z) - classical_bessel_I(nu, z));
}

}  // namespace

double classical_bessel_K(double nu, double z) {
  if (!(z > 0.0)) throw DomainError("classical_bessel_K: z > 0 required");
  nu = std::abs(nu);
  if (std::abs(nu - std::round(nu)) < 1e-9) {
    const double n = std::round(nu);
    constexpr double eps = 1e-6;
    return 0.5 * (k_noninteger(n + eps, z) + k_noninteger(n - eps, z));
  }
  return k_noninteger(nu, z);
}

LimitReport classical_limit_report(LimitFunction func, double nu, double z,
                                   const std::vector<int>& m_values) {
  LimitReport out;
  const bool is_k = func == LimitFunction::K1 || func == LimitFunction::K2;
  const double exact = is_k ? classical_bessel_K(nu, z) : classical_bessel_I(nu, z);
  for (int m : m_values) {
    const double q = 1.0 - std::pow(10.0, -m);
    const QContext ctx(q, 1e-14, 1e-300, 1000000);
    Complex v;
    switch (func) {
      case LimitFunction::I1: v = I1(nu, z, ctx).value; break;
      case LimitFunction::I2: v = I2(nu, z, ctx).value; break;
      case LimitFunction::K1: v = K(1, nu, z, ctx).value; break;
      case LimitFunction::K2: v = K(2, nu, z, ctx).value; break;
    }
    out.errors.emplace_back(q, std::abs(v - exact));
  }
  out.decreasing = true;
  for (std::size_t i = 1; i < out.errors.size(); ++i) {
    if (!(out.errors[i].second < out.errors[i - 1].second)) out.decreasing = false;
  }
  return out;
}

}  // namespace qb::verify
