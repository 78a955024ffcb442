#include "qbessel/qhyper.hpp"

#include <string>

#include "series.hpp"

namespace qb {

namespace {

// Returns m >= 0 when a == q^-m within a relative tolerance, else -1.
long inverse_power_index(Complex a, const QContext& ctx) {
  const double r = std::abs(a);
  if (r < 1.0 - 1e-9) return -1;
  const long m = std::lround(std::log(r) / -ctx.log_q());
  if (m < 0) return -1;
  if (std::abs(a * ctx.pow(static_cast<double>(m)) - 1.0) < 1e-12) return m;
  return -1;
}

Complex u_of_z(Complex z, const QContext& ctx) {
  if (z == Complex(0.0, 0.0)) throw DomainError("phi_nu: z = 0 is outside |z| > 2q/(1-q^2)");
  return 2.0 * ctx.q() / (ctx.one_minus_pow(2.0) * z);
}

}  // namespace

SeriesEval basic_hypergeometric(const HyperParams& p, Complex z, const QContext& ctx) {
  const long r = static_cast<long>(p.r());
  const long s = static_cast<long>(p.s());
  if (r > s + 1) {
    throw ParamError("basic_hypergeometric: r > s+1 gives a divergent series");
  }
  if (r == s + 1 && std::abs(z) >= 1.0) {
    throw DomainError("basic_hypergeometric: |z| < 1 required when r = s+1");
  }
  for (const Complex& b : p.lower) {
    if (inverse_power_index(b, ctx) >= 0) {
      throw ParamError("basic_hypergeometric: lower parameter of the form q^-m");
    }
  }
  long stop = -1;  // last nonzero index of a terminating series
  for (const Complex& a : p.upper) {
    const long m = inverse_power_index(a, ctx);
    if (m >= 0 && (stop < 0 || m < stop)) stop = m;
  }
  const long balance = 1 + s - r;

  detail::SeriesSum acc(ctx, "basic_hypergeometric");
  Complex t(1.0, 0.0);
  for (long n = 0;; ++n) {
    const bool done = acc.add(t);
    if (stop >= 0 && n == stop) return acc.exact();
    if (done && stop < 0) break;
    const double qn = ctx.pow(static_cast<double>(n));
    Complex ratio = z / ctx.one_minus_pow(static_cast<double>(n + 1));
    for (const Complex& a : p.upper) ratio *= 1.0 - a * qn;
    for (const Complex& b : p.lower) ratio /= 1.0 - b * qn;
    for (long j = 0; j < balance; ++j) ratio *= -qn;
    t *= ratio;
  }
  return acc.result();
}

SeriesEval phi_nu_u(double nu, Complex u, const QContext& ctx) {
  if (std::abs(u) >= 1.0) {
    throw DomainError("phi_nu: |u| < 1 required, i.e. |z| > 2q/(1-q^2)");
  }
  // Even in nu: both exponents depend on |nu| only.
  const double an = std::abs(nu);
  const double alpha = an + 0.5;
  const double beta = -an + 0.5;
  // beta = -m terminates the series after m+1 terms.
  const long stop = (beta <= 0.0 && detail::near_integer(beta, 1e-12)) ? std::lround(-beta) : -1;

  detail::SeriesSum acc(ctx, "phi_nu");
  Complex t(1.0, 0.0);
  for (long n = 0;; ++n) {
    const bool done = acc.add(t);
    if (stop >= 0 && n == stop) return acc.exact();
    if (done && stop < 0) break;
    const double nd = static_cast<double>(n);
    const double num = ctx.one_minus_pow(alpha + nd) * ctx.one_minus_pow(beta + nd);
    const double den = ctx.one_minus_pow(nd + 1.0) * (1.0 + ctx.pow(nd + 1.0));
    t *= (num / den) * u;
  }
  return acc.result();
}

SeriesEval phi_nu(double nu, Complex z, const QContext& ctx) {
  return phi_nu_u(nu, u_of_z(z, ctx), ctx);
}

double phi_nu_coefficient(double nu, int k, const QContext& ctx) {
  double c = 1.0;
  const double scale = 2.0 * ctx.q() / ctx.one_minus_pow(2.0);
  for (int j = 1; j <= k; ++j) {
    c *= scale * ctx.one_minus_pow(nu - 0.5 + j) * ctx.one_minus_pow(-nu - 0.5 + j) /
         ctx.one_minus_pow(2.0 * j);
  }
  return c;
}

double phi_nu_coefficient_closed(double nu, int k, const QContext& ctx) {
  // 2^k q^k (q^{nu+1/2};q)_k (q^{-nu+1/2};q)_k / ((1-q^2)^k (q^2;q^2)_k)
  const double a = ctx.pow(nu + 0.5);
  const double b = ctx.pow(-nu + 0.5);
  const QContext p = ctx.squared();
  double num = 1.0;
  double den = 1.0;
  for (int j = 0; j < k; ++j) {
    num *= (1.0 - a * ctx.pow(j)) * (1.0 - b * ctx.pow(j));
    den *= 1.0 - p.pow(j + 1);
  }
  return std::pow(2.0 * ctx.q() / (1.0 - ctx.q() * ctx.q()), k) * num / den;
}

SeriesEval phi_nu_coefficient_form(double nu, Complex z, const QContext& ctx) {
  const Complex w = 1.0 / z;
  if (std::abs(2.0 * ctx.q() / ctx.one_minus_pow(2.0) * w) >= 1.0) {
    throw DomainError("phi_nu_coefficient_form: |z| > 2q/(1-q^2) required");
  }
  const double scale = 2.0 * ctx.q() / ctx.one_minus_pow(2.0);
  detail::SeriesSum acc(ctx, "phi_nu_coefficient_form");
  Complex t(1.0, 0.0);
  for (int k = 1;; ++k) {
    const bool done = acc.add(t);
    const double e1 = nu - 0.5 + k;
    const double e2 = -nu - 0.5 + k;
    if (std::abs(e1) < 1e-12 || std::abs(e2) < 1e-12) return acc.exact();
    if (done) break;
    t *= scale * ctx.one_minus_pow(e1) * ctx.one_minus_pow(e2) / ctx.one_minus_pow(2.0 * k) * w;
  }
  return acc.result();
}

Complex phi_nu_shifted_u(double nu, Complex u, const QContext& ctx) {
  const double s = ctx.pow(-nu) + ctx.pow(nu);
  const Complex phi_u = phi_nu_u(nu, u, ctx).value;
  const Complex phi_qu = phi_nu_u(nu, ctx.q() * u, ctx).value;
  return s / std::sqrt(ctx.q()) * u * phi_u - (u + 1.0) * phi_qu;
}

}  // namespace qb
