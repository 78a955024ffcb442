#include "qbessel/bessel.hpp"

#include <numbers>

#include "qbessel/qcore.hpp"
#include "qbessel/qhyper.hpp"
#include "series.hpp"

namespace qb {

namespace {

constexpr Complex kI(0.0, 1.0);

// sum_{n >= n0} lead * y^n * [b^{n(n+nu)}] / ((b;b)_n Gamma_b(nu+n+1)) in base b,
// where n0 skips the terms killed by 1/Gamma_b at a negative integer nu.
SeriesEval bessel_series(const QContext& b, double nu, bool integer, Complex lead, Complex y,
                         bool second_kind, const char* what) {
  int n0 = 0;
  if (integer && nu < 0.0) n0 = static_cast<int>(-std::lround(nu));
  Complex t = lead;
  double poch = 1.0;
  for (int j = 1; j <= n0; ++j) {
    t *= y;
    poch *= b.one_minus_pow(j);
  }
  t /= poch;
  if (second_kind) t *= b.pow(static_cast<double>(n0) * (n0 + nu));
  t *= q_rgamma(nu + n0 + 1.0, b);

  const double c = b.one_minus_pow(1.0);
  detail::SeriesSum acc(b, what);
  for (int n = n0;; ++n) {
    if (acc.add(t)) break;
    const double nd = static_cast<double>(n);
    Complex ratio = y * c / (b.one_minus_pow(nd + 1.0) * b.one_minus_pow(nu + nd + 1.0));
    if (second_kind) ratio *= b.pow(nu + 2.0 * nd + 1.0);
    t *= ratio;
  }
  return acc.result();
}

// Value at z = 0 of (z/2)^nu times a series starting at 1/Gamma(nu+1).
SeriesEval value_at_origin(const OrderParam& nu, const char* what) {
  SeriesEval r;
  r.converged = true;
  r.terms_used = 1;
  const double v = nu.value();
  if (nu.is_integer() && v == 0.0) {
    r.value = 1.0;
  } else if (v > 0.0 || nu.is_integer()) {
    r.value = 0.0;
  } else {
    throw DomainError(std::string(what) + ": unbounded at z = 0 for negative non-integer order");
  }
  return r;
}

SeriesEval scaled_series(const OrderParam& nu, Complex z, const QContext& ctx, bool second_kind,
                         const char* what) {
  if (z == Complex(0.0, 0.0)) return value_at_origin(nu, what);
  const QContext p = ctx.squared();
  const double v = nu.value();
  const Complex half = z / 2.0;
  const Complex lead = principal_pow(half, v);
  const Complex y = p.one_minus_pow(1.0) * half * half;
  return bessel_series(p, v, nu.is_integer(), lead, y, second_kind, what);
}

double outer_radius(const QContext& ctx) { return 2.0 / ctx.one_minus_pow(2.0); }
double inner_radius(const QContext& ctx) { return 2.0 * ctx.q() / ctx.one_minus_pow(2.0); }
double switch_radius(const QContext& ctx) { return 2.0 * std::sqrt(ctx.q()) / ctx.one_minus_pow(2.0); }

Complex e_q2_factor(Complex z, const QContext& ctx) {
  const double c = ctx.one_minus_pow(2.0);
  return eq_exp(c * c * z * z / 4.0, ctx.squared());
}

Complex laurent_branch(double nu, Complex z) {
  const Complex e = std::exp(kI * (nu * std::numbers::pi));
  if (z.imag() >= 0.0) return kI * e;
  return std::conj(kI * e);
}

}  // namespace

Complex besselJ(int kind, const OrderParam& nu, Complex z, const QContext& ctx) {
  if (kind != 1 && kind != 2) throw ParamError("besselJ: kind must be 1 or 2");
  if (kind == 1 && std::abs(z * z / 4.0) >= 1.0) {
    throw DomainError("besselJ: kind 1 requires |z^2/4| < 1");
  }
  if (z == Complex(0.0, 0.0)) return value_at_origin(nu, "besselJ").value;
  const double v = nu.value();
  const Complex half = z / 2.0;
  const Complex lead = principal_pow(half, v) * std::pow(ctx.one_minus_pow(1.0), -v);
  const Complex y = -half * half / ctx.one_minus_pow(1.0);
  return bessel_series(ctx, v, nu.is_integer(), lead, y, kind == 2, "besselJ").value;
}

Complex besselI_unscaled(int kind, const OrderParam& nu, Complex z, const QContext& ctx) {
  if (kind != 1 && kind != 2) throw ParamError("besselI_unscaled: kind must be 1 or 2");
  if (kind == 1 && std::abs(z * z / 4.0) >= 1.0) {
    throw DomainError("besselI_unscaled: kind 1 requires |z^2/4| < 1");
  }
  if (z == Complex(0.0, 0.0)) return value_at_origin(nu, "besselI_unscaled").value;
  const double v = nu.value();
  const Complex half = z / 2.0;
  const Complex lead = principal_pow(half, v) * std::pow(ctx.one_minus_pow(1.0), -v);
  const Complex y = half * half / ctx.one_minus_pow(1.0);
  return bessel_series(ctx, v, nu.is_integer(), lead, y, kind == 2, "besselI_unscaled").value;
}

SeriesEval I1_series(const OrderParam& nu, Complex z, const QContext& ctx) {
  if (std::abs(z) >= outer_radius(ctx)) {
    throw DomainError("I1_series: requires |z| < 2/(1-q^2)");
  }
  return scaled_series(nu, z, ctx, false, "I1_series");
}

SeriesEval I2_series(const OrderParam& nu, Complex z, const QContext& ctx) {
  return scaled_series(nu, z, ctx, true, "I2_series");
}

SeriesEval I1_from_I2_eval(const OrderParam& nu, Complex z, const QContext& ctx) {
  const Complex e = e_q2_factor(z, ctx);
  SeriesEval r = I2_series(nu, z, ctx);
  r.value *= e;
  r.tail_estimate *= std::abs(e);
  return r;
}

Complex I1_from_I2(const OrderParam& nu, Complex z, const QContext& ctx) {
  return I1_from_I2_eval(nu, z, ctx).value;
}

Complex I2_from_I1(const OrderParam& nu, Complex z, const QContext& ctx) {
  const double c = ctx.one_minus_pow(2.0);
  return Eq_exp(-c * c * z * z / 4.0, ctx.squared()) * I1_series(nu, z, ctx).value;
}

SeriesEval I1(const OrderParam& nu, Complex z, const QContext& ctx, Representation rep) {
  switch (rep) {
    case Representation::PowerSeries:
      return I1_series(nu, z, ctx);
    case Representation::Laurent: {
      SeriesEval r;
      r.value = I1_laurent(nu, z, ctx);
      r.converged = true;
      return r;
    }
    case Representation::Auto:
      break;
  }
  if (std::abs(z) <= switch_radius(ctx)) return I1_series(nu, z, ctx);
  return I1_from_I2_eval(nu, z, ctx);
}

SeriesEval I2(const OrderParam& nu, Complex z, const QContext& ctx, Representation rep) {
  if (rep == Representation::Laurent) {
    SeriesEval r;
    r.value = I2_laurent(nu, z, ctx);
    r.converged = true;
    return r;
  }
  return I2_series(nu, z, ctx);
}

double a_coefficient(const OrderParam& nu, const QContext& ctx) {
  const double pi = std::numbers::pi;
  const double c = ctx.one_minus_pow(2.0);
  if (nu.is_integer()) {
    const double n = std::abs(static_cast<double>(nu.as_integer()));
    return std::sqrt(ctx.pow(-n * n + 0.5) * (-2.0 * ctx.log_q()) / (2.0 * pi * c));
  }
  const double v = std::abs(nu.value());
  return std::sqrt(ctx.pow(-v + 0.5) / (2.0 * q_gamma_reflection(v, ctx.squared())));
}

double a_coefficient_residue(const OrderParam& nu, const QContext& ctx, int r) {
  const double c = ctx.one_minus_pow(2.0);
  const double qr = ctx.pow(-static_cast<double>(r));
  const Complex zr = 2.0 * qr / c;
  const Complex num = eq_exp(-qr, ctx) * I2_series(nu, zr, ctx).value;
  const Complex den = ctx.pow(0.5 * r) * std::sqrt(c / 2.0) * phi_nu(nu.value(), zr, ctx).value;
  return (num / den).real();
}

ConnectionCoefficients connection_coefficients(const OrderParam& nu, Complex z,
                                               const QContext& ctx) {
  if (std::abs(z) <= outer_radius(ctx)) {
    throw DomainError("connection_coefficients: requires |z| > 2/(1-q^2)");
  }
  const double v = nu.value();
  const double c = ctx.one_minus_pow(2.0);
  auto g = [&](Complex w) {
    return eq_exp(c * w / 2.0, ctx) * phi_nu(v, w, ctx).value / principal_sqrt(w);
  };
  auto h = [&](Complex w) {
    return eq_exp(-c * w / 2.0, ctx) * phi_nu(v, -w, ctx).value / principal_sqrt(w);
  };
  const Complex qz = ctx.q() * z;
  const Complex i0 = I1_from_I2(nu, z, ctx);
  const Complex i1 = I1_from_I2(nu, qz, ctx);
  const Complex g0 = g(z), g1 = g(qz), h0 = h(z), h1 = h(qz);
  const Complex det = g0 * h1 - g1 * h0;
  return {(i0 * h1 - i1 * h0) / det, (g0 * i1 - g1 * i0) / det};
}

Complex I1_laurent(const OrderParam& nu, Complex z, const QContext& ctx) {
  if (std::abs(z) <= inner_radius(ctx)) {
    throw DomainError("I1_laurent: requires |z| > 2q/(1-q^2)");
  }
  const double v = nu.value();
  const double c = ctx.one_minus_pow(2.0);
  const Complex first = eq_exp(c * z / 2.0, ctx) * phi_nu(v, z, ctx).value;
  const Complex second = eq_exp(-c * z / 2.0, ctx) * phi_nu(v, -z, ctx).value;
  return a_coefficient(nu, ctx) / principal_sqrt(z) * (first + laurent_branch(v, z) * second);
}

Complex I2_laurent(const OrderParam& nu, Complex z, const QContext& ctx) {
  if (std::abs(z) <= inner_radius(ctx)) {
    throw DomainError("I2_laurent: requires |z| > 2q/(1-q^2)");
  }
  const double v = nu.value();
  const double c = ctx.one_minus_pow(2.0);
  const Complex first = Eq_exp(c * z / 2.0, ctx) * phi_nu(v, z, ctx).value;
  const Complex second = Eq_exp(-c * z / 2.0, ctx) * phi_nu(v, -z, ctx).value;
  return a_coefficient(nu, ctx) / principal_sqrt(z) * (first + laurent_branch(v, z) * second);
}

Complex q_wronskian(const UnaryFn& f, const UnaryFn& g, Complex z, const QContext& ctx) {
  const Complex qz = ctx.q() * z;
  return f(z) * g(qz) - f(qz) * g(z);
}

Complex wronskian_closed(const OrderParam& nu, Complex z, const QContext& ctx) {
  if (nu.is_integer()) return 0.0;
  const double v = nu.value();
  // 1 / (Gamma(nu) Gamma(1-nu)) = sin(nu pi) / reflection
  const double inv = std::sin(v * std::numbers::pi) / q_gamma_reflection(v, ctx.squared());
  return ctx.pow(-v) * ctx.one_minus_pow(2.0) * inv * e_q2_factor(z, ctx);
}

Sides diffeq_sides(int kind, const UnaryFn& f, const OrderParam& nu, Complex z,
                   const QContext& ctx) {
  if (kind != 1 && kind != 2) throw ParamError("diffeq_sides: kind must be 1 or 2");
  if (z == Complex(0.0, 0.0)) throw DomainError("diffeq_sides: z = 0");
  const double v = nu.value();
  const double q = ctx.q();
  const double c = ctx.one_minus_pow(2.0);
  const Complex w = c * c * z * z / 4.0;
  const Complex up = f(z / q);
  const Complex mid = f(z);
  const Complex down = f(q * z);
  Sides s;
  if (kind == 1) {
    s.lhs = (1.0 - w / (q * q)) * up + down;
  } else {
    s.lhs = up + (1.0 - w) * down;
  }
  s.rhs = (ctx.pow(-v) + ctx.pow(v)) * mid;
  return s;
}

Complex diffeq_residual(int kind, const UnaryFn& f, const OrderParam& nu, Complex z,
                        const QContext& ctx) {
  return diffeq_sides(kind, f, nu, z, ctx).residual();
}

Sides recurrence_sides(IRecurrence id, const OrderParam& nu, Complex z, const QContext& ctx) {
  if (z == Complex(0.0, 0.0)) throw DomainError("recurrence_sides: z = 0");
  const double v = nu.value();
  const double q = ctx.q();
  const Complex cder = 2.0 / ((1.0 + q) * z) / (ctx.one_minus_pow(1.0) * z);
  const Complex d = 2.0 / (ctx.one_minus_pow(2.0) * z);
  const double qm = ctx.pow(-v);
  const double qp = ctx.pow(v);
  const Complex zv = principal_pow(z, v);
  const Complex zv1 = principal_pow(z, v - 1.0);

  auto i1 = [&](double order, Complex w) { return I1(nu.shifted(order - v), w, ctx).value; };
  auto i2 = [&](double order, Complex w) { return I2_series(nu.shifted(order - v), w, ctx).value; };

  switch (id) {
    case IRecurrence::P31a:
      return {cder * zv * (i1(-v, z) - qp * i1(-v, q * z)), zv1 * i1(1.0 - v, z)};
    case IRecurrence::P31b:
      return {cder * zv * (i1(v, z) - qp * i1(v, q * z)), zv1 * i1(v - 1.0, z)};
    case IRecurrence::P32a:
      return {i1(v - 1.0, z) - i1(v + 1.0, z), d * (qm - qp) * i1(v, q * z)};
    case IRecurrence::P32b:
      return {i1(v - 1.0, z) + i1(v + 1.0, z),
              2.0 * d * i1(v, z) - d * (qm + qp) * i1(v, q * z)};
    case IRecurrence::P33a:
      return {cder * zv * (i2(-v, z) - qp * i2(-v, q * z)),
              ctx.pow(1.0 - v) * zv1 * i2(1.0 - v, q * z)};
    case IRecurrence::P33b:
      return {cder * zv * (i2(v, z) - qp * i2(v, q * z)),
              ctx.pow(1.0 - v) * zv1 * i2(v - 1.0, q * z)};
    case IRecurrence::P34a:
      return {qm * i2(v - 1.0, z) - qp * i2(v + 1.0, z), d * (qm - qp) * i2(v, z)};
    case IRecurrence::P34b:
      return {qm * i2(v - 1.0, z) + qp * i2(v + 1.0, z),
              2.0 * d * i2(v, z / q) - d * (qm + qp) * i2(v, z)};
  }
  throw ParamError("recurrence_sides: unknown id");
}

Complex recurrence_residual(IRecurrence id, const OrderParam& nu, Complex z,
                            const QContext& ctx) {
  return recurrence_sides(id, nu, z, ctx).residual();
}

}  // namespace qb
