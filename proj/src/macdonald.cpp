#include "qbessel/macdonald.hpp"

#include <numbers>

#include "qbessel/bessel.hpp"
#include "qbessel/qcore.hpp"
#include "qbessel/qhyper.hpp"
#include "series.hpp"

namespace qb {

namespace {

void check_kind(int j) {
  if (j != 1 && j != 2) throw ParamError("K: kind j must be 1 or 2");
}

// a_nu a_-nu from the product condition; positive for every non-integer nu.
double a_product(double nu, const QContext& ctx) {
  return ctx.pow(-nu + 0.5) / (2.0 * q_gamma_reflection(nu, ctx.squared()));
}

double a_tilde_impl(const QContext& ctx, int l0) {
  const QContext p = ctx.squared();
  const double lp = p.log_q();
  // tail = sum_{m > k + l0} q^{2m} / (1 - q^{2m}), updated as k grows.
  detail::SeriesSum tail_sum(ctx, "a_tilde inner sum");
  for (int m = l0 + 1;; ++m) {
    if (tail_sum.add(p.pow(m) / p.one_minus_pow(m))) break;
  }
  double tail = tail_sum.value().real();
  // Weights q^{2k^2} / (q^2;q^2)_k^2 kept in log form and rescaled by the
  // running maximum; (q^2;q^2)_k underflows for q close to 1.
  double log_w = 0.0;
  double log_max = 0.0;
  double num = 0.0;
  double den = 0.0;
  bool past_peak = false;
  for (std::size_t k = 0;; ++k) {
    if (log_w > log_max) {
      const double s = std::exp(log_max - log_w);
      num *= s;
      den *= s;
      log_max = log_w;
    }
    const double w = std::exp(log_w - log_max);
    num += w * (static_cast<double>(k) - tail);
    den += w;
    const double kd = static_cast<double>(k);
    const double step = (2.0 * kd + 1.0) * lp - 2.0 * std::log(p.one_minus_pow(kd + 1.0));
    if (step < 0.0) past_peak = true;
    if (past_peak && log_w - log_max < -45.0) break;
    if (k >= ctx.max_terms()) throw NonConvergence("a_tilde: no convergence");
    log_w += step;
    const double m = kd + l0 + 1.0;
    tail -= p.pow(m) / p.one_minus_pow(m);
  }
  return 2.0 * lp * num / den;
}

SeriesEval closed_form(int j, const OrderParam& nu, Complex z, const QContext& ctx) {
  const double v = std::abs(nu.value());
  const double c = ctx.one_minus_pow(2.0);
  const double prod = nu.is_integer() ? std::pow(a_coefficient(nu, ctx), 2) : a_product(v, ctx);
  const Complex x = -c * z / 2.0;
  const Complex e = j == 1 ? eq_exp(x, ctx) : Eq_exp(x, ctx);
  SeriesEval phi = phi_nu(v, -z, ctx);
  phi.value = ctx.pow(-v * v + 0.5) / (2.0 * std::sqrt(prod) * principal_sqrt(z)) * e * phi.value;
  return phi;
}

}  // namespace

Complex K_noninteger(int j, const OrderParam& nu, Complex z, const QContext& ctx) {
  check_kind(j);
  if (nu.is_integer()) {
    throw IntegerOrderError("K_noninteger: integer order, use K_integer");
  }
  const double v = std::abs(nu.value());
  const OrderParam pos(v, nu.integer_threshold);
  const OrderParam neg(-v, nu.integer_threshold);
  const double a_pos = a_coefficient(pos, ctx);
  const double a_neg = a_coefficient(neg, ctx);
  const double prod = a_product(v, ctx);
  const double pref =
      ctx.pow(-v * v + 0.5) / (4.0 * std::pow(prod, 1.5) * std::sin(v * std::numbers::pi));
  const Complex i_neg = j == 1 ? I1(neg, z, ctx).value : I2(neg, z, ctx).value;
  const Complex i_pos = j == 1 ? I1(pos, z, ctx).value : I2(pos, z, ctx).value;
  return pref * (a_pos * i_neg - a_neg * i_pos);
}

Complex K1_closed(const OrderParam& nu, Complex z, const QContext& ctx) {
  if (!(z.real() > 2.0 * ctx.q() / ctx.one_minus_pow(2.0))) {
    throw DomainError("K1_closed: requires Re z > 2q/(1-q^2)");
  }
  return closed_form(1, nu, z, ctx).value;
}

Complex K2_closed(const OrderParam& nu, Complex z, const QContext& ctx) {
  if (!(std::abs(z) > 2.0 * ctx.q() / ctx.one_minus_pow(2.0))) {
    throw DomainError("K2_closed: requires |z| > 2q/(1-q^2)");
  }
  return closed_form(2, nu, z, ctx).value;
}

double a_tilde(const QContext& ctx) { return a_tilde_impl(ctx, 0); }

double a_tilde_as_printed(const QContext& ctx) { return a_tilde_impl(ctx, 1); }

Complex K_integer(int j, int n, Complex z, const QContext& ctx, IntegerOrderForm form) {
  check_kind(j);
  n = std::abs(n);
  if (z == Complex(0.0, 0.0)) throw DomainError("K_integer: z = 0");
  const QContext p = ctx.squared();
  const double c = p.one_minus_pow(1.0);
  if (j == 1 && std::abs(z) >= 2.0 / c) {
    throw DomainError("K_integer: j = 1 requires |z| < 2/(1-q^2)");
  }
  const bool derived = form == IntegerOrderForm::Derived;
  const double lp = p.log_q();
  const OrderParam order(static_cast<double>(n));
  const double an = a_coefficient(order, ctx);
  const double sign = n % 2 == 0 ? 1.0 : -1.0;
  const double pref = sign * ctx.pow(-static_cast<double>(n) * n + 0.5) /
                      (4.0 * std::numbers::pi * an * an);
  const double at = derived ? a_tilde(ctx) : a_tilde_as_printed(ctx);
  const Complex half = z / 2.0;
  const Complex log_half = principal_log(half);

  const Complex in = j == 1 ? I1(order, z, ctx).value : I2(order, z, ctx).value;
  Complex total = (at - 2.0 * log_half) * in;

  // Finite sum over k = 0..n-1 with m = n-k-1.
  Complex finite(0.0, 0.0);
  for (int k = 0; k < n; ++k) {
    const int m = n - k - 1;
    double expo = derived ? -static_cast<double>(m) * (m + 1) : -static_cast<double>(m) * (m - 1);
    if (j == 2) expo += 2.0 * k * (k - n);
    double ratio = 1.0;  // (q^2;q^2)_m / (q^2;q^2)_k
    for (int i = 1; i <= m; ++i) ratio *= p.one_minus_pow(i);
    for (int i = 1; i <= k; ++i) ratio /= p.one_minus_pow(i);
    const double msign = m % 2 == 0 ? 1.0 : -1.0;
    const Complex power = std::pow(c * half, -n + 2 * k);
    finite += msign * ctx.pow(expo) * ratio * power;
  }
  total += lp * finite;

  // Series with psi_{q^2}(n+k+1) + psi_{q^2}(k+1), psi advanced by
  // psi(x+1) = psi(x) - ln(q^2) q^{2x} / (1 - q^{2x}).
  double psi_k1 = q_psi(1.0, ctx);
  double psi_nk1 = q_psi(n + 1.0, ctx);
  Complex t = std::pow(c * half, n);  // (1-q^2)^{n+2k} (z/2)^{n+2k} / ((q^2;q^2)_k (q^2;q^2)_{n+k})
  for (int i = 1; i <= n; ++i) t /= p.one_minus_pow(i);
  const Complex step = c * c * half * half;
  detail::SeriesSum acc(ctx, "K_integer");
  for (int k = 0;; ++k) {
    double bracket = psi_nk1 + psi_k1;
    if (derived && j == 2) bracket -= lp * (n + 2.0 * k);
    if (acc.add(t * bracket)) break;
    t *= step / (p.one_minus_pow(k + 1) * p.one_minus_pow(n + k + 1));
    if (j == 2) t *= p.pow(n + 2.0 * k + 1.0);
    psi_k1 -= lp * p.pow(k + 1.0) / p.one_minus_pow(k + 1.0);
    psi_nk1 -= lp * p.pow(n + k + 1.0) / p.one_minus_pow(n + k + 1.0);
  }
  total += acc.value();
  return pref * total;
}

SeriesEval K(int j, const OrderParam& nu, Complex z, const QContext& ctx, Representation rep) {
  check_kind(j);
  auto series = [&]() {
    SeriesEval r;
    r.converged = true;
    r.value = nu.is_integer() ? K_integer(j, nu.as_integer(), z, ctx)
                              : K_noninteger(j, nu, z, ctx);
    return r;
  };
  auto closed = [&]() {
    if (j == 1) {
      K1_closed(nu, z, ctx);  // domain check
    } else {
      K2_closed(nu, z, ctx);
    }
    return closed_form(j, nu, z, ctx);
  };
  switch (rep) {
    case Representation::PowerSeries:
      return series();
    case Representation::Laurent:
      return closed();
    case Representation::Auto:
      break;
  }
  const double c = ctx.one_minus_pow(2.0);
  const double switch_radius = 2.0 * std::sqrt(ctx.q()) / c;
  const double inner = 2.0 * ctx.q() / c;
  const bool closed_ok = j == 1 ? z.real() > inner : std::abs(z) > inner;
  if (std::abs(z) <= switch_radius || !closed_ok) return series();
  return closed_form(j, nu, z, ctx);
}

Sides K_recurrence_sides(KRecurrence id, const OrderParam& nu, Complex z, const QContext& ctx,
                         RecurrenceForm form) {
  if (z == Complex(0.0, 0.0)) throw DomainError("K_recurrence_sides: z = 0");
  const double v = nu.value();
  const double q = ctx.q();
  const Complex cder = 2.0 / ((1.0 + q) * z) / (ctx.one_minus_pow(1.0) * z);
  const Complex d = 2.0 / (ctx.one_minus_pow(2.0) * z);
  const double qm = ctx.pow(-v);
  const double qp = ctx.pow(v);
  const Complex zv = principal_pow(z, v);
  const Complex zmv = principal_pow(z, -v);
  const Complex zv1 = principal_pow(z, v - 1.0);
  const Complex zmv1 = principal_pow(z, -v - 1.0);
  const bool printed = form == RecurrenceForm::AsPrinted;

  auto k = [&](int j, double order, Complex w) {
    return K(j, nu.shifted(order - v), w, ctx, Representation::PowerSeries).value;
  };

  switch (id) {
    case KRecurrence::P52a:
      return {cder * zv * (k(1, v, z) - qp * k(1, v, q * z)), -zv1 * k(1, v - 1.0, z)};
    case KRecurrence::P52b:
      return {cder * zmv * (k(1, v, z) - qm * k(1, v, q * z)), -zmv1 * k(1, v + 1.0, z)};
    case KRecurrence::P53a:
      return {k(1, v - 1.0, z) - k(1, v + 1.0, z), -d * (qm - qp) * k(1, v, q * z)};
    case KRecurrence::P53b:
      return {k(1, v - 1.0, z) + k(1, v + 1.0, z),
              -2.0 * d * k(1, v, z) + d * (qm + qp) * k(1, v, q * z)};
    case KRecurrence::P52Aa: {
      const Complex lhs = cder * zv * (k(2, v, z) - qp * k(2, v, q * z));
      if (printed) return {lhs, -ctx.pow(1.0 - v) * zv1 * k(2, v - 1.0, z)};
      return {lhs, -ctx.pow(1.0 - v) * zv1 * k(2, v - 1.0, q * z)};
    }
    case KRecurrence::P52Ab: {
      const Complex lhs = cder * zmv * (k(2, v, z) - qm * k(2, v, q * z));
      if (printed) return {lhs, -ctx.pow(1.0 - v) * zmv1 * k(2, v + 1.0, z)};
      return {lhs, -ctx.pow(1.0 + v) * zmv1 * k(2, v + 1.0, q * z)};
    }
    case KRecurrence::P53Aa:
      if (printed) {
        return {k(2, v - 1.0, z) - k(2, v + 1.0, z),
                -ctx.pow(v - 1.0) * d * (qm - qp) * k(2, v, q * z)};
      }
      return {qm * k(2, v - 1.0, z) - qp * k(2, v + 1.0, z), -d * (qm - qp) * k(2, v, z)};
    case KRecurrence::P53Ab:
      if (printed) {
        const double f = ctx.pow(v - 1.0);
        return {k(2, v - 1.0, z) + k(2, v + 1.0, z),
                -2.0 * f * d * k(2, v, z) + f * d * (qm + qp) * k(2, v, q * z)};
      }
      return {qm * k(2, v - 1.0, z) + qp * k(2, v + 1.0, z),
              -2.0 * d * k(2, v, z / q) + d * (qm + qp) * k(2, v, z)};
  }
  throw ParamError("K_recurrence_sides: unknown id");
}

Complex K_recurrence_residual(KRecurrence id, const OrderParam& nu, Complex z,
                              const QContext& ctx, RecurrenceForm form) {
  return K_recurrence_sides(id, nu, z, ctx, form).residual();
}

}  // namespace qb
