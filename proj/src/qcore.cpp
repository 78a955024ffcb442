#include "qbessel/qcore.hpp"

#include <numbers>
#include <string>

#include "series.hpp"

namespace qb {

namespace {

constexpr double kPoleTol = 1e-10;

// Index of the nonpositive integer within threshold of x, or -1.
int nonpositive_integer_index(double x) {
  if (x > 0.5) return -1;
  if (!detail::near_integer(x)) return -1;
  return static_cast<int>(-std::lround(x));
}

void check_eq_pole(Complex z, const QContext& ctx) {
  // Poles sit at z = q^-k with k >= 0, i.e. only for |z| >= 1.
  const double r = std::abs(z);
  if (r < 1.0 - kPoleTol) return;
  const double kreal = -std::log(r) / ctx.log_q();
  const long k0 = std::lround(kreal);
  for (long k = std::max(0L, k0 - 1); k <= k0 + 1; ++k) {
    if (std::abs(z * ctx.pow(static_cast<double>(k)) - 1.0) < kPoleTol) {
      throw PoleError(static_cast<int>(k),
                      "e_q: argument is at the pole q^-" + std::to_string(k));
    }
  }
}

}  // namespace

Complex qpochhammer_finite(Complex a, const QContext& ctx, int n) {
  Complex p(1.0, 0.0);
  double qk = 1.0;
  for (int k = 0; k < n; ++k) {
    p *= 1.0 - a * qk;
    qk *= ctx.q();
  }
  return p;
}

SeriesEval qpochhammer_infinite(Complex a, const QContext& ctx) {
  detail::ProductAcc acc(ctx, "qpochhammer_infinite");
  if (a == Complex(0.0, 0.0)) {
    acc.mul(1.0, 0.0);
    return acc.result();
  }
  // q^k by repeated multiplication in long double; the drift is far below
  // double rounding over any feasible number of factors.
  const std::complex<long double> al(a);
  const long double ql = std::exp(static_cast<long double>(ctx.log_q()));
  const double abs_a = std::abs(a);
  long double qk = 1.0L;
  for (;; qk *= ql) {
    const std::complex<long double> t = al * qk;
    if (acc.mul(1.0L - t, abs_a * static_cast<double>(qk))) break;
  }
  return acc.result();
}

SeriesEval eq_exp_eval(Complex z, const QContext& ctx) {
  check_eq_pole(z, ctx);
  SeriesEval r = qpochhammer_infinite(z, ctx);
  r.value = 1.0 / r.value;
  r.tail_estimate = r.tail_estimate * std::norm(r.value);
  return r;
}

Complex eq_exp(Complex z, const QContext& ctx) { return eq_exp_eval(z, ctx).value; }

SeriesEval Eq_exp_eval(Complex z, const QContext& ctx) { return qpochhammer_infinite(-z, ctx); }

Complex Eq_exp(Complex z, const QContext& ctx) { return Eq_exp_eval(z, ctx).value; }

namespace {

// The alternating partial-fraction series cancels heavily for q near 1, so
// it is accumulated in extended precision.
using LComplex = std::complex<long double>;

struct PartialFractionTerms {
  PartialFractionTerms(Complex z, const QContext& ctx) : z_(z), lq_(ctx.log_q()) {}

  LComplex next() {
    const long double qk = std::exp(k_ * lq_);
    const LComplex t = c_ / (1.0L - z_ * qk);
    c_ *= -std::exp((k_ + 1) * lq_) / -std::expm1((k_ + 1) * lq_);
    ++k_;
    return t;
  }

  LComplex z_;
  long double lq_;
  long double c_ = 1.0L;  // (-1)^k q^{k(k+1)/2} / (q;q)_k
  long k_ = 0;
};

}  // namespace

Complex eq_exp_partial_fractions(Complex z, const QContext& ctx, int terms) {
  check_eq_pole(z, ctx);
  const Complex qinf = qpochhammer_infinite(ctx.q(), ctx).value;
  PartialFractionTerms gen(z, ctx);
  LComplex sum(0.0L, 0.0L);
  for (int k = 0; k < terms; ++k) sum += gen.next();
  return Complex(static_cast<double>(sum.real()), static_cast<double>(sum.imag())) / qinf;
}

SeriesEval eq_exp_partial_fractions(Complex z, const QContext& ctx) {
  check_eq_pole(z, ctx);
  const SeriesEval qinf = qpochhammer_infinite(ctx.q(), ctx);
  PartialFractionTerms gen(z, ctx);
  LComplex sum(0.0L, 0.0L);
  std::size_t terms = 0;
  int small_run = 0;
  double last = 0.0;
  while (small_run < 3) {
    const LComplex t = gen.next();
    sum += t;
    ++terms;
    last = static_cast<double>(std::abs(t));
    if (last <= ctx.rel_tol() * static_cast<double>(std::abs(sum)) + ctx.abs_tol()) {
      ++small_run;
    } else {
      small_run = 0;
    }
    if (small_run < 3 && terms >= ctx.max_terms()) {
      throw NonConvergence("eq_exp_partial_fractions: no convergence within " +
                           std::to_string(ctx.max_terms()) + " terms");
    }
  }
  SeriesEval r;
  r.value = Complex(static_cast<double>(sum.real()), static_cast<double>(sum.imag())) / qinf.value;
  r.terms_used = terms + qinf.terms_used;
  r.converged = true;
  r.tail_estimate = last / std::abs(qinf.value);
  return r;
}

Complex q_derivative(const std::function<Complex(Complex)>& f, Complex z, const QContext& ctx) {
  if (z == Complex(0.0, 0.0)) throw DomainError("q_derivative: undefined at z = 0");
  return (f(z) - f(ctx.q() * z)) / (ctx.one_minus_pow(1.0) * z);
}

double q_rgamma(double alpha, const QContext& ctx) {
  // (1-q)^{alpha-1} prod_k (1-q^{alpha+k}) / (1-q^{k+1})
  detail::ProductAcc acc(ctx, "q_rgamma");
  for (std::size_t k = 0;; ++k) {
    const double kd = static_cast<double>(k);
    const double num = ctx.one_minus_pow(alpha + kd);
    const double den = ctx.one_minus_pow(kd + 1.0);
    if (num == 0.0) return 0.0;
    const double f = num / den;
    if (acc.mul(f, std::abs(f - 1.0))) break;
  }
  return acc.value().real() * std::pow(ctx.one_minus_pow(1.0), alpha - 1.0);
}

double q_gamma(double alpha, const QContext& ctx) {
  const int n = nonpositive_integer_index(alpha);
  if (n >= 0) {
    throw PoleError(n, "q_gamma: pole at alpha = -" + std::to_string(n));
  }
  detail::ProductAcc acc(ctx, "q_gamma");
  for (std::size_t k = 0;; ++k) {
    const double kd = static_cast<double>(k);
    const double f = ctx.one_minus_pow(kd + 1.0) / ctx.one_minus_pow(alpha + kd);
    if (acc.mul(f, std::abs(f - 1.0))) break;
  }
  return acc.value().real() * std::pow(ctx.one_minus_pow(1.0), 1.0 - alpha);
}

double q_gamma_reflection(double nu, const QContext& ctx) {
  // Gamma(nu) Gamma(1-nu) = (1-q) prod_k (1-q^{k+1})^2 / ((1-q^{nu+k})(1-q^{1-nu+k})).
  // The factor that vanishes at the nearest integer is paired with sin(nu pi).
  const long n = std::lround(nu);
  const double eps = nu - static_cast<double>(n);
  const double lq = ctx.log_q();
  const long skip_first = n <= 0 ? -n : -1;     // k where 1 - q^{nu+k} = 1 - q^eps
  const long skip_second = n >= 1 ? n - 1 : -1;  // k where 1 - q^{1-nu+k} = 1 - q^-eps
  double paired;
  if (eps == 0.0) {
    paired = n <= 0 ? std::numbers::pi / (-lq) : std::numbers::pi / lq;
  } else if (n <= 0) {
    paired = std::sin(eps * std::numbers::pi) / -std::expm1(eps * lq);
  } else {
    paired = std::sin(eps * std::numbers::pi) / -std::expm1(-eps * lq);
  }
  if (n % 2 != 0) paired = -paired;

  detail::ProductAcc acc(ctx, "q_gamma_reflection");
  for (long k = 0;; ++k) {
    const double kd = static_cast<double>(k);
    const double num = ctx.one_minus_pow(kd + 1.0);
    const double d1 = k == skip_first ? 1.0 : ctx.one_minus_pow(nu + kd);
    const double d2 = k == skip_second ? 1.0 : ctx.one_minus_pow(1.0 - nu + kd);
    const double f = num * num / (d1 * d2);
    const bool skipped = k == skip_first || k == skip_second;
    if (acc.mul(f, skipped ? 1.0 : std::abs(f - 1.0))) break;
  }
  return ctx.one_minus_pow(1.0) * paired * acc.value().real();
}

double q_gamma_partial_fractions(double z, const QContext& ctx) {
  const int n = nonpositive_integer_index(z);
  if (n >= 0) {
    throw PoleError(n, "q_gamma_partial_fractions: pole at z = -" + std::to_string(n));
  }
  const QContext p = ctx.squared();
  detail::SeriesSum acc(ctx, "q_gamma_partial_fractions");
  double c = 1.0;  // (-1)^k q^{k(k+1)} / (q^2;q^2)_k
  for (int k = 0;; ++k) {
    if (acc.add(c / p.one_minus_pow(k + z))) break;
    c *= -p.pow(k + 1) / p.one_minus_pow(k + 1);
  }
  return acc.value().real() * std::pow(p.one_minus_pow(1.0), 1.0 - z);
}

double q_psi(double z, const QContext& ctx) {
  const int n = nonpositive_integer_index(z);
  if (n >= 0) throw PoleError(n, "q_psi: pole at z = -" + std::to_string(n));
  const QContext p = ctx.squared();
  detail::SeriesSum acc(ctx, "q_psi");
  for (int k = 0;; ++k) {
    const double x = p.pow(k + z);
    if (acc.add(x / p.one_minus_pow(k + z))) break;
  }
  return -std::log(p.one_minus_pow(1.0)) + p.log_q() * acc.value().real();
}

double psi_over_gamma_at_negative_integer(int n, const QContext& ctx) {
  const QContext p = ctx.squared();
  double poch = 1.0;
  for (int k = 1; k <= n; ++k) poch *= p.one_minus_pow(k);
  const double sign = n % 2 == 0 ? 1.0 : -1.0;
  return sign * ctx.pow(-static_cast<double>(n) * (n + 1)) * poch /
         std::pow(p.one_minus_pow(1.0), n + 1) * p.log_q();
}

}  // namespace qb
