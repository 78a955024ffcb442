#include "catalog.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qbessel/bessel.hpp"
#include "qbessel/macdonald.hpp"
#include "qbessel/qcore.hpp"
#include "qbessel/qhyper.hpp"

namespace qb::verify::detail {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI(0.0, 1.0);

using Xs = std::function<std::vector<Complex>(double q)>;

std::vector<Point> grid(const std::vector<double>& qs, const std::vector<double>& nus,
                        const Xs& xs) {
  std::vector<Point> out;
  for (double q : qs) {
    for (double nu : nus) {
      for (Complex x : xs(q)) out.push_back({q, nu, x});
    }
  }
  return out;
}

Xs fixed(std::vector<Complex> xs) {
  return [xs](double) { return xs; };
}

double outer(double q) { return 2.0 / (1.0 - q * q); }

std::vector<Complex> polar(double radius, const std::vector<double>& angles) {
  std::vector<Complex> out;
  for (double a : angles) out.push_back(std::polar(radius, a));
  return out;
}

// Eight points on |z| = 1/(1-q^2), off the real axis.
std::vector<Complex> ring(double q) {
  std::vector<double> angles;
  for (int k = 0; k < 8; ++k) angles.push_back((2 * k + 1) * kPi / 8.0);
  return polar(1.0 / (1.0 - q * q), angles);
}

// 16 points in |z| <= 2, away from the positive real axis.
std::vector<Complex> disc16() {
  std::vector<Complex> out;
  for (double r : {0.4, 0.9, 1.5, 2.0}) {
    for (int k = 0; k < 4; ++k) out.push_back(std::polar(r, (2 * k + 1) * kPi / 4.0));
  }
  return out;
}

std::vector<Complex> reals(std::initializer_list<double> xs) {
  return std::vector<Complex>(xs.begin(), xs.end());
}

std::vector<Complex> indices(int from, int to) {
  std::vector<Complex> out;
  for (int i = from; i <= to; ++i) out.emplace_back(static_cast<double>(i), 0.0);
  return out;
}

std::vector<Complex> u_grid() {
  std::vector<Complex> out;
  for (double u : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    out.emplace_back(u, 0.0);
    out.emplace_back(-u, 0.0);
  }
  out.emplace_back(0.0, 0.5);
  out.emplace_back(0.4, -0.6);
  return out;
}

const std::vector<double> kBesselQ = {0.2, 0.5, 0.8};
const std::vector<double> kBesselNu = {0.0, 0.3, 0.5, 1.7, 2.0};

std::vector<Point> bessel_grid() { return grid(kBesselQ, kBesselNu, ring); }

std::vector<Point> qcore_grid() { return grid(kBesselQ, {0.0}, fixed(disc16())); }

Evaluation sides(Complex lhs, Complex rhs) { return {{lhs, rhs}, 0.0}; }

int index_of(const Point& p) { return static_cast<int>(std::lround(p.x.real())); }

UnaryFn i1_of(double nu, const QContext& c) {
  return [nu, &c](Complex w) { return I1(nu, w, c).value; };
}

UnaryFn i2_of(double nu, const QContext& c) {
  return [nu, &c](Complex w) { return I2_series(nu, w, c).value; };
}

Evaluation diffeq(int kind, const UnaryFn& f, const Point& p, const QContext& c) {
  const Complex z = p.x;
  const double scale =
      std::max({std::abs(f(z / p.q)), std::abs(f(z)), std::abs(f(p.q * z))});
  return {diffeq_sides(kind, f, p.nu, z, c), scale};
}

// (q^{nu+1};q)_inf / (q;q)_inf
Complex j_prefactor(double nu, const QContext& c) {
  return qpochhammer_infinite(c.pow(nu + 1.0), c).value / qpochhammer_infinite(c.q(), c).value;
}

double a_of(double nu, const QContext& c) { return a_coefficient(nu, c); }

Complex phi_u(double nu, Complex u, const QContext& c) { return phi_nu_u(nu, u, c).value; }

Evaluation sec6_relation(int which, const Point& p, const QContext& c) {
  const double v = p.nu;
  const Complex u = p.x;
  const double qh = std::pow(p.q, -0.5);
  const double qm = c.pow(-v);
  const double qp = c.pow(v);
  const double am = a_of(v - 1.0, c);
  const double a0 = a_of(v, c);
  const double ap = a_of(v + 1.0, c);
  const Complex psi = phi_nu_shifted_u(v, u, c);
  if (which == 1) {
    return sides(am * phi_u(v - 1.0, u, c) - ap * phi_u(v + 1.0, u, c),
                 a0 * qh * (qm - qp) * psi);
  }
  if (which == 2) {
    return sides(am * phi_u(v - 1.0, u, c) + ap * phi_u(v + 1.0, u, c),
                 2.0 * a0 * (u / p.q) * phi_u(v, u, c) - a0 * qh * (qm + qp) * psi);
  }
  const Complex lhs = -phi_u(v, u, c) * phi_nu_shifted_u(v, -u, c) -
                      phi_u(v, -u, c) * psi;
  return sides(lhs, 2.0);
}

Evaluation k_equivalence(int j, const Point& p, const QContext& c) {
  const Complex closed = j == 1 ? K1_closed(p.nu, p.x, c) : K2_closed(p.nu, p.x, c);
  return sides(closed, K_noninteger(j, p.nu, p.x, c));
}

Evaluation k_integer_limit(int j, const Point& p, const QContext& c, IntegerOrderForm form) {
  const int n = static_cast<int>(std::lround(p.nu));
  constexpr double eps = 1e-4;
  const Complex pair =
      0.5 * (K_noninteger(j, n + eps, p.x, c) + K_noninteger(j, n - eps, p.x, c));
  return sides(K_integer(j, n, p.x, c, form), pair);
}

Evaluation a_tilde_check(const QContext& c, bool printed) {
  constexpr double eps = 1e-4;
  const double oracle = (a_of(eps, c) - a_of(-eps, c)) / (eps * a_of(0.0, c));
  return sides(printed ? a_tilde_as_printed(c) : a_tilde(c), oracle);
}

Evaluation classical_i(int j, const Point& p, const QContext& c) {
  const Complex v = j == 1 ? I1(p.nu, p.x, c).value : I2(p.nu, p.x, c).value;
  return sides(v, verify::classical_bessel_I(p.nu, p.x.real()));
}

Evaluation classical_k(int j, const Point& p, const QContext& c) {
  return sides(K(j, p.nu, p.x, c).value, verify::classical_bessel_K(p.nu, p.x.real()));
}

std::vector<Point> classical_grid() {
  return grid({0.99, 0.999}, {0.0, 0.5, 1.0}, fixed(reals({0.5, 1.0, 2.0})));
}

std::vector<Point> k_recurrence_grid() {
  return grid(kBesselQ, {0.3, 0.7, 1.0, 1.5}, ring);
}

// Annulus and outer points near the imaginary axis, where the exponentially
// small corrections to the Laurent forms are below the tolerance.
std::vector<Point> laurent_grid() {
  return grid({0.7, 0.8, 0.9}, {0.3, 0.5, 1.7}, [](double q) {
    const double mid = (q + 1.0) / 2.0 * outer(q);
    std::vector<Complex> out;
    for (double r : {mid, 1.5 * outer(q)}) {
      for (double a : {3 * kPi / 8, kPi / 2, 5 * kPi / 8}) out.push_back(std::polar(r, a));
    }
    return out;
  });
}

Identity make(std::string id, std::string description, Variable variable, bool uses_nu,
              double rel, double abs, std::function<std::vector<Point>()> g,
              std::function<Evaluation(const Point&, const QContext&)> e,
              bool known_defect = false, std::size_t min_terms = 0) {
  return {{std::move(id), std::move(description), variable, uses_nu, rel, abs, known_defect},
          min_terms,
          std::move(g),
          std::move(e)};
}

std::vector<Identity> build() {
  std::vector<Identity> v;
  const auto Z = Variable::Z;
  const auto U = Variable::U;
  const auto A = Variable::Alpha;
  const auto N = Variable::Index;
  const auto None = Variable::None;

  // q-exponentials, q-Gamma, q-psi
  v.push_back(make("eq1b", "e_q(z) E_q(-z) = 1", Z, false, 1e-12, 1e-12, qcore_grid,
                   [](const Point& p, const QContext& c) {
                     return sides(eq_exp(p.x, c) * Eq_exp(-p.x, c), 1.0);
                   }));
  v.push_back(make("prop2.1", "partial-fraction expansion of e_q equals the product form", Z,
                   false, 1e-10, 0.0, qcore_grid, [](const Point& p, const QContext& c) {
                     return sides(eq_exp_partial_fractions(p.x, c).value, eq_exp(p.x, c));
                   }));
  v.push_back(make("prop2.2", "q-derivative of e_q((1-q)z) reproduces itself", Z, false, 1e-12,
                   1e-12, qcore_grid, [](const Point& p, const QContext& c) {
                     const double s = c.one_minus_pow(1.0);
                     auto f = [&](Complex w) { return eq_exp(s * w, c); };
                     return sides(q_derivative(f, p.x, c), f(p.x));
                   }));
  v.push_back(make("eq5", "e_q((1-q^2)qz/2) = (1-(1-q^2)z/2) e_q((1-q^2)z/2)", Z, false, 1e-12,
                   1e-12, qcore_grid, [](const Point& p, const QContext& c) {
                     const Complex x = c.one_minus_pow(2.0) * p.x / 2.0;
                     return sides(eq_exp(p.q * x, c), (1.0 - x) * eq_exp(x, c));
                   }));
  v.push_back(make("eq6", "e_q((1-q^2)z/(2q)) = e_q((1-q^2)z/2) / (1-(1-q^2)z/(2q))", Z, false,
                   1e-12, 1e-12, qcore_grid, [](const Point& p, const QContext& c) {
                     const Complex x = c.one_minus_pow(2.0) * p.x / 2.0;
                     return sides(eq_exp(x / p.q, c), eq_exp(x, c) / (1.0 - x / p.q));
                   }));
  v.push_back(make("eq7", "e_{q^2}(q^2 w) = (1-w) e_{q^2}(w), w = (1-q^2)^2 z^2/4", Z, false,
                   1e-12, 1e-12, qcore_grid, [](const Point& p, const QContext& c) {
                     const double s = c.one_minus_pow(2.0);
                     const Complex w = s * s * p.x * p.x / 4.0;
                     const QContext b = c.squared();
                     return sides(eq_exp(p.q * p.q * w, b), (1.0 - w) * eq_exp(w, b));
                   }));
  v.push_back(make("rem2.1", "e_q(x) e_q(-x) = e_{q^2}(x^2), x = (1-q^2)z/2", Z, false, 1e-12,
                   1e-12, qcore_grid, [](const Point& p, const QContext& c) {
                     const Complex x = c.one_minus_pow(2.0) * p.x / 2.0;
                     return sides(eq_exp(x, c) * eq_exp(-x, c), eq_exp(x * x, c.squared()));
                   }));
  v.push_back(make("eq9.functional", "Gamma_q(a+1) = (1-q^a)/(1-q) Gamma_q(a)", A, false,
                   1e-12, 0.0,
                   [] {
                     std::vector<Complex> as;
                     for (int i = 0; i < 20; ++i) as.emplace_back(0.1 + 0.25 * i, 0.0);
                     return grid(kBesselQ, {0.0}, fixed(as));
                   },
                   [](const Point& p, const QContext& c) {
                     const double a = p.x.real();
                     return sides(q_gamma(a + 1.0, c),
                                  c.one_minus_pow(a) / c.one_minus_pow(1.0) * q_gamma(a, c));
                   }));
  v.push_back(make("eq9.integer", "Gamma_q(n+1) = (q;q)_n / (1-q)^n", N, false, 1e-12, 0.0,
                   [] { return grid(kBesselQ, {0.0}, fixed(indices(0, 6))); },
                   [](const Point& p, const QContext& c) {
                     const int n = index_of(p);
                     const Complex rhs = qpochhammer_finite(p.q, c, n) /
                                         std::pow(c.one_minus_pow(1.0), n);
                     return sides(q_gamma(n + 1.0, c), rhs);
                   }));
  v.push_back(make("prop2.3", "partial-fraction series of Gamma_{q^2} equals the product form",
                   A, false, 1e-10, 0.0,
                   [] {
                     return grid({0.3, 0.5, 0.6}, {0.0},
                                 fixed(reals({0.25, 0.5, 1.0, 1.5, 2.5, 3.5})));
                   },
                   [](const Point& p, const QContext& c) {
                     const double a = p.x.real();
                     return sides(q_gamma_partial_fractions(a, c), q_gamma(a, c.squared()));
                   }));
  v.push_back(make("eq12", "psi_{q^2} equals the log-derivative of Gamma_{q^2}", A, false,
                   1e-7, 0.0,
                   [] {
                     return grid({0.3, 0.5, 0.7}, {0.0}, fixed(reals({0.5, 1.0, 2.0, 3.5})));
                   },
                   [](const Point& p, const QContext& c) {
                     constexpr double h = 1e-6;
                     const double a = p.x.real();
                     const QContext b = c.squared();
                     const double fd =
                         (std::log(q_gamma(a + h, b)) - std::log(q_gamma(a - h, b))) / (2.0 * h);
                     return sides(q_psi(a, c), fd);
                   }));
  v.push_back(make("eq12.telescoping", "psi(a) - psi(a+1) = ln(q^2) q^{2a} / (1-q^{2a})", A,
                   false, 1e-12, 1e-14,
                   [] {
                     return grid(kBesselQ, {0.0}, fixed(reals({0.3, 0.5, 1.0, 2.0, 4.5})));
                   },
                   [](const Point& p, const QContext& c) {
                     const double a = p.x.real();
                     const QContext b = c.squared();
                     return sides(q_psi(a, c) - q_psi(a + 1.0, c),
                                  b.log_q() * b.pow(a) / b.one_minus_pow(a));
                   }));
  v.push_back(make("eq13", "psi/Gamma at -n as the limit of the ratio near the pole", N, false,
                   1e-3, 0.0, [] { return grid({0.5, 0.7, 0.9}, {0.0}, fixed(indices(0, 2))); },
                   [](const Point& p, const QContext& c) {
                     const int n = index_of(p);
                     const double a = -n + 1e-4;
                     return sides(q_psi(a, c) / q_gamma(a, c.squared()),
                                  psi_over_gamma_at_negative_integer(n, c));
                   }));

  // Phi_nu and section 6
  v.push_back(make("eq4.4", "coefficient series of Phi_nu equals the 2Phi1 form", Z, true,
                   1e-10, 0.0,
                   [] {
                     return grid({0.3, 0.5, 0.8}, {0.0, 0.3, 1.7}, [](double q) {
                       std::vector<Complex> out;
                       for (Complex u : {Complex(0.2, 0), Complex(0.5, 0), Complex(0, 0.5),
                                         Complex(-0.4, 0.3)}) {
                         out.push_back(2.0 * q / ((1.0 - q * q) * u));
                       }
                       return out;
                     });
                   },
                   [](const Point& p, const QContext& c) {
                     return sides(phi_nu_coefficient_form(p.nu, p.x, c).value,
                                  phi_nu(p.nu, p.x, c).value);
                   }));
  v.push_back(make("eq4.4.coefficients", "coefficient recurrence matches the closed product", N,
                   true, 1e-12, 0.0,
                   [] { return grid({0.3, 0.5, 0.8}, {0.3, 0.7, 1.7}, fixed(indices(1, 20))); },
                   [](const Point& p, const QContext& c) {
                     const int k = index_of(p);
                     return sides(phi_nu_coefficient(p.nu, k, c),
                                  phi_nu_coefficient_closed(p.nu, k, c));
                   }));
  v.push_back(make("phi.symmetry", "Phi_nu = Phi_-nu exactly", Z, true, 0.0, 0.0,
                   [] {
                     return grid({0.3, 0.5, 0.8}, {0.3, 0.5, 1.7}, [](double q) {
                       return std::vector<Complex>{3.0 * q / (1.0 - q * q),
                                                   Complex(0.0, 4.0 * q / (1.0 - q * q))};
                     });
                   },
                   [](const Point& p, const QContext& c) {
                     return sides(phi_nu(p.nu, p.x, c).value, phi_nu(-p.nu, p.x, c).value);
                   }));
  for (int which = 1; which <= 3; ++which) {
    const char* id = which == 1 ? "sec6.rel1" : which == 2 ? "sec6.rel2" : "sec6.wronskian";
    const char* desc = which == 1   ? "a-weighted difference of Phi_{nu-1} and Phi_{nu+1}"
                       : which == 2 ? "a-weighted sum of Phi_{nu-1} and Phi_{nu+1}"
                                    : "Wronskian-type product relation equals 2";
    v.push_back(make(id, desc, U, true, 1e-10, 1e-10,
                     [] { return grid({0.3, 0.5, 0.8}, {0.0, 0.3, 1.0, 1.5}, fixed(u_grid())); },
                     [which](const Point& p, const QContext& c) {
                       return sec6_relation(which, p, c);
                     }));
  }

  // Jackson functions and the definitions
  auto j_grid = [] {
    return grid(kBesselQ, kBesselNu,
                fixed(polar(1.2, {-3 * kPi / 8, -kPi / 8, kPi / 8, 3 * kPi / 8})));
  };
  v.push_back(make("eq3.1", "J^(1) as 2Phi1(0,0; q^{nu+1}; q, -z^2/4)", Z, true, 1e-12, 1e-14,
                   j_grid, [](const Point& p, const QContext& c) {
                     HyperParams h{{0.0, 0.0}, {c.pow(p.nu + 1.0)}};
                     const Complex s = basic_hypergeometric(h, -p.x * p.x / 4.0, c).value;
                     return sides(besselJ(1, p.nu, p.x, c),
                                  j_prefactor(p.nu, c) * principal_pow(p.x / 2.0, p.nu) * s);
                   }));
  v.push_back(make("eq3.2", "J^(2) as 0Phi1(-; q^{nu+1}; q, -q^{nu+1} z^2/4)", Z, true, 1e-12,
                   1e-14, j_grid, [](const Point& p, const QContext& c) {
                     HyperParams h{{}, {c.pow(p.nu + 1.0)}};
                     const Complex arg = -c.pow(p.nu + 1.0) * p.x * p.x / 4.0;
                     const Complex s = basic_hypergeometric(h, arg, c).value;
                     return sides(besselJ(2, p.nu, p.x, c),
                                  j_prefactor(p.nu, c) * principal_pow(p.x / 2.0, p.nu) * s);
                   }));
  for (int kind = 1; kind <= 2; ++kind) {
    v.push_back(make(kind == 1 ? "def3.1.kind1" : "def3.1.kind2",
                     "I_nu(z) = exp(-i nu pi/2) J_nu(iz)", Z, true, 1e-12, 1e-14, j_grid,
                     [kind](const Point& p, const QContext& c) {
                       const Complex rot = std::exp(-kI * (p.nu * kPi / 2.0));
                       return sides(besselI_unscaled(kind, p.nu, p.x, c),
                                    rot * besselJ(kind, p.nu, kI * p.x, c));
                     }));
    v.push_back(make(kind == 1 ? "eq3.5" : "eq3.6",
                     "scaled series equals the definition at (1-q^2)z in base q^2", Z, true,
                     1e-12, 1e-14, bessel_grid, [kind](const Point& p, const QContext& c) {
                       const Complex w = c.one_minus_pow(2.0) * p.x;
                       const Complex lhs = kind == 1 ? I1_series(p.nu, p.x, c).value
                                                     : I2_series(p.nu, p.x, c).value;
                       return sides(lhs, besselI_unscaled(kind, p.nu, w, c.squared()));
                     }));
  }

  // Modified q-Bessel functions
  v.push_back(make("eq3.16", "I^(1) = e_{q^2}((1-q^2)^2 z^2/4) I^(2) inside the disc", Z, true,
                   1e-10, 0.0, bessel_grid, [](const Point& p, const QContext& c) {
                     return sides(I1_series(p.nu, p.x, c).value, I1_from_I2(p.nu, p.x, c));
                   }));
  v.push_back(make("cor3.3", "I^(2) = E_{q^2}(-(1-q^2)^2 z^2/4) I^(1)", Z, true, 1e-10, 0.0,
                   bessel_grid, [](const Point& p, const QContext& c) {
                     return sides(I2_series(p.nu, p.x, c).value, I2_from_I1(p.nu, p.x, c));
                   }));
  v.push_back(make("eq3.11.I1", "I^(1)_nu solves the first difference equation", Z, true, 1e-10,
                   0.0, bessel_grid, [](const Point& p, const QContext& c) {
                     return diffeq(1, i1_of(p.nu, c), p, c);
                   }));
  v.push_back(make("eq3.11.I1neg", "I^(1)_-nu solves the first difference equation", Z, true,
                   1e-10, 0.0, bessel_grid, [](const Point& p, const QContext& c) {
                     return diffeq(1, i1_of(-p.nu, c), p, c);
                   }));
  v.push_back(make("eq3.15.I2", "I^(2)_nu solves the second difference equation", Z, true,
                   1e-10, 0.0, bessel_grid, [](const Point& p, const QContext& c) {
                     return diffeq(2, i2_of(p.nu, c), p, c);
                   }));
  v.push_back(make("eq3.15.I2neg", "I^(2)_-nu solves the second difference equation", Z, true,
                   1e-10, 0.0, bessel_grid, [](const Point& p, const QContext& c) {
                     return diffeq(2, i2_of(-p.nu, c), p, c);
                   }));
  v.push_back(make("eq3.13", "q-Wronskian of I^(1)_nu and I^(1)_-nu in closed form", Z, true,
                   1e-9, 1e-12,
                   [] { return grid(kBesselQ, {0.3, 0.5, 1.7, 2.0}, ring); },
                   [](const Point& p, const QContext& c) {
                     return sides(q_wronskian(i1_of(p.nu, c), i1_of(-p.nu, c), p.x, c),
                                  wronskian_closed(p.nu, p.x, c));
                   }));
  v.push_back(make("eq3.14.I1", "I^(1)_-n = I^(1)_n", Z, true, 1e-12, 1e-14,
                   [] { return grid(kBesselQ, {1.0, 2.0, 3.0}, ring); },
                   [](const Point& p, const QContext& c) {
                     return sides(I1(-p.nu, p.x, c).value, I1(p.nu, p.x, c).value);
                   }));
  v.push_back(make("eq3.14.I2", "I^(2)_-n = I^(2)_n", Z, true, 1e-12, 1e-14,
                   [] { return grid(kBesselQ, {1.0, 2.0, 3.0}, ring); },
                   [](const Point& p, const QContext& c) {
                     return sides(I2(-p.nu, p.x, c).value, I2(p.nu, p.x, c).value);
                   }));
  v.push_back(make("sec4.I2.reflection", "I^(2)_nu(-z) = exp(i nu pi) I^(2)_nu(z), Im z < 0", Z,
                   true, 1e-12, 1e-14,
                   [] {
                     return grid(kBesselQ, kBesselNu, [](double q) {
                       return polar(1.0 / (1.0 - q * q),
                                    {-kPi / 8, -3 * kPi / 8, -5 * kPi / 8, -7 * kPi / 8});
                     });
                   },
                   [](const Point& p, const QContext& c) {
                     return sides(I2_series(p.nu, -p.x, c).value,
                                  std::exp(kI * (p.nu * kPi)) * I2_series(p.nu, p.x, c).value);
                   }));
  const IRecurrence irec[] = {IRecurrence::P31a, IRecurrence::P31b, IRecurrence::P32a,
                              IRecurrence::P32b, IRecurrence::P33a, IRecurrence::P33b,
                              IRecurrence::P34a, IRecurrence::P34b};
  const char* irec_ids[] = {"prop3.1a", "prop3.1b", "prop3.2a", "prop3.2b",
                            "prop3.3a", "prop3.3b", "prop3.4a", "prop3.4b"};
  for (int i = 0; i < 8; ++i) {
    const IRecurrence id = irec[i];
    v.push_back(make(irec_ids[i], "difference relation or recurrence of I", Z, true, 1e-9,
                     1e-12, bessel_grid, [id](const Point& p, const QContext& c) {
                       return Evaluation{recurrence_sides(id, p.nu, p.x, c), 0.0};
                     }));
  }

  // Coefficients a_nu and the Laurent-type forms
  v.push_back(make("eq4.14", "a_{nu+1} = q^{-nu-1/2} a_nu", None, true, 1e-8, 0.0,
                   [] {
                     return grid({0.3, 0.5, 0.8}, {-1.7, -0.3, 0.25, 0.5, 1.3, 2.6},
                                 fixed({0.0}));
                   },
                   [](const Point& p, const QContext& c) {
                     return sides(a_of(p.nu + 1.0, c), c.pow(-p.nu - 0.5) * a_of(p.nu, c));
                   }));
  v.push_back(make("eq4.15",
                   "a_nu a_-nu = q^{-nu+1/2} / (2 Gamma(nu) Gamma(1-nu) sin nu pi)", None, true,
                   1e-8, 0.0,
                   [] {
                     return grid({0.3, 0.5, 0.8}, {-0.4, 0.25, 0.5, 0.75, 1.3, 2.6},
                                 fixed({0.0}));
                   },
                   [](const Point& p, const QContext& c) {
                     const QContext b = c.squared();
                     const double den = 2.0 * q_gamma(p.nu, b) * q_gamma(1.0 - p.nu, b) *
                                        std::sin(p.nu * kPi);
                     return sides(a_of(p.nu, c) * a_of(-p.nu, c), c.pow(-p.nu + 0.5) / den);
                   }));
  v.push_back(make("eq4.18", "a_{n+eps} tends to the integer-order value", None, true, 1e-5, 0.0,
                   [] { return grid({0.3, 0.5, 0.8}, {0.0, 1.0, 2.0, 3.0}, fixed({0.0})); },
                   [](const Point& p, const QContext& c) {
                     return sides(a_of(p.nu + 1e-6, c), a_of(p.nu, c));
                   }));
  v.push_back(make("sec4.a_even", "a_nu = a_-nu", None, true, 0.0, 0.0,
                   [] {
                     return grid({0.3, 0.5, 0.8}, {0.25, 0.5, 1.0, 1.3, 2.0}, fixed({0.0}));
                   },
                   [](const Point& p, const QContext& c) {
                     return sides(a_of(p.nu, c), a_of(-p.nu, c));
                   }));
  v.push_back(make("prop4.2.connection",
                   "coefficient of the Laurent basis solved from I^(1) at z and qz equals a_nu",
                   Z, true, 1e-8, 0.0,
                   [] {
                     return grid({0.5, 0.7, 0.8}, {0.3, 0.5, 1.7}, [](double q) {
                       const double r = outer(q);
                       return std::vector<Complex>{1.3 * r, 1.7 * r};
                     });
                   },
                   [](const Point& p, const QContext& c) {
                     return sides(connection_coefficients(p.nu, p.x, c).A, a_of(p.nu, c));
                   }));
  v.push_back(make("eq4.8", "Laurent-type form of I^(1), Im z > 0", Z, true, 1e-8, 0.0,
                   laurent_grid, [](const Point& p, const QContext& c) {
                     return sides(I1_laurent(p.nu, p.x, c), I1(p.nu, p.x, c).value);
                   }));
  v.push_back(make("eq4.19", "Laurent-type form of I^(2), Im z > 0", Z, true, 1e-8, 0.0,
                   laurent_grid, [](const Point& p, const QContext& c) {
                     return sides(I2_laurent(p.nu, p.x, c), I2_series(p.nu, p.x, c).value);
                   }));
  v.push_back(make("eq4.11", "residue matching of the Laurent form at z_r = 2q^-r/(1-q^2)", N,
                   true, 1e-8, 0.0,
                   [] { return grid({0.5}, {0.3, 0.7}, fixed(indices(0, 2))); },
                   [](const Point& p, const QContext& c) {
                     const int r = index_of(p);
                     const double s = c.one_minus_pow(2.0);
                     const double qr = c.pow(-static_cast<double>(r));
                     const Complex zr = 2.0 * qr / s;
                     const Complex lhs = eq_exp(-qr, c) * I2_series(p.nu, zr, c).value;
                     const Complex rhs = a_of(p.nu, c) * c.pow(0.5 * r) * std::sqrt(s / 2.0) *
                                         phi_nu(p.nu, zr, c).value;
                     return sides(lhs, rhs);
                   },
                   true));

  // q-Bessel-Macdonald functions
  for (int j = 1; j <= 2; ++j) {
    v.push_back(make(j == 1 ? "sec5.even.K1" : "sec5.even.K2", "K_-nu = K_nu exactly", Z, true,
                     0.0, 0.0,
                     [] {
                       return grid({0.3, 0.5, 0.8}, {0.3, 0.5, 1.0, 1.7},
                                   [](double q) { return ring(q); });
                     },
                     [j](const Point& p, const QContext& c) {
                       return sides(K(j, p.nu, p.x, c).value, K(j, -p.nu, p.x, c).value);
                     }));
  }
  v.push_back(make("eq5.8", "closed form of K^(1) equals the weighted difference of I^(1)", Z,
                   true, 1e-8, 0.0,
                   [] {
                     return grid({0.5, 0.7}, {0.25, 0.5, 1.3}, [](double q) {
                       const double r = outer(q);
                       return std::vector<Complex>{0.75 * r, 0.85 * r, 0.95 * r};
                     });
                   },
                   [](const Point& p, const QContext& c) { return k_equivalence(1, p, c); }));
  v.push_back(make("eq5.8a", "closed form of K^(2) equals the weighted difference of I^(2)", Z,
                   true, 1e-8, 0.0,
                   [] {
                     return grid({0.5, 0.7}, {0.25, 0.5, 1.3}, [](double q) {
                       const double r = outer(q);
                       return std::vector<Complex>{0.75 * r, 0.95 * r, 1.5 * r,
                                                   std::polar(1.2 * r, kPi / 16.0),
                                                   std::polar(1.2 * r, -kPi / 16.0)};
                     });
                   },
                   [](const Point& p, const QContext& c) { return k_equivalence(2, p, c); }));
  const KRecurrence krec[] = {KRecurrence::P52a,  KRecurrence::P52b,  KRecurrence::P53a,
                              KRecurrence::P53b,  KRecurrence::P52Aa, KRecurrence::P52Ab,
                              KRecurrence::P53Aa, KRecurrence::P53Ab};
  const char* krec_ids[] = {"prop5.2a",  "prop5.2b",  "prop5.3a",  "prop5.3b",
                            "prop5.2Aa", "prop5.2Ab", "prop5.3Aa", "prop5.3Ab"};
  for (int i = 0; i < 8; ++i) {
    const KRecurrence id = krec[i];
    v.push_back(make(krec_ids[i], "difference relation or recurrence of K", Z, true, 1e-9, 1e-12,
                     k_recurrence_grid, [id](const Point& p, const QContext& c) {
                       return Evaluation{K_recurrence_sides(id, p.nu, p.x, c), 0.0};
                     }));
    if (i >= 4) {
      v.push_back(make(std::string(krec_ids[i]) + ".printed",
                       "uncorrected form of the K^(2) relation", Z, true, 1e-9, 1e-12,
                       k_recurrence_grid,
                       [id](const Point& p, const QContext& c) {
                         return Evaluation{
                             K_recurrence_sides(id, p.nu, p.x, c, RecurrenceForm::AsPrinted), 0.0};
                       },
                       true));
    }
  }
  for (int j = 1; j <= 2; ++j) {
    auto g = [] {
      return grid({0.3, 0.5, 0.7}, {0.0, 1.0, 2.0},
                  fixed({Complex(0.5, 0.0), Complex(1.0, 0.0), Complex(0.8, 0.6)}));
    };
    const std::string base = j == 1 ? "sec5.Kn.j1" : "sec5.Kn.j2";
    v.push_back(make(base, "integer-order K equals the limit of the non-integer K", Z, true, 1e-6,
                     0.0, g, [j](const Point& p, const QContext& c) {
                       return k_integer_limit(j, p, c, IntegerOrderForm::Derived);
                     }));
    v.push_back(make(base + ".printed", "integer-order K with the alternative coefficients against the same limit", Z,
                     true, 1e-6, 0.0, g,
                     [j](const Point& p, const QContext& c) {
                       return k_integer_limit(j, p, c, IntegerOrderForm::AsPrinted);
                     },
                     true));
  }
  auto tilde_grid = [] { return grid({0.3, 0.5, 0.7}, {0.0}, fixed({0.0})); };
  v.push_back(make("eq5.1", "a-tilde equals the finite-difference derivative of a_nu", None,
                   false, 0.0, 1e-8, tilde_grid,
                   [](const Point&, const QContext& c) { return a_tilde_check(c, false); }));
  v.push_back(make("eq5.1.printed", "a-tilde with the inner sum from l = 1 against the same derivative", None, false,
                   0.0, 1e-8, tilde_grid,
                   [](const Point&, const QContext& c) { return a_tilde_check(c, true); }, true));

  // Classical limits
  constexpr std::size_t kLimitTerms = 1000000;
  v.push_back(make("rem3.1.I1", "I^(1) near q = 1 against the classical I_nu", Z, true, 5e-2, 0.0,
                   classical_grid,
                   [](const Point& p, const QContext& c) { return classical_i(1, p, c); }, false,
                   kLimitTerms));
  v.push_back(make("rem3.1.I2", "I^(2) near q = 1 against the classical I_nu", Z, true, 5e-2, 0.0,
                   classical_grid,
                   [](const Point& p, const QContext& c) { return classical_i(2, p, c); }, false,
                   kLimitTerms));
  v.push_back(make("rem5.1.K1", "K^(1) near q = 1 against the classical K_nu", Z, true, 5e-2, 0.0,
                   classical_grid,
                   [](const Point& p, const QContext& c) { return classical_k(1, p, c); }, false,
                   kLimitTerms));
  v.push_back(make("rem5.1.K2", "K^(2) near q = 1 against the classical K_nu", Z, true, 5e-2, 0.0,
                   classical_grid,
                   [](const Point& p, const QContext& c) { return classical_k(2, p, c); }, false,
                   kLimitTerms));

  std::sort(v.begin(), v.end(),
            [](const Identity& a, const Identity& b) { return a.info.id < b.info.id; });
  return v;
}

}  // namespace

const std::vector<Identity>& identities() {
  static const std::vector<Identity> all = build();
  return all;
}

const Identity* find(const std::string& id) {
  const auto& all = identities();
  auto it = std::lower_bound(all.begin(), all.end(), id,
                             [](const Identity& a, const std::string& k) { return a.info.id < k; });
  if (it == all.end() || it->info.id != id) return nullptr;
  return &*it;
}

}  // namespace qb::verify::detail
