#include <gtest/gtest.h>

#include <cmath>

#include "qbessel/qhyper.hpp"

namespace {

using qb::Complex;
using qb::HyperParams;
using qb::QContext;

Complex poch_inf(Complex a, double q) {
  Complex p(1.0);
  double qk = 1.0;
  for (int k = 0; k < 2000 && qk > 1e-22; ++k, qk *= q) p *= 1.0 - a * qk;
  return p;
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

TEST(BasicHypergeometric, QBinomialTheorem) {
  // 1Phi0(a; -; q, z) = (az;q)_inf / (z;q)_inf
  for (double q : {0.3, 0.7}) {
    const QContext c(q);
    for (Complex a : {Complex(0.4), Complex(-1.3, 0.2)}) {
      for (Complex z : {Complex(0.5), Complex(-0.2, 0.6)}) {
        const auto r = qb::basic_hypergeometric({{a}, {}}, z, c);
        EXPECT_LT(rel(r.value, poch_inf(a * z, q) / poch_inf(z, q)), 1e-13);
      }
    }
  }
}

TEST(BasicHypergeometric, QGaussSum) {
  // 2Phi1(a, b; c; q, c/(ab)) = (c/a, c/b; q)_inf / (c, c/(ab); q)_inf
  const double q = 0.5;
  const Complex a = 0.6, b = 0.7, cc = 0.3;
  const auto r = qb::basic_hypergeometric({{a, b}, {cc}}, cc / (a * b), QContext(q));
  const Complex ref = poch_inf(cc / a, q) * poch_inf(cc / b, q) /
                      (poch_inf(cc, q) * poch_inf(cc / (a * b), q));
  EXPECT_LT(rel(r.value, ref), 1e-12);
}

TEST(BasicHypergeometric, EulerProductForZeroZero) {
  // 0Phi0(-; -; q, -z) = (-z;q)_inf, the entire q-exponential.
  const double q = 0.6;
  for (Complex z : {Complex(2.0), Complex(-0.5, 3.0)}) {
    const auto r = qb::basic_hypergeometric({}, -z, QContext(q));
    EXPECT_LT(rel(r.value, poch_inf(-z, q)), 1e-13);
  }
}

TEST(BasicHypergeometric, TerminatesOnNegativePower) {
  // Upper parameter q^-2 leaves three terms.
  const double q = 0.5;
  const QContext c(q);
  const Complex b = 0.3, d = 0.2, z = 0.4;
  const Complex a = 4.0;  // q^-2
  const auto r = qb::basic_hypergeometric({{a, b}, {d}}, z, c);
  Complex sum = 1.0, t = 1.0;
  for (int k = 0; k < 2; ++k) {
    const double qk = std::pow(q, k);
    t *= (1.0 - a * qk) * (1.0 - b * qk) / ((1.0 - q * qk) * (1.0 - d * qk)) * z;
    sum += t;
  }
  EXPECT_EQ(r.terms_used, 3u);
  // The terms are of order 2 and cancel to about 0.04.
  EXPECT_LT(std::abs(r.value - sum), 1e-15);
}

TEST(BasicHypergeometric, RejectsInvalidParameters) {
  const QContext c(0.5);
  EXPECT_THROW(qb::basic_hypergeometric({{0.1, 0.2, 0.3}, {0.4}}, 0.1, c), qb::ParamError);
  EXPECT_THROW(qb::basic_hypergeometric({{0.1, 0.2}, {0.4}}, 1.0, c), qb::DomainError);
  EXPECT_THROW(qb::basic_hypergeometric({{0.1}, {4.0}}, 0.1, c), qb::ParamError);
}

TEST(PhiNu, EvenInOrderBitForBit) {
  const QContext c(0.6);
  for (double nu : {0.3, 1.0, 2.7}) {
    for (Complex z : {Complex(3.0, 1.0), Complex(-2.5, -0.5)}) {
      EXPECT_EQ(qb::phi_nu(nu, z, c).value, qb::phi_nu(-nu, z, c).value);
    }
  }
}

TEST(PhiNu, VariableUAgreesWithVariableZ) {
  const QContext c(0.7);
  const double s = 1.0 - 0.49;
  for (Complex z : {Complex(3.0, 0.5), Complex(0.0, 4.0), Complex(-4.0, 0.1)}) {
    const Complex u = 2.0 * 0.7 / (s * z);
    EXPECT_LT(rel(qb::phi_nu(0.4, z, c).value, qb::phi_nu_u(0.4, u, c).value), 1e-14);
  }
}

TEST(PhiNu, CoefficientFormAgrees) {
  for (double q : {0.3, 0.6, 0.8}) {
    const QContext c(q);
    const double inner = 2.0 * q / (1.0 - q * q);
    for (double nu : {0.0, 0.5, 1.3}) {
      for (Complex z : {Complex(1.3 * inner), Complex(0.0, 2.0 * inner),
                        std::polar(1.6 * inner, 2.5)}) {
        EXPECT_LT(rel(qb::phi_nu_coefficient_form(nu, z, c).value, qb::phi_nu(nu, z, c).value),
                  1e-10)
            << "q=" << q << " nu=" << nu << " z=" << z;
      }
    }
  }
}

TEST(PhiNu, CoefficientRecurrenceMatchesProduct) {
  const QContext c(0.55);
  for (double nu : {0.25, 1.5, 2.0}) {
    for (int k = 0; k < 12; ++k) {
      const double a = qb::phi_nu_coefficient(nu, k, c);
      const double b = qb::phi_nu_coefficient_closed(nu, k, c);
      EXPECT_NEAR(a, b, 1e-12 * std::max(1.0, std::abs(b))) << "nu=" << nu << " k=" << k;
    }
  }
}

TEST(PhiNu, ShiftedFormExtendsPastUnitDisc) {
  const QContext c(0.5);
  const double nu = 0.3;
  const Complex u(0.2, 0.1);
  const Complex direct = (u / 0.5 - 1.0) * qb::phi_nu_u(nu, u / 0.5, c).value;
  EXPECT_LT(rel(qb::phi_nu_shifted_u(nu, u, c), direct), 1e-13);
  EXPECT_NO_THROW(qb::phi_nu_shifted_u(nu, Complex(0.8, 0.0), c));
}

TEST(PhiNu, DomainErrors) {
  const QContext c(0.5);
  EXPECT_THROW(qb::phi_nu(0.3, 0.0, c), qb::DomainError);
  EXPECT_THROW(qb::phi_nu(0.3, 1.0, c), qb::DomainError);
  EXPECT_THROW(qb::phi_nu_u(0.3, 1.0, c), qb::DomainError);
}

}  // namespace
