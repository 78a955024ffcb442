#pragma once

#include <functional>

#include "qbessel/context.hpp"

namespace qb {

// (a;q)_n
Complex qpochhammer_finite(Complex a, const QContext& ctx, int n);
// (a;q)_inf
SeriesEval qpochhammer_infinite(Complex a, const QContext& ctx);

// e_q(z) = 1/(z;q)_inf, meromorphic with poles at q^-k.
Complex eq_exp(Complex z, const QContext& ctx);
SeriesEval eq_exp_eval(Complex z, const QContext& ctx);

// E_q(z) = (-z;q)_inf, entire.
Complex Eq_exp(Complex z, const QContext& ctx);
SeriesEval Eq_exp_eval(Complex z, const QContext& ctx);

// Partial-fraction expansion of e_q with a fixed number of terms, or with the
// number of terms chosen by the tail rule.
Complex eq_exp_partial_fractions(Complex z, const QContext& ctx, int terms);
SeriesEval eq_exp_partial_fractions(Complex z, const QContext& ctx);

// Jackson derivative (f(z) - f(qz)) / ((1-q) z).
Complex q_derivative(const std::function<Complex(Complex)>& f, Complex z,
                     const QContext& ctx);

// Gamma_q in the base of ctx. PoleError(n) at alpha = -n.
double q_gamma(double alpha, const QContext& ctx);
// 1/Gamma_q, exactly zero at the poles of Gamma_q.
double q_rgamma(double alpha, const QContext& ctx);

// Gamma_q(nu) Gamma_q(1-nu) sin(nu pi), positive for every real nu and
// continuous through the integers.
double q_gamma_reflection(double nu, const QContext& ctx);

// Gamma_{q^2}(z) through its partial-fraction series; ctx carries q.
double q_gamma_partial_fractions(double z, const QContext& ctx);

// psi_{q^2}(z) = d/dz ln Gamma_{q^2}(z); ctx carries q.
double q_psi(double z, const QContext& ctx);

// lim_{z -> -n} psi_{q^2}(z) / Gamma_{q^2}(z); ctx carries q.
double psi_over_gamma_at_negative_integer(int n, const QContext& ctx);

}  // namespace qb
