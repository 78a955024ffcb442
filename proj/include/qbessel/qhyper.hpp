#pragma once

#include <vector>

#include "qbessel/context.hpp"

namespace qb {

// Parameters of r_Phi_s(a_1..a_r; b_1..b_s; q, z).
struct HyperParams {
  std::vector<Complex> upper;
  std::vector<Complex> lower;

  std::size_t r() const { return upper.size(); }
  std::size_t s() const { return lower.size(); }
};

// Basic hypergeometric series. Terminates exactly when an upper parameter is
// q^-m. Rejects r > s+1, |z| >= 1 when r = s+1, and lower parameters q^-m.
SeriesEval basic_hypergeometric(const HyperParams& p, Complex z, const QContext& ctx);

// Phi_nu(z) = 2Phi1(q^{nu+1/2}, q^{-nu+1/2}; -q; q, u) with u = 2q / ((1-q^2) z).
// Requires |z| > 2q/(1-q^2). Even in nu, bit for bit.
SeriesEval phi_nu(double nu, Complex z, const QContext& ctx);

// The same function addressed by u directly; requires |u| < 1.
SeriesEval phi_nu_u(double nu, Complex u, const QContext& ctx);

// Phi_nu summed as the z^-k coefficient series with the coefficient
// recurrence of the Laurent ansatz. Independent of phi_nu's summation.
SeriesEval phi_nu_coefficient_form(double nu, Complex z, const QContext& ctx);

// k-th coefficient of the coefficient form (coefficient of z^-k), built by
// the one-step recurrence, and the same coefficient from its closed product.
double phi_nu_coefficient(double nu, int k, const QContext& ctx);
double phi_nu_coefficient_closed(double nu, int k, const QContext& ctx);

// (u/q - 1) Phi_nu(u/q) in the variable u, obtained from one step of the
// q-difference equation; valid for |u| < 1 even where |u/q| >= 1.
Complex phi_nu_shifted_u(double nu, Complex u, const QContext& ctx);

}  // namespace qb
