#pragma once

#include <functional>

#include "qbessel/context.hpp"

namespace qb {

// Functions of z below are the scaled q-Bessel functions
// I_nu^{(j)}((1-q^2) z; q^2); the argument passed is z itself.

using UnaryFn = std::function<Complex(Complex)>;

// Jackson q-Bessel functions J^{(1)}, J^{(2)} in base q (unscaled).
Complex besselJ(int kind, const OrderParam& nu, Complex z, const QContext& ctx);
// Modified q-Bessel functions of the definition, base q, unscaled.
Complex besselI_unscaled(int kind, const OrderParam& nu, Complex z, const QContext& ctx);

// Power series of I^{(1)}, valid for |z| < 2/(1-q^2).
SeriesEval I1_series(const OrderParam& nu, Complex z, const QContext& ctx);
// Power series of I^{(2)}, valid for all z != 0.
SeriesEval I2_series(const OrderParam& nu, Complex z, const QContext& ctx);

// I^{(1)} = e_{q^2}((1-q^2)^2 z^2 / 4) I^{(2)}; meromorphic continuation of
// I^{(1)} with PoleError(r) at z = +-2 q^-r / (1-q^2).
Complex I1_from_I2(const OrderParam& nu, Complex z, const QContext& ctx);
SeriesEval I1_from_I2_eval(const OrderParam& nu, Complex z, const QContext& ctx);
// I^{(2)} = E_{q^2}(-(1-q^2)^2 z^2 / 4) I^{(1)} with I^{(1)} from its series.
Complex I2_from_I1(const OrderParam& nu, Complex z, const QContext& ctx);

// Dispatchers. Auto uses the power series for |z| <= 2 sqrt(q)/(1-q^2) and,
// for I^{(1)}, the I^{(2)} continuation beyond; I^{(2)} always uses its series.
// Laurent selects the Laurent-type forms, which carry exponentially small
// Stokes corrections.
SeriesEval I1(const OrderParam& nu, Complex z, const QContext& ctx,
              Representation rep = Representation::Auto);
SeriesEval I2(const OrderParam& nu, Complex z, const QContext& ctx,
              Representation rep = Representation::Auto);

// Coefficient a_nu of the Laurent-type representation:
// sqrt(q^{-nu+1/2} / (2 Gamma_{q^2}(nu) Gamma_{q^2}(1-nu) sin nu pi)),
// and sqrt(q^{-n^2+1/2} ln(q^-2) / (2 pi (1-q^2))) at integers. Even in nu.
double a_coefficient(const OrderParam& nu, const QContext& ctx);

// a_nu solved from the residue matching at the pole z_r = 2 q^-r / (1-q^2):
// e_q(-q^-r) I2(z_r) / (q^{r/2} sqrt((1-q^2)/2) Phi_nu(z_r)). r = 0 is the
// defining residue condition. Differs from a_coefficient (see README).
double a_coefficient_residue(const OrderParam& nu, const QContext& ctx, int r = 0);

// Coefficients A, B with I^{(1)} = A g + B h at z and qz, where
// g = z^{-1/2} e_q((1-q^2)z/2) Phi_nu(z), h = z^{-1/2} e_q(-(1-q^2)z/2) Phi_nu(-z).
// Requires |z| > 2/(1-q^2).
struct ConnectionCoefficients {
  Complex A;
  Complex B;
};
ConnectionCoefficients connection_coefficients(const OrderParam& nu, Complex z,
                                               const QContext& ctx);

// Laurent-type representations. Branch factor i e^{i nu pi} for Im z >= 0 and
// its conjugate for Im z < 0. Require |z| > 2q/(1-q^2).
Complex I1_laurent(const OrderParam& nu, Complex z, const QContext& ctx);
Complex I2_laurent(const OrderParam& nu, Complex z, const QContext& ctx);

// f(z) g(qz) - f(qz) g(z)
Complex q_wronskian(const UnaryFn& f, const UnaryFn& g, Complex z, const QContext& ctx);
// Closed form of W(I_nu^{(1)}, I_-nu^{(1)})(z); zero at integer nu.
Complex wronskian_closed(const OrderParam& nu, Complex z, const QContext& ctx);

// Second-order q-difference equations. Kind 1 is satisfied by I^{(1)}_{+-nu},
// kind 2 by I^{(2)}_{+-nu}. Sides split as
// kind 1: [1 - q^-2 (1-q^2)^2 z^2/4] f(z/q) + f(qz)  vs  (q^-nu + q^nu) f(z)
// kind 2: f(z/q) + [1 - (1-q^2)^2 z^2/4] f(qz)      vs  (q^-nu + q^nu) f(z)
Sides diffeq_sides(int kind, const UnaryFn& f, const OrderParam& nu, Complex z,
                   const QContext& ctx);
Complex diffeq_residual(int kind, const UnaryFn& f, const OrderParam& nu, Complex z,
                        const QContext& ctx);

// Difference relations and recurrences: P31, P32 for I^{(1)}, P33, P34 for I^{(2)}.
enum class IRecurrence { P31a, P31b, P32a, P32b, P33a, P33b, P34a, P34b };
Sides recurrence_sides(IRecurrence id, const OrderParam& nu, Complex z, const QContext& ctx);
Complex recurrence_residual(IRecurrence id, const OrderParam& nu, Complex z,
                            const QContext& ctx);

}  // namespace qb
