#pragma once

#include "qbessel/context.hpp"

namespace qb {

// q-Bessel-Macdonald functions K_nu^{(j)}((1-q^2) z; q^2), j = 1, 2.

// Weighted difference of I_{-nu} and I_nu. IntegerOrderError at integer nu.
Complex K_noninteger(int j, const OrderParam& nu, Complex z, const QContext& ctx);

// Closed Laurent-type forms. K1 requires Re z > 2q/(1-q^2); K2 requires
// |z| > 2q/(1-q^2). Both use Phi_nu(-z).
Complex K1_closed(const OrderParam& nu, Complex z, const QContext& ctx);
Complex K2_closed(const OrderParam& nu, Complex z, const QContext& ctx);

// Derivative coefficient of a_nu at integer order. a_tilde sums the inner
// series from l = 0 (consistent with psi); the variant from l = 1.
double a_tilde(const QContext& ctx);
double a_tilde_as_printed(const QContext& ctx);

// Integer-order formula. Derived is the epsilon-limit of K_noninteger;
// AsPrinted uses (1-q^2)^{n+2k} in the third sum, which misses the limit.
enum class IntegerOrderForm { Derived, AsPrinted };
Complex K_integer(int j, int n, Complex z, const QContext& ctx,
                  IntegerOrderForm form = IntegerOrderForm::Derived);

// Dispatcher. PowerSeries: weighted difference or integer formula.
// Laurent: closed forms. Auto: series for |z| <= 2 sqrt(q)/(1-q^2), closed form
// beyond where its domain allows.
SeriesEval K(int j, const OrderParam& nu, Complex z, const QContext& ctx,
             Representation rep = Representation::Auto);

// Difference relations and recurrences of K^{(1)} and K^{(2)}. Corrected
// forms for K^{(2)} by default; AsPrinted keeps the uncorrected K^{(2)}
// forms, which do not hold.
enum class KRecurrence { P52a, P52b, P53a, P53b, P52Aa, P52Ab, P53Aa, P53Ab };
enum class RecurrenceForm { Corrected, AsPrinted };
Sides K_recurrence_sides(KRecurrence id, const OrderParam& nu, Complex z, const QContext& ctx,
                         RecurrenceForm form = RecurrenceForm::Corrected);
Complex K_recurrence_residual(KRecurrence id, const OrderParam& nu, Complex z,
                              const QContext& ctx,
                              RecurrenceForm form = RecurrenceForm::Corrected);

}  // namespace qb
