#pragma once

#include <cmath>
#include <string>

#include "qbessel/context.hpp"

namespace qb::detail {

// Accumulates a series and applies the tail rule: stop once three
// consecutive terms satisfy |t| <= rel_tol |partial| + abs_tol.
class SeriesSum {
 public:
  SeriesSum(const QContext& ctx, const char* what) : ctx_(ctx), what_(what) {}

  // Returns true when the sum has converged.
  bool add(Complex term) {
    sum_ += term;
    ++terms_;
    last_ = std::abs(term);
    if (last_ <= ctx_.rel_tol() * std::abs(sum_) + ctx_.abs_tol()) {
      ++small_run_;
    } else {
      small_run_ = 0;
    }
    if (small_run_ >= 3) return true;
    if (terms_ >= ctx_.max_terms()) {
      throw NonConvergence(std::string(what_) + ": no convergence within " +
                           std::to_string(ctx_.max_terms()) + " terms");
    }
    return false;
  }

  SeriesEval result() const {
    SeriesEval r;
    r.value = sum_;
    r.terms_used = terms_;
    r.converged = true;
    r.tail_estimate = last_;
    return r;
  }

  // For finite sums that terminate exactly.
  SeriesEval exact() const {
    SeriesEval r;
    r.value = sum_;
    r.terms_used = terms_;
    r.converged = true;
    r.tail_estimate = 0.0;
    return r;
  }

  Complex value() const { return sum_; }
  std::size_t terms() const { return terms_; }

 private:
  const QContext& ctx_;
  const char* what_;
  Complex sum_{0.0, 0.0};
  std::size_t terms_ = 0;
  int small_run_ = 0;
  double last_ = 0.0;
};

// Accumulates a product of factors 1 + d_k with d_k decaying like q^k;
// converged once three consecutive geometric tail bounds |d_k| / (1-q)
// fall below rel_tol.
class ProductAcc {
 public:
  ProductAcc(const QContext& ctx, const char* what)
      : ctx_(ctx), what_(what), tail_factor_(1.0 / ctx.one_minus_pow(1.0)) {}

  bool mul(double factor, double deviation) {
    return mul(std::complex<long double>(factor, 0.0L), deviation);
  }

  bool mul(Complex factor, double deviation) {
    return mul(std::complex<long double>(factor), deviation);
  }

  bool mul(std::complex<long double> factor, double deviation) {
    // Plain product formula; the library routine's NaN recovery is not needed.
    const long double re = prod_.real() * factor.real() - prod_.imag() * factor.imag();
    const long double im = prod_.real() * factor.imag() + prod_.imag() * factor.real();
    prod_ = {re, im};
    ++terms_;
    last_ = deviation * tail_factor_;
    if (last_ <= ctx_.rel_tol()) {
      ++small_run_;
    } else {
      small_run_ = 0;
    }
    if (small_run_ >= 3) return true;
    if (terms_ >= ctx_.max_terms()) {
      throw NonConvergence(std::string(what_) + ": no convergence within " +
                           std::to_string(ctx_.max_terms()) + " factors");
    }
    return false;
  }

  SeriesEval result() const {
    SeriesEval r;
    r.value = value();
    r.terms_used = terms_;
    r.converged = true;
    r.tail_estimate = last_ * std::abs(value());
    return r;
  }

  Complex value() const { return Complex(prod_); }
  std::size_t terms() const { return terms_; }

 private:
  const QContext& ctx_;
  const char* what_;
  double tail_factor_;
  std::complex<long double> prod_{1.0L, 0.0L};
  std::size_t terms_ = 0;
  int small_run_ = 0;
  double last_ = 0.0;
};

inline SeriesEval combine(SeriesEval a, const SeriesEval& b, Complex value) {
  a.value = value;
  a.terms_used += b.terms_used;
  a.converged = a.converged && b.converged;
  a.tail_estimate = std::max(a.tail_estimate, b.tail_estimate);
  return a;
}

inline bool near_integer(double x, double threshold = 1e-9) {
  return std::abs(x - std::round(x)) < threshold;
}

}  // namespace qb::detail
