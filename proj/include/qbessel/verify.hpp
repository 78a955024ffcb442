#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qbessel/context.hpp"

namespace qb::verify {

// One identity check at one parameter point.
struct IdentityReport {
  std::string identity_id;
  std::vector<std::pair<std::string, double>> params;
  Complex lhs;
  Complex rhs;
  double abs_err = 0.0;
  double rel_err = 0.0;
  bool pass = false;
  std::string note;  // error message when the evaluation threw
};

enum class ScalingMode { Absolute, DomainScaled };

// Cartesian grid. With DomainScaled, z values of identities stated in z are
// fractions of 2/(1-q^2); values of u, alpha, n or r identities are used as is.
struct GridSpec {
  std::vector<double> q_values;
  std::vector<double> nu_values;
  std::vector<Complex> z_values;
  ScalingMode scaling_mode = ScalingMode::Absolute;
};

// Throws ParamError on empty lists or q outside (0,1).
void validate(const GridSpec& grid);

enum class ExecutionPolicy { Serial, Parallel };

enum class Variable { Z, U, Alpha, Index, None };

struct IdentityInfo {
  std::string id;
  std::string description;
  Variable variable;
  bool uses_nu;
  double rel_bound;
  double abs_bound;
  bool known_defect;
};

// Registered identities, sorted by id.
const std::vector<IdentityInfo>& catalog();
bool is_registered(const std::string& id);
// Every registered id except known defects.
std::vector<std::string> default_suite();

// Runs each identity over its default grid, or over `grid` when given. The
// tolerances and term cap of `base` are used; q comes from the grid. Reports
// are ordered by (identity id, grid index). Throws UnknownIdentity.
std::vector<IdentityReport> run_identity_suite(const std::vector<std::string>& ids,
                                               const std::optional<GridSpec>& grid,
                                               const QContext& base,
                                               ExecutionPolicy policy = ExecutionPolicy::Parallel);

// Classical modified Bessel functions (standard Gamma), real order and z > 0.
double classical_bessel_I(double nu, double z);
// pi / (2 sin nu pi) (I_-nu - I_nu); integers through the symmetric pair at
// nu +- 1e-6.
double classical_bessel_K(double nu, double z);

enum class LimitFunction { I1, I2, K1, K2 };

struct LimitReport {
  std::vector<std::pair<double, double>> errors;  // (q, |value - classical|)
  bool decreasing = false;
};

// Errors at q = 1 - 10^-m against the classical oracle.
LimitReport classical_limit_report(LimitFunction func, double nu, double z,
                                   const std::vector<int>& m_values);

// Output formatting shared with the CLI.
enum class Format { CSV, JSONLines };

// Shortest round-trip text at the given number of significant digits.
// NaN prints as NaN and -0 as 0.
std::string format_number(double v, int precision);

void write_report_header(std::ostream& out, Format format);
void write_report(std::ostream& out, const IdentityReport& r, Format format, int precision);
void write_summary(std::ostream& out, std::size_t total, std::size_t passed, Format format);

}  // namespace qb::verify
