// qbessel: point evaluation, tables and identity verification.

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qbessel/bessel.hpp"
#include "qbessel/macdonald.hpp"
#include "qbessel/qcore.hpp"
#include "qbessel/qhyper.hpp"
#include "qbessel/verify.hpp"

namespace {

using qb::Complex;
using qb::verify::Format;

enum Exit { kOk = 0, kUsage = 1, kDomain = 2, kNonConvergence = 3, kFailures = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kFunctions = {"eq", "Eq", "qgamma", "qpsi", "phi_nu", "J1",
                                             "J2", "I1", "I2",     "K1",   "K2"};

double parse_double(const std::string& s, const std::string& what) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  while (first < last && *first == ' ') ++first;
  while (last > first && last[-1] == ' ') --last;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) throw UsageError(what + ": not a number: '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

Complex parse_complex(const std::string& s, const std::string& what) {
  const auto parts = split(s, ',');
  if (parts.empty() || parts.size() > 2) throw UsageError(what + ": expected re[,im]");
  const double re = parse_double(parts[0], what);
  const double im = parts.size() == 2 ? parse_double(parts[1], what) : 0.0;
  return {re, im};
}

qb::QContext make_context(double q) {
  std::size_t max_terms = 10000;
  if (const char* env = std::getenv("Q_BESSEL_MAX_TERMS")) {
    const std::string s(env);
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v == 0) {
      throw UsageError("Q_BESSEL_MAX_TERMS must be a positive integer");
    }
    max_terms = v;
  }
  try {
    return qb::QContext(q, 1e-14, 1e-300, max_terms);
  } catch (const qb::ParamError& e) {
    throw UsageError(e.what());
  }
}

qb::Representation parse_rep(const std::string& s) {
  if (s == "series") return qb::Representation::PowerSeries;
  if (s == "laurent") return qb::Representation::Laurent;
  return qb::Representation::Auto;
}

Format parse_format(const std::string& s) { return s == "jsonl" ? Format::JSONLines : Format::CSV; }

qb::SeriesEval plain(Complex v) {
  qb::SeriesEval r;
  r.value = v;
  r.converged = true;
  return r;
}

qb::SeriesEval evaluate(const std::string& func, double nu, Complex z, const qb::QContext& ctx,
                        qb::Representation rep) {
  if (func == "eq") return qb::eq_exp_eval(z, ctx);
  if (func == "Eq") return qb::Eq_exp_eval(z, ctx);
  if (func == "qgamma") return plain(qb::q_gamma(z.real(), ctx));
  if (func == "qpsi") return plain(qb::q_psi(z.real(), ctx));
  if (func == "phi_nu") return qb::phi_nu(nu, z, ctx);
  if (func == "J1") return plain(qb::besselJ(1, nu, z, ctx));
  if (func == "J2") return plain(qb::besselJ(2, nu, z, ctx));
  if (func == "I1") return qb::I1(nu, z, ctx, rep);
  if (func == "I2") return qb::I2(nu, z, ctx, rep);
  if (func == "K1") return qb::K(1, nu, z, ctx, rep);
  if (func == "K2") return qb::K(2, nu, z, ctx, rep);
  throw UsageError("unknown function: " + func);
}

struct Row {
  Complex z;
  qb::SeriesEval result;
  int error_code = kOk;
  std::string error;
};

int code_of(const std::exception& e) {
  if (dynamic_cast<const qb::NonConvergence*>(&e)) return kNonConvergence;
  if (dynamic_cast<const qb::ParamError*>(&e)) return kUsage;
  if (dynamic_cast<const UsageError*>(&e)) return kUsage;
  return kDomain;
}

std::string kind_of(const std::exception& e) {
  if (dynamic_cast<const qb::PoleError*>(&e)) return "PoleError";
  if (dynamic_cast<const qb::DomainError*>(&e)) return "DomainError";
  if (dynamic_cast<const qb::NonConvergence*>(&e)) return "NonConvergence";
  if (dynamic_cast<const qb::ParamError*>(&e)) return "ParamError";
  if (dynamic_cast<const qb::IntegerOrderError*>(&e)) return "IntegerOrderError";
  if (dynamic_cast<const qb::UnknownIdentity*>(&e)) return "UnknownIdentity";
  return "Error";
}

Row evaluate_row(const std::string& func, double nu, Complex z, const qb::QContext& ctx,
                 qb::Representation rep) {
  Row row;
  row.z = z;
  try {
    row.result = evaluate(func, nu, z, ctx, rep);
  } catch (const std::exception& e) {
    row.error_code = code_of(e);
    row.error = kind_of(e) + ": " + e.what();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    row.result = qb::SeriesEval{};
    row.result.value = Complex(nan, nan);
  }
  return row;
}

void write_header(std::ostream& out, Format format) {
  if (format == Format::CSV) out << "q,nu,re_z,im_z,re_val,im_val,terms,converged\n";
}

std::string json_num(double v, int p) {
  return std::isfinite(v) ? qb::verify::format_number(v, p) : "null";
}

void write_row(std::ostream& out, double q, double nu, const Row& row, Format format, int p) {
  using qb::verify::format_number;
  const auto& r = row.result;
  if (format == Format::CSV) {
    out << format_number(q, p) << ',' << format_number(nu, p) << ','
        << format_number(row.z.real(), p) << ',' << format_number(row.z.imag(), p) << ','
        << format_number(r.value.real(), p) << ',' << format_number(r.value.imag(), p) << ','
        << r.terms_used << ',' << (r.converged ? "true" : "false") << '\n';
  } else {
    out << "{\"q\":" << json_num(q, p) << ",\"nu\":" << json_num(nu, p)
        << ",\"re_z\":" << json_num(row.z.real(), p) << ",\"im_z\":" << json_num(row.z.imag(), p)
        << ",\"re_val\":" << json_num(r.value.real(), p)
        << ",\"im_val\":" << json_num(r.value.imag(), p) << ",\"terms\":" << r.terms_used
        << ",\"converged\":" << (r.converged ? "true" : "false") << "}\n";
  }
}

std::vector<Complex> range_points(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() != 3) throw UsageError("--range: expected start:stop:count");
  const double a = parse_double(parts[0], "--range");
  const double b = parse_double(parts[1], "--range");
  const double n = parse_double(parts[2], "--range");
  if (n < 0 || n != std::floor(n)) throw UsageError("--range: count must be a nonnegative integer");
  const auto count = static_cast<std::size_t>(n);
  std::vector<Complex> out;
  for (std::size_t i = 0; i < count; ++i) {
    const double t = count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(count - 1);
    out.emplace_back(a + t * (b - a), 0.0);
  }
  return out;
}

// count points at angles (2k+1) pi / count, off the real axis.
std::vector<Complex> ring_points(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() != 2) throw UsageError("--ring: expected radius:count");
  const double r = parse_double(parts[0], "--ring");
  const double n = parse_double(parts[1], "--ring");
  if (n < 0 || n != std::floor(n)) throw UsageError("--ring: count must be a nonnegative integer");
  const auto count = static_cast<std::size_t>(n);
  std::vector<Complex> out;
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(std::polar(r, (2.0 * k + 1.0) * std::numbers::pi / static_cast<double>(count)));
  }
  return out;
}

std::vector<double> parse_list(const std::string& s, const std::string& key) {
  std::vector<double> out;
  for (const auto& item : split(s, ',')) out.push_back(parse_double(item, key));
  return out;
}

qb::verify::GridSpec read_grid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open grid file: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  qb::verify::GridSpec g;
  g.scaling_mode = qb::verify::ScalingMode::DomainScaled;
  for (const auto& [key, value] : kv) {
    if (key == "q_values") {
      g.q_values = parse_list(value, key);
    } else if (key == "nu_values") {
      g.nu_values = parse_list(value, key);
    } else if (key == "z_fractions") {
      for (const auto& item : split(value, ';')) g.z_values.push_back(parse_complex(item, key));
    } else if (key == "scaling_mode") {
      if (value == "absolute") {
        g.scaling_mode = qb::verify::ScalingMode::Absolute;
      } else if (value == "domain_scaled") {
        g.scaling_mode = qb::verify::ScalingMode::DomainScaled;
      } else {
        throw UsageError("scaling_mode must be absolute or domain_scaled");
      }
    } else {
      throw UsageError("unknown grid key: " + key);
    }
  }
  try {
    qb::verify::validate(g);
  } catch (const qb::ParamError& e) {
    throw UsageError(e.what());
  }
  return g;
}

struct Options {
  std::string func;
  double q = 0.5;
  double nu = 0.0;
  std::string z = "0";
  std::string rep = "auto";
  std::string format = "csv";
  int precision = 15;
  bool header = false;
  std::string range;
  std::string ring;
  bool skip_errors = false;
  std::vector<std::string> ids;
  std::string grid;
  bool serial = false;
};

int run_eval(const Options& o) {
  const auto ctx = make_context(o.q);
  const Complex z = parse_complex(o.z, "--z");
  const Format format = parse_format(o.format);
  const Row row = evaluate_row(o.func, o.nu, z, ctx, parse_rep(o.rep));
  if (row.error_code != kOk) {
    std::cerr << "error: " << row.error << '\n';
    return row.error_code;
  }
  if (o.header) write_header(std::cout, format);
  write_row(std::cout, o.q, o.nu, row, format, o.precision);
  return kOk;
}

int run_table(const Options& o) {
  if (o.range.empty() == o.ring.empty()) {
    throw UsageError("table: give exactly one of --range or --ring");
  }
  const auto ctx = make_context(o.q);
  const auto points = o.range.empty() ? ring_points(o.ring) : range_points(o.range);
  const Format format = parse_format(o.format);
  const auto rep = parse_rep(o.rep);
  std::vector<Row> rows(points.size());
  const long n = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) rows[i] = evaluate_row(o.func, o.nu, points[i], ctx, rep);

  write_header(std::cout, format);
  for (const auto& row : rows) {
    if (row.error_code != kOk && !o.skip_errors) {
      std::cout.flush();
      std::cerr << "error: " << row.error << '\n';
      return row.error_code;
    }
    if (row.error_code != kOk) {
      Row marker = row;
      marker.result.terms_used = 0;
      marker.result.converged = false;
      write_row(std::cout, o.q, o.nu, marker, format, o.precision);
    } else {
      write_row(std::cout, o.q, o.nu, row, format, o.precision);
    }
  }
  return kOk;
}

int run_verify(const Options& o) {
  std::vector<std::string> ids;
  for (const auto& id : o.ids) {
    if (id == "all") {
      for (const auto& d : qb::verify::default_suite()) ids.push_back(d);
    } else if (!qb::verify::is_registered(id)) {
      std::cerr << "error: unknown identity id '" << id << "'. Valid ids:";
      for (const auto& info : qb::verify::catalog()) std::cerr << ' ' << info.id;
      std::cerr << '\n';
      return kUsage;
    } else {
      ids.push_back(id);
    }
  }
  if (ids.empty()) throw UsageError("verify: no identity ids given (use 'all')");
  std::optional<qb::verify::GridSpec> grid;
  if (!o.grid.empty()) grid = read_grid(o.grid);
  const auto base = make_context(0.5);
  const auto policy = o.serial ? qb::verify::ExecutionPolicy::Serial
                               : qb::verify::ExecutionPolicy::Parallel;
  const auto reports = qb::verify::run_identity_suite(ids, grid, base, policy);
  const Format format = parse_format(o.format);
  qb::verify::write_report_header(std::cout, format);
  std::size_t passed = 0;
  for (const auto& r : reports) {
    qb::verify::write_report(std::cout, r, format, o.precision);
    if (r.pass) ++passed;
  }
  qb::verify::write_summary(std::cout, reports.size(), passed, format);
  return passed == reports.size() ? kOk : kFailures;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-exponentials, q-Bessel and q-Bessel-Macdonald functions"};
  app.require_subcommand(1);
  Options o;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "csv or jsonl")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    sub->add_option("--precision", o.precision, "significant digits")->check(CLI::Range(1, 17));
  };
  auto add_point = [&](CLI::App* sub) {
    sub->add_option("func", o.func, "function")->required()->check(CLI::IsMember(kFunctions));
    sub->add_option("--q", o.q, "base q in (0,1)")->required();
    sub->add_option("--nu", o.nu, "order");
    sub->add_option("--rep", o.rep, "series, laurent or auto (I and K)")
        ->check(CLI::IsMember({"series", "laurent", "auto"}));
    add_output(sub);
  };

  auto* eval = app.add_subcommand("eval", "evaluate one function at one point");
  add_point(eval);
  eval->add_option("--z", o.z, "argument re[,im]");
  eval->add_flag("--header", o.header, "print the CSV header first");

  auto* table = app.add_subcommand("table", "evaluate along a range or ring");
  add_point(table);
  table->add_option("--range", o.range, "start:stop:count on the real axis");
  table->add_option("--ring", o.ring, "radius:count, angles (2k+1)pi/count");
  table->add_flag("--skip-errors", o.skip_errors, "mark failing rows instead of stopping");

  auto* verify = app.add_subcommand("verify", "run identity checks");
  verify->add_option("ids", o.ids, "identity ids or 'all'")->required();
  verify->add_option("--grid", o.grid, "grid file (key=value)");
  verify->add_flag("--serial", o.serial, "evaluate grid points on one thread");
  add_output(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (eval->parsed()) return run_eval(o);
    if (table->parsed()) return run_table(o);
    return run_verify(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << kind_of(e) << ": " << e.what() << '\n';
    return code_of(e);
  }
}
