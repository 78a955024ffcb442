#include <algorithm>
#include <cmath>
#include <limits>

#include "catalog.hpp"

namespace qb::verify {

namespace {

struct Task {
  const detail::Identity* identity;
  detail::Point point;
};

std::vector<detail::Point> expand(const detail::Identity& id, const GridSpec& g) {
  std::vector<detail::Point> out;
  const std::vector<double> nus = id.info.uses_nu ? g.nu_values : std::vector<double>{0.0};
  const std::vector<Complex> xs =
      id.info.variable == Variable::None ? std::vector<Complex>{0.0} : g.z_values;
  for (double q : g.q_values) {
    for (double nu : nus) {
      for (Complex x : xs) {
        if (g.scaling_mode == ScalingMode::DomainScaled && id.info.variable == Variable::Z) {
          x *= 2.0 / (1.0 - q * q);
        }
        out.push_back({q, nu, x});
      }
    }
  }
  return out;
}

std::vector<std::pair<std::string, double>> params_of(const IdentityInfo& info,
                                                      const detail::Point& p) {
  std::vector<std::pair<std::string, double>> out{{"q", p.q}};
  if (info.uses_nu) out.emplace_back("nu", p.nu);
  switch (info.variable) {
    case Variable::Z:
      out.emplace_back("re_z", p.x.real());
      out.emplace_back("im_z", p.x.imag());
      break;
    case Variable::U:
      out.emplace_back("re_u", p.x.real());
      out.emplace_back("im_u", p.x.imag());
      break;
    case Variable::Alpha:
      out.emplace_back("alpha", p.x.real());
      break;
    case Variable::Index:
      out.emplace_back("n", std::round(p.x.real()));
      break;
    case Variable::None:
      break;
  }
  return out;
}

IdentityReport evaluate(const Task& t, const QContext& base) {
  const IdentityInfo& info = t.identity->info;
  IdentityReport r;
  r.identity_id = info.id;
  r.params = params_of(info, t.point);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  try {
    const QContext ctx(t.point.q, base.rel_tol(), base.abs_tol(),
                       std::max(base.max_terms(), t.identity->min_max_terms));
    const detail::Evaluation e = t.identity->eval(t.point, ctx);
    r.lhs = e.sides.lhs;
    r.rhs = e.sides.rhs;
    r.abs_err = std::abs(r.lhs - r.rhs);
    const double scale = std::max({std::abs(r.lhs), std::abs(r.rhs), e.scale, 1e-300});
    r.rel_err = r.abs_err / scale;
    r.pass = r.abs_err <= info.abs_bound || r.rel_err <= info.rel_bound;
  } catch (const std::exception& ex) {
    r.lhs = Complex(nan, nan);
    r.rhs = Complex(nan, nan);
    r.abs_err = nan;
    r.rel_err = nan;
    r.pass = false;
    r.note = ex.what();
  }
  return r;
}

}  // namespace

void validate(const GridSpec& grid) {
  if (grid.q_values.empty() || grid.nu_values.empty() || grid.z_values.empty()) {
    throw ParamError("grid: q_values, nu_values and z_fractions must be nonempty");
  }
  for (double q : grid.q_values) {
    if (!(q > 0.0 && q < 1.0)) throw ParamError("grid: every q must lie in (0,1)");
  }
}

const std::vector<IdentityInfo>& catalog() {
  static const std::vector<IdentityInfo> infos = [] {
    std::vector<IdentityInfo> out;
    for (const auto& id : detail::identities()) out.push_back(id.info);
    return out;
  }();
  return infos;
}

bool is_registered(const std::string& id) { return detail::find(id) != nullptr; }

std::vector<std::string> default_suite() {
  std::vector<std::string> out;
  for (const auto& info : catalog()) {
    if (!info.known_defect) out.push_back(info.id);
  }
  return out;
}

std::vector<IdentityReport> run_identity_suite(const std::vector<std::string>& ids,
                                               const std::optional<GridSpec>& grid,
                                               const QContext& base, ExecutionPolicy policy) {
  if (grid) validate(*grid);
  std::vector<const detail::Identity*> selected;
  for (const auto& id : ids) {
    const detail::Identity* found = detail::find(id);
    if (!found) throw UnknownIdentity("unknown identity id: " + id);
    selected.push_back(found);
  }
  std::sort(selected.begin(), selected.end(),
            [](const auto* a, const auto* b) { return a->info.id < b->info.id; });
  selected.erase(std::unique(selected.begin(), selected.end()), selected.end());

  std::vector<Task> tasks;
  for (const auto* id : selected) {
    for (const auto& p : grid ? expand(*id, *grid) : id->default_grid()) {
      tasks.push_back({id, p});
    }
  }

  std::vector<IdentityReport> reports(tasks.size());
  const long n = static_cast<long>(tasks.size());
  if (policy == ExecutionPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) reports[i] = evaluate(tasks[i], base);
  } else {
    for (long i = 0; i < n; ++i) reports[i] = evaluate(tasks[i], base);
  }
  return reports;
}

}  // namespace qb::verify
