#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "qbessel/verify.hpp"

namespace qb::verify::detail {

struct Point {
  double q;
  double nu;
  Complex x;  // z, u, alpha or an index, by the identity's variable
};

// Sides plus an optional extra scale for the relative error.
struct Evaluation {
  Sides sides;
  double scale = 0.0;
};

struct Identity {
  IdentityInfo info;
  std::size_t min_max_terms;
  std::function<std::vector<Point>()> default_grid;
  std::function<Evaluation(const Point&, const QContext&)> eval;
};

// Sorted by id.
const std::vector<Identity>& identities();
const Identity* find(const std::string& id);

}  // namespace qb::verify::detail
