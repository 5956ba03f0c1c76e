#pragma once

#include <string>
#include <vector>

#include "splinedim/mesh.hpp"

inline splinedim::Triangulation make_mesh(const std::vector<std::pair<std::string, std::string>>& pts,
                                          const std::vector<splinedim::Triangle>& tris) {
  std::vector<splinedim::Point2> v;
  for (const auto& [x, y] : pts) v.push_back({splinedim::parse_rational(x), splinedim::parse_rational(y)});
  return splinedim::Triangulation(v, tris);
}

// Center (0,0) with four neighbors on the axes: two slopes at the center.
inline splinedim::Triangulation cross_mesh() {
  return make_mesh({{"0", "0"}, {"1", "0"}, {"0", "1"}, {"-1", "0"}, {"0", "-1"}},
                   {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1}});
}

// One interior vertex of degree 5 with no collinear edges.
inline splinedim::Triangulation pentagon_fan() {
  return make_mesh({{"1/3", "1/5"}, {"2", "0"}, {"1", "2"}, {"-1", "2"}, {"-2", "0"}, {"0", "-2"}},
                   {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1}});
}

inline const std::vector<std::string>& bundled() {
  static const std::vector<std::string> names{"triangle", "two_triangles", "morgan_scott", "sy_delta"};
  return names;
}
