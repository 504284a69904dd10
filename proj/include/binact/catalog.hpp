#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "binact/group.hpp"

namespace binact {

/// Built-in small groups addressable by name in scenarios:
/// C2..C8 (cyclic), S3, S4 (symmetric), A4 (alternating), D4 (symmetries of
/// the square, order 8), Q8 (quaternion).
inline FiniteGroup make_cyclic_group(int n) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  names.emplace_back("e");
  for (int k = 1; k < n; ++k) names.push_back(k == 1 ? "g" : "g^" + std::to_string(k));
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n), std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
  return FiniteGroup::from_table(std::move(names), table);
}

inline FiniteGroup make_quaternion_group() {
  // Units {1,-1,i,-i,j,-j,k,-k} as (axis, sign): axis 0=1, 1=i, 2=j, 3=k.
  const std::vector<std::string> names{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  auto decode = [](int id) { return std::pair<int, int>(id / 2, id % 2 == 0 ? 1 : -1); };
  auto encode = [](int axis, int sign) { return axis * 2 + (sign > 0 ? 0 : 1); };
  auto unit_mul = [](int a, int b) -> std::pair<int, int> {  // axes, result (axis, sign)
    if (a == 0) return {b, 1};
    if (b == 0) return {a, 1};
    if (a == b) return {0, -1};                       // i*i = j*j = k*k = -1
    static const int third[4][4] = {{0, 0, 0, 0}, {0, 0, 3, 2}, {0, 3, 0, 1}, {0, 2, 1, 0}};
    const bool forward = (a == 1 && b == 2) || (a == 2 && b == 3) || (a == 3 && b == 1);
    return {third[a][b], forward ? 1 : -1};           // i*j=k, j*k=i, k*i=j
  };
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const auto [ax, sx] = decode(x);
      const auto [ay, sy] = decode(y);
      const auto [az, sz] = unit_mul(ax, ay);
      table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = encode(az, sx * sy * sz);
    }
  return FiniteGroup::from_table(names, table);
}

inline const FiniteGroup& catalog_group(const std::string& name) {
  static const std::map<std::string, FiniteGroup> groups = [] {
    std::map<std::string, FiniteGroup> m;
    for (int n = 2; n <= 8; ++n) m.emplace("C" + std::to_string(n), make_cyclic_group(n));
    m.emplace("S3", FiniteGroup::from_permutation_generators({{2, 1, 3}, {2, 3, 1}}));
    m.emplace("S4", FiniteGroup::from_permutation_generators({{2, 1, 3, 4}, {2, 3, 4, 1}}));
    m.emplace("A4", FiniteGroup::from_permutation_generators({{2, 3, 1, 4}, {2, 1, 4, 3}}));
    m.emplace("D4", FiniteGroup::from_permutation_generators({{2, 3, 4, 1}, {3, 2, 1, 4}}));
    m.emplace("Q8", make_quaternion_group());
    return m;
  }();
  const auto it = groups.find(name);
  if (it == groups.end()) throw std::domain_error("catalog: unknown group '" + name + "'");
  return it->second;
}

inline std::vector<std::string> catalog_group_names() {
  return {"C2", "C3", "C4", "C5", "C6", "C7", "C8", "S3", "S4", "D4", "Q8", "A4"};
}

}  // namespace binact
