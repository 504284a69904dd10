#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "binact/rational.hpp"

namespace binact {

/// Exact 2x2 rational matrix, row-major [[a,b],[c,d]]. No floating point
/// anywhere; all arithmetic is arbitrary-precision.
struct Mat2 {
  Rational a, b, c, d;

  static Mat2 identity() { return {1, 0, 0, 1}; }

  Rational det() const { return a * d - b * c; }

  friend Mat2 operator*(const Mat2& lhs, const Mat2& rhs) {
    return {lhs.a * rhs.a + lhs.b * rhs.c, lhs.a * rhs.b + lhs.b * rhs.d,
            lhs.c * rhs.a + lhs.d * rhs.c, lhs.c * rhs.b + lhs.d * rhs.d};
  }

  friend bool operator==(const Mat2& lhs, const Mat2& rhs) {
    return lhs.a == rhs.a && lhs.b == rhs.b && lhs.c == rhs.c && lhs.d == rhs.d;
  }

  friend bool operator<(const Mat2& lhs, const Mat2& rhs) {
    if (lhs.a != rhs.a) return lhs.a < rhs.a;
    if (lhs.b != rhs.b) return lhs.b < rhs.b;
    if (lhs.c != rhs.c) return lhs.c < rhs.c;
    return lhs.d < rhs.d;
  }
};

inline Mat2 mat_mul(const Mat2& lhs, const Mat2& rhs) { return lhs * rhs; }

inline Mat2 mat_inv(const Mat2& m) {
  const Rational det = m.det();
  if (det == 0) throw std::domain_error("mat_inv: singular matrix");
  return {m.d / det, -m.b / det, -m.c / det, m.a / det};
}

inline std::string to_string(const Mat2& m) {
  return "[[" + to_string(m.a) + "," + to_string(m.b) + "],[" + to_string(m.c) + "," +
         to_string(m.d) + "]]";
}

/// Smallest n <= bound with m^n = I, or nullopt when every such power stays
/// distinct from the identity up to the bound.
inline std::optional<int> order_bounded(const Mat2& m, int bound) {
  if (m.det() == 0) throw std::domain_error("order_bounded: singular matrix");
  if (bound < 1) throw std::domain_error("order_bounded: bound must be positive");
  Mat2 p = m;
  for (int n = 1; n <= bound; ++n) {
    if (p == Mat2::identity()) return n;
    p = p * m;
  }
  return std::nullopt;
}

inline Mat2 mat_pow(const Mat2& m, long long e) {
  if (e < 0) return mat_pow(mat_inv(m), -e);
  Mat2 acc = Mat2::identity();
  Mat2 base = m;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

/// [[1,t],[0,1]], the one-parameter upper-unitriangular family.
inline Mat2 unitriangular(const Rational& t) { return {1, t, 0, 1}; }

enum class SubgroupKind { upper_unitriangular, finite_listed, whole_gl2 };

/// Membership predicate for the matrix subgroups the scenarios use. The
/// structural kinds stand for infinite subgroups that are never enumerated.
struct StructuralSubgroupPredicate {
  SubgroupKind kind = SubgroupKind::whole_gl2;
  std::vector<Mat2> listed;  // finite_listed only

  bool contains(const Mat2& m) const {
    switch (kind) {
      case SubgroupKind::upper_unitriangular:
        return m.a == 1 && m.d == 1 && m.c == 0;
      case SubgroupKind::finite_listed:
        for (const Mat2& e : listed)
          if (e == m) return true;
        return false;
      case SubgroupKind::whole_gl2:
        return m.det() != 0;
    }
    return false;
  }

  static StructuralSubgroupPredicate upper_unitriangular() {
    return {SubgroupKind::upper_unitriangular, {}};
  }
  static StructuralSubgroupPredicate finite_listed(std::vector<Mat2> elements) {
    return {SubgroupKind::finite_listed, std::move(elements)};
  }
  static StructuralSubgroupPredicate whole_gl2() { return {SubgroupKind::whole_gl2, {}}; }
};

inline bool in_subgroup(const Mat2& m, const StructuralSubgroupPredicate& p) {
  return p.contains(m);
}

/// Closes a generator list under multiplication and inversion. Throws when
/// the closure exceeds max_size; the matrix carriers here are only ever
/// finite witness sets, never enumerations of GL(2,R).
inline std::vector<Mat2> matrix_subgroup_closure(std::vector<Mat2> gens, std::size_t max_size = 64) {
  std::vector<Mat2> elements{Mat2::identity()};
  auto push_unique = [&elements](const Mat2& m) {
    for (const Mat2& e : elements)
      if (e == m) return false;
    elements.push_back(m);
    return true;
  };
  for (const Mat2& g : gens) {
    if (g.det() == 0) throw std::domain_error("matrix_subgroup_closure: singular generator");
    push_unique(g);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t n = elements.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (push_unique(mat_inv(elements[i]))) grew = true;
      for (std::size_t j = 0; j < n; ++j)
        if (push_unique(elements[i] * elements[j])) grew = true;
    }
    if (elements.size() > max_size)
      throw std::domain_error("matrix_subgroup_closure: closure exceeds size bound");
  }
  return elements;
}

}  // namespace binact
