#pragma once

#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "binact/action.hpp"

namespace binact {

/// K(S1,S2) = { g(a1,a2) : g in K, a1 in S1, a2 in S2 }.
template <class GEl, class Pt>
std::set<Pt> image_set_pairs(const BinaryAction<GEl, Pt>& a, std::span<const GEl> k,
                             const std::set<Pt>& s1, const std::set<Pt>& s2) {
  std::set<Pt> out;
  for (const GEl& g : k)
    for (const Pt& a1 : s1)
      for (const Pt& a2 : s2) out.insert(a.apply_checked(g, a1, a2));
  return out;
}

/// K(S,S).
template <class GEl, class Pt>
std::set<Pt> image_set(const BinaryAction<GEl, Pt>& a, std::span<const GEl> k,
                       const std::set<Pt>& s) {
  return image_set_pairs(a, k, s, s);
}

/// G(S,S) over the whole acting group.
template <class GEl, class Pt>
std::set<Pt> image_set(const BinaryAction<GEl, Pt>& a, const std::set<Pt>& s) {
  return image_set(a, std::span<const GEl>(a.group().elements), s);
}

/// The chain G^1(x,x) ⊆ G^2(x,x) ⊆ ... ; layers[i] holds G^(i+1)(x,x).
/// When converged the last two stored layers are equal and the union of the
/// whole chain equals the final layer.
template <class GEl, class Pt>
struct OrbitLayers {
  Pt base{};
  std::vector<std::set<Pt>> layers;
  bool converged = false;
  int depth_reached = 0;  // number of stored layers

  const std::set<Pt>& last() const { return layers.back(); }
};

/// Computes the layers by semi-naive expansion: G^(n+1) = G^n ∪ G(Δ, G^n)
/// ∪ G(G^n, Δ) with Δ the points new in G^n. Equal consecutive layers stop
/// the run (a true fixpoint); otherwise it runs to max_depth.
template <class GEl, class Pt>
OrbitLayers<GEl, Pt> orbit_layers(const BinaryAction<GEl, Pt>& a, const Pt& x, int max_depth) {
  if (max_depth < 1) throw std::domain_error("orbit_layers: max_depth must be positive");
  const std::span<const GEl> k(a.group().elements);
  OrbitLayers<GEl, Pt> out;
  out.base = x;

  std::set<Pt> seed{x};
  out.layers.push_back(image_set(a, k, seed));
  std::set<Pt> delta = out.layers.back();

  while (static_cast<int>(out.layers.size()) < max_depth) {
    const std::set<Pt>& current = out.layers.back();
    std::set<Pt> next = current;
    for (const GEl& g : k)
      for (const Pt& d : delta) {
        for (const Pt& b : current) {
          next.insert(a.apply_checked(g, d, b));
          next.insert(a.apply_checked(g, b, d));
        }
      }
    const bool stable = next == current;
    std::set<Pt> fresh;
    for (const Pt& p : next)
      if (current.count(p) == 0) fresh.insert(p);
    out.layers.push_back(std::move(next));
    if (stable) {
      out.converged = true;
      break;
    }
    delta = std::move(fresh);
  }
  out.depth_reached = static_cast<int>(out.layers.size());
  return out;
}

/// G(S,S) = S.
template <class GEl, class Pt>
bool is_bi_invariant(const BinaryAction<GEl, Pt>& a, const std::set<Pt>& s) {
  for (const GEl& g : a.group().elements)
    for (const Pt& a1 : s)
      for (const Pt& a2 : s)
        if (s.count(a.apply_checked(g, a1, a2)) == 0) return false;
  return true;
}

/// Classification verdict for an orbit computation: the minimal n with
/// [x] = G^n(x,x), or no verdict when the chain is still growing at the
/// depth bound (finite computation cannot certify infinite generation).
struct OrbitClassification {
  std::optional<int> finitely_generated_at;
  int depth_bound = 0;
  std::vector<std::size_t> layer_sizes;
};

template <class GEl, class Pt>
OrbitClassification classify_orbit(const BinaryAction<GEl, Pt>& a, const Pt& x, int max_depth) {
  const auto chain = orbit_layers(a, x, max_depth);
  OrbitClassification out;
  out.depth_bound = max_depth;
  for (const auto& layer : chain.layers) out.layer_sizes.push_back(layer.size());
  if (chain.converged) out.finitely_generated_at = chain.depth_reached - 1;
  return out;
}

/// First common point of the two layer chains, scanned depth by depth; the
/// chains are monotone, so layer n is the union of the first n layers.
template <class GEl, class Pt>
struct OrbitIntersection {
  std::optional<Pt> witness;
  int depth = 0;  // depth at which the witness appeared, or the bound when disjoint
};

template <class GEl, class Pt>
OrbitIntersection<GEl, Pt> orbits_intersect(const BinaryAction<GEl, Pt>& a, const Pt& x,
                                            const Pt& y, int max_depth) {
  if (max_depth < 1) throw std::domain_error("orbits_intersect: max_depth must be positive");
  const auto cx = orbit_layers(a, x, max_depth);
  const auto cy = orbit_layers(a, y, max_depth);
  auto layer_at = [](const OrbitLayers<GEl, Pt>& c, int depth) -> const std::set<Pt>& {
    const int idx = std::min(depth, static_cast<int>(c.layers.size())) - 1;
    return c.layers[static_cast<std::size_t>(idx)];
  };
  OrbitIntersection<GEl, Pt> out;
  for (int depth = 1; depth <= max_depth; ++depth) {
    const std::set<Pt>& sx = layer_at(cx, depth);
    const std::set<Pt>& sy = layer_at(cy, depth);
    for (const Pt& p : sx)
      if (sy.count(p) != 0) {
        out.witness = p;
        out.depth = depth;
        return out;
      }
    if (depth >= static_cast<int>(cx.layers.size()) && depth >= static_cast<int>(cy.layers.size()))
      break;  // both chains already stable
  }
  out.depth = max_depth;
  return out;
}

/// S ∩ T for bi-invariant S, T; the intersection is again bi-invariant.
template <class GEl, class Pt>
std::set<Pt> intersect_bi_invariant(const BinaryAction<GEl, Pt>& a, const std::set<Pt>& s,
                                    const std::set<Pt>& t) {
  if (!is_bi_invariant(a, s) || !is_bi_invariant(a, t))
    throw std::domain_error("intersect_bi_invariant: operand is not bi-invariant");
  std::set<Pt> out;
  for (const Pt& p : s)
    if (t.count(p) != 0) out.insert(p);
  return out;
}

}  // namespace binact
