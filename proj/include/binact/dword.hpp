#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "binact/mat2.hpp"

namespace binact {

/// Element of the infinite dihedral group <h, x | h^2 = x^2 = e>, the group
/// generated by two involutions whose product has infinite order. Every
/// element is uniquely t^k or t^k*x with t = xh, so a word is a pair
/// (k, trailing-x flag) and multiplication is closed on normal forms.
class DWord {
 public:
  constexpr DWord() = default;
  static constexpr DWord identity() { return DWord(0, false); }
  static constexpr DWord gen_x() { return DWord(0, true); }
  static constexpr DWord gen_h() { return DWord(-1, true); }  // h = (xh)^-1 x
  static constexpr DWord from_parts(long long t_exp, bool trailing_x) {
    return DWord(t_exp, trailing_x);
  }
  /// (xh)^i.
  static constexpr DWord xh_pow(long long i) { return DWord(i, false); }

  constexpr long long t_exponent() const { return k_; }
  constexpr bool trailing_x() const { return x_; }

  friend constexpr DWord operator*(const DWord& u, const DWord& v) {
    // x t^b = t^-b x, hence (t^a x)(t^b x^d) = t^(a-b) x^(1+d).
    if (!u.x_) return DWord(u.k_ + v.k_, v.x_);
    return DWord(u.k_ - v.k_, !v.x_);
  }

  constexpr DWord inverse() const {
    if (x_) return *this;  // every t^a x is an involution
    return DWord(-k_, false);
  }

  friend constexpr bool operator==(const DWord&, const DWord&) = default;
  friend constexpr bool operator<(const DWord& u, const DWord& v) {
    if (u.k_ != v.k_) return u.k_ < v.k_;
    return u.x_ < v.x_;
  }

 private:
  constexpr DWord(long long k, bool x) : k_(k), x_(x) {}
  long long k_ = 0;
  bool x_ = false;
};

/// The normal-form taxonomy: identity, the base point x, then the four
/// positive-exponent shapes (xh)^i, (xh)^i x, h(xh)^i, h(xh)^i x. The i = 0
/// degenerate cases of the last two are the generator h and the product hx.
enum class WordForm { identity, base_x, pow, pow_x, h_pow, h_pow_x };

struct WordFormInfo {
  WordForm form;
  long long i;  // exponent of xh in the rendered normal form
};

inline WordFormInfo classify(const DWord& w) {
  const long long k = w.t_exponent();
  if (w.trailing_x()) {
    if (k == 0) return {WordForm::base_x, 0};
    if (k > 0) return {WordForm::pow_x, k};    // (xh)^k x
    return {WordForm::h_pow, -k - 1};          // h(xh)^(-k-1)
  }
  if (k == 0) return {WordForm::identity, 0};
  if (k > 0) return {WordForm::pow, k};        // (xh)^k
  return {WordForm::h_pow_x, -k - 1};          // h(xh)^(-k-1) x
}

/// The power of xh carried by the normal form of w.
inline long long xh_power(const DWord& w) { return classify(w).i; }

inline std::string to_string(const DWord& w) {
  auto xh_str = [](long long i) -> std::string {
    if (i == 0) return "";
    if (i == 1) return "xh";
    return "(xh)^" + std::to_string(i);
  };
  const auto [form, i] = classify(w);
  switch (form) {
    case WordForm::identity: return "e";
    case WordForm::base_x: return "x";
    case WordForm::pow: return xh_str(i);
    case WordForm::pow_x: return xh_str(i) + "x";
    case WordForm::h_pow: return "h" + xh_str(i);
    case WordForm::h_pow_x: return "h" + xh_str(i) + "x";
  }
  return "?";
}

/// Parses generator strings over {h,x} plus the rendered normal forms,
/// e.g. "hxhxh", "e", "(xh)^3 x", "h(xh)^2x".
inline DWord parse_word(std::string_view s) {
  DWord acc = DWord::identity();
  std::size_t pos = 0;
  auto fail = [&s]() -> DWord {
    throw std::invalid_argument("malformed word literal: " + std::string(s));
  };
  while (pos < s.size()) {
    const char c = s[pos];
    if (c == ' ' || c == '\t') {
      ++pos;
    } else if (c == 'h') {
      acc = acc * DWord::gen_h();
      ++pos;
    } else if (c == 'x') {
      acc = acc * DWord::gen_x();
      ++pos;
    } else if (c == 'e') {
      ++pos;
    } else if (c == '(') {
      if (s.substr(pos, 5) != "(xh)^") return fail();
      pos += 5;
      std::size_t end = pos;
      while (end < s.size() && (std::isdigit(static_cast<unsigned char>(s[end])) || s[end] == '-'))
        ++end;
      if (end == pos) return fail();
      long long i = 0;
      try {
        i = std::stoll(std::string(s.substr(pos, end - pos)));
      } catch (const std::exception&) {
        return fail();
      }
      acc = acc * DWord::xh_pow(i);
      pos = end;
    } else {
      return fail();
    }
  }
  return acc;
}

inline DWord word_mul(const DWord& u, const DWord& v) { return u * v; }

/// The conjugation-style binary action h(x1,x2) = x1^-1 h x1 x2 evaluated on
/// normal forms. The acting subgroup is H = {e, h}.
inline DWord word_apply(const DWord& hgen, const DWord& x1, const DWord& x2) {
  if (!(hgen == DWord::identity() || hgen == DWord::gen_h()))
    throw std::domain_error("word_apply: acting element must be e or h");
  return x1.inverse() * hgen * x1 * x2;
}

/// An exact-matrix realization of the two involution generators; their
/// product is unipotent-conjugate and has infinite order.
inline Mat2 infinite_dihedral_h() { return {1, 0, 0, -1}; }
inline Mat2 infinite_dihedral_x() { return {-1, 0, 1, 1}; }

/// Exact matrix image of a word under the realization above.
inline Mat2 substitute(const DWord& w) {
  const Mat2 t = infinite_dihedral_x() * infinite_dihedral_h();
  Mat2 m = mat_pow(t, w.t_exponent());
  if (w.trailing_x()) m = m * infinite_dihedral_x();
  return m;
}

/// Layer sets H^1(x,x), ..., H^n(x,x) of the orbit of x under the action
/// h(x1,x2) = x1^-1 h x1 x2 of H = {e,h}, computed on normal forms.
inline std::vector<std::set<DWord>> symbolic_layers(int n) {
  if (n < 1) throw std::domain_error("symbolic_layers: n must be positive");
  auto encode = [](const DWord& w) {
    return (static_cast<std::uint64_t>(w.t_exponent()) << 1) |
           static_cast<std::uint64_t>(w.trailing_x());
  };
  std::vector<std::set<DWord>> layers;
  std::set<DWord> current{DWord::gen_x()};  // seed {x}; H^1 = H(x,x)
  for (int level = 0; level < n; ++level) {
    // e(a1,a2) = a2 keeps the previous layer; only the h part adds points.
    // The conjugate x1^-1 h x1 depends on x1 alone, so hoist it.
    std::set<DWord> next = current;
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(2 * current.size());
    for (const DWord& w : next) seen.insert(encode(w));
    for (const DWord& x1 : current) {
      const DWord conj = x1.inverse() * DWord::gen_h() * x1;
      for (const DWord& x2 : current) {
        const DWord v = conj * x2;
        if (seen.insert(encode(v)).second) next.insert(v);
      }
    }
    layers.push_back(std::move(next));
    current = layers.back();
  }
  return layers;
}

/// One step of the growth argument: at level k the maximal-power element y
/// of H^k produces, via the case matching its form, an element of power k+2
/// lying in H^(k+1) \ H^k. A full certificate replays this for k = 1..n.
struct GrowthStep {
  int level = 0;        // k
  DWord max_element;    // y, the element of H^k of maximal xh-power
  int case_id = 0;      // 1..4, by the form of y
  DWord produced;       // h(xh,y) for cases 1-2, h(x,y) for cases 3-4
};

inline std::vector<GrowthStep> growth_certificate(int n) {
  if (n < 1) throw std::domain_error("growth_certificate: n must be positive");
  const auto layers = symbolic_layers(n + 1);
  std::vector<GrowthStep> steps;
  steps.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    const std::set<DWord>& layer = layers[static_cast<std::size_t>(k) - 1];
    // Maximal xh-power, ties broken by form order (i) < (ii) < (iii) < (iv).
    const DWord* best = nullptr;
    auto rank = [](const DWord& w) {
      const auto info = classify(w);
      int order = 0;
      switch (info.form) {
        case WordForm::pow: order = 0; break;
        case WordForm::pow_x: order = 1; break;
        case WordForm::h_pow: order = 2; break;
        case WordForm::h_pow_x: order = 3; break;
        default: order = 4; break;  // identity / base x carry power 0
      }
      return std::pair<long long, int>(-info.i, order);
    };
    for (const DWord& w : layer)
      if (best == nullptr || rank(w) < rank(*best)) best = &w;
    const WordFormInfo info = classify(*best);
    GrowthStep step;
    step.level = k;
    step.max_element = *best;
    DWord first_arg;
    switch (info.form) {
      case WordForm::pow: step.case_id = 1; first_arg = DWord::gen_x() * DWord::gen_h(); break;
      case WordForm::pow_x: step.case_id = 2; first_arg = DWord::gen_x() * DWord::gen_h(); break;
      case WordForm::h_pow: step.case_id = 3; first_arg = DWord::gen_x(); break;
      case WordForm::h_pow_x: step.case_id = 4; first_arg = DWord::gen_x(); break;
      default:
        throw std::logic_error("growth_certificate: maximal element has no positive power");
    }
    step.produced = word_apply(DWord::gen_h(), first_arg, *best);
    if (xh_power(step.produced) != info.i + 2)
      throw std::logic_error("growth_certificate: produced element power mismatch");
    const std::set<DWord>& next = layers[static_cast<std::size_t>(k)];
    if (layer.count(step.produced) != 0 || next.count(step.produced) == 0)
      throw std::logic_error("growth_certificate: produced element not in H^(k+1) \\ H^k");
    steps.push_back(step);
  }
  return steps;
}

}  // namespace binact
