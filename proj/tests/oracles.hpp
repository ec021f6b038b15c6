#pragma once

// Reference implementations used only by the tests. They share nothing with
// the library beyond the Letter/Rank value types: fillings are brute-forced
// cell by cell and tensor products are folded pairwise.

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "kac/base.hpp"

namespace oracle {

using kac::Letter;
using kac::LetterKind;
using kac::Rank;

/// Letters of an alphabet name in increasing order.
inline std::vector<Letter> alphabet(const Rank& r, const std::string& name) {
  std::vector<Letter> out;
  if (name == "B" || name == "B+")
    for (int i = r.m; i >= 1; --i) out.push_back(Letter::barred(i));
  if (name == "B" || name == "B-")
    for (int j = 1; j <= r.n; ++j) out.push_back(Letter::unbarred(j));
  if (name == "B+dual")
    for (int i = 1; i <= r.m; ++i) out.push_back(Letter::dual(i));
  return out;
}

/// Cells of outer/inner in rectangle coordinates. With `antinormal`, the
/// inner partition is cut from the top-left of the rows×cols rectangle.
inline std::vector<std::pair<int, int>> cells(const std::vector<int>& outer, const std::vector<int>& inner) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t r = 0; r < outer.size(); ++r) {
    int lo = r < inner.size() ? inner[r] : 0;
    for (int c = lo; c < outer[r]; ++c) out.emplace_back(static_cast<int>(r), c);
  }
  return out;
}

inline bool graded_less(const Letter& a, const Letter& b) { return a.order_key() < b.order_key(); }

/// Counts fillings satisfying: rows and columns weakly increase, even letters
/// never repeat down a column, odd letters never repeat along a row.
inline long long count_fillings(const std::vector<Letter>& alpha, const std::vector<std::pair<int, int>>& cs) {
  std::map<std::pair<int, int>, Letter> fill;
  long long count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == cs.size()) {
      ++count;
      return;
    }
    auto [r, c] = cs[i];
    for (const Letter& a : alpha) {
      bool ok = true;
      auto left = fill.find({r, c - 1});
      if (left != fill.end()) {
        if (graded_less(a, left->second)) ok = false;
        if (a == left->second && a.odd()) ok = false;
      }
      auto up = fill.find({r - 1, c});
      if (up != fill.end()) {
        if (graded_less(a, up->second)) ok = false;
        if (a == up->second && !a.odd()) ok = false;
      }
      if (!ok) continue;
      fill[{r, c}] = a;
      rec(i + 1);
      fill.erase({r, c});
    }
  };
  rec(0);
  return count;
}

/// Dimension of the gl_k irreducible of highest weight hw by counting
/// semistandard tableaux of the shifted shape over k letters.
inline long long gl_dimension(std::vector<int> hw) {
  if (hw.empty()) return 1;
  int low = *std::min_element(hw.begin(), hw.end());
  for (int& x : hw) x -= low;
  Rank r(static_cast<int>(hw.size()), 1);
  return count_fillings(alphabet(r, "B+"), cells(hw, {}));
}

struct EpsPhi {
  int eps = 0;
  int phi = 0;
};

/// Action site of x̃ on b_0 ⊗ … ⊗ b_{r-1}, folded as b_0 ⊗ (b_1 ⊗ (…)).
/// Lower rule: f̃ acts on b_1 iff φ(b_1) > ε(b_2), ẽ iff φ(b_1) ≥ ε(b_2).
/// Upper rule: f̃ acts on b_2 iff φ(b_2) > ε(b_1), ẽ iff φ(b_2) ≥ ε(b_1).
/// Returns -1 when the result is zero.
inline int tensor_site(const std::vector<EpsPhi>& f, bool lower, bool is_f) {
  std::function<std::pair<EpsPhi, int>(std::size_t)> go = [&](std::size_t i) -> std::pair<EpsPhi, int> {
    EpsPhi b1 = f[i];
    if (i + 1 == f.size()) {
      int site = (is_f ? b1.phi : b1.eps) > 0 ? static_cast<int>(i) : -1;
      return {b1, site};
    }
    auto [b2, rest_site] = go(i + 1);
    EpsPhi tot;
    int site;
    if (lower) {
      tot = {b1.eps + std::max(0, b2.eps - b1.phi), b2.phi + std::max(0, b1.phi - b2.eps)};
      bool first = is_f ? b1.phi > b2.eps : b1.phi >= b2.eps;
      site = first ? ((is_f ? b1.phi : b1.eps) > 0 ? static_cast<int>(i) : -1) : rest_site;
    } else {
      tot = {b2.eps + std::max(0, b1.eps - b2.phi), b1.phi + std::max(0, b2.phi - b1.eps)};
      bool second = is_f ? b2.phi > b1.eps : b2.phi >= b1.eps;
      site = second ? rest_site : ((is_f ? b1.phi : b1.eps) > 0 ? static_cast<int>(i) : -1);
    }
    return {tot, site};
  };
  if (f.empty()) return -1;
  return go(0).second;
}

/// ε, φ of a letter for a nonzero color, from the chain m̄ → … → 1̄, 1 → … → n
/// and 1̄∨ → … → m̄∨.
inline EpsPhi letter(int k, const Letter& a) {
  if (k < 0) {
    int i = -k;
    if (a == Letter::barred(i + 1) || a == Letter::dual(i)) return {0, 1};
    if (a == Letter::barred(i) || a == Letter::dual(i + 1)) return {1, 0};
  } else if (k > 0) {
    if (a == Letter::unbarred(k)) return {0, 1};
    if (a == Letter::unbarred(k + 1)) return {1, 0};
  }
  return {};
}

/// The letter after one step along color k (f) or against it (e).
inline Letter step(int k, bool is_f, const Letter& a) {
  Letter b = a;
  int d = is_f ? 1 : -1;
  if (k < 0 && a.kind == LetterKind::Barred) b.index = static_cast<std::int8_t>(a.index - d);
  else b.index = static_cast<std::int8_t>(a.index + d);
  return b;
}

/// x̃_k on a word for k ≠ 0 by pairwise folding.
inline std::optional<std::vector<Letter>> word_op(int k, bool is_f, std::vector<Letter> w) {
  std::vector<EpsPhi> f;
  for (const auto& a : w) f.push_back(letter(k, a));
  int s = tensor_site(f, k < 0, is_f);
  if (s < 0) return std::nullopt;
  w[static_cast<std::size_t>(s)] = step(k, is_f, w[static_cast<std::size_t>(s)]);
  return w;
}

}  // namespace oracle
