#pragma once

// Kashiwara operators on letters, words and tableaux.
//
// Colors are signed integers: ī ↦ -i, 0, j ↦ j. Colors k < 0 follow the
// lower tensor product rule, colors k > 0 the upper rule, and color 0 acts
// on the leftmost letter equal to 1̄ or 1.

#include <optional>
#include <utility>

#include "tableau.hpp"

namespace kac {

struct EpsPhi {
  int eps = 0;
  int phi = 0;
};

/// ε_k and φ_k of a single letter (k ≠ 0).
inline EpsPhi letter_eps_phi(int k, const Letter& a) {
  if (k < 0) {
    const int i = -k;
    if (a.kind == LetterKind::Barred) {
      if (a.index == i + 1) return {0, 1};
      if (a.index == i) return {1, 0};
    } else if (a.kind == LetterKind::Dual) {
      if (a.index == i) return {0, 1};
      if (a.index == i + 1) return {1, 0};
    }
  } else if (k > 0) {
    if (a.kind == LetterKind::Unbarred) {
      if (a.index == k) return {0, 1};
      if (a.index == k + 1) return {1, 0};
    }
  } else {
    if (a == Letter::barred(1)) return {0, 1};
    if (a == Letter::unbarred(1)) return {1, 0};
  }
  return {0, 0};
}

/// Action on the crystal of the natural representation (and its dual on B+dual).
inline std::optional<Letter> letter_apply(int k, Dir d, const Letter& a) {
  EpsPhi ep = letter_eps_phi(k, a);
  if ((d == Dir::F ? ep.phi : ep.eps) == 0) return std::nullopt;
  if (k == 0) return d == Dir::F ? Letter::unbarred(1) : Letter::barred(1);
  const int step = d == Dir::F ? 1 : -1;
  Letter b = a;
  if (k < 0 && a.kind == LetterKind::Barred) b.index = static_cast<std::int8_t>(a.index - step);
  else b.index = static_cast<std::int8_t>(a.index + step);
  return b;
}

/// Outcome of signature bracketing on a tensor product b_0 ⊗ ... ⊗ b_{r-1}.
struct Bracket {
  int eps = 0;
  int phi = 0;
  int e_pos = -1;  // factor acted on by ẽ, or -1
  int f_pos = -1;  // factor acted on by f̃, or -1
};

/// Signature rule. With `lower` set, factor i contributes -^ε +^φ left to
/// right, "+ then -" pairs cancel, ẽ acts at the rightmost surviving -, f̃ at
/// the leftmost surviving +. The upper rule is the same on the reversed product.
template <class GetEpsPhi>
Bracket bracket(int count, bool lower, GetEpsPhi&& get) {
  Bracket out;
  int open = 0;         // unmatched + so far
  int first_open = -1;  // factor holding the leftmost unmatched +
  for (int t = 0; t < count; ++t) {
    const int i = lower ? t : count - 1 - t;
    EpsPhi ep = get(i);
    int minus = ep.eps;
    int cancel = std::min(minus, open);
    open -= cancel;
    minus -= cancel;
    if (open == 0) first_open = -1;
    if (minus > 0) {
      out.eps += minus;
      out.e_pos = i;
    }
    if (ep.phi > 0) {
      if (open == 0) first_open = i;
      open += ep.phi;
    }
  }
  out.phi = open;
  out.f_pos = first_open;
  return out;
}

namespace detail {

inline std::optional<std::size_t> color_zero_position(const std::vector<Letter>& w) {
  for (std::size_t p = 0; p < w.size(); ++p)
    if (w[p] == Letter::barred(1) || w[p] == Letter::unbarred(1)) return p;
  return std::nullopt;
}

}  // namespace detail

inline EpsPhi word_eps_phi(int k, const std::vector<Letter>& w) {
  if (k == 0) {
    auto p = detail::color_zero_position(w);
    return p ? letter_eps_phi(0, w[*p]) : EpsPhi{};
  }
  Bracket b = bracket(static_cast<int>(w.size()), k < 0,
                      [&](int i) { return letter_eps_phi(k, w[static_cast<std::size_t>(i)]); });
  return {b.eps, b.phi};
}

/// Position acted on by x̃_k in w, or -1 when the result is null.
inline int word_action_position(int k, Dir d, const std::vector<Letter>& w) {
  if (k == 0) {
    auto p = detail::color_zero_position(w);
    if (!p) return -1;
    return letter_apply(0, d, w[*p]) ? static_cast<int>(*p) : -1;
  }
  Bracket b = bracket(static_cast<int>(w.size()), k < 0,
                      [&](int i) { return letter_eps_phi(k, w[static_cast<std::size_t>(i)]); });
  return d == Dir::F ? b.f_pos : b.e_pos;
}

inline std::optional<std::vector<Letter>> apply_word(const Rank& r, int k, Dir d, std::vector<Letter> w) {
  require_color(r, k);
  int p = word_action_position(k, d, w);
  if (p < 0) return std::nullopt;
  w[static_cast<std::size_t>(p)] = *letter_apply(k, d, w[static_cast<std::size_t>(p)]);
  return w;
}

/// x̃_k on a tableau: read in the given admissible order, act, write back in place.
inline std::optional<Tableau> apply_tableau(const Rank& r, int k, Dir d, const Tableau& t,
                                            ReadingOrder order = ReadingOrder::ColumnsRightToLeft) {
  require_color(r, k);
  const auto& idx = t.shape().reading(order);
  const auto& e = t.entries();
  int p = -1;
  if (k == 0) {
    for (std::size_t q = 0; q < idx.size(); ++q) {
      const Letter& a = e[static_cast<std::size_t>(idx[q])];
      if (a == Letter::barred(1) || a == Letter::unbarred(1)) {
        if (letter_apply(0, d, a)) p = static_cast<int>(q);
        break;
      }
    }
  } else {
    Bracket b = bracket(static_cast<int>(idx.size()), k < 0, [&](int i) {
      return letter_eps_phi(k, e[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])]);
    });
    p = d == Dir::F ? b.f_pos : b.e_pos;
  }
  if (p < 0) return std::nullopt;
  Tableau out = t;
  auto cell = static_cast<std::size_t>(idx[static_cast<std::size_t>(p)]);
  out.entries()[cell] = *letter_apply(k, d, e[cell]);
  return out;
}

inline EpsPhi tableau_eps_phi(int k, const Tableau& t, ReadingOrder order = ReadingOrder::ColumnsRightToLeft) {
  const auto& idx = t.shape().reading(order);
  const auto& e = t.entries();
  if (k == 0) {
    for (int i : idx) {
      const Letter& a = e[static_cast<std::size_t>(i)];
      if (a == Letter::barred(1) || a == Letter::unbarred(1)) return letter_eps_phi(0, a);
    }
    return {};
  }
  Bracket b = bracket(static_cast<int>(idx.size()), k < 0, [&](int i) {
    return letter_eps_phi(k, e[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])]);
  });
  return {b.eps, b.phi};
}

/// Colors acting on an alphabet: B+ and B+dual carry I_{m|0}, B- carries I_{0|n}.
inline std::vector<int> alphabet_colors(const Rank& r, Alphabet alpha) {
  switch (alpha) {
    case Alphabet::BPlus:
    case Alphabet::BPlusDual: return r.even_colors();
    case Alphabet::BMinus: return r.odd_block_colors();
    case Alphabet::B: return r.colors();
  }
  return {};
}

}  // namespace kac
