#pragma once

// Skew dual RSK between the dual-model Kac crystal and the tableau model
// 𝒦_λ = ⊔_{η⊆μ} SST_{B+dual}((ℓ^m)/η) × SST_{B-}(μ/η) × SST_{B-}(ν).

#include <map>

#include "kac_crystal.hpp"

namespace kac {

struct KappaElement {
  Tableau p;  // B+dual on (ℓ^m)/η
  Tableau q;  // B- on μ/η
  Tableau v;  // B- on ν
  friend bool operator==(const KappaElement&, const KappaElement&) = default;
};

struct KappaElementHash {
  std::size_t operator()(const KappaElement& x) const noexcept {
    TableauHash th;
    return th(x.p) * 131 + th(x.q) * 17 + th(x.v);
  }
};

/// w(S) = ī_1∨ … ī_r∨ for S = {β_1 ≺ … ≺ β_r}, with the paired columns j_k.
struct RootWord {
  std::vector<Letter> word;
  std::vector<int> cols;
};

inline RootWord root_word(const Rank& r, const OddRootSet& s) {
  RootWord w;
  for (const auto& b : sort_roots(r, s, RootOrder::Prec)) {
    w.word.push_back(Letter::dual(b.i));
    w.cols.push_back(b.j);
  }
  return w;
}

namespace detail {

inline void require_dual(const KacCrystal& c) {
  if (c.model() != KacModel::Dual) throw Error(ErrorCode::PreconditionViolated, "ρ needs the dual model");
}

}  // namespace detail

/// ρ(S, U, V) = (U ← w(S), recording tableau, V).
inline KappaElement rho(const KacCrystal& c, const KacElement& x) {
  detail::require_dual(c);
  const Rank& r = c.rank();
  RootWord w = root_word(r, x.s);
  Tableau p = x.t_plus;
  std::map<std::pair<int, int>, int> record;
  for (std::size_t k = w.word.size(); k-- > 0;) {
    auto ins = antinormal_insert(p, w.word[k]);
    p = std::move(ins.tableau);
    record[ins.cell] = w.cols[k];
  }
  Tableau q(Alphabet::BMinus, make_shape(c.mu(), p.shape().inner()));
  if (q.size() != static_cast<int>(record.size())) throw std::logic_error("recording tableau does not fill μ/η");
  for (auto [rc, j] : record) q.at(rc.first, rc.second) = Letter::unbarred(j);
  return {std::move(p), std::move(q), x.t_minus};
}

/// Inverse of ρ. Undoes the cell of Q holding the smallest entry, topmost
/// among equal entries; recovered roots must arrive in strictly ≺-increasing order.
inline KacElement rho_inv(const KacCrystal& c, const KappaElement& x) {
  detail::require_dual(c);
  const Rank& r = c.rank();
  Tableau p = x.p;
  std::map<std::pair<int, int>, int> q;
  for (auto [row, col] : x.q.shape().cells()) q[{row, col}] = x.q.at(row, col).index;
  OddRootSet s;
  std::optional<OddRoot> prev;
  while (!q.empty()) {
    auto best = q.begin();
    for (auto it = q.begin(); it != q.end(); ++it)
      if (it->second < best->second || (it->second == best->second && it->first.first < best->first.first)) best = it;
    auto [p2, a] = antinormal_uninsert(p, best->first);
    OddRoot b{a.index, best->second};
    if (prev && !(prev->j < b.j || (prev->j == b.j && prev->i < b.i))) {
      throw Error(ErrorCode::NotInImage, "recovered roots are not ≺-increasing");
    }
    prev = b;
    s.set(r, b.i, b.j);
    p = std::move(p2);
    q.erase(best);
  }
  if (!(*p.shape_ptr() == *c.plus_shape())) throw Error(ErrorCode::NotInImage, "P does not shrink back to (ℓ^m)/μ");
  return {s, std::move(p), x.v};
}

inline Weight kappa_weight(const Rank& r, const KappaElement& x) {
  return x.p.weight(r) + x.q.weight(r) + x.v.weight(r);
}

/// Negative-control switch for the 0-operator: Corrupted treats an empty
/// column as "·" instead of "+".
enum class SigmaRule { Standard, Corrupted };

namespace detail {

inline std::optional<KappaElement> apply_kappa_zero(const KacCrystal& c, Dir d, const KappaElement& x,
                                                    SigmaRule rule) {
  const Shape& ps = x.p.shape();
  const int ell = c.ell();
  const Partition mu = c.mu();
  const Partition muc = conjugate(trimmed(mu));
  for (int k = 1; k <= ell; ++k) {
    const int col = ell - k;
    const int top = ps.col_top(col);
    const bool p_empty = top == ps.col_bottom(col);
    const bool q_has = part(muc, col) > top;
    char sigma = '.';
    if (p_empty) {
      sigma = rule == SigmaRule::Standard ? '+' : '.';
    } else {
      const Letter a = x.p.at(top, col);
      if (a > Letter::dual(1)) sigma = '+';
      else if (q_has && x.q.at(top, col) == Letter::unbarred(1)) sigma = '-';
    }
    if (sigma == '.') continue;
    if (sigma == '+') {
      if (d == Dir::E) return std::nullopt;
      const int row = top - 1;
      Partition eta = remove_inner_cell(ps, row, col);
      KappaElement out{reshape_inner(x.p, eta, {{row, col, Letter::dual(1)}}), Tableau(Alphabet::BMinus, make_shape(mu, eta)), x.v};
      for (auto [rr, cc] : out.q.shape().cells())
        out.q.at(rr, cc) = (rr == row && cc == col) ? Letter::unbarred(1) : x.q.at(rr, cc);
      return out;
    }
    if (d == Dir::F) return std::nullopt;
    Partition eta = add_inner_cell(ps, top, col);
    KappaElement out{reshape_inner(x.p, eta, {}), Tableau(Alphabet::BMinus, make_shape(mu, eta)), x.v};
    for (auto [rr, cc] : out.q.shape().cells()) out.q.at(rr, cc) = x.q.at(rr, cc);
    return out;
  }
  return std::nullopt;
}

}  // namespace detail

/// x̃_k on 𝒦_λ: P for k < 0, the upper rule on Q ⊗ V for k > 0, the σ rule for k = 0.
inline std::optional<KappaElement> apply_kappa(const KacCrystal& c, int k, Dir d, const KappaElement& x,
                                               SigmaRule rule = SigmaRule::Standard) {
  detail::require_dual(c);
  const Rank& r = c.rank();
  require_color(r, k);
  if (k == 0) return detail::apply_kappa_zero(c, d, x, rule);
  KappaElement out = x;
  if (k < 0) {
    auto p = apply_tableau(r, k, d, x.p);
    if (!p) return std::nullopt;
    out.p = std::move(*p);
    return out;
  }
  int which = two_factor_choice(k, d, tableau_eps_phi(k, x.q), tableau_eps_phi(k, x.v));
  Tableau& t = which == 1 ? out.q : out.v;
  auto t2 = apply_tableau(r, k, d, t);
  if (!t2) return std::nullopt;
  t = std::move(*t2);
  return out;
}

/// Partitions η ⊆ μ, in lexicographic order.
inline std::vector<Partition> subpartitions(const Partition& mu) {
  std::vector<Partition> out;
  Partition cur(mu.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int cap) {
    if (i == mu.size()) {
      out.push_back(trimmed(cur));
      return;
    }
    for (int v = 0; v <= std::min(cap, mu[i]); ++v) {
      cur[i] = v;
      rec(i + 1, v);
    }
  };
  rec(0, mu.empty() ? 0 : mu[0]);
  return out;
}

/// Every element of 𝒦_λ.
inline std::vector<KappaElement> enumerate_kappa(const KacCrystal& c) {
  detail::require_dual(c);
  const Rank& r = c.rank();
  const Partition mu = c.mu();
  auto vs = enumerate_sst(r, Alphabet::BMinus, c.minus_shape());
  std::vector<KappaElement> out;
  for (const auto& eta : subpartitions(mu)) {
    auto ps = enumerate_sst(r, Alphabet::BPlusDual, rectangle_complement(c.ell(), r.m, eta));
    auto qs = enumerate_sst(r, Alphabet::BMinus, make_shape(mu, eta));
    for (const auto& p : ps)
      for (const auto& q : qs)
        for (const auto& v : vs) out.push_back({p, q, v});
  }
  return out;
}

inline nlohmann::ordered_json to_json(const KacCrystal& c, const KappaElement& x) {
  nlohmann::ordered_json j;
  j["ell"] = c.ell();
  j["mu"] = trimmed(c.mu());
  j["P"] = to_json(x.p);
  j["Q"] = to_json(x.q);
  j["V"] = to_json(x.v);
  return j;
}

}  // namespace kac
