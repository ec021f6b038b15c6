#pragma once

// The crystal of the Kac module K(λ): triples (S, T+, T-) with S a set of
// negative odd roots, T+ in the even-block tableau crystal and T- in the
// odd-block one.

#include <array>
#include <bit>
#include <climits>
#include <map>
#include <memory>

#include "graph.hpp"
#include "word_crystal.hpp"

namespace kac {

/// The root -ε_ī + ε_j.
struct OddRoot {
  int i = 1;
  int j = 1;
  friend bool operator==(const OddRoot&, const OddRoot&) = default;
};

inline Weight weight(const Rank& r, const OddRoot& b) { return Weight::eps(r, b.j) - Weight::eps_bar(r, b.i); }

/// S ⊆ Φ⁻₁ as an m×n bit matrix, bit (i-1)·n + (j-1) for -ε_ī + ε_j.
struct OddRootSet {
  std::uint64_t bits = 0;

  static int bit(const Rank& r, int i, int j) { return (i - 1) * r.n + (j - 1); }
  bool has(const Rank& r, int i, int j) const { return (bits >> bit(r, i, j)) & 1U; }
  void set(const Rank& r, int i, int j, bool on = true) {
    const std::uint64_t mask = std::uint64_t{1} << bit(r, i, j);
    bits = on ? (bits | mask) : (bits & ~mask);
  }
  int size() const { return std::popcount(bits); }

  static OddRootSet of(const Rank& r, const std::vector<OddRoot>& roots) {
    OddRootSet s;
    for (const auto& b : roots) {
      if (b.i < 1 || b.i > r.m || b.j < 1 || b.j > r.n) throw Error(ErrorCode::RankMismatch, "root out of range");
      s.set(r, b.i, b.j);
    }
    return s;
  }

  friend bool operator==(const OddRootSet&, const OddRootSet&) = default;
};

inline Weight weight(const Rank& r, const OddRootSet& s) {
  Weight w(r);
  for (int i = 1; i <= r.m; ++i)
    for (int j = 1; j <= r.n; ++j)
      if (s.has(r, i, j)) {
        w.bar(i) -= 1;
        w.unbar(j) += 1;
      }
  return w;
}

enum class RootOrder {
  Prec,        // ascending j, then ascending i
  PrecPrime,   // ascending i, then descending j
  PrecDouble,  // ascending i, then ascending j
};

inline std::vector<OddRoot> sort_roots(const Rank& r, const OddRootSet& s, RootOrder order) {
  std::vector<OddRoot> out;
  switch (order) {
    case RootOrder::Prec:
      for (int j = 1; j <= r.n; ++j)
        for (int i = 1; i <= r.m; ++i)
          if (s.has(r, i, j)) out.push_back({i, j});
      break;
    case RootOrder::PrecPrime:
      for (int i = 1; i <= r.m; ++i)
        for (int j = r.n; j >= 1; --j)
          if (s.has(r, i, j)) out.push_back({i, j});
      break;
    case RootOrder::PrecDouble:
      for (int i = 1; i <= r.m; ++i)
        for (int j = 1; j <= r.n; ++j)
          if (s.has(r, i, j)) out.push_back({i, j});
      break;
  }
  return out;
}

/// ε_k, φ_k of a single root for k ≠ 0: color ī moves row i to row i+1,
/// color j moves column j to column j+1.
inline EpsPhi root_eps_phi(int k, const OddRoot& b) {
  if (k < 0) {
    if (b.i == -k) return {0, 1};
    if (b.i == -k + 1) return {1, 0};
  } else if (k > 0) {
    if (b.j == k) return {0, 1};
    if (b.j == k + 1) return {1, 0};
  }
  return {0, 0};
}

namespace detail {

struct RootSignature {
  std::vector<OddRoot> roots;
  Bracket bracket;
};

inline RootSignature root_signature(const Rank& r, int k, const OddRootSet& s) {
  RootSignature sig;
  sig.roots = sort_roots(r, s, k < 0 ? RootOrder::Prec : RootOrder::PrecPrime);
  sig.bracket = kac::bracket(static_cast<int>(sig.roots.size()), k < 0, [&](int p) {
    return root_eps_phi(k, sig.roots[static_cast<std::size_t>(p)]);
  });
  return sig;
}

}  // namespace detail

inline EpsPhi odd_root_set_eps_phi(const Rank& r, int k, const OddRootSet& s) {
  if (k == 0) return s.has(r, 1, 1) ? EpsPhi{1, 0} : EpsPhi{0, 1};
  auto sig = detail::root_signature(r, k, s);
  return {sig.bracket.eps, sig.bracket.phi};
}

inline std::optional<OddRootSet> apply_odd_root_set(const Rank& r, int k, Dir d, const OddRootSet& s) {
  require_color(r, k);
  if (k == 0) {
    if (s.has(r, 1, 1) == (d == Dir::F)) return std::nullopt;
    OddRootSet out = s;
    out.set(r, 1, 1, d == Dir::F);
    return out;
  }
  auto sig = detail::root_signature(r, k, s);
  int p = d == Dir::F ? sig.bracket.f_pos : sig.bracket.e_pos;
  if (p < 0) return std::nullopt;
  OddRoot from = sig.roots[static_cast<std::size_t>(p)];
  OddRoot to = from;
  const int step = d == Dir::F ? 1 : -1;
  if (k < 0) to.i += step;
  else to.j += step;
  if (s.has(r, to.i, to.j)) throw std::logic_error("odd root operator produced a repeated root");
  OddRootSet out = s;
  out.set(r, from.i, from.j, false);
  out.set(r, to.i, to.j, true);
  return out;
}

/// Which factor of b1 ⊗ b2 the operator x̃_k acts on (1 or 2): the lower rule
/// for k < 0, the upper rule for k > 0.
inline int two_factor_choice(int k, Dir d, EpsPhi b1, EpsPhi b2) {
  if (k < 0) {
    if (d == Dir::F) return b1.phi > b2.eps ? 1 : 2;
    return b1.phi >= b2.eps ? 1 : 2;
  }
  if (d == Dir::F) return b2.phi > b1.eps ? 2 : 1;
  return b2.phi >= b1.eps ? 2 : 1;
}

inline EpsPhi two_factor_eps_phi(int k, EpsPhi b1, EpsPhi b2) {
  if (k > 0) std::swap(b1, b2);
  return {b1.eps + std::max(0, b2.eps - b1.phi), b2.phi + std::max(0, b1.phi - b2.eps)};
}

struct KacElement {
  OddRootSet s;
  Tableau t_plus;
  Tableau t_minus;
  friend bool operator==(const KacElement&, const KacElement&) = default;
};

struct KacElementHash {
  std::size_t operator()(const KacElement& x) const noexcept {
    TableauHash th;
    return std::hash<std::uint64_t>()(x.s.bits) * 31 + th(x.t_plus) * 7 + th(x.t_minus);
  }
};

/// x̃_k on a triple: S ⊗ T+ for k < 0, S ⊗ T- for k > 0, S alone for k = 0.
inline std::optional<KacElement> apply_kac(const Rank& r, int k, Dir d, const KacElement& x) {
  require_color(r, k);
  if (k == 0) {
    auto s = apply_odd_root_set(r, 0, d, x.s);
    if (!s) return std::nullopt;
    return KacElement{*s, x.t_plus, x.t_minus};
  }
  const Tableau& t = k < 0 ? x.t_plus : x.t_minus;
  int which = two_factor_choice(k, d, odd_root_set_eps_phi(r, k, x.s), tableau_eps_phi(k, t));
  KacElement out = x;
  if (which == 1) {
    auto s = apply_odd_root_set(r, k, d, x.s);
    if (!s) return std::nullopt;
    out.s = *s;
  } else {
    auto t2 = apply_tableau(r, k, d, t);
    if (!t2) return std::nullopt;
    (k < 0 ? out.t_plus : out.t_minus) = std::move(*t2);
  }
  return out;
}

inline EpsPhi kac_eps_phi(const Rank& r, int k, const KacElement& x) {
  if (k == 0) return odd_root_set_eps_phi(r, 0, x.s);
  return two_factor_eps_phi(k, odd_root_set_eps_phi(r, k, x.s), tableau_eps_phi(k, k < 0 ? x.t_plus : x.t_minus));
}

namespace detail {

inline unsigned long long saturating_mul(unsigned long long a, unsigned long long b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  return p > ULLONG_MAX ? ULLONG_MAX : static_cast<unsigned long long>(p);
}

}  // namespace detail

enum class KacModel { Standard, Dual };

/// A realization of 𝒫(Φ⁻₁) × 𝓑^{λ₊} × 𝓑^{λ₋}.
///
/// Standard: T+ ∈ SST_{B+}(λ₊ - c₊) and T- ∈ SST_{B-}((λ₋ - c₋)'), where
/// c₊ = min(λ_1̄, 0), c₋ = min(λ_n, 0) and the weight carries c₊δ₊ + c₋(ε_1+…+ε_n).
/// Dual: T+ ∈ SST_{B+dual}((ℓ^m)/μ) with μ_i = ℓ + λ_{\overline{m-i+1}}.
class KacCrystal {
 public:
  static KacCrystal standard(const Rank& r, const Weight& lam) {
    check(r, lam);
    KacCrystal c(r, lam, KacModel::Standard, 0);
    const int cp = std::min(lam.bar(1), 0);
    const int cm = std::min(lam.unbar(r.n), 0);
    Partition mu, nu;
    for (int i = r.m; i >= 1; --i) mu.push_back(lam.bar(i) - cp);
    for (int j = 1; j <= r.n; ++j) nu.push_back(lam.unbar(j) - cm);
    c.plus_shape_ = make_shape(mu);
    c.minus_shape_ = make_shape(conjugate(trimmed(nu)));
    c.offset_ = cp * delta_plus(r) - cm * delta_minus(r);
    return c;
  }

  static KacCrystal dual(const Rank& r, const Weight& lam, int ell) {
    check(r, lam);
    if (lam.bar(r.m) > 0 || ell + lam.bar(1) < 0 || lam.unbar(r.n) < 0 || ell < 0) {
      throw Error(ErrorCode::PreconditionViolated,
                  "dual model needs λ_m̄ ≤ 0, ℓ + λ_1̄ ≥ 0 and λ_n ≥ 0 (λ = " + to_string(lam) +
                      ", ℓ = " + std::to_string(ell) + ")");
    }
    KacCrystal c(r, lam, KacModel::Dual, ell);
    c.plus_alpha_ = Alphabet::BPlusDual;
    c.plus_shape_ = rectangle_complement(ell, r.m, c.mu());
    Partition nu;
    for (int j = 1; j <= r.n; ++j) nu.push_back(lam.unbar(j));
    c.minus_shape_ = make_shape(conjugate(trimmed(nu)));
    c.offset_ = Weight(r);
    return c;
  }

  /// Smallest ℓ ≥ 1 with ℓ + λ_1̄ ≥ n. Every row of μ then holds n cells, which
  /// is the room U ← w(S) needs when S is all of Φ⁻₁.
  static int default_ell(const Weight& lam) { return std::max(1, lam.n() - lam.bar(1)); }

  const Rank& rank() const { return rank_; }
  const Weight& lambda() const { return lambda_; }
  KacModel model() const { return model_; }
  int ell() const { return ell_; }
  Alphabet plus_alphabet() const { return plus_alpha_; }
  const ShapePtr& plus_shape() const { return plus_shape_; }
  const ShapePtr& minus_shape() const { return minus_shape_; }
  const Weight& offset() const { return offset_; }

  /// μ = (ℓ + λ_m̄, …, ℓ + λ_1̄); meaningful for the dual model.
  Partition mu() const {
    Partition mu;
    for (int i = rank_.m; i >= 1; --i) mu.push_back(ell_ + lambda_.bar(i));
    return mu;
  }

  Tableau plus_source() const {
    return plus_alpha_ == Alphabet::BPlus ? highest_weight_plus(rank_, plus_shape_)
                                          : highest_weight_dual(rank_, plus_shape_);
  }
  Tableau minus_source() const { return highest_weight_minus(rank_, minus_shape_); }
  KacElement highest_weight_element() const { return {OddRootSet{}, plus_source(), minus_source()}; }

  Weight weight(const KacElement& x) const {
    return kac::weight(rank_, x.s) + x.t_plus.weight(rank_) + x.t_minus.weight(rank_) + offset_;
  }

  std::optional<KacElement> apply(int k, Dir d, const KacElement& x) const { return apply_kac(rank_, k, d, x); }

  bool contains(const KacElement& x) const {
    const int mn = rank_.m * rank_.n;
    if (mn < 64 && (x.s.bits >> mn) != 0) return false;
    return x.t_plus.alphabet() == plus_alpha_ && *x.t_plus.shape_ptr() == *plus_shape_ &&
           x.t_minus.alphabet() == Alphabet::BMinus && *x.t_minus.shape_ptr() == *minus_shape_ &&
           validate(rank_, x.t_plus) && validate(rank_, x.t_minus);
  }

  /// 2^{mn} · dim V(λ₊) · dim V(λ₋) by the Weyl dimension formula (saturating).
  unsigned long long cardinality() const {
    std::vector<int> plus, minus;
    for (int i = rank_.m; i >= 1; --i) plus.push_back(lambda_.bar(i));
    for (int j = 1; j <= rank_.n; ++j) minus.push_back(lambda_.unbar(j));
    const int mn = rank_.m * rank_.n;
    unsigned long long pow = mn >= 64 ? ULLONG_MAX : (1ULL << mn);
    return detail::saturating_mul(detail::saturating_mul(pow, weyl_dimension(plus)), weyl_dimension(minus));
  }

  /// Every element, S outermost, tableaux in enumeration order.
  std::vector<KacElement> enumerate() const {
    auto plus = enumerate_sst(rank_, plus_alpha_, plus_shape_);
    auto minus = enumerate_sst(rank_, Alphabet::BMinus, minus_shape_);
    std::vector<KacElement> out;
    const std::uint64_t subsets = std::uint64_t{1} << (rank_.m * rank_.n);
    for (std::uint64_t s = 0; s < subsets; ++s)
      for (const auto& a : plus)
        for (const auto& b : minus) out.push_back({OddRootSet{s}, a, b});
    return out;
  }

 private:
  KacCrystal(const Rank& r, const Weight& lam, KacModel model, int ell)
      : rank_(r), lambda_(lam), model_(model), ell_(ell) {}

  static void check(const Rank& r, const Weight& lam) {
    if (lam.m() != r.m || lam.n() != r.n) throw Error(ErrorCode::RankMismatch, "λ does not match the rank");
    if (!lam.is_dominant()) throw Error(ErrorCode::NotDominant, "λ = " + to_string(lam) + " is not dominant");
  }

  Rank rank_;
  Weight lambda_;
  KacModel model_;
  int ell_;
  Alphabet plus_alpha_ = Alphabet::BPlus;
  ShapePtr plus_shape_, minus_shape_;
  Weight offset_;
};

// ---------------------------------------------------------------------------
// Table-driven graphs

/// A finite tableau crystal with its operators tabulated.
struct FactorTable {
  Rank rank;
  Alphabet alpha = Alphabet::BPlus;
  std::vector<int> colors;
  std::vector<Tableau> elems;
  std::unordered_map<Tableau, int, TableauHash> index;
  std::vector<Weight> weights;
  std::vector<EpsPhi> ep;       // [elem * colors + slot]
  std::vector<int> e_to, f_to;  // kNull, kEscape or an element index

  int size() const { return static_cast<int>(elems.size()); }
  int slot(int k) const { return k - colors.front(); }
  std::size_t at(int a, int k) const { return static_cast<std::size_t>(a * static_cast<int>(colors.size()) + slot(k)); }

  static FactorTable from_list(const Rank& r, Alphabet alpha, std::vector<Tableau> elems) {
    FactorTable t;
    t.rank = r;
    t.alpha = alpha;
    t.colors = alphabet_colors(r, alpha);
    t.elems = std::move(elems);
    for (int a = 0; a < t.size(); ++a) t.index.emplace(t.elems[static_cast<std::size_t>(a)], a);
    const std::size_t nc = t.colors.size();
    t.ep.resize(t.elems.size() * nc);
    t.e_to.assign(t.elems.size() * nc, kNull);
    t.f_to.assign(t.elems.size() * nc, kNull);
    for (int a = 0; a < t.size(); ++a) {
      const Tableau& x = t.elems[static_cast<std::size_t>(a)];
      t.weights.push_back(x.weight(r));
      for (int k : t.colors) {
        t.ep[t.at(a, k)] = tableau_eps_phi(k, x);
        for (Dir d : {Dir::E, Dir::F}) {
          auto y = apply_tableau(r, k, d, x);
          if (!y) continue;
          auto it = t.index.find(*y);
          (d == Dir::E ? t.e_to : t.f_to)[t.at(a, k)] = it == t.index.end() ? kEscape : it->second;
        }
      }
    }
    return t;
  }

  /// Closure of a source tableau under its colors.
  static FactorTable closure(const Rank& r, Alphabet alpha, const Tableau& source) {
    auto g = generate_closure<Tableau, TableauHash>(
        r, alphabet_colors(r, alpha), source,
        [&](int k, Dir d, const Tableau& t) { return apply_tableau(r, k, d, t); },
        [&](const Tableau& t) { return t.weight(r); });
    return from_list(r, alpha, std::move(g.vertices));
  }

  /// All semistandard fillings, enumerated independently of the operators.
  static FactorTable enumerated(const Rank& r, Alphabet alpha, const ShapePtr& shape) {
    return from_list(r, alpha, enumerate_sst(r, alpha, shape));
  }
};

/// Vertex of a table-driven Kac graph: S and indices into the two factor tables.
struct KacIndex {
  std::uint64_t s = 0;
  std::int32_t a = 0;
  std::int32_t b = 0;
  friend bool operator==(const KacIndex&, const KacIndex&) = default;
};

struct KacIndexHash {
  std::size_t operator()(const KacIndex& x) const noexcept {
    std::uint64_t h = x.s * 0x9e3779b97f4a7c15ULL;
    h ^= (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x.a)) << 32) | static_cast<std::uint32_t>(x.b);
    h *= 0xff51afd7ed558ccdULL;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

/// x̃_k on an indexed triple. A factor image outside its table is reported by
/// an index equal to kEscape.
inline std::optional<KacIndex> apply_kac_indexed(const Rank& r, int k, Dir d, const KacIndex& x,
                                                 const FactorTable& plus, const FactorTable& minus) {
  OddRootSet s{x.s};
  if (k == 0) {
    auto s2 = apply_odd_root_set(r, 0, d, s);
    if (!s2) return std::nullopt;
    return KacIndex{s2->bits, x.a, x.b};
  }
  const FactorTable& tab = k < 0 ? plus : minus;
  const int idx = k < 0 ? x.a : x.b;
  int which = two_factor_choice(k, d, odd_root_set_eps_phi(r, k, s), tab.ep[tab.at(idx, k)]);
  KacIndex out = x;
  if (which == 1) {
    auto s2 = apply_odd_root_set(r, k, d, s);
    if (!s2) return std::nullopt;
    out.s = s2->bits;
  } else {
    int t = (d == Dir::F ? tab.f_to : tab.e_to)[tab.at(idx, k)];
    if (t == kNull) return std::nullopt;
    (k < 0 ? out.a : out.b) = t;
  }
  return out;
}

struct KacGraph {
  KacCrystal crystal;
  std::shared_ptr<const FactorTable> plus, minus;
  CrystalGraph<KacIndex, KacIndexHash> graph;

  KacElement element(int v) const {
    const KacIndex& x = graph.vertices[static_cast<std::size_t>(v)];
    return {OddRootSet{x.s}, plus->elems[static_cast<std::size_t>(x.a)], minus->elems[static_cast<std::size_t>(x.b)]};
  }
  std::optional<int> find(const KacElement& x) const {
    auto a = plus->index.find(x.t_plus);
    auto b = minus->index.find(x.t_minus);
    if (a == plus->index.end() || b == minus->index.end()) return std::nullopt;
    return graph.find(KacIndex{x.s.bits, a->second, b->second});
  }
};

namespace detail {

inline auto indexed_op(const Rank& r, const FactorTable& plus, const FactorTable& minus) {
  return [&r, &plus, &minus](int k, Dir d, const KacIndex& x) { return apply_kac_indexed(r, k, d, x, plus, minus); };
}

inline auto indexed_weight(const KacCrystal& c, const FactorTable& plus, const FactorTable& minus) {
  return [&c, &plus, &minus](const KacIndex& x) {
    return weight(c.rank(), OddRootSet{x.s}) + plus.weights[static_cast<std::size_t>(x.a)] +
           minus.weights[static_cast<std::size_t>(x.b)] + c.offset();
  };
}

}  // namespace detail

inline constexpr std::size_t kDefaultVertexCap = 200000;

/// BFS closure from the highest weight element under every ẽ_k and f̃_k.
inline KacGraph generate_graph(const KacCrystal& c, std::size_t cap = kDefaultVertexCap) {
  const unsigned long long card = c.cardinality();
  if (card > cap) throw SizeCapExceeded(card, cap);
  const Rank& r = c.rank();
  auto plus = std::make_shared<FactorTable>(FactorTable::closure(r, c.plus_alphabet(), c.plus_source()));
  auto minus = std::make_shared<FactorTable>(FactorTable::closure(r, Alphabet::BMinus, c.minus_source()));
  KacGraph out{c, plus, minus, {}};
  out.graph = generate_closure<KacIndex, KacIndexHash>(r, r.colors(), KacIndex{0, 0, 0},
                                                       detail::indexed_op(r, *plus, *minus),
                                                       detail::indexed_weight(c, *plus, *minus), cap);
  return out;
}

inline KacGraph generate_graph(const Rank& r, const Weight& lam, std::size_t cap = kDefaultVertexCap) {
  return generate_graph(KacCrystal::standard(r, lam), cap);
}

/// Graph on every triple, with tableau factors from brute-force enumeration.
/// Operator images outside the set are recorded as kEscape.
inline KacGraph full_graph(const KacCrystal& c, std::size_t cap = kDefaultVertexCap) {
  const Rank& r = c.rank();
  auto plus = std::make_shared<FactorTable>(FactorTable::enumerated(r, c.plus_alphabet(), c.plus_shape()));
  auto minus = std::make_shared<FactorTable>(FactorTable::enumerated(r, Alphabet::BMinus, c.minus_shape()));
  const std::uint64_t subsets = std::uint64_t{1} << (r.m * r.n);
  const unsigned long long card =
      detail::saturating_mul(detail::saturating_mul(subsets, static_cast<unsigned long long>(plus->size())),
                             static_cast<unsigned long long>(minus->size()));
  if (card > cap) throw SizeCapExceeded(card, cap);
  std::vector<KacIndex> verts;
  verts.reserve(card);
  for (std::uint64_t s = 0; s < subsets; ++s)
    for (int a = 0; a < plus->size(); ++a)
      for (int b = 0; b < minus->size(); ++b) verts.push_back({s, a, b});
  KacGraph out{c, plus, minus, {}};
  out.graph = build_graph<KacIndex, KacIndexHash>(r, r.colors(), std::move(verts), detail::indexed_op(r, *plus, *minus),
                                                  detail::indexed_weight(c, *plus, *minus));
  return out;
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::ordered_json odd_root_set_json(const Rank& r, const OddRootSet& s) {
  auto rows = nlohmann::ordered_json::array();
  for (int i = 1; i <= r.m; ++i) {
    auto row = nlohmann::ordered_json::array();
    for (int j = 1; j <= r.n; ++j) row.push_back(s.has(r, i, j) ? 1 : 0);
    rows.push_back(row);
  }
  return rows;
}

inline nlohmann::ordered_json to_json(const Rank& r, const KacElement& x) {
  nlohmann::ordered_json j;
  j["S"] = odd_root_set_json(r, x.s);
  j["Tplus"] = to_json(x.t_plus);
  j["Tminus"] = to_json(x.t_minus);
  return j;
}

template <class Json>
KacElement kac_element_from_json(const Rank& r, const Json& j) {
  try {
    KacElement x;
    const auto& rows = j.at("S");
    if (static_cast<int>(rows.size()) != r.m) throw Error(ErrorCode::RankMismatch, "S must have m rows");
    for (int i = 1; i <= r.m; ++i) {
      const auto& row = rows.at(static_cast<std::size_t>(i - 1));
      if (static_cast<int>(row.size()) != r.n) throw Error(ErrorCode::RankMismatch, "S rows must have n entries");
      for (int jj = 1; jj <= r.n; ++jj) {
        int v = row.at(static_cast<std::size_t>(jj - 1)).template get<int>();
        if (v != 0 && v != 1) throw Error(ErrorCode::ParseError, "S entries must be 0 or 1");
        x.s.set(r, i, jj, v == 1);
      }
    }
    x.t_plus = tableau_from_json(j.at("Tplus"));
    x.t_minus = tableau_from_json(j.at("Tminus"));
    return x;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("Kac element JSON: ") + e.what());
  }
}

inline nlohmann::ordered_json to_json(const KacGraph& g) {
  const Rank& r = g.crystal.rank();
  nlohmann::ordered_json j;
  j["rank"] = {r.m, r.n};
  j["lambda"] = to_string(g.crystal.lambda());
  auto verts = nlohmann::ordered_json::array();
  for (int v = 0; v < g.graph.size(); ++v) {
    KacElement x = g.element(v);
    nlohmann::ordered_json jv;
    jv["id"] = v;
    jv["wt"] = to_string(g.graph.weights[static_cast<std::size_t>(v)]);
    jv["S"] = odd_root_set_json(r, x.s);
    jv["Tplus"] = to_json(x.t_plus);
    jv["Tminus"] = to_json(x.t_minus);
    verts.push_back(std::move(jv));
  }
  j["vertices"] = std::move(verts);
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : g.graph.edges()) edges.push_back({e.src, e.color, e.dst});
  j["edges"] = std::move(edges);
  return j;
}

}  // namespace kac
