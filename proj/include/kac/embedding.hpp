#pragma once

// Shift isomorphisms by transport of structure, hook tableau splitting, and
// the embedding ξ_λ of the polynomial crystal SST_B(λ°) into the Kac crystal.

#include <mutex>

#include "rsk_bridge.hpp"

namespace kac {

using TableauGraph = CrystalGraph<Tableau, TableauHash>;

/// Tableau crystal generated from `source` under the alphabet's colors.
inline TableauGraph factor_graph(const Rank& r, Alphabet alpha, const Tableau& source) {
  return generate_closure<Tableau, TableauHash>(
      r, alphabet_colors(r, alpha), source, [&](int k, Dir d, const Tableau& t) { return apply_tableau(r, k, d, t); },
      [&](const Tableau& t) { return t.weight(r); });
}

/// Vertex bijection between two colored graphs obtained by matching their
/// unique sources and following equally colored edges.
struct VertexTransport {
  std::vector<int> map;  // src vertex → dst vertex
  Weight shift;          // wt(map(b)) - wt(b)
};

template <class G>
VertexTransport transport_vertices(const G& src, const G& dst, const std::optional<Weight>& expected_shift = {}) {
  auto source_of = [](const G& g, const char* which) {
    std::vector<int> srcs;
    for (int v = 0; v < g.size(); ++v)
      if (std::all_of(g.colors.begin(), g.colors.end(), [&](int k) { return g.e(v, k) == kNull; })) srcs.push_back(v);
    if (srcs.size() != 1) {
      throw Error(ErrorCode::MultipleSources,
                  std::string(which) + " graph has " + std::to_string(srcs.size()) + " source vertices");
    }
    return srcs.front();
  };
  if (src.colors != dst.colors) throw Error(ErrorCode::NotIsomorphic, "color sets differ");
  if (src.size() != dst.size()) {
    throw Error(ErrorCode::NotIsomorphic,
                "vertex counts differ: " + std::to_string(src.size()) + " vs " + std::to_string(dst.size()));
  }
  const int s0 = source_of(src, "source"), d0 = source_of(dst, "target");
  VertexTransport out;
  out.shift = dst.weights[static_cast<std::size_t>(d0)] - src.weights[static_cast<std::size_t>(s0)];
  if (expected_shift && *expected_shift != out.shift) {
    throw Error(ErrorCode::NotIsomorphic, "source weights differ by " + to_string(out.shift) + ", expected " +
                                              to_string(*expected_shift));
  }
  out.map.assign(static_cast<std::size_t>(src.size()), -1);
  out.map[static_cast<std::size_t>(s0)] = d0;
  std::vector<int> queue{s0};
  std::vector<char> used(static_cast<std::size_t>(dst.size()), 0);
  used[static_cast<std::size_t>(d0)] = 1;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const int v = queue[h];
    const int w = out.map[static_cast<std::size_t>(v)];
    if (dst.weights[static_cast<std::size_t>(w)] != src.weights[static_cast<std::size_t>(v)] + out.shift) {
      throw Error(ErrorCode::NotIsomorphic, "weight mismatch at vertex " + std::to_string(v));
    }
    for (int k : src.colors)
      for (Dir d : {Dir::F, Dir::E}) {
        const int a = src.target(v, k, d), b = dst.target(w, k, d);
        auto edge = [&] {
          return "edge " + std::string(to_string(d)) + "_" + std::to_string(k) + " at source vertex " +
                 std::to_string(v);
        };
        if ((a >= 0) != (b >= 0)) throw Error(ErrorCode::NotIsomorphic, edge());
        if (a < 0) continue;
        int& slot = out.map[static_cast<std::size_t>(a)];
        if (slot == -1) {
          if (used[static_cast<std::size_t>(b)]) throw Error(ErrorCode::NotIsomorphic, edge());
          slot = b;
          used[static_cast<std::size_t>(b)] = 1;
          queue.push_back(a);
        } else if (slot != b) {
          throw Error(ErrorCode::NotIsomorphic, edge());
        }
      }
  }
  if (static_cast<int>(queue.size()) != src.size()) throw Error(ErrorCode::NotIsomorphic, "source graph is not connected");
  return out;
}

/// A transported bijection between two tableau crystals.
class TransportIso {
 public:
  TransportIso(TableauGraph src, TableauGraph dst, const std::optional<Weight>& expected_shift = {})
      : src_(std::move(src)), dst_(std::move(dst)) {
    VertexTransport t = transport_vertices(src_, dst_, expected_shift);
    shift_ = t.shift;
    fwd_ = std::move(t.map);
    bwd_.assign(fwd_.size(), -1);
    for (std::size_t v = 0; v < fwd_.size(); ++v) bwd_[static_cast<std::size_t>(fwd_[v])] = static_cast<int>(v);
  }

  const TableauGraph& source() const { return src_; }
  const TableauGraph& target() const { return dst_; }
  const Weight& shift() const { return shift_; }
  int size() const { return src_.size(); }

  const Tableau& apply(const Tableau& t) const { return lookup(src_, dst_, fwd_, t); }
  const Tableau& apply_inverse(const Tableau& t) const { return lookup(dst_, src_, bwd_, t); }
  std::optional<Tableau> try_apply(const Tableau& t) const { return try_lookup(src_, dst_, fwd_, t); }
  std::optional<Tableau> try_apply_inverse(const Tableau& t) const { return try_lookup(dst_, src_, bwd_, t); }

 private:
  static const Tableau& lookup(const TableauGraph& from, const TableauGraph& to, const std::vector<int>& m,
                               const Tableau& t) {
    auto v = from.find(t);
    if (!v) throw Error(ErrorCode::NotInImage, "tableau " + to_string(t) + " is not in the transport domain");
    return to.vertices[static_cast<std::size_t>(m[static_cast<std::size_t>(*v)])];
  }
  static std::optional<Tableau> try_lookup(const TableauGraph& from, const TableauGraph& to,
                                           const std::vector<int>& m, const Tableau& t) {
    auto v = from.find(t);
    if (!v) return std::nullopt;
    return to.vertices[static_cast<std::size_t>(m[static_cast<std::size_t>(*v)])];
  }

  TableauGraph src_, dst_;
  Weight shift_;
  std::vector<int> fwd_, bwd_;
};

inline TransportIso transport_iso(TableauGraph src, TableauGraph dst, const std::optional<Weight>& shift = {}) {
  return TransportIso(std::move(src), std::move(dst), shift);
}

/// σ^{-ℓ}: SST_{B+}(η) → SST_{B+dual}((ℓ^m)/η); apply_inverse is σ^{ℓ}.
inline TransportIso sigma_transport(const Rank& r, int ell, const Partition& eta) {
  auto plus = make_shape(eta);
  auto dual = rectangle_complement(ell, r.m, eta);
  return transport_iso(factor_graph(r, Alphabet::BPlus, highest_weight_plus(r, plus)),
                       factor_graph(r, Alphabet::BPlusDual, highest_weight_dual(r, dual)), -ell * delta_plus(r));
}

/// ς^k = id × σ^k × τ^k from the standard model of λ to that of λ + kδ.
class KacShift {
 public:
  KacShift(const Rank& r, const Weight& lam, int k)
      : src_(KacCrystal::standard(r, lam)),
        dst_(KacCrystal::standard(r, lam + k * delta(r))),
        plus_(factor_graph(r, src_.plus_alphabet(), src_.plus_source()),
              factor_graph(r, dst_.plus_alphabet(), dst_.plus_source())),
        minus_(factor_graph(r, Alphabet::BMinus, src_.minus_source()),
               factor_graph(r, Alphabet::BMinus, dst_.minus_source())) {
    const Weight total = plus_.shift() + minus_.shift() + dst_.offset() - src_.offset();
    if (total != k * delta(r)) throw Error(ErrorCode::NotIsomorphic, "shift weight " + to_string(total));
  }

  const KacCrystal& source() const { return src_; }
  const KacCrystal& target() const { return dst_; }
  KacElement apply(const KacElement& x) const { return {x.s, plus_.apply(x.t_plus), minus_.apply(x.t_minus)}; }
  KacElement apply_inverse(const KacElement& x) const {
    return {x.s, plus_.apply_inverse(x.t_plus), minus_.apply_inverse(x.t_minus)};
  }

 private:
  KacCrystal src_, dst_;
  TransportIso plus_, minus_;
};

// ---------------------------------------------------------------------------
// Hook tableaux

struct HookTableauSplit {
  Tableau t_plus_top;   // B+ on η
  Tableau t_minus_top;  // B- on μ/η
  Tableau t_below;      // B- on ν
  friend bool operator==(const HookTableauSplit&, const HookTableauSplit&) = default;
};

/// Splits T ∈ SST_B(λ°) into T⁺_{≤m}, T⁻_{≤m} and T_{>m}.
inline HookTableauSplit split_hook(const Rank& r, const Tableau& t) {
  const Shape& sh = t.shape();
  if (!sh.is_straight()) throw Error(ErrorCode::MalformedHookTableau, "hook tableaux have straight shape");
  Partition mu, eta, nu;
  for (int row = 0; row < sh.rows(); ++row) {
    int barred = 0;
    for (int c = 0; c < sh.row_end(row); ++c) {
      if (t.at(row, c).kind == LetterKind::Barred) {
        if (c != barred) throw Error(ErrorCode::MalformedHookTableau, "barred letter after an unbarred one");
        ++barred;
      } else if (t.at(row, c).kind != LetterKind::Unbarred) {
        throw Error(ErrorCode::MalformedHookTableau, "letter outside B");
      }
    }
    if (row < r.m) {
      mu.push_back(sh.row_end(row));
      eta.push_back(barred);
    } else {
      if (barred > 0) {
        throw Error(ErrorCode::MalformedHookTableau, "barred letter below row m (row " + std::to_string(row) + ")");
      }
      nu.push_back(sh.row_end(row));
    }
  }
  if (!is_partition(eta)) throw Error(ErrorCode::MalformedHookTableau, "barred entries do not form a partition");
  HookTableauSplit out{Tableau(Alphabet::BPlus, make_shape(eta)), Tableau(Alphabet::BMinus, make_shape(mu, eta)),
                       Tableau(Alphabet::BMinus, make_shape(nu))};
  for (auto [row, c] : out.t_plus_top.shape().cells()) out.t_plus_top.at(row, c) = t.at(row, c);
  for (auto [row, c] : out.t_minus_top.shape().cells()) out.t_minus_top.at(row, c) = t.at(row, c);
  for (auto [row, c] : out.t_below.shape().cells()) out.t_below.at(row, c) = t.at(row + r.m, c);
  return out;
}

/// Inverse of split_hook. Throws ShapeViolation when the pieces do not fit a
/// straight shape; semistandardness is not checked here.
inline Tableau reassemble(const Rank& r, const HookTableauSplit& s) {
  Partition outer;
  std::vector<std::vector<Letter>> rows;
  const Shape& mid = s.t_minus_top.shape();
  const Shape& top = s.t_plus_top.shape();
  for (int row = 0; row < r.m; ++row) {
    std::vector<Letter> cells;
    if (row < top.rows()) cells = s.t_plus_top.row(row);
    if (row < mid.rows()) {
      if (mid.row_begin(row) != static_cast<int>(cells.size())) {
        throw Error(ErrorCode::ShapeViolation, "pieces do not meet in row " + std::to_string(row));
      }
      auto more = s.t_minus_top.row(row);
      cells.insert(cells.end(), more.begin(), more.end());
    }
    outer.push_back(static_cast<int>(cells.size()));
    rows.push_back(std::move(cells));
  }
  for (int row = 0; row < s.t_below.shape().rows(); ++row) {
    rows.push_back(s.t_below.row(row));
    outer.push_back(static_cast<int>(rows.back().size()));
  }
  if (!is_partition(outer)) throw Error(ErrorCode::ShapeViolation, "reassembled shape is not a partition");
  return Tableau::from_rows(Alphabet::B, outer, {}, rows);
}

// ---------------------------------------------------------------------------
// The embedding ξ_λ and its partial inverse

class PolynomialEmbedding {
 public:
  PolynomialEmbedding(const Rank& r, const Weight& lam)
      : rank_(r),
        lambda_(lam),
        hook_(hook_bijection_inv(r, lam)),
        ell_(part(hook_, 0)),
        target_(KacCrystal::standard(r, lam)),
        shifted_(KacCrystal::dual(r, lam - ell_ * delta_plus(r), ell_)),
        cache_(std::make_shared<Cache>()) {}

  const Rank& rank() const { return rank_; }
  const Weight& lambda() const { return lambda_; }
  const Partition& hook_shape() const { return hook_; }
  int ell() const { return ell_; }
  const KacCrystal& target() const { return target_; }
  const KacCrystal& shifted() const { return shifted_; }

  /// σ^{-ℓ} on SST_{B+}(η), cached per η.
  const TransportIso& sigma(const Partition& eta) const {
    Partition key = trimmed(eta);
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->sigma.find(key);
    if (it == cache_->sigma.end()) {
      it = cache_->sigma.emplace(key, std::make_unique<TransportIso>(sigma_transport(rank_, ell_, key))).first;
    }
    return *it->second;
  }

  /// ι_λ(T) = (σ^{-ℓ}(T⁺_{≤m}), T⁻_{≤m}, T_{>m}) ∈ 𝒦_{λ-ℓδ₊}.
  KappaElement iota(const Tableau& t) const {
    check_domain(t);
    HookTableauSplit s = split_hook(rank_, t);
    return {sigma(s.t_plus_top.shape().outer()).apply(s.t_plus_top), s.t_minus_top, s.t_below};
  }

  KacElement xi(const Tableau& t) const {
    KacElement y = rho_inv(shifted_, iota(t));
    y.t_plus = sigma(hook_mu()).apply_inverse(y.t_plus);
    return y;
  }

  /// The tableau T with ξ_λ(T) = b, or nullopt when b is outside the image.
  std::optional<Tableau> pi_bar(const KacElement& b) const {
    if (!target_.contains(b)) return std::nullopt;
    auto u = sigma(hook_mu()).try_apply(b.t_plus);
    if (!u) return std::nullopt;
    try {
      KappaElement k = rho(shifted_, KacElement{b.s, *u, b.t_minus});
      const Partition eta = k.p.shape().inner();
      auto tp = sigma(eta).try_apply_inverse(k.p);
      if (!tp) return std::nullopt;
      Tableau t = reassemble(rank_, {*tp, k.q, k.v});
      if (!validate(rank_, t) || t.shape().outer() != hook_ || xi(t) != b) return std::nullopt;
      return t;
    } catch (const Error&) {
      return std::nullopt;
    }
  }

  /// Every T ∈ SST_B(λ°).
  std::vector<Tableau> domain() const { return enumerate_sst(rank_, Alphabet::B, make_shape(hook_)); }

 private:
  struct Cache {
    std::mutex mu;
    std::map<Partition, std::unique_ptr<TransportIso>> sigma;
  };

  Partition hook_mu() const {
    Partition mu;
    for (int i = 0; i < rank_.m; ++i) mu.push_back(part(hook_, i));
    return trimmed(mu);
  }

  void check_domain(const Tableau& t) const {
    if (t.alphabet() != Alphabet::B || t.shape().outer() != hook_ || !t.shape().is_straight()) {
      throw Error(ErrorCode::ShapeViolation, "tableau shape differs from λ° = (" + to_string(hook_) + ")");
    }
    if (!validate(rank_, t)) throw Error(ErrorCode::ShapeViolation, "tableau is not semistandard over B");
  }

  Rank rank_;
  Weight lambda_;
  Partition hook_;
  int ell_;
  KacCrystal target_, shifted_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace kac
