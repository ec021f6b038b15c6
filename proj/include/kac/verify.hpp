#pragma once

// Executable checks on enumerated instances, collected into reports.

#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "embedding.hpp"

namespace kac {

struct CheckResult {
  std::string name;
  bool pass = true;
  bool skipped = false;
  nlohmann::ordered_json witness;  // null when passing
  std::vector<std::pair<std::string, long long>> counts;
  long long ms = 0;

  void count(const std::string& key, long long v) { counts.emplace_back(key, v); }
  void fail(nlohmann::ordered_json w) {
    if (pass) witness = std::move(w);
    pass = false;
  }
};

struct VerificationReport {
  nlohmann::ordered_json instance;
  std::vector<CheckResult> checks;

  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

/// "ms" is written as 0 unless timing is requested, so reports stay byte-identical across runs.
inline nlohmann::ordered_json to_json(const CheckResult& c, bool timing = false) {
  nlohmann::ordered_json j;
  j["name"] = c.name;
  j["pass"] = c.pass;
  if (c.skipped) j["skipped"] = true;
  j["witness"] = c.witness;
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (const auto& [k, v] : c.counts) counts[k] = v;
  j["counts"] = counts;
  j["ms"] = timing ? c.ms : 0;
  return j;
}

inline nlohmann::ordered_json to_json(const VerificationReport& r, bool timing = false) {
  nlohmann::ordered_json j;
  j["instance"] = r.instance;
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c, timing));
  j["checks"] = checks;
  return j;
}

namespace detail {

template <class F>
CheckResult timed(const std::string& name, F&& body) {
  auto t0 = std::chrono::steady_clock::now();
  CheckResult c;
  c.name = name;
  body(c);
  c.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

inline nlohmann::ordered_json edge_json(int src, int color, int dst, const std::string& reason) {
  nlohmann::ordered_json j;
  j["edge"] = {src, color, dst};
  j["reason"] = reason;
  return j;
}

}  // namespace detail

/// Degree ≤ 1 per color in both directions, reciprocity of ẽ and f̃, the
/// weight ladder, closure (no escapes) and ẽ_0² = f̃_0² = 0.
template <class G>
CheckResult check_axioms(const G& g) {
  return detail::timed("axioms", [&](CheckResult& c) {
    const Rank& r = g.rank;
    std::vector<int> indeg_f(g.f_to.size(), 0), indeg_e(g.e_to.size(), 0);
    long long edges = 0, escapes = 0;
    for (int v = 0; v < g.size() && c.pass; ++v) {
      for (int k : g.colors) {
        const Weight alpha = simple_root(r, k);
        for (Dir d : {Dir::F, Dir::E}) {
          const int t = g.target(v, k, d);
          if (t == kNull) continue;
          if (t == kEscape) {
            ++escapes;
            c.fail(detail::edge_json(v, k, -1, std::string(to_string(d)) + " leaves the vertex set"));
            continue;
          }
          if (d == Dir::F) ++edges;
          int& deg = (d == Dir::F ? indeg_f : indeg_e)[static_cast<std::size_t>(t * g.num_colors() + g.slot(k))];
          if (++deg > 1) c.fail(detail::edge_json(v, k, t, std::string(to_string(d)) + " in-degree exceeds 1"));
          if (g.target(t, k, d == Dir::F ? Dir::E : Dir::F) != v) {
            c.fail(d == Dir::F ? detail::edge_json(v, k, t, "e does not reverse f")
                               : detail::edge_json(t, k, v, "f does not reverse e"));
          }
          const Weight expect = d == Dir::F ? g.weights[static_cast<std::size_t>(v)] - alpha
                                            : g.weights[static_cast<std::size_t>(v)] + alpha;
          if (g.weights[static_cast<std::size_t>(t)] != expect) {
            c.fail(detail::edge_json(v, k, t, "weight ladder broken"));
          }
          if (k == 0 && g.target(t, 0, d) != kNull) c.fail(detail::edge_json(v, 0, t, "square of a color-0 operator"));
        }
      }
    }
    c.count("vertices", g.size());
    c.count("edges", edges);
    c.count("escapes", escapes);
  });
}

/// One component; census of ẽ-killed vertices split into genuine and fake.
template <class G>
CheckResult check_connected(const G& g, const Weight& lambda) {
  return detail::timed("connected", [&](CheckResult& c) {
    UnionFind uf(g.size());
    int comps = g.size();
    for (int v = 0; v < g.size(); ++v)
      for (int k : g.colors)
        for (int t : {g.f(v, k), g.e(v, k)})
          if (t >= 0 && uf.unite(v, t)) --comps;
    if (comps != 1) {
      for (int v = 0; v < g.size(); ++v)
        if (uf.find(v) != uf.find(0)) {
          nlohmann::ordered_json w;
          w["vertex"] = v;
          w["reason"] = "not connected to vertex 0";
          c.fail(w);
          break;
        }
    }
    auto census = highest_weight_elements(g, lambda);
    c.count("vertices", g.size());
    c.count("components", comps);
    c.count("genuine_sources", static_cast<long long>(census.genuine.size()));
    c.count("fake_sources", static_cast<long long>(census.fake.size()));
    if (census.genuine.size() != 1) {
      nlohmann::ordered_json w;
      w["reason"] = "expected exactly one source of weight λ";
      w["genuine"] = census.genuine;
      c.fail(w);
    }
  });
}

namespace detail {

using WeightCount = std::map<std::vector<int>, long long>;

inline WeightCount convolve(const WeightCount& a, const WeightCount& b) {
  WeightCount out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      std::vector<int> w(wa.size());
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = wa[i] + wb[i];
      out[w] += ca * cb;
    }
  return out;
}

}  // namespace detail

/// |vertices| = 2^{mn}·#SST_{B+}·#SST_{B-} and equality of weight multisets with
/// the product of the odd-root power set and the two factor characters, all
/// factor counts coming from fill enumeration.
inline CheckResult check_character(const KacGraph& g) {
  return detail::timed("character", [&](CheckResult& c) {
    const KacCrystal& kc = g.crystal;
    const Rank& r = kc.rank();
    auto plus = enumerate_sst(r, kc.plus_alphabet(), kc.plus_shape());
    auto minus = enumerate_sst(r, Alphabet::BMinus, kc.minus_shape());
    const long long subsets = 1LL << (r.m * r.n);
    const long long expected = subsets * static_cast<long long>(plus.size()) * static_cast<long long>(minus.size());
    c.count("vertices", g.graph.size());
    c.count("expected", expected);
    c.count("sst_plus", static_cast<long long>(plus.size()));
    c.count("sst_minus", static_cast<long long>(minus.size()));
    if (g.graph.size() != expected) {
      nlohmann::ordered_json w;
      w["reason"] = "vertex count differs from 2^{mn}·#SST·#SST";
      c.fail(w);
    }
    detail::WeightCount ws, wp, wm, wo;
    for (long long s = 0; s < subsets; ++s) ws[weight(r, OddRootSet{static_cast<std::uint64_t>(s)}).coords()] += 1;
    for (const auto& t : plus) wp[t.weight(r).coords()] += 1;
    for (const auto& t : minus) wm[t.weight(r).coords()] += 1;
    wo[kc.offset().coords()] = 1;
    auto expect = detail::convolve(detail::convolve(detail::convolve(ws, wp), wm), wo);
    detail::WeightCount have;
    for (const auto& w : g.graph.weights) have[w.coords()] += 1;
    c.count("distinct_weights", static_cast<long long>(have.size()));
    if (have != expect) {
      for (const auto& [w, n] : expect) {
        auto it = have.find(w);
        long long got = it == have.end() ? 0 : it->second;
        if (got != n) {
          nlohmann::ordered_json wj;
          wj["reason"] = "weight multiplicity differs";
          wj["weight"] = to_string(Weight(r, w));
          wj["expected"] = n;
          wj["found"] = got;
          c.fail(wj);
          break;
        }
      }
      if (c.pass) {
        nlohmann::ordered_json wj;
        wj["reason"] = "graph has a weight absent from the character";
        c.fail(wj);
      }
    }
  });
}

/// λ_m̄ < 0 and λ_n > 0.
inline bool in_rho_window(const Weight& lam) { return lam.bar(lam.m()) < 0 && lam.unbar(lam.n()) > 0; }

/// ρ is a weight-preserving bijection onto 𝒦_λ that commutes with every x̃_k.
inline CheckResult check_rho_commutation(const Rank& r, const Weight& lam, int ell = 0,
                                         SigmaRule rule = SigmaRule::Standard) {
  return detail::timed("rho", [&](CheckResult& c) {
    if (!in_rho_window(lam)) {
      throw Error(ErrorCode::PreconditionViolated, "ρ check needs λ_m̄ < 0 and λ_n > 0, got " + to_string(lam));
    }
    if (ell <= 0) ell = KacCrystal::default_ell(lam);
    if (ell + lam.bar(1) < r.n) {
      throw Error(ErrorCode::PreconditionViolated, "ρ check needs ℓ + λ_1̄ ≥ n, got ℓ = " + std::to_string(ell));
    }
    KacCrystal kc = KacCrystal::dual(r, lam, ell);
    auto dom = kc.enumerate();
    auto kappa = enumerate_kappa(kc);
    std::unordered_set<KappaElement, KappaElementHash> target(kappa.begin(), kappa.end());
    std::unordered_set<KappaElement, KappaElementHash> image;
    c.count("ell", ell);
    c.count("domain", static_cast<long long>(dom.size()));
    c.count("kappa", static_cast<long long>(kappa.size()));
    long long compared = 0;
    for (const auto& x : dom) {
      KappaElement y = rho(kc, x);
      auto wit = [&](const std::string& reason) {
        nlohmann::ordered_json w;
        w["reason"] = reason;
        w["element"] = to_json(r, x);
        return w;
      };
      if (!target.count(y)) c.fail(wit("ρ(x) is not in 𝒦_λ"));
      if (!image.insert(y).second) c.fail(wit("ρ is not injective"));
      if (kappa_weight(r, y) != kc.weight(x)) c.fail(wit("ρ changes the weight"));
      if (rho_inv(kc, y) != x) c.fail(wit("ρ⁻¹∘ρ ≠ id"));
      for (int k : r.colors())
        for (Dir d : {Dir::E, Dir::F}) {
          auto lhs_src = apply_kac(r, k, d, x);
          std::optional<KappaElement> lhs;
          if (lhs_src) lhs = rho(kc, *lhs_src);
          auto rhs = apply_kappa(kc, k, d, y, rule);
          ++compared;
          if (lhs != rhs) {
            auto w = wit("ρ does not commute with the operator");
            w["color"] = k;
            w["dir"] = to_string(d);
            w["lhs_null"] = !lhs.has_value();
            w["rhs_null"] = !rhs.has_value();
            c.fail(w);
          }
        }
      if (!c.pass) break;
    }
    c.count("comparisons", compared);
    if (c.pass && image.size() != kappa.size()) {
      nlohmann::ordered_json w;
      w["reason"] = "ρ is not onto 𝒦_λ";
      c.fail(w);
    }
  });
}

/// ξ_λ is injective, weight preserving, intertwines operators on non-null
/// values, and π̄_λ inverts it with |image| = #SST_B(λ°).
inline CheckResult check_compatibility(const Rank& r, const Weight& lam, std::size_t cap = kDefaultVertexCap) {
  return detail::timed("compat", [&](CheckResult& c) {
    PolynomialEmbedding emb(r, lam);
    auto dom = emb.domain();
    const KacCrystal& kc = emb.target();
    std::unordered_set<KacElement, KacElementHash> image;
    long long intertwined = 0;
    c.count("sst_hook", static_cast<long long>(dom.size()));
    for (const auto& t : dom) {
      KacElement b = emb.xi(t);
      auto wit = [&](const std::string& reason) {
        nlohmann::ordered_json w;
        w["reason"] = reason;
        w["tableau"] = to_json(t);
        return w;
      };
      if (!kc.contains(b)) c.fail(wit("ξ(T) is not a Kac crystal element"));
      if (kc.weight(b) != t.weight(r)) c.fail(wit("ξ changes the weight"));
      if (!image.insert(b).second) c.fail(wit("ξ is not injective"));
      auto back = emb.pi_bar(b);
      if (!back || *back != t) c.fail(wit("π̄(ξ(T)) ≠ T"));
      for (int k : r.colors())
        for (Dir d : {Dir::E, Dir::F}) {
          auto t2 = apply_tableau(r, k, d, t);
          if (!t2) continue;
          ++intertwined;
          auto lhs = emb.xi(*t2);
          auto rhs = apply_kac(r, k, d, b);
          if (!rhs || *rhs != lhs) {
            auto w = wit("ξ does not intertwine the operator");
            w["color"] = k;
            w["dir"] = to_string(d);
            c.fail(w);
          }
        }
      if (!c.pass) break;
    }
    c.count("image", static_cast<long long>(image.size()));
    c.count("intertwinings", intertwined);
    if (c.pass && kc.cardinality() <= cap) {
      long long preimages = 0;
      for (const auto& b : kc.enumerate())
        if (emb.pi_bar(b)) ++preimages;
      c.count("pi_bar_defined", preimages);
      if (preimages != static_cast<long long>(dom.size())) {
        nlohmann::ordered_json w;
        w["reason"] = "π̄ is defined on a set of the wrong size";
        c.fail(w);
      }
    }
  });
}

/// Compares the table-driven graph operators with the direct triple operators
/// on `samples` vertices drawn with a seeded generator.
inline CheckResult check_spot(const KacGraph& g, int samples, std::uint64_t seed) {
  return detail::timed("spot", [&](CheckResult& c) {
    std::uint64_t state = seed ^ 0x9e3779b97f4a7c15ULL;
    auto next = [&] {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      return state;
    };
    const Rank& r = g.crystal.rank();
    for (int i = 0; i < samples && c.pass; ++i) {
      int v = static_cast<int>(next() % static_cast<std::uint64_t>(g.graph.size()));
      KacElement x = g.element(v);
      for (int k : r.colors())
        for (Dir d : {Dir::E, Dir::F}) {
          auto y = apply_kac(r, k, d, x);
          int t = g.graph.target(v, k, d);
          bool ok = y ? (t >= 0 && g.element(t) == *y) : t == kNull;
          if (!ok) c.fail(detail::edge_json(v, k, t, "table operator differs from the direct one"));
        }
    }
    c.count("samples", samples);
  });
}

// ---------------------------------------------------------------------------
// Instances and sweeps

struct CheckSelection {
  bool axioms = true, connected = true, character = true, rho = true, compat = true;
  int spot = 0;
  std::uint64_t seed = 0;
  std::size_t cap = kDefaultVertexCap;
  bool corrupt = false;  // negative control: corrupted σ rule and a reversed edge

  static CheckSelection parse(const std::string& list) {
    CheckSelection s;
    s.axioms = s.connected = s.character = s.rho = s.compat = false;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item == "axioms") s.axioms = true;
      else if (item == "connected") s.connected = true;
      else if (item == "character") s.character = true;
      else if (item == "rho") s.rho = true;
      else if (item == "compat") s.compat = true;
      else if (item == "all") s.axioms = s.connected = s.character = s.rho = s.compat = true;
      else throw Error(ErrorCode::ParseError, "unknown check '" + item + "'");
    }
    return s;
  }
};

struct Instance {
  Rank rank;
  Weight lambda;
};

/// Reverses the first edge of the graph in place: b →ᵏ b' becomes b' →ᵏ b
/// without touching the ẽ table.
template <class G>
bool reverse_first_edge(G& g) {
  for (int v = 0; v < g.size(); ++v)
    for (int k : g.colors) {
      int t = g.f(v, k);
      if (t < 0) continue;
      g.f(v, k) = kNull;
      g.f(t, k) = v;
      return true;
    }
  return false;
}

inline VerificationReport verify_instance(const Instance& inst, const CheckSelection& sel) {
  const Rank& r = inst.rank;
  const Weight& lam = inst.lambda;
  VerificationReport rep;
  rep.instance["rank"] = {r.m, r.n};
  rep.instance["lambda"] = to_string(lam);
  rep.instance["flags"] = {{"typical", is_typical(r, lam)}, {"polynomial", lam.is_polynomial_dominant()},
                           {"rho_window", in_rho_window(lam)}, {"corrupt", sel.corrupt}};
  KacCrystal kc = KacCrystal::standard(r, lam);
  const unsigned long long card = kc.cardinality();
  const bool fits = card <= sel.cap;
  if (!fits) {
    CheckResult c;
    c.name = "size";
    c.skipped = true;
    c.count("cardinality", static_cast<long long>(std::min<unsigned long long>(card, LLONG_MAX)));
    c.count("cap", static_cast<long long>(sel.cap));
    rep.checks.push_back(c);
  }
  if (fits && (sel.axioms || sel.connected)) {
    KacGraph full = full_graph(kc, sel.cap);
    if (sel.corrupt) reverse_first_edge(full.graph);
    if (sel.axioms) rep.checks.push_back(check_axioms(full.graph));
    if (sel.connected) rep.checks.push_back(check_connected(full.graph, lam));
  }
  if (fits && (sel.character || sel.spot > 0)) {
    KacGraph g = generate_graph(kc, sel.cap);
    if (sel.character) rep.checks.push_back(check_character(g));
    if (sel.spot > 0) rep.checks.push_back(check_spot(g, sel.spot, sel.seed));
  }
  if (sel.rho && in_rho_window(lam) && fits) {
    rep.checks.push_back(
        check_rho_commutation(r, lam, 0, sel.corrupt ? SigmaRule::Corrupted : SigmaRule::Standard));
  }
  if (sel.compat && lam.is_polynomial_dominant() && fits) rep.checks.push_back(check_compatibility(r, lam, sel.cap));
  return rep;
}

/// Dominant weights with every coordinate in [lo, hi].
inline std::vector<Weight> dominant_weights(const Rank& r, int lo, int hi) {
  std::vector<Weight> out;
  std::vector<int> coords(static_cast<std::size_t>(r.size()));
  std::function<void(int)> rec = [&](int pos) {
    if (pos == r.size()) {
      out.emplace_back(r, coords);
      return;
    }
    // both blocks are stored non-increasing: λ_m̄ ≥ … ≥ λ_1̄ and λ_1 ≥ … ≥ λ_n
    int top = hi;
    if (pos > 0 && pos < r.m) top = coords[static_cast<std::size_t>(pos) - 1];
    if (pos > r.m) top = coords[static_cast<std::size_t>(pos) - 1];
    for (int v = top; v >= lo; --v) {
      coords[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

inline std::vector<Instance> default_sweep() {
  std::vector<Instance> out;
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 2}}) {
    Rank r(m, n);
    for (auto& w : dominant_weights(r, -2, 4)) out.push_back({r, w});
  }
  return out;
}

inline int default_threads() {
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

/// Runs every instance; report order follows instance order.
inline std::vector<VerificationReport> run_sweep(const std::vector<Instance>& insts, const CheckSelection& sel,
                                                 int threads = 1) {
  std::vector<VerificationReport> out(insts.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < insts.size();) {
      try {
        out[i] = verify_instance(insts[i], sel);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  threads = std::max(1, std::min<int>(threads, static_cast<int>(insts.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace kac
