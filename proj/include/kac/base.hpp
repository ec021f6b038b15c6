#pragma once

// Ground types for gl(m|n) combinatorics: ranks, letters of the graded
// alphabets, weights, roots and partitions.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kac {

enum class ErrorCode {
  HookViolation,
  NotDominant,
  RankMismatch,
  ShapeViolation,
  InsertionOverflow,
  ColorOutOfRange,
  SizeCapExceeded,
  PreconditionViolated,
  NotInImage,
  NotIsomorphic,
  MultipleSources,
  MalformedHookTableau,
  ParseError,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::HookViolation: return "HookViolation";
    case ErrorCode::NotDominant: return "NotDominant";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::ShapeViolation: return "ShapeViolation";
    case ErrorCode::InsertionOverflow: return "InsertionOverflow";
    case ErrorCode::ColorOutOfRange: return "ColorOutOfRange";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotInImage: return "NotInImage";
    case ErrorCode::NotIsomorphic: return "NotIsomorphic";
    case ErrorCode::MultipleSources: return "MultipleSources";
    case ErrorCode::MalformedHookTableau: return "MalformedHookTableau";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class SizeCapExceeded : public Error {
 public:
  SizeCapExceeded(unsigned long long cardinality, unsigned long long cap)
      : Error(ErrorCode::SizeCapExceeded,
              "crystal has " + std::to_string(cardinality) + " vertices, cap is " +
                  std::to_string(cap)),
        cardinality_(cardinality) {}

  unsigned long long cardinality() const noexcept { return cardinality_; }

 private:
  unsigned long long cardinality_;
};

/// Direction of a Kashiwara operator: raising (e) or lowering (f).
enum class Dir : std::uint8_t { E, F };

inline const char* to_string(Dir d) { return d == Dir::E ? "e" : "f"; }

/// Sizes of the even and odd parts of gl(m|n).
struct Rank {
  int m = 1;
  int n = 1;

  Rank() = default;
  Rank(int m_, int n_) : m(m_), n(n_) {
    if (m < 1 || n < 1) {
      throw Error(ErrorCode::PreconditionViolated, "rank requires m >= 1 and n >= 1");
    }
    if (m * n > 64) {
      throw Error(ErrorCode::PreconditionViolated, "m*n must not exceed 64");
    }
  }

  int size() const { return m + n; }
  int min_color() const { return -(m - 1); }
  int max_color() const { return n - 1; }
  bool has_color(int k) const { return k >= min_color() && k <= max_color(); }

  /// Colors of I in increasing order: -(m-1), ..., -1, 0, 1, ..., n-1.
  std::vector<int> colors() const {
    std::vector<int> out;
    for (int k = min_color(); k <= max_color(); ++k) out.push_back(k);
    return out;
  }
  /// Colors of I_{m|0} (the even block of barred indices).
  std::vector<int> even_colors() const {
    std::vector<int> out;
    for (int k = min_color(); k < 0; ++k) out.push_back(k);
    return out;
  }
  /// Colors of I_{0|n}.
  std::vector<int> odd_block_colors() const {
    std::vector<int> out;
    for (int k = 1; k <= max_color(); ++k) out.push_back(k);
    return out;
  }

  friend bool operator==(const Rank&, const Rank&) = default;
};

inline void require_color(const Rank& r, int k) {
  if (!r.has_color(k)) {
    throw Error(ErrorCode::ColorOutOfRange,
                "color " + std::to_string(k) + " not in I for (" + std::to_string(r.m) + "|" +
                    std::to_string(r.n) + ")");
  }
}

// ---------------------------------------------------------------------------
// Letters

enum class LetterKind : std::uint8_t { Barred, Unbarred, Dual };

/// A letter of [m|n] (barred i, unbarred j) or of the dual alphabet (i^vee).
struct Letter {
  LetterKind kind = LetterKind::Barred;
  std::int8_t index = 1;

  static constexpr Letter barred(int i) { return {LetterKind::Barred, static_cast<std::int8_t>(i)}; }
  static constexpr Letter unbarred(int j) {
    return {LetterKind::Unbarred, static_cast<std::int8_t>(j)};
  }
  static constexpr Letter dual(int i) { return {LetterKind::Dual, static_cast<std::int8_t>(i)}; }

  constexpr bool odd() const { return kind == LetterKind::Unbarred; }

  // m̄ < ... < 1̄ < 1 < ... < n, and 1∨ < ... < m∨ on the dual alphabet.
  constexpr int order_key() const { return kind == LetterKind::Barred ? -index : index; }

  constexpr std::uint8_t code() const {
    return static_cast<std::uint8_t>((static_cast<unsigned>(kind) << 6) | static_cast<unsigned>(index));
  }

  friend constexpr bool operator==(const Letter&, const Letter&) = default;
  friend constexpr bool operator<(const Letter& a, const Letter& b) {
    return a.order_key() < b.order_key();
  }
  friend constexpr bool operator<=(const Letter& a, const Letter& b) {
    return a.order_key() <= b.order_key();
  }
  friend constexpr bool operator>(const Letter& a, const Letter& b) { return b < a; }
  friend constexpr bool operator>=(const Letter& a, const Letter& b) { return b <= a; }
};

inline std::string to_string(const Letter& a) {
  switch (a.kind) {
    case LetterKind::Barred: return "b" + std::to_string(a.index);
    case LetterKind::Unbarred: return std::to_string(a.index);
    case LetterKind::Dual: return "d" + std::to_string(a.index);
  }
  return "?";
}

inline Letter parse_letter(std::string_view s) {
  auto bad = [&] { return Error(ErrorCode::ParseError, "bad letter '" + std::string(s) + "'"); };
  if (s.empty()) throw bad();
  LetterKind kind = LetterKind::Unbarred;
  std::string_view digits = s;
  if (s.front() == 'b') {
    kind = LetterKind::Barred;
    digits = s.substr(1);
  } else if (s.front() == 'd') {
    kind = LetterKind::Dual;
    digits = s.substr(1);
  }
  if (digits.empty() || digits.size() > 2) throw bad();
  int v = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') throw bad();
    v = v * 10 + (c - '0');
  }
  if (v < 1) throw bad();
  return {kind, static_cast<std::int8_t>(v)};
}

// ---------------------------------------------------------------------------
// Weights

/// Integer weight over [m|n], stored as (λ_m̄, ..., λ_1̄, λ_1, ..., λ_n).
class Weight {
 public:
  Weight() = default;
  explicit Weight(const Rank& r) : m_(r.m), n_(r.n), c_(static_cast<std::size_t>(r.size()), 0) {}
  Weight(const Rank& r, std::vector<int> coords) : m_(r.m), n_(r.n), c_(std::move(coords)) {
    if (static_cast<int>(c_.size()) != r.size()) {
      throw Error(ErrorCode::RankMismatch, "weight has wrong number of coordinates");
    }
  }

  static Weight eps_bar(const Rank& r, int i) {
    Weight w(r);
    w.bar(i) = 1;
    return w;
  }
  static Weight eps(const Rank& r, int j) {
    Weight w(r);
    w.unbar(j) = 1;
    return w;
  }
  /// ε of a letter; dual letters carry -ε_ī.
  static Weight of_letter(const Rank& r, const Letter& a) {
    Weight w(r);
    w.add_letter(a);
    return w;
  }

  Rank rank() const { return Rank(m_, n_); }
  int m() const { return m_; }
  int n() const { return n_; }

  int& bar(int i) { return c_[static_cast<std::size_t>(m_ - i)]; }
  int bar(int i) const { return c_[static_cast<std::size_t>(m_ - i)]; }
  int& unbar(int j) { return c_[static_cast<std::size_t>(m_ + j - 1)]; }
  int unbar(int j) const { return c_[static_cast<std::size_t>(m_ + j - 1)]; }

  const std::vector<int>& coords() const { return c_; }

  void add_letter(const Letter& a, int times = 1) {
    switch (a.kind) {
      case LetterKind::Barred: bar(a.index) += times; break;
      case LetterKind::Unbarred: unbar(a.index) += times; break;
      case LetterKind::Dual: bar(a.index) -= times; break;
    }
  }

  /// (λ_1 + ... + λ_n) mod 2.
  int parity() const {
    int s = 0;
    for (int j = 1; j <= n_; ++j) s += unbar(j);
    return ((s % 2) + 2) % 2;
  }

  /// λ ∈ P⁺: λ_m̄ ≥ ... ≥ λ_1̄ and λ_1 ≥ ... ≥ λ_n.
  bool is_dominant() const {
    for (int i = m_; i > 1; --i)
      if (bar(i) < bar(i - 1)) return false;
    for (int j = 1; j < n_; ++j)
      if (unbar(j) < unbar(j + 1)) return false;
    return true;
  }

  /// λ ∈ P̃⁺: dominant, odd part a partition, and λ_1̄ ≥ (λ_1,...,λ_n)'_1.
  bool is_polynomial_dominant() const {
    if (!is_dominant()) return false;
    if (unbar(n_) < 0) return false;
    int nonzero = 0;
    for (int j = 1; j <= n_; ++j) nonzero += unbar(j) > 0 ? 1 : 0;
    return bar(1) >= nonzero;
  }

  Weight& operator+=(const Weight& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Weight& operator*=(int k) {
    for (auto& x : c_) x *= k;
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight a) { return a *= k; }
  friend Weight operator-(Weight a) { return a *= -1; }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  void check_same(const Weight& o) const {
    if (m_ != o.m_ || n_ != o.n_) throw Error(ErrorCode::RankMismatch, "weights of different rank");
  }

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<int> c_;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int x : w.coords()) h = (h ^ static_cast<std::size_t>(x + 1000)) * 0x100000001b3ULL;
    return h;
  }
};

/// The bilinear form with (ε_a|ε_b) = (-1)^{|a|} δ_ab.
inline int form(const Weight& a, const Weight& b) {
  a.check_same(b);
  int s = 0;
  for (int i = 1; i <= a.m(); ++i) s += a.bar(i) * b.bar(i);
  for (int j = 1; j <= a.n(); ++j) s -= a.unbar(j) * b.unbar(j);
  return s;
}

/// α_k for k ∈ I, with colors encoded as signed integers (ī ↦ -i).
inline Weight simple_root(const Rank& r, int k) {
  require_color(r, k);
  Weight w(r);
  if (k < 0) {
    int i = -k;
    w.bar(i + 1) += 1;
    w.bar(i) -= 1;
  } else if (k == 0) {
    w.bar(1) += 1;
    w.unbar(1) -= 1;
  } else {
    w.unbar(k) += 1;
    w.unbar(k + 1) -= 1;
  }
  return w;
}

/// ⟨h_k, λ⟩, defined by l_k ⟨h_k, λ⟩ = (α_k | λ) with l_k = -1 on I_{0|n}.
inline int pairing(const Rank& r, int k, const Weight& lam) {
  int f = form(simple_root(r, k), lam);
  return k > 0 ? -f : f;
}

inline Weight delta_plus(const Rank& r) {
  Weight w(r);
  for (int i = 1; i <= r.m; ++i) w.bar(i) = 1;
  return w;
}
inline Weight delta_minus(const Rank& r) {
  Weight w(r);
  for (int j = 1; j <= r.n; ++j) w.unbar(j) = -1;
  return w;
}
inline Weight delta(const Rank& r) { return delta_plus(r) + delta_minus(r); }

/// Positive odd roots ε_ī − ε_j, ordered by (i, j).
inline std::vector<Weight> positive_odd_roots(const Rank& r) {
  std::vector<Weight> out;
  for (int i = 1; i <= r.m; ++i)
    for (int j = 1; j <= r.n; ++j) out.push_back(Weight::eps_bar(r, i) - Weight::eps(r, j));
  return out;
}

/// Positive even roots ε_a − ε_b with a < b of equal parity.
inline std::vector<Weight> positive_even_roots(const Rank& r) {
  std::vector<Weight> out;
  for (int i = r.m; i >= 1; --i)
    for (int k = i - 1; k >= 1; --k) out.push_back(Weight::eps_bar(r, i) - Weight::eps_bar(r, k));
  for (int j = 1; j <= r.n; ++j)
    for (int l = j + 1; l <= r.n; ++l) out.push_back(Weight::eps(r, j) - Weight::eps(r, l));
  return out;
}

/// 2ρ, where ρ = ½Σ_{Φ⁺₀} α − ½Σ_{Φ⁺₁} β.
inline Weight doubled_weyl_vector(const Rank& r) {
  Weight w(r);
  for (const auto& a : positive_even_roots(r)) w += a;
  for (const auto& b : positive_odd_roots(r)) w -= b;
  return w;
}

/// Typicality: (α | λ+ρ) ≠ 0 for every α ∈ Φ⁺₁.
inline bool is_typical(const Rank& r, const Weight& lam) {
  if (lam.m() != r.m || lam.n() != r.n) throw Error(ErrorCode::RankMismatch, "weight rank");
  if (!lam.is_dominant()) throw Error(ErrorCode::NotDominant, "typicality needs λ ∈ P⁺");
  Weight shifted = 2 * lam + doubled_weyl_vector(r);
  for (const auto& a : positive_odd_roots(r))
    if (form(a, shifted) == 0) return false;
  return true;
}

inline std::string to_string(const Weight& w) {
  std::string s;
  for (int i = w.m(); i >= 1; --i) {
    s += std::to_string(w.bar(i));
    if (i > 1) s += ',';
  }
  s += '|';
  for (int j = 1; j <= w.n(); ++j) {
    s += std::to_string(w.unbar(j));
    if (j < w.n()) s += ',';
  }
  return s;
}

namespace detail {

inline std::vector<int> parse_int_list(std::string_view s, std::size_t offset) {
  std::vector<int> out;
  std::size_t i = 0;
  while (true) {
    std::size_t start = i;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
      neg = s[i] == '-';
      ++i;
    }
    std::size_t digits = i;
    long v = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
      v = v * 10 + (s[i] - '0');
      if (v > 1000000) {
        throw Error(ErrorCode::ParseError, "integer too large at position " + std::to_string(offset + start));
      }
      ++i;
    }
    if (i == digits) {
      throw Error(ErrorCode::ParseError, "expected integer at position " + std::to_string(offset + start));
    }
    out.push_back(static_cast<int>(neg ? -v : v));
    if (i == s.size()) break;
    if (s[i] != ',') {
      throw Error(ErrorCode::ParseError, "expected ',' at position " + std::to_string(offset + i));
    }
    ++i;
  }
  return out;
}

inline std::string trim_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (c != ' ' && c != '\t') out += c;
  return out;
}

}  // namespace detail

/// Parses "a,b,c|d,e,f"; the rank is read off the two list lengths.
inline Weight parse_weight(std::string_view text) {
  std::string s = detail::trim_spaces(text);
  auto bar = s.find('|');
  if (bar == std::string::npos) throw Error(ErrorCode::ParseError, "missing '|' in weight '" + s + "'");
  if (s.find('|', bar + 1) != std::string::npos) {
    throw Error(ErrorCode::ParseError, "second '|' at position " + std::to_string(s.find('|', bar + 1)));
  }
  auto lhs = detail::parse_int_list(std::string_view(s).substr(0, bar), 0);
  auto rhs = detail::parse_int_list(std::string_view(s).substr(bar + 1), bar + 1);
  Rank r(static_cast<int>(lhs.size()), static_cast<int>(rhs.size()));
  std::vector<int> coords = lhs;
  coords.insert(coords.end(), rhs.begin(), rhs.end());
  return Weight(r, coords);
}

inline Weight parse_weight(const Rank& r, std::string_view text) {
  Weight w = parse_weight(text);
  if (w.m() != r.m || w.n() != r.n) {
    throw Error(ErrorCode::RankMismatch, "weight '" + std::string(text) + "' does not match rank (" +
                                             std::to_string(r.m) + "|" + std::to_string(r.n) + ")");
  }
  return w;
}

// ---------------------------------------------------------------------------
// Partitions

using Partition = std::vector<int>;

inline Partition trimmed(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

inline int part(const Partition& p, int i) {
  return i >= 0 && i < static_cast<int>(p.size()) ? p[static_cast<std::size_t>(i)] : 0;
}

inline int weight_of(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

inline Partition conjugate(const Partition& p) {
  Partition c;
  int first = part(p, 0);
  for (int col = 0; col < first; ++col) {
    int len = 0;
    while (len < static_cast<int>(p.size()) && p[static_cast<std::size_t>(len)] > col) ++len;
    c.push_back(len);
  }
  return c;
}

/// inner ⊆ outer as Young diagrams.
inline bool contains(const Partition& outer, const Partition& inner) {
  for (std::size_t i = 0; i < inner.size(); ++i)
    if (inner[i] > part(outer, static_cast<int>(i))) return false;
  return true;
}

/// μ ∈ 𝒫_{m|n}: μ_{m+1} ≤ n.
inline bool is_hook(const Rank& r, const Partition& p) { return is_partition(p) && part(p, r.m) <= r.n; }

inline Partition parse_partition(std::string_view text) {
  std::string s = detail::trim_spaces(text);
  if (s.empty()) return {};
  auto v = detail::parse_int_list(s, 0);
  if (!is_partition(v)) throw Error(ErrorCode::ParseError, "not a partition: '" + s + "'");
  return trimmed(v);
}

inline std::string to_string(const Partition& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s;
}

/// 𝒫_{m|n} → P̃⁺: μ ↦ (μ_1, ..., μ_m | ν'_1, ..., ν'_n) with ν_i = μ_{m+i}.
inline Weight hook_bijection(const Rank& r, const Partition& mu) {
  if (!is_partition(mu)) throw Error(ErrorCode::HookViolation, "not a partition");
  if (!is_hook(r, mu)) throw Error(ErrorCode::HookViolation, "μ_{m+1} exceeds n");
  Weight w(r);
  for (int i = 1; i <= r.m; ++i) w.bar(r.m - i + 1) = part(mu, i - 1);
  Partition nu;
  for (std::size_t i = static_cast<std::size_t>(r.m); i < mu.size(); ++i) nu.push_back(mu[i]);
  Partition nuc = conjugate(nu);
  for (int j = 1; j <= r.n; ++j) w.unbar(j) = part(nuc, j - 1);
  return w;
}

inline Partition hook_bijection_inv(const Rank& r, const Weight& lam) {
  if (!lam.is_polynomial_dominant()) throw Error(ErrorCode::NotDominant, "weight not in P̃⁺");
  Partition mu;
  for (int i = r.m; i >= 1; --i) mu.push_back(lam.bar(i));
  Partition odd;
  for (int j = 1; j <= r.n; ++j) odd.push_back(lam.unbar(j));
  Partition nu = conjugate(trimmed(odd));
  mu.insert(mu.end(), nu.begin(), nu.end());
  return trimmed(mu);
}

/// Weyl dimension of the gl_k irreducible with highest weight `hw` (non-increasing).
inline unsigned long long weyl_dimension(const std::vector<int>& hw) {
  // Exact rational product accumulated as numerator/denominator in 128 bits.
  unsigned __int128 num = 1, den = 1;
  int k = static_cast<int>(hw.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      num *= static_cast<unsigned>(hw[static_cast<std::size_t>(i)] - hw[static_cast<std::size_t>(j)] + j - i);
      den *= static_cast<unsigned>(j - i);
    }
  return static_cast<unsigned long long>(num / den);
}

}  // namespace kac
