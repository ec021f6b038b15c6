#pragma once

// Skew shapes and semistandard tableaux over the graded alphabets
// B = [m|n], B+ (barred), B- (unbarred) and the dual alphabet B+dual.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <tuple>
#include <utility>

#include <json.hpp>

#include "base.hpp"

namespace kac {

enum class Alphabet : std::uint8_t { B, BPlus, BMinus, BPlusDual };

inline const char* to_string(Alphabet a) {
  switch (a) {
    case Alphabet::B: return "B";
    case Alphabet::BPlus: return "B+";
    case Alphabet::BMinus: return "B-";
    case Alphabet::BPlusDual: return "B+dual";
  }
  return "?";
}

inline Alphabet parse_alphabet(std::string_view s) {
  if (s == "B") return Alphabet::B;
  if (s == "B+") return Alphabet::BPlus;
  if (s == "B-") return Alphabet::BMinus;
  if (s == "B+dual") return Alphabet::BPlusDual;
  throw Error(ErrorCode::ParseError, "unknown alphabet '" + std::string(s) + "'");
}

inline bool in_alphabet(const Rank& r, Alphabet alpha, const Letter& a) {
  switch (a.kind) {
    case LetterKind::Barred:
      return (alpha == Alphabet::B || alpha == Alphabet::BPlus) && a.index >= 1 && a.index <= r.m;
    case LetterKind::Unbarred:
      return (alpha == Alphabet::B || alpha == Alphabet::BMinus) && a.index >= 1 && a.index <= r.n;
    case LetterKind::Dual:
      return alpha == Alphabet::BPlusDual && a.index >= 1 && a.index <= r.m;
  }
  return false;
}

/// All letters of an alphabet in increasing order.
inline std::vector<Letter> letters(const Rank& r, Alphabet alpha) {
  std::vector<Letter> out;
  if (alpha == Alphabet::BPlusDual) {
    for (int i = 1; i <= r.m; ++i) out.push_back(Letter::dual(i));
    return out;
  }
  if (alpha != Alphabet::BMinus)
    for (int i = r.m; i >= 1; --i) out.push_back(Letter::barred(i));
  if (alpha != Alphabet::BPlus)
    for (int j = 1; j <= r.n; ++j) out.push_back(Letter::unbarred(j));
  return out;
}

enum class ReadingOrder : std::uint8_t {
  ColumnsRightToLeft,  // columns right to left, each top to bottom
  RowsRightToLeft,     // rows top to bottom, each right to left
};

/// Skew diagram outer/inner in matrix coordinates (row 0 on top).
/// Anti-normal shapes are skew shapes (ℓ^m)/η flagged as such.
class Shape {
 public:
  Shape(Partition outer, Partition inner, bool antinormal)
      : outer_(std::move(outer)), inner_(trimmed(std::move(inner))), antinormal_(antinormal) {
    if (!antinormal_) outer_ = trimmed(outer_);
    if (!is_partition(outer_) || !is_partition(inner_)) {
      throw Error(ErrorCode::ShapeViolation, "outer and inner must be partitions");
    }
    if (!contains(outer_, inner_)) throw Error(ErrorCode::ShapeViolation, "inner not contained in outer");
    const int rows = static_cast<int>(outer_.size());
    row_offset_.resize(static_cast<std::size_t>(rows) + 1, 0);
    for (int r = 0; r < rows; ++r) {
      row_offset_[static_cast<std::size_t>(r) + 1] = row_offset_[static_cast<std::size_t>(r)] + outer_[static_cast<std::size_t>(r)] - part(inner_, r);
      for (int c = part(inner_, r); c < outer_[static_cast<std::size_t>(r)]; ++c) cells_.emplace_back(r, c);
    }
    const int cols = part(outer_, 0);
    col_top_.assign(static_cast<std::size_t>(cols), 0);
    col_bottom_.assign(static_cast<std::size_t>(cols), 0);
    Partition oc = conjugate(outer_), ic = conjugate(inner_);
    for (int c = 0; c < cols; ++c) {
      col_top_[static_cast<std::size_t>(c)] = part(ic, c);
      col_bottom_[static_cast<std::size_t>(c)] = part(oc, c);
    }
    for (int c = cols - 1; c >= 0; --c)
      for (int r = col_top(c); r < col_bottom(c); ++r) column_reading_.push_back(index(r, c));
    for (int r = 0; r < rows; ++r)
      for (int c = outer_[static_cast<std::size_t>(r)] - 1; c >= part(inner_, r); --c) row_reading_.push_back(index(r, c));
  }

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  bool antinormal() const { return antinormal_; }
  int rows() const { return static_cast<int>(outer_.size()); }
  int cols() const { return part(outer_, 0); }
  int size() const { return static_cast<int>(cells_.size()); }
  bool is_straight() const { return inner_.empty(); }

  bool contains_cell(int r, int c) const {
    return r >= 0 && r < rows() && c >= part(inner_, r) && c < outer_[static_cast<std::size_t>(r)];
  }
  int index(int r, int c) const { return row_offset_[static_cast<std::size_t>(r)] + c - part(inner_, r); }
  std::pair<int, int> cell(int idx) const { return cells_[static_cast<std::size_t>(idx)]; }
  const std::vector<std::pair<int, int>>& cells() const { return cells_; }
  int row_begin(int r) const { return part(inner_, r); }
  int row_end(int r) const { return outer_[static_cast<std::size_t>(r)]; }
  /// First and one-past-last occupied rows of column c.
  int col_top(int c) const { return col_top_[static_cast<std::size_t>(c)]; }
  int col_bottom(int c) const { return col_bottom_[static_cast<std::size_t>(c)]; }

  const std::vector<int>& reading(ReadingOrder o) const {
    return o == ReadingOrder::ColumnsRightToLeft ? column_reading_ : row_reading_;
  }

  friend bool operator==(const Shape& a, const Shape& b) {
    return a.antinormal_ == b.antinormal_ && a.outer_ == b.outer_ && a.inner_ == b.inner_;
  }

 private:
  Partition outer_, inner_;
  bool antinormal_;
  std::vector<int> row_offset_;
  std::vector<std::pair<int, int>> cells_;
  std::vector<int> col_top_, col_bottom_;
  std::vector<int> column_reading_, row_reading_;
};

using ShapePtr = std::shared_ptr<const Shape>;

/// Interned shapes: equal shapes share one object.
inline ShapePtr make_shape(Partition outer, Partition inner = {}, bool antinormal = false) {
  static std::mutex mu;
  static std::map<std::tuple<Partition, Partition, bool>, ShapePtr> cache;
  if (!antinormal) outer = trimmed(std::move(outer));
  inner = trimmed(std::move(inner));
  auto key = std::make_tuple(outer, inner, antinormal);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto ptr = std::make_shared<const Shape>(std::move(outer), std::move(inner), antinormal);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::move(key), ptr).first->second;
}

/// (ℓ^m)/η in rectangle coordinates.
inline ShapePtr rectangle_complement(int ell, int m, const Partition& eta) {
  return make_shape(Partition(static_cast<std::size_t>(m), ell), eta, true);
}

class Tableau {
 public:
  Tableau() : alpha_(Alphabet::B), shape_(make_shape({})) {}
  Tableau(Alphabet alpha, ShapePtr shape)
      : alpha_(alpha), shape_(std::move(shape)), e_(static_cast<std::size_t>(shape_->size())) {}
  Tableau(Alphabet alpha, ShapePtr shape, std::vector<Letter> entries)
      : alpha_(alpha), shape_(std::move(shape)), e_(std::move(entries)) {
    if (static_cast<int>(e_.size()) != shape_->size()) throw Error(ErrorCode::ShapeViolation, "entry count mismatch");
  }

  /// Builds a tableau from one list per outer row; row r must hold exactly the cells of that row.
  static Tableau from_rows(Alphabet alpha, const Partition& outer, const Partition& inner,
                           const std::vector<std::vector<Letter>>& rows, bool antinormal = false) {
    auto sh = make_shape(outer, inner, antinormal);
    if (static_cast<int>(rows.size()) > sh->rows()) {
      for (std::size_t r = static_cast<std::size_t>(sh->rows()); r < rows.size(); ++r)
        if (!rows[r].empty()) throw Error(ErrorCode::ShapeViolation, "cell below the shape in row " + std::to_string(r));
    }
    Tableau t(alpha, sh);
    for (int r = 0; r < sh->rows(); ++r) {
      int want = sh->row_end(r) - sh->row_begin(r);
      int have = r < static_cast<int>(rows.size()) ? static_cast<int>(rows[static_cast<std::size_t>(r)].size()) : 0;
      if (have != want) {
        throw Error(ErrorCode::ShapeViolation, "row " + std::to_string(r) + " has " + std::to_string(have) +
                                                   " cells, shape wants " + std::to_string(want));
      }
      for (int k = 0; k < want; ++k) t.at(r, sh->row_begin(r) + k) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
    }
    return t;
  }

  Alphabet alphabet() const { return alpha_; }
  const Shape& shape() const { return *shape_; }
  const ShapePtr& shape_ptr() const { return shape_; }
  int size() const { return static_cast<int>(e_.size()); }
  bool empty() const { return e_.empty(); }

  const Letter& at(int r, int c) const { return e_[static_cast<std::size_t>(shape_->index(r, c))]; }
  Letter& at(int r, int c) { return e_[static_cast<std::size_t>(shape_->index(r, c))]; }
  const std::vector<Letter>& entries() const { return e_; }
  std::vector<Letter>& entries() { return e_; }

  std::vector<Letter> row(int r) const {
    std::vector<Letter> out;
    for (int c = shape_->row_begin(r); c < shape_->row_end(r); ++c) out.push_back(at(r, c));
    return out;
  }

  Weight weight(const Rank& r) const {
    Weight w(r);
    for (const auto& a : e_) w.add_letter(a);
    return w;
  }

  friend bool operator==(const Tableau& a, const Tableau& b) {
    return a.alpha_ == b.alpha_ && (a.shape_ == b.shape_ || *a.shape_ == *b.shape_) && a.e_ == b.e_;
  }

 private:
  Alphabet alpha_;
  ShapePtr shape_;
  std::vector<Letter> e_;
};

struct TableauHash {
  std::size_t operator()(const Tableau& t) const noexcept {
    std::size_t h = static_cast<std::size_t>(t.alphabet());
    for (int x : t.shape().outer()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
    for (int x : t.shape().inner()) h = (h ^ static_cast<std::size_t>(x + 64)) * 0x100000001b3ULL;
    for (const auto& a : t.entries()) h = (h ^ a.code()) * 0x100000001b3ULL;
    return h;
  }
};

/// Semistandardness: rows and columns weakly increase, even letters strictly
/// down columns, odd letters strictly along rows.
inline bool is_semistandard(const Tableau& t) {
  const Shape& sh = t.shape();
  for (auto [r, c] : sh.cells()) {
    const Letter& a = t.at(r, c);
    if (sh.contains_cell(r, c + 1)) {
      const Letter& b = t.at(r, c + 1);
      if (b < a || (a == b && a.odd())) return false;
    }
    if (sh.contains_cell(r + 1, c)) {
      const Letter& b = t.at(r + 1, c);
      if (b < a || (a == b && !a.odd())) return false;
    }
  }
  return true;
}

/// Letters belong to the tableau's alphabet and the filling is semistandard.
inline bool validate(const Rank& r, const Tableau& t) {
  for (const auto& a : t.entries())
    if (!in_alphabet(r, t.alphabet(), a)) return false;
  return is_semistandard(t);
}

inline std::vector<Letter> reading_word(const Tableau& t, ReadingOrder order = ReadingOrder::ColumnsRightToLeft) {
  std::vector<Letter> w;
  w.reserve(static_cast<std::size_t>(t.size()));
  for (int idx : t.shape().reading(order)) w.push_back(t.entries()[static_cast<std::size_t>(idx)]);
  return w;
}

// ---------------------------------------------------------------------------
// Insertion

/// Schensted column insertion a → T for a straight-shaped T.
/// An even letter bumps the smallest entry ≥ it, an odd letter the smallest entry > it.
inline Tableau column_insert(const Letter& a, const Tableau& t) {
  const Shape& sh = t.shape();
  if (!sh.is_straight()) throw Error(ErrorCode::ShapeViolation, "column insertion needs a straight shape");
  std::vector<std::vector<Letter>> cols(static_cast<std::size_t>(sh.cols()));
  for (int c = 0; c < sh.cols(); ++c)
    for (int r = 0; r < sh.col_bottom(c); ++r) cols[static_cast<std::size_t>(c)].push_back(t.at(r, c));
  Letter x = a;
  for (std::size_t c = 0;; ++c) {
    if (c == cols.size()) cols.emplace_back();
    auto& col = cols[c];
    auto it = std::find_if(col.begin(), col.end(),
                           [&](const Letter& y) { return x.odd() ? y > x : y >= x; });
    if (it == col.end()) {
      col.push_back(x);
      break;
    }
    std::swap(x, *it);
  }
  Partition outer(cols.empty() ? 0 : cols[0].size(), 0);
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < cols[c].size(); ++r) outer[r] = static_cast<int>(c) + 1;
  Tableau out(t.alphabet(), make_shape(outer));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < cols[c].size(); ++r) out.at(static_cast<int>(r), static_cast<int>(c)) = cols[c][r];
  return out;
}

/// (w → T): inserts w_1 first.
inline Tableau column_insert_word(const std::vector<Letter>& w, Tableau t) {
  for (const auto& a : w) t = column_insert(a, t);
  return t;
}

struct AntinormalInsertion {
  Tableau tableau;
  std::pair<int, int> cell;  // rectangle coordinates, 0-based
};

namespace detail {

inline Partition remove_inner_cell(const Shape& sh, int r, int c) {
  Partition eta = sh.inner();
  if (r < 0 || r >= static_cast<int>(eta.size()) || eta[static_cast<std::size_t>(r)] != c + 1 ||
      part(eta, r + 1) > c) {
    throw Error(ErrorCode::ShapeViolation,
                "cell (" + std::to_string(r) + "," + std::to_string(c) + ") is not a corner of the inner shape");
  }
  eta[static_cast<std::size_t>(r)] -= 1;
  return eta;
}

inline Partition add_inner_cell(const Shape& sh, int r, int c) {
  Partition eta = sh.inner();
  if (static_cast<int>(eta.size()) <= r) eta.resize(static_cast<std::size_t>(r) + 1, 0);
  if (eta[static_cast<std::size_t>(r)] != c || (r > 0 && eta[static_cast<std::size_t>(r) - 1] < c + 1)) {
    throw Error(ErrorCode::ShapeViolation,
                "cell (" + std::to_string(r) + "," + std::to_string(c) + ") is not addable to the inner shape");
  }
  eta[static_cast<std::size_t>(r)] += 1;
  return eta;
}

inline Tableau reshape_inner(const Tableau& t, const Partition& new_inner,
                             const std::vector<std::tuple<int, int, Letter>>& overrides) {
  const Shape& sh = t.shape();
  Tableau out(t.alphabet(), make_shape(sh.outer(), new_inner, sh.antinormal()));
  for (auto [r, c] : out.shape().cells())
    if (sh.contains_cell(r, c)) out.at(r, c) = t.at(r, c);
  for (const auto& [r, c, a] : overrides) out.at(r, c) = a;
  return out;
}

}  // namespace detail

/// T ← a on a skew tableau of shape (ℓ^m)/η, processed columnwise from the right.
inline AntinormalInsertion antinormal_insert(const Tableau& t, const Letter& a) {
  const Shape& sh = t.shape();
  std::vector<std::tuple<int, int, Letter>> changes;
  Letter x = a;
  for (int c = sh.cols() - 1; c >= 0; --c) {
    int found = -1;
    for (int r = sh.col_bottom(c) - 1; r >= sh.col_top(c); --r) {
      const Letter& y = t.at(r, c);
      if (x.odd() ? y < x : y <= x) {
        found = r;
        break;
      }
    }
    if (found < 0) {
      int r = sh.col_top(c) - 1;
      if (r < 0) throw Error(ErrorCode::InsertionOverflow, "column " + std::to_string(c) + " is full");
      Partition eta = detail::remove_inner_cell(sh, r, c);
      changes.emplace_back(r, c, x);
      return {detail::reshape_inner(t, eta, changes), {r, c}};
    }
    Letter y = t.at(found, c);
    changes.emplace_back(found, c, x);
    x = y;
  }
  throw Error(ErrorCode::InsertionOverflow, "bumping path left the rectangle");
}

/// Inverse of antinormal_insert: removes the created cell and bumps back to the right.
inline std::pair<Tableau, Letter> antinormal_uninsert(const Tableau& t, std::pair<int, int> cell) {
  const Shape& sh = t.shape();
  auto [r0, c0] = cell;
  if (!sh.contains_cell(r0, c0) || sh.col_top(c0) != r0) {
    throw Error(ErrorCode::NotInImage, "cell is not the top of its column");
  }
  Partition eta = detail::add_inner_cell(sh, r0, c0);
  std::vector<std::tuple<int, int, Letter>> changes;
  Letter x = t.at(r0, c0);
  for (int c = c0 + 1; c < sh.cols(); ++c) {
    int found = -1;
    for (int r = sh.col_top(c); r < sh.col_bottom(c); ++r) {
      const Letter& y = t.at(r, c);
      if (x.odd() ? y > x : y >= x) {
        found = r;
        break;
      }
    }
    if (found < 0) throw Error(ErrorCode::NotInImage, "reverse bumping found no entry in column " + std::to_string(c));
    Letter y = t.at(found, c);
    changes.emplace_back(found, c, x);
    x = y;
  }
  return {detail::reshape_inner(t, eta, changes), x};
}

/// (T ← w): inserts the last letter first.
inline Tableau antinormal_insert_word(Tableau t, const std::vector<Letter>& w) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) t = antinormal_insert(t, *it).tableau;
  return t;
}

// ---------------------------------------------------------------------------
// Enumeration and distinguished tableaux

/// All semistandard fillings of a shape, by backtracking in row-major order.
/// Results are in lexicographic order of their row-major entry sequences.
inline std::vector<Tableau> enumerate_sst(const Rank& r, Alphabet alpha, const ShapePtr& shape,
                                          std::size_t limit = static_cast<std::size_t>(-1)) {
  std::vector<Tableau> out;
  const auto alph = letters(r, alpha);
  Tableau cur(alpha, shape);
  const Shape& sh = *shape;
  const int total = sh.size();
  std::function<void(int)> rec = [&](int idx) {
    if (out.size() >= limit) return;
    if (idx == total) {
      out.push_back(cur);
      return;
    }
    auto [row, col] = sh.cell(idx);
    for (const auto& a : alph) {
      if (sh.contains_cell(row, col - 1)) {
        const Letter& left = cur.at(row, col - 1);
        if (a < left || (a == left && a.odd())) continue;
      }
      if (sh.contains_cell(row - 1, col)) {
        const Letter& up = cur.at(row - 1, col);
        if (a < up || (a == up && !a.odd())) continue;
      }
      cur.at(row, col) = a;
      rec(idx + 1);
    }
  };
  rec(0);
  return out;
}

/// H_μ over B+: row i (1-based) filled with \overline{m-i+1}.
inline Tableau highest_weight_plus(const Rank& r, const ShapePtr& shape) {
  if (shape->rows() > r.m) throw Error(ErrorCode::ShapeViolation, "shape has more than m rows");
  Tableau t(Alphabet::BPlus, shape);
  for (auto [row, col] : shape->cells()) t.at(row, col) = Letter::barred(r.m - row);
  return t;
}

/// H_{ν'} over B-: column j (1-based) filled with j.
inline Tableau highest_weight_minus(const Rank& r, const ShapePtr& shape) {
  if (shape->cols() > r.n) throw Error(ErrorCode::ShapeViolation, "shape has more than n columns");
  Tableau t(Alphabet::BMinus, shape);
  for (auto [row, col] : shape->cells()) t.at(row, col) = Letter::unbarred(col + 1);
  return t;
}

/// Source of SST_{B+dual}((ℓ^m)/η): each bottom-aligned column reads 1∨, 2∨, ... from the top.
inline Tableau highest_weight_dual(const Rank& r, const ShapePtr& shape) {
  if (shape->rows() > r.m) throw Error(ErrorCode::ShapeViolation, "shape has more than m rows");
  Tableau t(Alphabet::BPlusDual, shape);
  for (auto [row, col] : shape->cells()) t.at(row, col) = Letter::dual(row - shape->col_top(col) + 1);
  return t;
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::ordered_json to_json(const Tableau& t) {
  nlohmann::ordered_json j;
  j["alphabet"] = to_string(t.alphabet());
  j["outer"] = t.shape().outer();
  j["inner"] = t.shape().inner();
  j["antinormal"] = t.shape().antinormal();
  auto rows = nlohmann::ordered_json::array();
  for (int r = 0; r < t.shape().rows(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (const auto& a : t.row(r)) row.push_back(to_string(a));
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

template <class Json>
Tableau tableau_from_json(const Json& j) {
  try {
    Alphabet alpha = parse_alphabet(j.at("alphabet").template get<std::string>());
    Partition outer = j.at("outer").template get<Partition>();
    Partition inner = j.contains("inner") ? j.at("inner").template get<Partition>() : Partition{};
    bool antinormal = j.contains("antinormal") ? j.at("antinormal").template get<bool>() : false;
    std::vector<std::vector<Letter>> rows;
    for (const auto& row : j.at("rows")) {
      std::vector<Letter> lr;
      for (const auto& a : row) lr.push_back(parse_letter(a.template get<std::string>()));
      rows.push_back(std::move(lr));
    }
    return Tableau::from_rows(alpha, outer, inner, rows, antinormal);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("tableau JSON: ") + e.what());
  }
}

inline std::string to_string(const Tableau& t) {
  std::string s;
  for (int r = 0; r < t.shape().rows(); ++r) {
    if (r) s += " / ";
    for (int c = 0; c < t.shape().row_end(r); ++c) {
      if (c) s += ' ';
      s += c < t.shape().row_begin(r) ? std::string(".") : to_string(t.at(r, c));
    }
  }
  return s;
}

}  // namespace kac

template <>
struct std::hash<kac::Tableau> : kac::TableauHash {};
