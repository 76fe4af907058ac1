#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nfsos {

/// Fixed-length vector over F2, packed 64 bits per word.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i, bool v = true) {
    if (v)
      w_[i >> 6] |= (std::uint64_t{1} << (i & 63));
    else
      w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  void flip(std::size_t i) { w_[i >> 6] ^= (std::uint64_t{1} << (i & 63)); }
  /// Grows (zero-filled) or truncates.
  void resize(std::size_t n);
  void push_back(bool v);

  BitVec& operator^=(const BitVec& o);
  bool any() const;
  bool dot(const BitVec& o) const;
  /// Index of the lowest set bit, or size() if none.
  std::size_t first() const;
  std::string str() const;

  friend bool operator==(const BitVec& a, const BitVec& b) { return a.n_ == b.n_ && a.w_ == b.w_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}
  static F2Matrix from_rows(const std::vector<BitVec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
  void set(std::size_t i, std::size_t j, bool v = true) { rows_[i].set(j, v); }
  const BitVec& row(std::size_t i) const { return rows_[i]; }
  BitVec& row(std::size_t i) { return rows_[i]; }
  void append_row(const BitVec& r);

  BitVec apply(const BitVec& x) const;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVec> rows_;
};

/// Particular solution of M x = rhs: Gaussian elimination, first available
/// pivot per column, free variables zero. Empty if inconsistent.
/// Throws Error(DimensionMismatch) when rhs.size() != M.rows().
std::optional<BitVec> solve_f2(const F2Matrix& m, const BitVec& rhs);

std::size_t rank_f2(const F2Matrix& m);

/// Basis of { x : M x = 0 }.
std::vector<BitVec> kernel_f2(const F2Matrix& m);

/// Incremental row echelon basis that remembers how each stored vector was
/// built from the inserted ones.
class F2Echelon {
 public:
  explicit F2Echelon(std::size_t width) : width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t inserted() const { return count_; }

  /// Inserts v (as the next inserted vector); returns true if it raised the rank.
  bool insert(const BitVec& v);
  /// Reduces v against the basis; returns the residual and fills `combo`
  /// (over inserted vectors) with the combination that was subtracted.
  BitVec reduce(const BitVec& v, BitVec* combo = nullptr) const;
  bool in_span(const BitVec& v) const { return !reduce(v).any(); }
  const std::vector<BitVec>& rows() const { return rows_; }
  /// Extends all stored vectors (and future inserts) by zero columns.
  void widen(std::size_t width);

 private:
  std::size_t width_;
  std::size_t count_ = 0;
  std::vector<BitVec> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<BitVec> combos_;
};

}  // namespace nfsos
