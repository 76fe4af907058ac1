#include "nfsos/f2.hpp"

#include <bit>

#include "nfsos/error.hpp"

namespace nfsos {

void BitVec::resize(std::size_t n) {
  w_.resize((n + 63) / 64, 0);
  if (n < n_) {
    for (std::size_t i = n; i < w_.size() * 64 && i < n_; ++i) set(i, false);
  }
  n_ = n;
}

void BitVec::push_back(bool v) {
  resize(n_ + 1);
  set(n_ - 1, v);
}

BitVec& BitVec::operator^=(const BitVec& o) {
  for (std::size_t i = 0; i < w_.size() && i < o.w_.size(); ++i) w_[i] ^= o.w_[i];
  return *this;
}

bool BitVec::any() const {
  for (auto x : w_)
    if (x) return true;
  return false;
}

bool BitVec::dot(const BitVec& o) const {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < w_.size() && i < o.w_.size(); ++i) acc ^= w_[i] & o.w_[i];
  return std::popcount(acc) & 1;
}

std::size_t BitVec::first() const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i]) return i * 64 + std::countr_zero(w_[i]);
  return n_;
}

std::string BitVec::str() const {
  std::string s;
  for (std::size_t i = 0; i < n_; ++i) s += get(i) ? '1' : '0';
  return s;
}

F2Matrix F2Matrix::from_rows(const std::vector<BitVec>& rows, std::size_t cols) {
  F2Matrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void F2Matrix::append_row(const BitVec& r) {
  if (r.size() != cols_) raise(ErrorKind::DimensionMismatch, "row width differs from matrix");
  rows_.push_back(r);
}

BitVec F2Matrix::apply(const BitVec& x) const {
  if (x.size() != cols_) raise(ErrorKind::DimensionMismatch, "vector length differs from columns");
  BitVec out(rows());
  for (std::size_t i = 0; i < rows(); ++i) out.set(i, rows_[i].dot(x));
  return out;
}

namespace {

// Reduced row echelon form of [M | rhs]; returns pivot columns per row.
std::vector<std::size_t> eliminate(std::vector<BitVec>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && !rows[p].get(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<BitVec> solve_f2(const F2Matrix& m, const BitVec& rhs) {
  if (rhs.size() != m.rows())
    raise(ErrorKind::DimensionMismatch, "right-hand side length differs from row count");
  const std::size_t cols = m.cols();
  std::vector<BitVec> aug;
  aug.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BitVec r = m.row(i);
    r.push_back(rhs.get(i));
    aug.push_back(std::move(r));
  }
  auto pivots = eliminate(aug, cols);
  for (std::size_t i = pivots.size(); i < aug.size(); ++i)
    if (aug[i].get(cols)) return std::nullopt;
  BitVec x(cols);
  for (std::size_t i = 0; i < pivots.size(); ++i) x.set(pivots[i], aug[i].get(cols));
  return x;
}

std::size_t rank_f2(const F2Matrix& m) {
  std::vector<BitVec> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return eliminate(rows, m.cols()).size();
}

std::vector<BitVec> kernel_f2(const F2Matrix& m) {
  std::vector<BitVec> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  auto pivots = eliminate(rows, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<BitVec> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    BitVec x(m.cols());
    x.set(free);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (rows[i].get(free)) x.set(pivots[i]);
    out.push_back(std::move(x));
  }
  return out;
}

bool F2Echelon::insert(const BitVec& v) {
  BitVec combo(count_ + 1);
  BitVec r = reduce(v, &combo);
  combo.resize(count_ + 1);
  combo.set(count_);
  ++count_;
  for (auto& c : combos_) c.resize(count_);
  if (!r.any()) return false;
  rows_.push_back(std::move(r));
  pivots_.push_back(rows_.back().first());
  combos_.push_back(std::move(combo));
  return true;
}

BitVec F2Echelon::reduce(const BitVec& v, BitVec* combo) const {
  BitVec r = v;
  r.resize(width_);
  if (combo) *combo = BitVec(count_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (r.get(pivots_[i])) {
      r ^= rows_[i];
      if (combo) *combo ^= combos_[i];
    }
  }
  return r;
}

void F2Echelon::widen(std::size_t width) {
  width_ = width;
  for (auto& r : rows_) r.resize(width);
}

}  // namespace nfsos
