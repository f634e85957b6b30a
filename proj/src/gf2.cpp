#include "fccqec/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace fccqec {

void BitVector::xor_with(const BitVector& other) {
  if (other.size_ != size_) throw std::invalid_argument("BitVector::xor_with: size mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
}

int BitVector::weight() const {
  int w = 0;
  for (std::uint64_t word : words_) w += std::popcount(word);
  return w;
}

bool BitVector::is_zero() const {
  for (std::uint64_t word : words_)
    if (word != 0) return false;
  return true;
}

int BitVector::leading_one() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0) return static_cast<int>(w * 64) + std::countr_zero(words_[w]);
  return -1;
}

BinaryMatrix BinaryMatrix::identity(int n) {
  BinaryMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r > 0 ? static_cast<int>(rows[0].size()) : 0;
  BinaryMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("from_rows: ragged rows");
    for (int j = 0; j < c; ++j)
      if (rows[i][j] & 1) m.set(i, j);
  }
  return m;
}

void BinaryMatrix::xor_rows(int dst, int src) {
  std::uint64_t* d = bits_.data() + idx(dst);
  const std::uint64_t* s = bits_.data() + idx(src);
  for (int w = 0; w < wpr_; ++w) d[w] ^= s[w];
}

void BinaryMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  std::uint64_t* pa = bits_.data() + idx(a);
  std::uint64_t* pb = bits_.data() + idx(b);
  for (int w = 0; w < wpr_; ++w) std::swap(pa[w], pb[w]);
}

int BinaryMatrix::row_weight(int r) const {
  int w = 0;
  for (std::uint64_t word : row_words(r)) w += std::popcount(word);
  return w;
}

int BinaryMatrix::column_weight(int c) const {
  int w = 0;
  for (int r = 0; r < rows_; ++r) w += get(r, c);
  return w;
}

bool BinaryMatrix::row_is_zero(int r) const {
  for (std::uint64_t word : row_words(r))
    if (word != 0) return false;
  return true;
}

int BinaryMatrix::leading_one(int r) const {
  const std::uint64_t* p = bits_.data() + idx(r);
  for (int w = 0; w < wpr_; ++w)
    if (p[w] != 0) return w * 64 + std::countr_zero(p[w]);
  return -1;
}

BitVector BinaryMatrix::row(int r) const {
  BitVector v(cols_);
  std::copy_n(bits_.data() + idx(r), wpr_, v.words().data());
  return v;
}

void BinaryMatrix::set_row(int r, const BitVector& v) {
  if (v.size() != cols_) throw std::invalid_argument("set_row: length mismatch");
  std::copy_n(v.words().data(), wpr_, bits_.data() + idx(r));
}

BitVector BinaryMatrix::column(int c) const {
  BitVector v(rows_);
  for (int r = 0; r < rows_; ++r)
    if (get(r, c)) v.set(r);
  return v;
}

BinaryMatrix BinaryMatrix::transpose() const {
  BinaryMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    const std::uint64_t* p = bits_.data() + idx(r);
    for (int w = 0; w < wpr_; ++w) {
      std::uint64_t word = p[w];
      while (word != 0) {
        const int bit = std::countr_zero(word);
        t.set(w * 64 + bit, r);
        word &= word - 1;
      }
    }
  }
  return t;
}

RrefResult rref(const BinaryMatrix& m) {
  BinaryMatrix a = m;
  std::vector<int> pivots;
  int r = 0;
  for (int col = 0; col < a.cols() && r < a.rows(); ++col) {
    int piv = -1;
    for (int row = r; row < a.rows(); ++row) {
      if (a.get(row, col)) {
        piv = row;
        break;
      }
    }
    if (piv < 0) continue;
    a.swap_rows(r, piv);
    for (int row = 0; row < a.rows(); ++row)
      if (row != r && a.get(row, col)) a.xor_rows(row, r);
    pivots.push_back(col);
    ++r;
  }
  return {std::move(a), std::move(pivots), r};
}

int rank(const BinaryMatrix& m) { return rref(m).rank; }

BinaryMatrix kernel_basis(const BinaryMatrix& m) {
  const RrefResult rr = rref(m);
  BinaryMatrix basis(m.cols() - rr.rank, m.cols());
  std::vector<char> is_pivot(m.cols(), 0);
  for (int pc : rr.pivot_columns) is_pivot[pc] = 1;
  int out = 0;
  for (int fc = 0; fc < m.cols(); ++fc) {
    if (is_pivot[fc]) continue;
    basis.set(out, fc);
    for (int i = 0; i < rr.rank; ++i)
      if (rr.rref.get(i, fc)) basis.set(out, rr.pivot_columns[i]);
    ++out;
  }
  return basis;
}

BinaryMatrix row_space(const BinaryMatrix& m) {
  const RrefResult rr = rref(m);
  BinaryMatrix rs(rr.rank, m.cols());
  for (int r = 0; r < rr.rank; ++r) rs.set_row(r, rr.rref.row(r));
  return rs;
}

bool in_row_space(const BinaryMatrix& rref_basis, const BitVector& v) {
  if (v.size() != rref_basis.cols()) throw std::invalid_argument("in_row_space: length mismatch");
  BitVector w = v;
  for (int r = 0; r < rref_basis.rows(); ++r) {
    const int p = rref_basis.leading_one(r);
    if (p < 0) continue;
    if (w.get(p)) {
      const auto src = rref_basis.row_words(r);
      auto dst = w.words();
      for (std::size_t i = 0; i < src.size(); ++i) dst[i] ^= src[i];
    }
  }
  return w.is_zero();
}

BinaryMatrix mat_mul_mod2(const BinaryMatrix& a, const BinaryMatrix& b_transposed) {
  if (a.cols() != b_transposed.cols())
    throw std::invalid_argument("mat_mul_mod2: inner dimension mismatch");
  BinaryMatrix out(a.rows(), b_transposed.rows());
  for (int i = 0; i < a.rows(); ++i) {
    const auto ra = a.row_words(i);
    for (int j = 0; j < b_transposed.rows(); ++j) {
      const auto rb = b_transposed.row_words(j);
      std::uint64_t acc = 0;
      for (std::size_t w = 0; w < ra.size(); ++w) acc ^= ra[w] & rb[w];
      if (std::popcount(acc) & 1) out.set(i, j);
    }
  }
  return out;
}

BitVector mat_vec_mod2(const BinaryMatrix& h, const BitVector& v) {
  if (v.size() != h.cols()) throw std::invalid_argument("mat_vec_mod2: length mismatch");
  BitVector s(h.rows());
  const auto vw = v.words();
  for (int r = 0; r < h.rows(); ++r) {
    const auto rw = h.row_words(r);
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < rw.size(); ++w) acc ^= rw[w] & vw[w];
    if (std::popcount(acc) & 1) s.set(r);
  }
  return s;
}

}  // namespace fccqec
