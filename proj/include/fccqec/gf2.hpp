#ifndef FCCQEC_GF2_HPP
#define FCCQEC_GF2_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace fccqec {

/// Packed bit-vector over GF(2). Padding bits past size() are kept zero,
/// so whole-word operations (xor, popcount, equality) are safe.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(int size) : size_(size), words_((size + 63) / 64, 0) {}

  int size() const { return size_; }
  int word_count() const { return static_cast<int>(words_.size()); }

  bool get(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(int i, bool v = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  void flip(int i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  /// *this ^= other; sizes must match.
  void xor_with(const BitVector& other);

  int weight() const;
  bool is_zero() const;
  /// Index of the first set bit, or -1 if zero.
  int leading_one() const;

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  bool operator==(const BitVector&) const = default;

 private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Dense bit-packed matrix over GF(2), row-major, 64-bit words.
/// Word size is an internal detail; observable results (pivots, bases)
/// do not depend on it.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), bits_(static_cast<std::size_t>(rows) * wpr_, 0) {}

  static BinaryMatrix identity(int n);
  /// Test/helper constructor: one inner vector of 0/1 per row.
  static BinaryMatrix from_rows(const std::vector<std::vector<int>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int words_per_row() const { return wpr_; }

  bool get(int r, int c) const { return (bits_[idx(r) + (c >> 6)] >> (c & 63)) & 1; }
  void set(int r, int c, bool v = true) {
    const std::uint64_t mask = std::uint64_t{1} << (c & 63);
    if (v)
      bits_[idx(r) + (c >> 6)] |= mask;
    else
      bits_[idx(r) + (c >> 6)] &= ~mask;
  }

  std::span<const std::uint64_t> row_words(int r) const { return {bits_.data() + idx(r), static_cast<std::size_t>(wpr_)}; }
  std::span<std::uint64_t> row_words(int r) { return {bits_.data() + idx(r), static_cast<std::size_t>(wpr_)}; }

  /// row dst ^= row src
  void xor_rows(int dst, int src);
  void swap_rows(int a, int b);

  int row_weight(int r) const;
  int column_weight(int c) const;
  bool row_is_zero(int r) const;
  /// Column index of the first 1 in row r, or -1 if the row is zero.
  int leading_one(int r) const;

  BitVector row(int r) const;
  void set_row(int r, const BitVector& v);
  /// Column c as a bit-vector over row indices.
  BitVector column(int c) const;

  BinaryMatrix transpose() const;

  bool operator==(const BinaryMatrix&) const = default;

 private:
  std::size_t idx(int r) const { return static_cast<std::size_t>(r) * wpr_; }

  int rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct RrefResult {
  BinaryMatrix rref;
  std::vector<int> pivot_columns;  // strictly increasing
  int rank = 0;
};

/// Fully reduced row-echelon form. Deterministic procedure: scan columns
/// left to right; in each column take the first 1 at or below the current
/// rank row, swap it up, and eliminate the column from all other rows.
/// Kernel-basis results downstream depend on exactly this order.
RrefResult rref(const BinaryMatrix& m);

int rank(const BinaryMatrix& m);

/// One basis row per free (non-pivot) column, in increasing free-column
/// order: bit fc set, plus bit pc for every pivot column pc whose rref row
/// has a 1 at fc. Satisfies m * v^T = 0 for every row v.
BinaryMatrix kernel_basis(const BinaryMatrix& m);

/// First rank(m) rows of rref(m): a canonical row-space basis.
BinaryMatrix row_space(const BinaryMatrix& m);

/// True iff v is a GF(2) combination of the rows of `rref_basis`, which
/// must be in reduced row-echelon form (e.g. the output of row_space).
/// Reduces v against the basis; equivalent to the augmented-rank test.
bool in_row_space(const BinaryMatrix& rref_basis, const BitVector& v);

/// a * b^T over GF(2): entry (i,j) is the parity of <a row i, b row j>.
BinaryMatrix mat_mul_mod2(const BinaryMatrix& a, const BinaryMatrix& b_transposed);

/// H * v over GF(2) as a bit-vector of length h.rows().
BitVector mat_vec_mod2(const BinaryMatrix& h, const BitVector& v);

}  // namespace fccqec

#endif
