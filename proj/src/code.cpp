#include "fccqec/code.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace fccqec {

namespace {

void require(bool ok, const std::string& claim) {
  if (!ok) throw std::runtime_error("build_code: violated claim: " + claim);
}

bool is_zero(const BinaryMatrix& m) {
  for (int r = 0; r < m.rows(); ++r)
    if (!m.row_is_zero(r)) return false;
  return true;
}

}  // namespace

CssCode build_code(FccLattice lat) {
  CssCode code{std::move(lat), {}, {}, 0, 0, 0, 0, 0.0};
  const FccLattice& l = code.lattice;
  code.n = l.num_edges();

  code.h_z = BinaryMatrix(l.num_nodes(), code.n);
  for (int e = 0; e < code.n; ++e) {
    code.h_z.set(l.edges()[e].first, e);
    code.h_z.set(l.edges()[e].second, e);
  }

  code.h_x = BinaryMatrix(l.num_octs(), code.n);
  for (int o = 0; o < l.num_octs(); ++o)
    for (int e : l.oct_edges()[o]) code.h_x.set(o, e);

  for (int r = 0; r < code.h_z.rows(); ++r) require(code.h_z.row_weight(r) == 12, "every H_Z row has weight 12");
  for (int r = 0; r < code.h_x.rows(); ++r) require(code.h_x.row_weight(r) == 12, "every H_X row has weight 12");
  for (int c = 0; c < code.n; ++c) {
    require(code.h_z.column_weight(c) == 2, "every H_Z column has weight 2");
    require(code.h_x.column_weight(c) == 2, "every H_X column has weight 2");
  }
  require(is_zero(mat_mul_mod2(code.h_x, code.h_z)), "H_X * H_Z^T = 0 over GF(2)");

  code.rank_z = rank(code.h_z);
  code.rank_x = rank(code.h_x);
  code.k = code.n - code.rank_z - code.rank_x;
  code.rate = static_cast<double>(code.k) / code.n;

  const long long L3 = static_cast<long long>(l.L()) * l.L() * l.L();
  require(code.k == 2 * L3 + 2, "k = n - rank(H_Z) - rank(H_X) equals 2L^3 + 2");
  return code;
}

VerificationReport verify_css(const CssCode& code) {
  VerificationReport rep;
  rep.L = code.lattice.L();
  rep.n = code.n;
  rep.css_valid = is_zero(mat_mul_mod2(code.h_x, code.h_z));

  auto row_range = [](const BinaryMatrix& m, int& mn, int& mx) {
    mn = m.cols() + 1, mx = -1;
    for (int r = 0; r < m.rows(); ++r) {
      const int w = m.row_weight(r);
      mn = std::min(mn, w);
      mx = std::max(mx, w);
    }
  };
  auto col_range = [](const BinaryMatrix& m, int& mn, int& mx) {
    mn = m.rows() + 1, mx = -1;
    for (int c = 0; c < m.cols(); ++c) {
      const int w = m.column_weight(c);
      mn = std::min(mn, w);
      mx = std::max(mx, w);
    }
  };
  row_range(code.h_z, rep.min_row_weight_z, rep.max_row_weight_z);
  row_range(code.h_x, rep.min_row_weight_x, rep.max_row_weight_x);
  col_range(code.h_z, rep.min_col_weight_z, rep.max_col_weight_z);
  col_range(code.h_x, rep.min_col_weight_x, rep.max_col_weight_x);

  rep.rank_z = rank(code.h_z);
  rep.rank_x = rank(code.h_x);
  rep.k = rep.n - rep.rank_z - rep.rank_x;
  rep.rate = static_cast<double>(rep.k) / rep.n;
  const long long L3 = static_cast<long long>(rep.L) * rep.L * rep.L;
  rep.predicted_k = static_cast<int>(2 * L3 + 2);
  rep.k_matches_prediction = rep.k == rep.predicted_k;
  return rep;
}

std::pair<bool, bool> rank_deficiency_check(const CssCode& code) {
  auto all_rows_xor_to_zero = [](const BinaryMatrix& m) {
    BitVector acc(m.cols());
    for (int r = 0; r < m.rows(); ++r) acc.xor_with(m.row(r));
    return acc.is_zero();
  };
  const bool z_global = all_rows_xor_to_zero(code.h_z) && rank(code.h_z) == code.h_z.rows() - 1;
  const bool x_global = all_rows_xor_to_zero(code.h_x) && rank(code.h_x) == code.h_x.rows() - 1;
  return {z_global, x_global};
}

void write_sparse_text(std::ostream& os, const BinaryMatrix& m) {
  for (int r = 0; r < m.rows(); ++r) {
    os << r;
    for (int c = 0; c < m.cols(); ++c)
      if (m.get(r, c)) os << ' ' << c;
    os << '\n';
  }
}

BinaryMatrix read_sparse_text(std::istream& is, int rows, int cols) {
  BinaryMatrix m(rows, cols);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    int r = -1;
    if (!(ls >> r) || r < 0 || r >= rows) throw std::runtime_error("read_sparse_text: bad row index");
    int c;
    while (ls >> c) {
      if (c < 0 || c >= cols) throw std::runtime_error("read_sparse_text: column index out of range");
      m.set(r, c);
    }
  }
  return m;
}

}  // namespace fccqec
