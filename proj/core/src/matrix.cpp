#include "bredon/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace bredon {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool IntegerMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (e != 0) return false;
  return true;
}

IntegerMatrix IntegerMatrix::transposed() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  t.row_labels = col_labels;
  t.col_labels = row_labels;
  return t;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
  IntegerMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
    }
  return out;
}

IntegerMatrix IntegerMatrix::operator+(const IntegerMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix sum shape mismatch");
  IntegerMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = entries_[i] + rhs.entries_[i];
  return out;
}

IntegerMatrix IntegerMatrix::scaled(const Integer& c) const {
  IntegerMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] * c;
  return out;
}

void IntegerMatrix::add_block(std::size_t row0, std::size_t col0, const IntegerMatrix& block,
                              const Integer& c) {
  if (row0 + block.rows() > rows_ || col0 + block.cols() > cols_)
    throw std::invalid_argument("block out of range");
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j)
      at(row0 + i, col0 + j) += c * block.at(i, j);
}

IntegerMatrix IntegerMatrix::submatrix(const std::vector<std::size_t>& rows,
                                       const std::vector<std::size_t>& cols) const {
  IntegerMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out.at(i, j) = at(rows[i], cols[j]);
  return out;
}

Integer IntegerMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntegerMatrix a = *this;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Integer(-a.at(n - 1, n - 1));
}

namespace {

struct SnfWork {
  IntegerMatrix d, u, v;

  void row_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < d.cols(); ++c) std::swap(d.at(i, c), d.at(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void col_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < d.rows(); ++r) std::swap(d.at(r, i), d.at(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  // row i += q * row j
  void row_add(std::size_t i, std::size_t j, const Integer& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < d.cols(); ++c) d.at(i, c) += q * d.at(j, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) += q * u.at(j, c);
  }
  // col i += q * col j
  void col_add(std::size_t i, std::size_t j, const Integer& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < d.rows(); ++r) d.at(r, i) += q * d.at(r, j);
    for (std::size_t r = 0; r < v.rows(); ++r) v.at(r, i) += q * v.at(r, j);
  }
  void row_negate(std::size_t i) {
    for (std::size_t c = 0; c < d.cols(); ++c) d.at(i, c) = -d.at(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
  }

  // Smallest nonzero |entry| in the active submatrix, ties by (row, col).
  bool find_pivot(std::size_t k, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    Integer best;
    for (std::size_t i = k; i < d.rows(); ++i)
      for (std::size_t j = k; j < d.cols(); ++j) {
        const Integer& e = d.at(i, j);
        if (e == 0) continue;
        Integer a = abs_int(e);
        if (!found || a < best) {
          found = true;
          best = a;
          pi = i;
          pj = j;
        }
      }
    return found;
  }
};

}  // namespace

SmithNormalForm smith_normal_form(const IntegerMatrix& a) {
  SnfWork w{a, IntegerMatrix::identity(a.rows()), IntegerMatrix::identity(a.cols())};
  const std::size_t m = a.rows(), n = a.cols();
  const std::size_t steps = std::min(m, n);

  for (std::size_t k = 0; k < steps; ++k) {
    std::size_t pi = k, pj = k;
    if (!w.find_pivot(k, pi, pj)) break;
    w.row_swap(k, pi);
    w.col_swap(k, pj);

    for (;;) {
      // Clear column k, then row k; remainders shrink the pivot on re-selection.
      bool dirty = false;
      for (std::size_t i = k + 1; i < m; ++i) {
        if (w.d.at(i, k) == 0) continue;
        Integer q = w.d.at(i, k) / w.d.at(k, k);
        w.row_add(i, k, -q);
        if (w.d.at(i, k) != 0) dirty = true;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (w.d.at(k, j) == 0) continue;
        Integer q = w.d.at(k, j) / w.d.at(k, k);
        w.col_add(j, k, -q);
        if (w.d.at(k, j) != 0) dirty = true;
      }
      if (dirty) {
        std::size_t qi = k, qj = k;
        w.find_pivot(k, qi, qj);
        w.row_swap(k, qi);
        w.col_swap(k, qj);
        continue;
      }
      // Pivot must divide the rest of the submatrix before we move on; this
      // is what makes the divisibility chain hold at the end.
      bool divisible = true;
      for (std::size_t i = k + 1; i < m && divisible; ++i)
        for (std::size_t j = k + 1; j < n && divisible; ++j)
          if (w.d.at(i, j) % w.d.at(k, k) != 0) {
            w.row_add(k, i, 1);
            divisible = false;
          }
      if (divisible) break;
    }
  }

  SmithNormalForm out;
  for (std::size_t k = 0; k < steps; ++k) {
    if (w.d.at(k, k) == 0) break;
    if (w.d.at(k, k) < 0) w.row_negate(k);
    out.divisors.push_back(w.d.at(k, k));
  }
  out.U = std::move(w.u);
  out.V = std::move(w.v);
  out.D = std::move(w.d);
  return out;
}

std::size_t rational_rank(const IntegerMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<std::vector<Rational>> w(m, std::vector<Rational>(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) w[i][j] = Rational(a.at(i, j));
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t p = rank;
    while (p < m && w[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(w[p], w[rank]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == rank || w[i][col] == 0) continue;
      Rational f = w[i][col] / w[rank][col];
      for (std::size_t j = col; j < n; ++j) w[i][j] -= f * w[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace bredon
