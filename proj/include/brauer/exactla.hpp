#pragma once

// Exact integer and rational linear algebra: Smith and Hermite normal
// forms, saturated integer kernels, lattice indices and Gram determinants.
// Everything is arbitrary precision (GMP); there is no floating point.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "brauer/error.hpp"

namespace brauer {

using Integer = mpz_class;
/// mpq_class is kept canonical (reduced, positive denominator) by GMP.
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
  if (den == 0) fail_precondition("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Integer power with a possibly negative exponent.
inline Rational rational_pow(const Rational& base, long exponent) {
  if (exponent == 0) return Rational(1);
  if (base == 0) {
    if (exponent < 0) fail_precondition("zero raised to a negative power");
    return Rational(0);
  }
  const unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                       : static_cast<unsigned long>(exponent);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  return exponent < 0 ? make_rational(den, num) : make_rational(num, den);
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) fail_input("ragged matrix literal");
      for (long x : row) data_.emplace_back(x);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows,
                             std::size_t cols_if_empty = 0) {
    IntMatrix m(rows.size(), rows.empty() ? cols_if_empty : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) fail_input("ragged matrix");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  /// Matrix whose columns are the given vectors, each of length `rows`.
  static IntMatrix from_columns(const std::vector<std::vector<Integer>>& cols,
                                std::size_t rows) {
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) fail_input("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<Integer> column(std::size_t j) const {
    std::vector<Integer> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  std::vector<Integer> row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  IntMatrix block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const {
    IntMatrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const IntMatrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
  }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  Integer trace() const {
    Integer t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  /// gcd of all entries (0 for the zero matrix).
  Integer content() const {
    Integer g = 0;
    for (const auto& x : data_) g = gcd(g, x);
    return g;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) fail_precondition("matrix dimension mismatch in product");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail_precondition("matrix dimension mismatch in sum");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail_precondition("matrix dimension mismatch in difference");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend IntMatrix operator*(const Integer& s, IntMatrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

  IntMatrix divided_exactly(const Integer& d) const {
    IntMatrix r = *this;
    for (auto& x : r.data_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    return r;
  }

  std::vector<Integer> apply(const std::vector<Integer>& v) const {
    if (v.size() != cols_) fail_precondition("vector length mismatch");
    std::vector<Integer> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += q * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += q * (*this)(src, j);
  }
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += q * (*this)(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

inline std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

inline IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) fail_precondition("hstack row mismatch");
  IntMatrix r(a.rows(), a.cols() + b.cols());
  r.set_block(0, 0, a);
  r.set_block(0, a.cols(), b);
  return r;
}

inline IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) fail_precondition("vstack column mismatch");
  IntMatrix r(a.rows() + b.rows(), a.cols());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), 0, b);
  return r;
}

inline IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix r(a.rows() + b.rows(), a.cols() + b.cols());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), a.cols(), b);
  return r;
}

// ---------------------------------------------------------------------------
// Smith normal form

struct SmithForm {
  IntMatrix U;  // m x m, unimodular
  IntMatrix D;  // m x n, diagonal with d_1 | d_2 | ... , d_i >= 0
  IntMatrix V;  // n x n, unimodular
  std::size_t rank = 0;

  /// The nonzero diagonal entries d_1 | ... | d_rank.
  std::vector<Integer> invariant_factors() const {
    std::vector<Integer> d;
    for (std::size_t i = 0; i < rank; ++i) d.push_back(D(i, i));
    return d;
  }
};

/// U·A·V = D. Elimination pivots on the entry of least absolute value.
inline SmithForm smith_normal_form(const IntMatrix& A) {
  const std::size_t m = A.rows(), n = A.cols();
  SmithForm s{IntMatrix::identity(m), A, IntMatrix::identity(n), 0};
  IntMatrix& D = s.D;
  Integer q;
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    for (;;) {
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (D(i, j) == 0) continue;
          if (pi == m || abs(D(i, j)) < abs(D(pi, pj))) { pi = i; pj = j; }
        }
      if (pi == m) goto finished;
      D.swap_rows(t, pi);
      s.U.swap_rows(t, pi);
      D.swap_cols(t, pj);
      s.V.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
        q = -q;
        D.add_row_multiple(i, t, q);
        s.U.add_row_multiple(i, t, q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
        q = -q;
        D.add_col_multiple(j, t, q);
        s.V.add_col_multiple(j, t, q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce d_t | every remaining entry.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) { bad = i; break; }
      if (bad == m) break;
      D.add_row_multiple(t, bad, 1);
      s.U.add_row_multiple(t, bad, 1);
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      s.U.negate_row(t);
    }
  }
finished:
  s.rank = t;
  return s;
}

// ---------------------------------------------------------------------------
// Hermite normal form and lattice bases

/// Row-style Hermite normal form of the row lattice of A, zero rows dropped.
/// Pivots are positive and entries above each pivot lie in [0, pivot).
inline IntMatrix hermite_rows(const IntMatrix& A) {
  IntMatrix M = A;
  const std::size_t m = M.rows(), n = M.cols();
  std::size_t r = 0;
  Integer q;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    for (;;) {
      std::size_t p = m;
      for (std::size_t i = r; i < m; ++i)
        if (M(i, c) != 0 && (p == m || abs(M(i, c)) < abs(M(p, c)))) p = i;
      if (p == m) break;
      M.swap_rows(r, p);
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (M(i, c) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), M(i, c).get_mpz_t(), M(r, c).get_mpz_t());
        M.add_row_multiple(i, r, -q);
        if (M(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (M(r, c) == 0) continue;
    if (M(r, c) < 0) M.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) {
      mpz_fdiv_q(q.get_mpz_t(), M(i, c).get_mpz_t(), M(r, c).get_mpz_t());
      if (q != 0) M.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  return M.block(0, r, 0, n);
}

/// Basis of the lattice spanned by the columns of A, in column Hermite form.
inline IntMatrix column_basis(const IntMatrix& A) {
  if (A.cols() == 0) return IntMatrix(A.rows(), 0);
  return hermite_rows(A.transpose()).transpose();
}

inline std::size_t rank(const IntMatrix& A) { return hermite_rows(A).rows(); }

/// Columns form a saturated Z-basis of {x : A·x = 0}, in column Hermite form.
inline IntMatrix integer_kernel(const IntMatrix& A) {
  const std::size_t n = A.cols();
  if (A.rows() == 0) return IntMatrix::identity(n);
  const SmithForm s = smith_normal_form(A);
  const IntMatrix K = s.V.block(0, n, s.rank, n - s.rank);
  return column_basis(K);
}

/// Solves A·x = b over Z for many right-hand sides against a fixed A.
class IntegerSolver {
public:
  explicit IntegerSolver(const IntMatrix& A) : A_(A), snf_(smith_normal_form(A)) {}

  const IntMatrix& matrix() const noexcept { return A_; }
  std::size_t rank() const noexcept { return snf_.rank; }

  /// true iff b lies in the rational column span of A.
  bool in_rational_span(const std::vector<Integer>& b) const {
    const auto ub = snf_.U.apply(b);
    for (std::size_t i = snf_.rank; i < ub.size(); ++i)
      if (ub[i] != 0) return false;
    return true;
  }

  std::optional<std::vector<Integer>> solve(const std::vector<Integer>& b) const {
    if (b.size() != A_.rows()) fail_precondition("right-hand side length mismatch");
    const auto ub = snf_.U.apply(b);
    std::vector<Integer> y(A_.cols());
    for (std::size_t i = 0; i < ub.size(); ++i) {
      if (i < snf_.rank) {
        const Integer& d = snf_.D(i, i);
        if (!mpz_divisible_p(ub[i].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
        mpz_divexact(y[i].get_mpz_t(), ub[i].get_mpz_t(), d.get_mpz_t());
      } else if (ub[i] != 0) {
        return std::nullopt;
      }
    }
    return snf_.V.apply(y);
  }

  bool contains(const std::vector<Integer>& b) const { return solve(b).has_value(); }

  /// X with A·X = B, or nullopt if some column is not an integral combination.
  std::optional<IntMatrix> solve(const IntMatrix& B) const {
    IntMatrix X(A_.cols(), B.cols());
    for (std::size_t j = 0; j < B.cols(); ++j) {
      auto x = solve(B.column(j));
      if (!x) return std::nullopt;
      for (std::size_t i = 0; i < x->size(); ++i) X(i, j) = (*x)[i];
    }
    return X;
  }

  bool contains_columns(const IntMatrix& B) const {
    for (std::size_t j = 0; j < B.cols(); ++j)
      if (!contains(B.column(j))) return false;
    return true;
  }

private:
  IntMatrix A_;
  SmithForm snf_;
};

/// Determinant by fraction-free (Bareiss) elimination.
inline Integer determinant(const IntMatrix& A) {
  if (!A.is_square()) fail_precondition("determinant of a non-square matrix");
  const std::size_t n = A.rows();
  if (n == 0) return 1;
  IntMatrix M = A;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && M(p, k) == 0) ++p;
      if (p == n) return 0;
      M.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = M(i, j) * M(k, k) - M(i, k) * M(k, j);
        mpz_divexact(M(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    prev = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

/// Exact inverse of a unimodular matrix.
inline IntMatrix unimodular_inverse(const IntMatrix& U) {
  IntegerSolver solver(U);
  auto inv = solver.solve(IntMatrix::identity(U.rows()));
  if (!U.is_square() || !inv) fail_precondition("matrix is not unimodular");
  return *inv;
}

/// [lattice(super) : lattice(sub)] for column lattices of equal rank.
inline Integer lattice_index(const IntMatrix& sub, const IntMatrix& super) {
  if (sub.rows() != super.rows()) fail_precondition("ambient dimension mismatch");
  const IntMatrix sb = column_basis(sub);
  const IntMatrix pb = column_basis(super);
  if (sb.cols() != pb.cols()) fail_precondition("infinite index");
  if (pb.cols() == 0) return 1;
  IntegerSolver solver(pb);
  IntMatrix coords(pb.cols(), sb.cols());
  for (std::size_t j = 0; j < sb.cols(); ++j) {
    const auto col = sb.column(j);
    if (!solver.in_rational_span(col)) fail_precondition("infinite index");
    auto x = solver.solve(col);
    if (!x) fail_precondition("not a sublattice");
    for (std::size_t i = 0; i < x->size(); ++i) coords(i, j) = (*x)[i];
  }
  return abs(determinant(coords));
}

/// det(scale · basisᵀ·P·basis); the empty determinant is 1.
inline Rational gram_determinant(const IntMatrix& P, const IntMatrix& basis,
                                 const Rational& scale) {
  if (!P.is_symmetric()) fail_precondition("pairing matrix is not symmetric");
  if (basis.rows() != P.rows()) fail_precondition("basis does not match pairing dimension");
  const std::size_t k = basis.cols();
  if (k == 0) return Rational(1);
  const Integer det = determinant(basis.transpose() * P * basis);
  if (det == 0) fail_precondition("basis is degenerate for the pairing");
  return Rational(det) * rational_pow(scale, static_cast<long>(k));
}

}  // namespace brauer
