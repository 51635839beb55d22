#pragma once

#include <stdexcept>
#include <vector>

#include "cosetfs/rational.hpp"

namespace cosetfs {

/// Dense matrix of exact rationals. Sizes in this library stay small
/// (representation degrees, Gram matrices), so no sparsity is attempted.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static RatMatrix identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  bool operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (x != 0) return false;
    return true;
  }

  RatMatrix transpose() const {
    RatMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Rational trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace: not square");
    Rational s = 0;
    for (int i = 0; i < rows_; ++i) s += at(i, i);
    return s;
  }

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    RatMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const Rational& aik = a.at(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const Rational& bkj = b.at(k, j);
          if (bkj != 0) c.at(i, j) += aik * bkj;
        }
      }
    return c;
  }

  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("matrix sum: shape mismatch");
    RatMatrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] + b.a_[i];
    return c;
  }

  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("matrix difference: shape mismatch");
    RatMatrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] - b.a_[i];
    return c;
  }

  friend RatMatrix operator*(const Rational& s, const RatMatrix& a) {
    RatMatrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = s * a.a_[i];
    return c;
  }

  RatMatrix kron(const RatMatrix& b) const {
    RatMatrix c(rows_ * b.rows_, cols_ * b.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        if (at(i, j) == 0) continue;
        for (int k = 0; k < b.rows_; ++k)
          for (int l = 0; l < b.cols_; ++l)
            c.at(i * b.rows_ + k, j * b.cols_ + l) = at(i, j) * b.at(k, l);
      }
    return c;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

namespace detail {

/// Row-scale a rational matrix to integers and run fraction-free (Bareiss)
/// elimination. Returns the echelonized integer matrix together with the
/// pivot column list.
struct Echelon {
  std::vector<std::vector<BigInt>> m;
  std::vector<int> pivot_cols;
};

inline Echelon fraction_free_echelon(const RatMatrix& A) {
  const int r = A.rows(), c = A.cols();
  Echelon e;
  e.m.assign(r, std::vector<BigInt>(c));
  for (int i = 0; i < r; ++i) {
    BigInt l = 1;
    for (int j = 0; j < c; ++j) l = lcm(l, A.at(i, j).get_den());
    for (int j = 0; j < c; ++j) {
      Rational v = A.at(i, j) * Rational(l);
      e.m[i][j] = v.get_num();
    }
  }
  BigInt prev = 1;
  int row = 0;
  for (int col = 0; col < c && row < r; ++col) {
    int piv = -1;
    for (int i = row; i < r; ++i)
      if (e.m[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv == -1) continue;
    std::swap(e.m[row], e.m[piv]);
    for (int i = row + 1; i < r; ++i) {
      for (int j = col + 1; j < c; ++j)
        e.m[i][j] = (e.m[i][j] * e.m[row][col] - e.m[i][col] * e.m[row][j]) / prev;
      e.m[i][col] = 0;
    }
    prev = e.m[row][col];
    e.pivot_cols.push_back(col);
    ++row;
  }
  return e;
}

}  // namespace detail

inline int rank(const RatMatrix& A) {
  return static_cast<int>(detail::fraction_free_echelon(A).pivot_cols.size());
}

/// Basis of {x : A x = 0}, one primitive integer vector per free column.
inline std::vector<std::vector<Rational>> nullspace(const RatMatrix& A) {
  const int c = A.cols();
  auto e = detail::fraction_free_echelon(A);
  const int nr = static_cast<int>(e.pivot_cols.size());
  std::vector<char> is_pivot(c, 0);
  for (int p : e.pivot_cols) is_pivot[p] = 1;
  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < c; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(c, Rational(0));
    x[f] = 1;
    for (int i = nr - 1; i >= 0; --i) {
      const int p = e.pivot_cols[i];
      Rational s = 0;
      for (int j = p + 1; j < c; ++j)
        if (x[j] != 0 && e.m[i][j] != 0) s += Rational(e.m[i][j]) * x[j];
      x[p] = -s / Rational(e.m[i][p]);
    }
    // scale to a primitive integer vector for reproducible output
    BigInt l = 1;
    for (const auto& v : x) l = lcm(l, v.get_den());
    BigInt g = 0;
    for (auto& v : x) {
      v *= Rational(l);
      v.canonicalize();
      g = gcd(g, v.get_num());
    }
    if (g > 1)
      for (auto& v : x) {
        v /= Rational(g);
        v.canonicalize();
      }
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace cosetfs
