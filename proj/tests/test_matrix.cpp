#include <catch2/catch_amalgamated.hpp>

#include "cosetfs/matrix.hpp"

using namespace cosetfs;

namespace {

// Plain rational row reduction, used only as an independent check of the
// fraction-free path.
int rank_plain(RatMatrix a) {
  int r = 0;
  for (int col = 0; col < a.cols() && r < a.rows(); ++col) {
    int piv = -1;
    for (int i = r; i < a.rows(); ++i)
      if (a.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(piv, j));
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, col) == 0) continue;
      const Rational f = a.at(i, col) / a.at(r, col);
      for (int j = 0; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
    }
    ++r;
  }
  return r;
}

RatMatrix pseudo_random(int rows, int cols, unsigned seed) {
  RatMatrix m(rows, cols);
  unsigned s = seed;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      s = s * 1103515245u + 12345u;
      const int num = static_cast<int>((s >> 16) % 7) - 3;
      s = s * 1103515245u + 12345u;
      const int den = 1 + static_cast<int>((s >> 16) % 3);
      m.at(i, j) = rational(num, den);
    }
  return m;
}

}  // namespace

TEST_CASE("matrix basics") {
  RatMatrix a(2, 2);
  a.at(0, 0) = 1;
  a.at(0, 1) = rational(1, 2);
  a.at(1, 0) = 0;
  a.at(1, 1) = -1;
  REQUIRE(a.trace() == 0);
  REQUIRE((a * RatMatrix::identity(2)) == a);
  REQUIRE(a.transpose().at(1, 0) == rational(1, 2));
  const RatMatrix k = a.kron(RatMatrix::identity(2));
  REQUIRE(k.rows() == 4);
  REQUIRE(k.at(0, 2) == rational(1, 2));
}

TEST_CASE("nullspace of a rank-1 system") {
  RatMatrix a(1, 3);
  a.at(0, 0) = 1;
  a.at(0, 1) = 2;
  a.at(0, 2) = rational(1, 3);
  const auto basis = nullspace(a);
  REQUIRE(basis.size() == 2);
  for (const auto& x : basis) {
    Rational s = 0;
    for (int j = 0; j < 3; ++j) s += a.at(0, j) * x[j];
    REQUIRE(s == 0);
  }
}

TEST_CASE("nullspace of the zero and identity matrices") {
  REQUIRE(nullspace(RatMatrix(2, 2)).size() == 2);
  REQUIRE(nullspace(RatMatrix::identity(3)).empty());
  REQUIRE(rank(RatMatrix::identity(3)) == 3);
  REQUIRE(rank(RatMatrix(3, 4)) == 0);
}

TEST_CASE("fraction-free elimination agrees with plain row reduction") {
  for (unsigned seed = 1; seed <= 24; ++seed) {
    const RatMatrix a = pseudo_random(4, 6, seed);
    REQUIRE(rank(a) == rank_plain(a));
    const auto basis = nullspace(a);
    REQUIRE(static_cast<int>(basis.size()) == 6 - rank(a));
    for (const auto& x : basis)
      for (int i = 0; i < a.rows(); ++i) {
        Rational s = 0;
        for (int j = 0; j < a.cols(); ++j) s += a.at(i, j) * x[j];
        REQUIRE(s == 0);
      }
    // basis vectors are independent
    RatMatrix stacked(static_cast<int>(basis.size()), 6);
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (int j = 0; j < 6; ++j) stacked.at(static_cast<int>(i), j) = basis[i][j];
    REQUIRE(rank(stacked) == static_cast<int>(basis.size()));
  }
}
