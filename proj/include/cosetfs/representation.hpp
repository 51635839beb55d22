#pragma once

#include <deque>
#include <memory>
#include <stdexcept>
#include <vector>

#include "cosetfs/matrix.hpp"
#include "cosetfs/perm_group.hpp"
#include "cosetfs/sn_characters.hpp"

namespace cosetfs {

/// Matrix representation of an enumerated permutation group over exact
/// rationals: one matrix per group element, built by closure from generator
/// matrices. Construction verifies multiplicativity (all pairs for small
/// groups, a deterministic sample otherwise) and the identity image.
class Representation {
 public:
  /// trivial_dim fixes the dimension when the generator list is empty (the
  /// trivial group carries representations of any dimension).
  static std::shared_ptr<Representation> from_generators(ConstGroupPtr K,
                                                         std::vector<Permutation> gens,
                                                         std::vector<RatMatrix> gen_mats,
                                                         bool verify = true,
                                                         int trivial_dim = 1) {
    if (gens.size() != gen_mats.size())
      throw std::invalid_argument("Representation: one matrix per generator required");
    auto rep = std::shared_ptr<Representation>(new Representation());
    rep->K_ = std::move(K);
    rep->dim_ = gens.empty() ? trivial_dim : gen_mats.front().rows();
    for (const auto& m : gen_mats)
      if (m.rows() != rep->dim_ || m.cols() != rep->dim_)
        throw std::invalid_argument("Representation: generator matrices must be square, equal size");
    const std::size_t n = rep->K_->size();
    rep->mats_.assign(n, RatMatrix());
    std::vector<char> known(n, 0);
    const int id = rep->K_->identity_index();
    rep->mats_[id] = RatMatrix::identity(rep->dim_);
    known[id] = 1;
    std::deque<int> queue{id};
    while (!queue.empty()) {
      const int e = queue.front();
      queue.pop_front();
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        const int f = rep->K_->index_of(gens[gi] * rep->K_->element(e));
        if (f < 0) throw std::invalid_argument("Representation: generator not in group");
        if (!known[f]) {
          rep->mats_[f] = gen_mats[gi] * rep->mats_[e];
          known[f] = 1;
          queue.push_back(f);
        }
      }
    }
    for (char k : known)
      if (!k) throw std::invalid_argument("Representation: generators do not generate the group");
    for (std::size_t i = 0; i < n; ++i) rep->traces_.push_back(rep->mats_[i].trace());
    if (verify) rep->verify_multiplicative();
    return rep;
  }

  static std::shared_ptr<Representation> trivial(ConstGroupPtr K) {
    std::vector<Permutation> gens = K->generators();
    std::vector<RatMatrix> mats(gens.size(), RatMatrix::identity(1));
    return from_generators(std::move(K), std::move(gens), std::move(mats), false);
  }

  static std::shared_ptr<Representation> sign(ConstGroupPtr K) {
    std::vector<Permutation> gens = K->generators();
    std::vector<RatMatrix> mats;
    for (const auto& g : gens) {
      RatMatrix m(1, 1);
      m.at(0, 0) = sign_of(g);
      mats.push_back(m);
    }
    return from_generators(std::move(K), std::move(gens), std::move(mats));
  }

  std::shared_ptr<Representation> direct_sum(const Representation& o) const {
    if (K_ != o.K_) throw std::invalid_argument("direct_sum: group mismatch");
    std::vector<Permutation> gens = K_->generators();
    std::vector<RatMatrix> mats;
    for (const auto& g : gens) {
      const RatMatrix &a = of(g), &b = o.of(g);
      RatMatrix m(dim_ + o.dim_, dim_ + o.dim_);
      for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) m.at(i, j) = a.at(i, j);
      for (int i = 0; i < o.dim_; ++i)
        for (int j = 0; j < o.dim_; ++j) m.at(dim_ + i, dim_ + j) = b.at(i, j);
      mats.push_back(std::move(m));
    }
    return from_generators(K_, std::move(gens), std::move(mats), false, dim_ + o.dim_);
  }

  static int sign_of(const Permutation& g) {
    int transpositions = 0;
    for (int len : g.cycle_lengths()) transpositions += len - 1;
    return transpositions % 2 == 0 ? 1 : -1;
  }

  const ConstGroupPtr& group() const { return K_; }
  int dim() const { return dim_; }
  const RatMatrix& of_index(int i) const { return mats_[i]; }
  const RatMatrix& of(const Permutation& g) const {
    const int i = K_->index_of(g);
    if (i < 0) throw std::invalid_argument("Representation: element not in group");
    return mats_[i];
  }
  const Rational& trace_of(int i) const { return traces_[i]; }

 private:
  Representation() = default;

  void verify_multiplicative() const {
    const std::size_t n = K_->size();
    auto check = [&](std::size_t i, std::size_t j) {
      const int p = K_->index_of(K_->element(static_cast<int>(i)) * K_->element(static_cast<int>(j)));
      if (!(mats_[p] == mats_[i] * mats_[j]))
        throw std::invalid_argument("Representation: matrices are not multiplicative");
    };
    const std::size_t budget = 2000000;
    if (n * n * static_cast<std::size_t>(dim_) * dim_ * dim_ <= budget) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) check(i, j);
    } else {
      std::size_t state = 0x9e3779b97f4a7c15ull;
      for (int k = 0; k < 64; ++k) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        const std::size_t i = (state >> 16) % n;
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        const std::size_t j = (state >> 16) % n;
        check(i, j);
      }
    }
  }

  ConstGroupPtr K_;
  int dim_ = 1;
  std::vector<RatMatrix> mats_;
  std::vector<Rational> traces_;
};

using RepPtr = std::shared_ptr<const Representation>;

/// Standard tableaux of a shape, each stored as the (row, col) position of
/// the values 1..m, generated in a fixed order.
inline std::vector<std::vector<std::pair<int, int>>> standard_tableaux(const Partition& lambda) {
  const int m = lambda.size();
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<int> filled(lambda.length(), 0);  // cells filled per row
  std::vector<std::pair<int, int>> pos(m);
  auto rec = [&](auto&& self, int v) -> void {
    if (v == m) {
      out.push_back(pos);
      return;
    }
    for (int r = 0; r < lambda.length(); ++r) {
      if (filled[r] >= lambda.parts[r]) continue;
      if (r > 0 && filled[r - 1] <= filled[r]) continue;  // cell above must be filled
      pos[v] = {r, filled[r]};
      filled[r]++;
      self(self, v + 1);
      filled[r]--;
    }
  };
  if (m == 0)
    out.push_back({});
  else
    rec(rec, 0);
  return out;
}

/// Young's seminormal matrices for the adjacent transpositions s_k = (k, k+1)
/// (0-based points, k = 0..m-2) acting on the standard tableau basis. All
/// entries are rational; trace checks against the Murnaghan-Nakayama values
/// live in the test suite.
inline std::vector<RatMatrix> seminormal_transposition_matrices(const Partition& lambda) {
  const int m = lambda.size();
  auto tabs = standard_tableaux(lambda);
  const int d = static_cast<int>(tabs.size());
  std::map<std::vector<std::pair<int, int>>, int> index;
  for (int i = 0; i < d; ++i) index.emplace(tabs[i], i);
  std::vector<RatMatrix> mats;
  for (int k = 0; k + 1 < m; ++k) {
    RatMatrix rho(d, d);
    for (int ti = 0; ti < d; ++ti) {
      const auto& T = tabs[ti];
      auto [r1, c1] = T[k];      // position of value k+1
      auto [r2, c2] = T[k + 1];  // position of value k+2
      if (r1 == r2) {
        rho.at(ti, ti) += 1;
        continue;
      }
      if (c1 == c2) {
        rho.at(ti, ti) += -1;
        continue;
      }
      auto Tswap = T;
      std::swap(Tswap[k], Tswap[k + 1]);
      const int tj = index.at(Tswap);
      const Rational dist = Rational((c2 - r2) - (c1 - r1));
      rho.at(ti, ti) += Rational(1) / dist;
      if (r1 < r2) {
        rho.at(tj, ti) += 1;
      } else {
        rho.at(tj, ti) += Rational(1) - Rational(1) / (dist * dist);
      }
    }
    mats.push_back(std::move(rho));
  }
  return mats;
}

/// Irreducible representation of the symmetric group on a point set
/// (as a subgroup of degree-n permutations), labelled by a partition of the
/// set size.
inline RepPtr seminormal_irreducible(ConstGroupPtr sym_on_points, std::vector<int> points,
                                     const Partition& lambda) {
  std::sort(points.begin(), points.end());
  if (static_cast<int>(points.size()) != lambda.size())
    throw std::invalid_argument("seminormal_irreducible: |points| != |lambda|");
  auto mats = seminormal_transposition_matrices(lambda);
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i + 1 < points.size(); ++i)
    gens.push_back(
        Permutation::transposition(sym_on_points->degree(), points[i], points[i + 1]));
  return Representation::from_generators(std::move(sym_on_points), std::move(gens),
                                         std::move(mats));
}

/// The module labelled by a partition matrix, as an explicit representation
/// of the two-point stabilizer K: generators of K are adjacent
/// transpositions inside the blocks B_ij, conjugation by u^-1 turns each one
/// into an adjacent transposition of the interval A_ij, and the matrix is
/// the Kronecker product with the corresponding seminormal factor in the
/// row-major cell order.
inline RepPtr module_representation(const StabilizerData& sd, const PartitionMatrix& lam) {
  if (!sd.young) throw std::invalid_argument("module_representation: no block data");
  const int ell = sd.gamma.ell;
  if (lam.ell != ell) throw std::invalid_argument("module_representation: shape mismatch");
  std::vector<std::vector<RatMatrix>> cell_mats(ell * ell);
  std::vector<int> cell_dim(ell * ell, 1);
  for (int i = 0; i < ell; ++i)
    for (int j = 0; j < ell; ++j) {
      const auto& l = lam.at(i, j);
      if (static_cast<int>(l.size()) != sd.gamma.at(i, j))
        throw std::invalid_argument("module_representation: cell size mismatch");
      cell_mats[i * ell + j] = seminormal_transposition_matrices(l);
      cell_dim[i * ell + j] = static_cast<int>(stab_count(l));
    }
  std::vector<Permutation> gens;
  std::vector<RatMatrix> mats;
  const int n = sd.K->degree();
  for (int i = 0; i < ell; ++i)
    for (int j = 0; j < ell; ++j) {
      const auto& blk = sd.Bij[i][j];
      for (std::size_t s = 0; s + 1 < blk.size(); ++s) {
        gens.push_back(Permutation::transposition(n, blk[s], blk[s + 1]));
        RatMatrix m = RatMatrix::identity(1);
        for (int c = 0; c < ell * ell; ++c) {
          if (c == i * ell + j)
            m = m.kron(cell_mats[c][s]);
          else
            m = m.kron(RatMatrix::identity(cell_dim[c]));
        }
        mats.push_back(std::move(m));
      }
    }
  int dim = 1;
  for (int c = 0; c < ell * ell; ++c) dim *= cell_dim[c];
  return Representation::from_generators(sd.K, std::move(gens), std::move(mats), true, dim);
}

}  // namespace cosetfs
