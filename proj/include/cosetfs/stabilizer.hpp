#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "cosetfs/gset.hpp"

namespace cosetfs {

/// Two-point stabilizer K = G_x n G_y, together with the canonical block
/// bookkeeping available when X is an ordered-set-partition space and x is
/// the base tuple A of consecutive intervals:
///
///   B_ij = A_i n B_j, gamma_ij = |B_ij|,
///   A_ij = eps_ij + [gamma_ij]   (consecutive intervals refining A_i),
///   u    = the permutation mapping each A_ij onto B_ij order-preservingly,
///   K0   = the direct product of symmetric groups on the intervals A_ij,
///   psi  : K -> K0, k |-> u^-1 k u  (a group isomorphism),
/// and, when the intersection matrix is symmetric, the interval flip t0
/// (eps_ij + s |-> eps_ji + s) and the transposer t = u t0 u^-1 with
/// t(x,y) = (y,x), t^2 = 1.
struct StabilizerData {
  GroupPtr K;

  bool young = false;
  CompositionMatrix gamma;
  std::vector<std::vector<int>> A_blocks, B_blocks;
  std::vector<std::vector<std::vector<int>>> Bij;  // [i][j], sorted ascending
  std::vector<std::vector<int>> eps;               // interval offsets
  Permutation u;
  Composition gamma_flat;                          // row-major, zero parts kept
  GroupPtr K0;
  std::optional<Permutation> t0, t;

  Permutation psi(const Permutation& k) const { return u.inverse() * k * u; }
  Permutation psi_inv(const Permutation& a) const { return u * a * u.inverse(); }
};

inline StabilizerData two_point_stabilizer(const GSet& X, int x, int y) {
  StabilizerData sd;
  const PermGroup& G = X.group();
  const int n = G.degree();

  std::vector<Permutation> fix;
  for (std::size_t i = 0; i < G.size(); ++i) {
    const int gi = static_cast<int>(i);
    if (X.act(gi, x) == x && X.act(gi, y) == y) fix.push_back(G.element(gi));
  }

  if (!X.is_osp() || x != X.base_point()) {
    sd.K = PermGroup::from_elements(n, std::move(fix));
    return sd;
  }

  sd.young = true;
  sd.gamma = gamma_matrix(X, x, y);
  sd.A_blocks = X.blocks_of(x);
  sd.B_blocks = X.blocks_of(y);
  const int ell = sd.gamma.ell;

  sd.Bij.assign(ell, std::vector<std::vector<int>>(ell));
  std::vector<std::vector<int>> kblocks;
  for (int i = 0; i < ell; ++i)
    for (int j = 0; j < ell; ++j) {
      std::vector<int> cell;
      std::set_intersection(sd.A_blocks[i].begin(), sd.A_blocks[i].end(),
                            sd.B_blocks[j].begin(), sd.B_blocks[j].end(),
                            std::back_inserter(cell));
      sd.Bij[i][j] = cell;
      if (!cell.empty()) kblocks.push_back(cell);
    }

  sd.eps.assign(ell, std::vector<int>(ell, 0));
  std::vector<int> alpha_prefix(ell + 1, 0);
  for (int i = 0; i < ell; ++i)
    alpha_prefix[i + 1] = alpha_prefix[i] + X.alpha().parts[i];
  for (int i = 0; i < ell; ++i) {
    int off = alpha_prefix[i];
    for (int j = 0; j < ell; ++j) {
      sd.eps[i][j] = off;
      off += sd.gamma.at(i, j);
    }
  }

  std::vector<int> u_img(n);
  std::vector<int> flat;
  std::vector<std::vector<int>> interval_blocks;
  for (int i = 0; i < ell; ++i)
    for (int j = 0; j < ell; ++j) {
      const int g = sd.gamma.at(i, j);
      flat.push_back(g);
      std::vector<int> interval(g);
      for (int s = 0; s < g; ++s) {
        interval[s] = sd.eps[i][j] + s;
        u_img[sd.eps[i][j] + s] = sd.Bij[i][j][s];
      }
      interval_blocks.push_back(std::move(interval));
    }
  sd.u = Permutation::from_images(u_img);
  sd.gamma_flat = Composition(flat);
  sd.K0 = PermGroup::on_blocks(n, interval_blocks);
  sd.K = PermGroup::on_blocks(n, kblocks);

  long long expected = 1;
  for (int g : flat) expected *= factorial(g);
  if (static_cast<long long>(sd.K->size()) != expected ||
      static_cast<long long>(fix.size()) != expected)
    throw std::logic_error("two_point_stabilizer: block stabilizer size mismatch");

  if (sd.gamma.is_symmetric()) {
    std::vector<int> t0_img(n);
    for (int i = 0; i < ell; ++i)
      for (int j = 0; j < ell; ++j)
        for (int s = 0; s < sd.gamma.at(i, j); ++s)
          t0_img[sd.eps[i][j] + s] = sd.eps[j][i] + s;
    sd.t0 = Permutation::from_images(t0_img);
    sd.t = sd.u * *sd.t0 * sd.u.inverse();
  }
  return sd;
}

}  // namespace cosetfs
