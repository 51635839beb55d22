#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

#include "cosetfs/face_algebra.hpp"
#include "cosetfs/matrix.hpp"
#include "cosetfs/representation.hpp"

namespace cosetfs {

/// Module induced from a representation V of the two-point stabilizer
/// K = G_x n G_y. The basis is (coset representative of G/K) x (basis of V);
/// a group element a sends c_j (x) v to c_j' (x) rho(kappa) v where
/// a c_j = c_j' kappa, and the idempotent e^z_w keeps exactly the basis
/// vectors whose coset has face pair (c_j x, c_j y) = (z, w).
class InducedModule {
 public:
  static std::shared_ptr<InducedModule> induce(AmbientPtr amb, int x, int y, RepPtr V) {
    auto M = std::shared_ptr<InducedModule>(new InducedModule());
    M->amb_ = std::move(amb);
    M->x_ = x;
    M->y_ = y;
    M->V_ = std::move(V);
    const PermGroup& G = M->amb_->group();
    const PermGroup& K = *M->V_->group();

    // V must be a representation of exactly the two-point stabilizer.
    std::size_t stab_size = 0;
    for (std::size_t i = 0; i < G.size(); ++i) {
      const int gi = static_cast<int>(i);
      if (M->amb_->act(gi, x) == x && M->amb_->act(gi, y) == y) ++stab_size;
    }
    if (stab_size != K.size())
      throw std::invalid_argument("induce: V is not a representation of G_x n G_y");
    for (const auto& k : K.elements()) {
      const int ki = G.index_of(k);
      if (ki < 0 || M->amb_->act(ki, x) != x || M->amb_->act(ki, y) != y)
        throw std::invalid_argument("induce: V's group does not fix (x, y)");
    }

    std::vector<int> elem_to_coset(G.size(), -1);
    for (std::size_t i = 0; i < G.size(); ++i) {
      if (elem_to_coset[i] != -1) continue;
      const int j = static_cast<int>(M->cosets_.size());
      M->cosets_.push_back(G.element(static_cast<int>(i)));
      for (const auto& k : K.elements())
        elem_to_coset[G.index_of(G.element(static_cast<int>(i)) * k)] = j;
    }
    for (const auto& c : M->cosets_) {
      const int ci = G.index_of(c);
      M->face_.emplace_back(M->amb_->act(ci, x), M->amb_->act(ci, y));
      M->face_index_.emplace(M->face_.back(), static_cast<int>(M->face_.size()) - 1);
    }
    M->act_.assign(G.size(), {});
    for (std::size_t a = 0; a < G.size(); ++a) {
      M->act_[a].resize(M->cosets_.size());
      for (std::size_t j = 0; j < M->cosets_.size(); ++j) {
        const Permutation p = G.element(static_cast<int>(a)) * M->cosets_[j];
        const int j2 = elem_to_coset[G.index_of(p)];
        const int kap = K.index_of(M->cosets_[j2].inverse() * p);
        M->act_[a][j] = {j2, kap};
      }
    }
    return M;
  }

  const AmbientPtr& ambient() const { return amb_; }
  int x() const { return x_; }
  int y() const { return y_; }
  const RepPtr& rep() const { return V_; }
  const std::vector<Permutation>& cosets() const { return cosets_; }
  int dim() const { return static_cast<int>(cosets_.size()) * V_->dim(); }
  const std::vector<std::pair<int, int>>& face_pairs() const { return face_; }

  /// Target coset and stabilizer element for a acting on coset j.
  std::pair<int, int> coset_action(int a, int j) const { return act_[a][j]; }

  int coset_of_element(const Permutation& g) const {
    const PermGroup& K = *V_->group();
    for (std::size_t j = 0; j < cosets_.size(); ++j)
      if (K.contains(cosets_[j].inverse() * g)) return static_cast<int>(j);
    throw std::logic_error("coset_of_element: not found");
  }

  /// Trace of the action of a single symbol e^z_w a.
  Rational symbol_trace(const FaceSymbol& s) const {
    auto it = face_index_.find({s.x, s.y});
    if (it == face_index_.end()) return 0;
    const int j = it->second;
    const auto [j2, kap] = act_[s.g][j];
    if (j2 != j) return 0;
    return V_->trace_of(kap);
  }

  /// r-th indicator as the exact trace of the closed-form integral power.
  Rational fs_direct(int r) const {
    const FaceElement e = integral_r_closed(amb_, r);
    Rational s = 0;
    for (const auto& [sym, c] : e.terms()) s += c * symbol_trace(sym);
    return s;
  }

  /// Indicator via the tensor-power route: the trace of
  /// pi^{(x)r}(Delta^(r)(integral)) composed with the cyclic twist
  /// m_1 (x) ... (x) m_r |-> m_2 (x) ... (x) m_r (x) m_1. The coproduct
  /// chain constraints reduce the basis sweep to coset tuples; the
  /// vector-index sums contract to a trace of a product of stabilizer
  /// matrices.
  Rational nu_r(int r, long long budget = Config::global().nu_budget) const {
    if (r < 1) throw std::invalid_argument("nu_r: r >= 1 required");
    long long b = 1;
    for (int i = 0; i < r; ++i) {
      b *= dim();
      if (b > budget)
        throw CapExceeded("nu_r: dim(M)^r = " + std::to_string(b) + "+ exceeds budget " +
                          std::to_string(budget));
    }
    const int nc = static_cast<int>(cosets_.size());
    const std::size_t ng = amb_->group().size();
    Rational total = 0;
    std::vector<int> w(r);
    for (std::size_t a = 0; a < ng; ++a) {
      for (int c0 = 0; c0 < nc; ++c0) {
        w[0] = c0;
        // w_k = target(a, w_{k+1 cyc}); fill downward from w_r and check closure.
        for (int k = r - 1; k >= 1; --k) w[k] = act_[a][w[(k + 1) % r]].first;
        if (act_[a][w[1 % r]].first != w[0]) continue;
        bool chain = true;
        for (int k = 0; k < r; ++k)
          if (face_[w[k]].second != face_[w[(k + 1) % r]].first) {
            chain = false;
            break;
          }
        if (!chain) continue;
        RatMatrix prod = RatMatrix::identity(V_->dim());
        for (int k = 0; k < r; ++k) prod = prod * V_->of_index(act_[a][w[(k + 1) % r]].second);
        total += prod.trace();
      }
    }
    return total / Rational(static_cast<long>(ng));
  }

  /// Block permutation matrix of a group element.
  RatMatrix group_action_matrix(int a) const {
    const int d = dim(), dv = V_->dim();
    RatMatrix m(d, d);
    for (std::size_t j = 0; j < cosets_.size(); ++j) {
      const auto [j2, kap] = act_[a][j];
      const RatMatrix& rho = V_->of_index(kap);
      for (int p = 0; p < dv; ++p)
        for (int q = 0; q < dv; ++q)
          m.at(static_cast<int>(j2) * dv + p, static_cast<int>(j) * dv + q) = rho.at(p, q);
    }
    return m;
  }

  /// Full action matrix of a face element.
  RatMatrix action_matrix(const FaceElement& e) const {
    const int d = dim(), dv = V_->dim();
    RatMatrix m(d, d);
    for (const auto& [s, c] : e.terms()) {
      auto it = face_index_.find({s.x, s.y});
      if (it == face_index_.end()) continue;
      const int jt = it->second;  // the idempotent keeps only this target coset
      for (std::size_t j = 0; j < cosets_.size(); ++j) {
        const auto [j2, kap] = act_[s.g][j];
        if (j2 != jt) continue;
        const RatMatrix& rho = V_->of_index(kap);
        for (int p = 0; p < dv; ++p)
          for (int q = 0; q < dv; ++q)
            m.at(j2 * dv + p, static_cast<int>(j) * dv + q) += c * rho.at(p, q);
      }
    }
    return m;
  }

  /// Dimension of the commuting algebra of the module action; 1 certifies
  /// (absolute) simplicity. Commutants are block diagonal across cosets
  /// because the face idempotents separate coset lines.
  int commutant_dimension() const {
    const int nc = static_cast<int>(cosets_.size());
    const int dv = V_->dim();
    const int unknowns = nc * dv * dv;
    const auto& G = amb_->group();
    std::vector<int> gen_idx;
    for (const auto& g : G.generators()) gen_idx.push_back(G.index_of(g));
    if (gen_idx.empty()) gen_idx.push_back(G.identity_index());
    RatMatrix A(static_cast<int>(gen_idx.size()) * unknowns, unknowns);
    int row = 0;
    auto uidx = [&](int j, int m, int v) { return (j * dv + m) * dv + v; };
    for (int a : gen_idx) {
      for (int j = 0; j < nc; ++j) {
        const auto [j2, kap] = act_[a][j];
        const RatMatrix& rho = V_->of_index(kap);
        // rho(kappa) T_j = T_{j2} rho(kappa)
        for (int p = 0; p < dv; ++p)
          for (int v = 0; v < dv; ++v) {
            for (int m = 0; m < dv; ++m) {
              if (rho.at(p, m) != 0) A.at(row, uidx(j, m, v)) += rho.at(p, m);
              if (rho.at(m, v) != 0) A.at(row, uidx(j2, p, m)) -= rho.at(m, v);
            }
            ++row;
          }
      }
    }
    return static_cast<int>(nullspace(A).size());
  }

 private:
  InducedModule() = default;

  AmbientPtr amb_;
  int x_ = 0, y_ = 0;
  RepPtr V_;
  std::vector<Permutation> cosets_;
  std::vector<std::pair<int, int>> face_;
  std::map<std::pair<int, int>, int> face_index_;
  std::vector<std::vector<std::pair<int, int>>> act_;
};

using ModulePtr = std::shared_ptr<const InducedModule>;

}  // namespace cosetfs
