#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cosetfs/induced_module.hpp"

namespace cosetfs {

/// Solution space of an invariance problem for bilinear forms, with the
/// split into eigenspaces of the transpose operation.
struct FormSpace {
  std::vector<RatMatrix> basis;
  std::vector<RatMatrix> plus;   // F^T = +F
  std::vector<RatMatrix> minus;  // F^T = -F
};

inline bool nondegenerate(const RatMatrix& form) {
  return form.rows() == form.cols() && rank(form) == form.rows();
}

namespace detail {

inline std::vector<Rational> flatten(const RatMatrix& m) {
  std::vector<Rational> v;
  v.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

/// Keep a maximal independent subset, in order.
inline std::vector<RatMatrix> independent_subset(const std::vector<RatMatrix>& cand) {
  std::vector<RatMatrix> out;
  if (cand.empty()) return out;
  const int cols = cand.front().rows() * cand.front().cols();
  RatMatrix stacked(static_cast<int>(cand.size()), cols);
  int kept = 0;
  for (const auto& m : cand) {
    auto flat = flatten(m);
    for (int j = 0; j < cols; ++j) stacked.at(kept, j) = flat[j];
    RatMatrix sub(kept + 1, cols);
    for (int i = 0; i <= kept; ++i)
      for (int j = 0; j < cols; ++j) sub.at(i, j) = stacked.at(i, j);
    if (rank(sub) == kept + 1) {
      out.push_back(m);
      ++kept;
    }
  }
  return out;
}

inline FormSpace split_by_transpose(std::vector<RatMatrix> basis,
                                    const std::function<RatMatrix(const RatMatrix&)>& transpose_op) {
  FormSpace fs;
  std::vector<RatMatrix> plus_cand, minus_cand;
  for (const auto& b : basis) {
    const RatMatrix bt = transpose_op(b);
    plus_cand.push_back(b + bt);
    minus_cand.push_back(b - bt);
  }
  fs.basis = std::move(basis);
  for (auto& c : plus_cand)
    if (!c.is_zero()) fs.plus.push_back(c);
  for (auto& c : minus_cand)
    if (!c.is_zero()) fs.minus.push_back(c);
  fs.plus = independent_subset(fs.plus);
  fs.minus = independent_subset(fs.minus);
  return fs;
}

}  // namespace detail

/// Invariant bilinear forms on an induced module: C(a xi, a eta) = C(xi, eta)
/// for all group elements and C(e^z_w xi, eta) = C(xi, e^w_z eta) for all
/// face idempotents. The idempotent condition forces C to vanish outside
/// basis pairs whose face pairs are mutual transposes, which restricts the
/// unknowns to one dv x dv block per coset with a transposed partner.
inline FormSpace invariant_forms(const InducedModule& M) {
  const int nc = static_cast<int>(M.cosets().size());
  const int dv = M.rep()->dim();
  const auto& G = M.ambient()->group();

  // partner[j] = coset whose face pair is the swap of face_[j], or -1
  std::vector<int> partner(nc, -1);
  std::map<std::pair<int, int>, int> face_index;
  for (int j = 0; j < nc; ++j) face_index.emplace(M.face_pairs()[j], j);
  for (int j = 0; j < nc; ++j) {
    auto it = face_index.find({M.face_pairs()[j].second, M.face_pairs()[j].first});
    if (it != face_index.end()) partner[j] = it->second;
  }

  std::vector<int> with_partner;
  std::vector<int> slot(nc, -1);
  for (int j = 0; j < nc; ++j)
    if (partner[j] >= 0) {
      slot[j] = static_cast<int>(with_partner.size());
      with_partner.push_back(j);
    }
  const int unknowns = static_cast<int>(with_partner.size()) * dv * dv;

  FormSpace fs;
  if (unknowns == 0) return fs;

  auto uidx = [&](int j, int v, int w) { return (slot[j] * dv + v) * dv + w; };

  std::vector<int> gen_idx;
  for (const auto& g : G.generators()) gen_idx.push_back(G.index_of(g));
  if (gen_idx.empty()) gen_idx.push_back(G.identity_index());

  // C^{(j)} = rho(kappa_j)^T C^{(target j)} rho(kappa_{partner j})
  RatMatrix A(static_cast<int>(gen_idx.size() * with_partner.size()) * dv * dv, unknowns);
  int row = 0;
  for (int a : gen_idx) {
    for (int j : with_partner) {
      const auto [j2, kapj] = M.coset_action(a, j);
      const auto [pj2, kapp] = M.coset_action(a, partner[j]);
      if (partner[j2] != pj2)
        throw std::logic_error("invariant_forms: action broke the partner pairing");
      const RatMatrix& r1 = M.rep()->of_index(kapj);
      const RatMatrix& r2 = M.rep()->of_index(kapp);
      for (int v = 0; v < dv; ++v)
        for (int w = 0; w < dv; ++w) {
          A.at(row, uidx(j, v, w)) += 1;
          for (int m = 0; m < dv; ++m)
            for (int m2 = 0; m2 < dv; ++m2) {
              const Rational coef = r1.at(m, v) * r2.at(m2, w);
              if (coef != 0) A.at(row, uidx(j2, m, m2)) -= coef;
            }
          ++row;
        }
    }
  }

  const int d = M.dim();
  std::vector<RatMatrix> basis;
  for (const auto& x : nullspace(A)) {
    RatMatrix C(d, d);
    for (int j : with_partner)
      for (int v = 0; v < dv; ++v)
        for (int w = 0; w < dv; ++w)
          C.at(j * dv + v, partner[j] * dv + w) = x[uidx(j, v, w)];
    basis.push_back(std::move(C));
  }
  return detail::split_by_transpose(std::move(basis),
                                    [](const RatMatrix& c) { return c.transpose(); });
}

/// Invariant pairings B : V x tV -> Q, where tV is V with the action twisted
/// by conjugation with t. Invariance reads rho(k)^T B = B rho(t^-1 k^-1 t)
/// on generators; the transpose operation is B |-> B^T rho(t^2).
inline FormSpace twisted_forms(const Representation& V, const Permutation& t) {
  const auto& K = *V.group();
  require_outer_involution(K, t);
  const int dv = V.dim();
  const Permutation tinv = t.inverse();

  std::vector<Permutation> gens = K.generators();
  if (gens.empty()) gens.push_back(Permutation(K.degree()));
  RatMatrix A(static_cast<int>(gens.size()) * dv * dv, dv * dv);
  auto uidx = [&](int v, int w) { return v * dv + w; };
  int row = 0;
  for (const auto& k : gens) {
    const RatMatrix& rk = V.of(k);
    const RatMatrix& rtw = V.of(tinv * k.inverse() * t);
    for (int i = 0; i < dv; ++i)
      for (int j = 0; j < dv; ++j) {
        for (int m = 0; m < dv; ++m) {
          if (rk.at(m, i) != 0) A.at(row, uidx(m, j)) += rk.at(m, i);
          if (rtw.at(m, j) != 0) A.at(row, uidx(i, m)) -= rtw.at(m, j);
        }
        ++row;
      }
  }
  std::vector<RatMatrix> basis;
  for (const auto& x : nullspace(A)) {
    RatMatrix B(dv, dv);
    for (int v = 0; v < dv; ++v)
      for (int w = 0; w < dv; ++w) B.at(v, w) = x[uidx(v, w)];
    basis.push_back(std::move(B));
  }
  const RatMatrix rt2 = V.of(t * t);
  return detail::split_by_transpose(
      std::move(basis), [rt2](const RatMatrix& b) { return b.transpose() * rt2; });
}

inline RatMatrix twisted_transpose(const Representation& V, const Permutation& t,
                                   const RatMatrix& B) {
  return B.transpose() * V.of(t * t);
}

/// Restriction of an invariant form on the induced module to a pairing on V:
/// Res(C)(v, tw) = C(1 (x) v, t (x) w).
inline RatMatrix res_form(const InducedModule& M, const RatMatrix& C, const Permutation& t) {
  const int dv = M.rep()->dim();
  const auto& K = *M.rep()->group();
  const int j0 = M.coset_of_element(Permutation(K.degree()));
  const int jt = M.coset_of_element(t);
  const RatMatrix& rkt = M.rep()->of(M.cosets()[jt].inverse() * t);
  RatMatrix B(dv, dv);
  for (int i = 0; i < dv; ++i)
    for (int w = 0; w < dv; ++w) {
      Rational s = 0;
      for (int m = 0; m < dv; ++m) s += rkt.at(m, w) * C.at(j0 * dv + i, jt * dv + m);
      B.at(i, w) = s;
    }
  return B;
}

/// Inverse construction: Ind(B)(a (x) v, b (x) w) = sum_k [a k t = b] B(v, k tw).
inline RatMatrix ind_form(const InducedModule& M, const RatMatrix& B, const Permutation& t) {
  const int nc = static_cast<int>(M.cosets().size());
  const int dv = M.rep()->dim();
  const auto& K = *M.rep()->group();
  const Permutation tinv = t.inverse();
  RatMatrix C(M.dim(), M.dim());
  for (int j = 0; j < nc; ++j)
    for (int j2 = 0; j2 < nc; ++j2) {
      const Permutation k = M.cosets()[j].inverse() * M.cosets()[j2] * tinv;
      if (!K.contains(k)) continue;
      const RatMatrix prod = B * M.rep()->of(tinv * k * t);
      for (int v = 0; v < dv; ++v)
        for (int w = 0; w < dv; ++w) C.at(j * dv + v, j2 * dv + w) = prod.at(v, w);
    }
  return C;
}

}  // namespace cosetfs
