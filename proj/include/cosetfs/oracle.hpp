#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "cosetfs/class_function.hpp"
#include "cosetfs/induced_module.hpp"
#include "cosetfs/perm_group.hpp"

namespace cosetfs::oracle {

/// Literal enumeration of {c in bH : c^r = a}. Ground truth for every
/// counted quantity; deliberately shares nothing with the formula layer
/// beyond permutation arithmetic.
inline long long count_roots_in_coset(const PermGroup& H, const Permutation& b, int r,
                                      const Permutation& a) {
  long long count = 0;
  for (const auto& h : H.elements())
    if ((b * h).pow(r) == a) ++count;
  return count;
}

inline long long count_involutions_in_coset(const PermGroup& H, const Permutation& b) {
  return count_roots_in_coset(H, b, 2, Permutation(b.degree()));
}

/// r-th roots of the identity in the full symmetric group, by streaming
/// enumeration (no group object is materialized).
inline long long count_roots_in_symmetric_group(int n, int r) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  long long count = 0;
  do {
    const Permutation p = Permutation::from_images(img);
    if (p.pow(r).is_identity()) ++count;
  } while (std::next_permutation(img.begin(), img.end()));
  return count;
}

/// Tabulates a |-> |{c in bH : c^r = a}| on a subgroup K of H and certifies
/// that the table is constant on the conjugacy classes of K before wrapping
/// it as a class function.
inline ClassFunction class_function_R(const PermGroup& H, const Permutation& b, int r,
                                      ConstGroupPtr K) {
  std::vector<long long> values(K->size());
  for (std::size_t i = 0; i < K->size(); ++i)
    values[i] = count_roots_in_coset(H, b, r, K->element(static_cast<int>(i)));
  const auto& classes = K->conjugacy_classes();
  std::vector<Rational> class_values;
  for (const auto& cls : classes) {
    const long long v = values[cls.members.front()];
    for (int m : cls.members)
      if (values[m] != v)
        throw std::logic_error("class_function_R: counts are not class-constant on K");
    class_values.push_back(Rational(static_cast<long>(v)));
  }
  return ClassFunction(std::move(K), std::move(class_values));
}

/// Exact trace of a face element on an induced module, via the full action
/// matrix built from first principles: coset membership is decided by
/// explicit multiplication and stabilizer lookup, not by the module's
/// precomputed action tables.
inline Rational trace_oracle(const InducedModule& M, const FaceElement& e) {
  const auto& amb = *M.ambient();
  const auto& K = *M.rep()->group();
  const auto& cosets = M.cosets();
  const int nc = static_cast<int>(cosets.size());
  const int dv = M.rep()->dim();
  const int d = nc * dv;
  if (static_cast<long long>(d) * d > 4000000)
    throw CapExceeded("trace_oracle: module dimension too large for a dense matrix");
  RatMatrix mat(d, d);
  for (const auto& [s, c] : e.terms()) {
    const Permutation& a = amb.group().element(s.g);
    for (int j = 0; j < nc; ++j) {
      const Permutation p = a * cosets[j];
      int j2 = -1;
      for (int t = 0; t < nc; ++t)
        if (K.contains(cosets[t].inverse() * p)) {
          j2 = t;
          break;
        }
      if (j2 < 0) throw std::logic_error("trace_oracle: coset decomposition failed");
      if (amb.gset().act(cosets[j2], M.x()) != s.x) continue;
      if (amb.gset().act(cosets[j2], M.y()) != s.y) continue;
      const RatMatrix& rho = M.rep()->of(cosets[j2].inverse() * p);
      for (int pp = 0; pp < dv; ++pp)
        for (int q = 0; q < dv; ++q) mat.at(j2 * dv + pp, j * dv + q) += c * rho.at(pp, q);
    }
  }
  return mat.trace();
}

}  // namespace cosetfs::oracle
