#pragma once

#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "cosetfs/class_function.hpp"
#include "cosetfs/gset.hpp"
#include "cosetfs/oracle.hpp"
#include "cosetfs/sn_characters.hpp"
#include "cosetfs/stabilizer.hpp"

namespace cosetfs {

/// Scan of {a in G : a x = y, a^r x = x} together with the two-point
/// stabilizer order; the witnesses are stored as the powers a^-r, which is
/// what every indicator formula consumes.
struct RootScan {
  long long stabilizer_order = 0;
  std::vector<Permutation> inverse_r_powers;
};

inline RootScan root_scan(const GSet& X, int x, int y, int r) {
  RootScan rs;
  const PermGroup& G = X.group();
  for (std::size_t i = 0; i < G.size(); ++i) {
    const int gi = static_cast<int>(i);
    const int ax = X.act(gi, x);
    if (ax == x && X.act(gi, y) == y) rs.stabilizer_order++;
    if (ax == y) {
      const Permutation& a = G.element(gi);
      if (X.act(a.pow(r), x) == x) rs.inverse_r_powers.push_back(a.pow(-r));
    }
  }
  return rs;
}

inline Rational fs_from_scan(const RootScan& rs, const CharFn& chi) {
  Rational s = 0;
  for (const auto& p : rs.inverse_r_powers) s += chi(p);
  return s / Rational(static_cast<long>(rs.stabilizer_order));
}

/// r-th indicator of the module induced from the character chi at the
/// orbital of (x, y): |G_xy|^-1 sum over {a : ax = y, a^r x = x} of
/// chi(a^-r).
inline Rational fs_formula(const GSet& X, int x, int y, const CharFn& chi, int r) {
  return fs_from_scan(root_scan(X, x, y, r), chi);
}

/// Twisted second indicator |K|^-1 sum_k chi((tk)^2), with
/// (tk)^2 = t^2 (t^-1 k t) k evaluated inside K.
inline Rational twisted_fs2(const PermGroup& K, const CharFn& chi, const Permutation& t) {
  require_outer_involution(K, t);
  const Permutation t2 = t * t;
  const Permutation tinv = t.inverse();
  Rational s = 0;
  for (const auto& k : K.elements()) s += chi(t2 * (tinv * k * t) * k);
  return s / Rational(static_cast<long>(K.size()));
}

/// Second indicator of the module labelled by a partition matrix on the
/// orbital classified by gamma: 1 exactly when both matrices are symmetric.
inline int fs2_young(const CompositionMatrix& gamma, const PartitionMatrix& lam) {
  if (lam.ell != gamma.ell) throw std::invalid_argument("fs2_young: shape mismatch");
  for (int i = 0; i < gamma.ell; ++i)
    for (int j = 0; j < gamma.ell; ++j)
      if (static_cast<int>(lam.at(i, j).size()) != gamma.at(i, j))
        throw std::invalid_argument("fs2_young: partition sizes do not match gamma");
  return gamma.is_symmetric() && lam.is_symmetric() ? 1 : 0;
}

/// Number of involutions in the coset b S_alpha, by the closed form
/// (prod_{i<j} gamma_ij!) * prod_i stab_total(gamma_ii) when the
/// intersection matrix of (A, bA) is symmetric, 0 otherwise.
inline long long involutions_in_young_coset(const Composition& alpha, const Permutation& b) {
  if (!alpha.all_positive())
    throw std::invalid_argument("involutions_in_young_coset: alpha must have positive parts");
  const CompositionMatrix g = gamma_matrix_of_coset(alpha, b);
  if (!g.is_symmetric()) return 0;
  long long v = 1;
  for (int i = 0; i < g.ell; ++i) {
    v *= stab_total(g.at(i, i));
    for (int j = i + 1; j < g.ell; ++j) v *= factorial(g.at(i, j));
  }
  return v;
}

/// Root counts in the whole symmetric group by the divisor recurrence
/// R(m) = sum_{s | r, 1 <= s <= m} (m-1)!/(m-s)! R(m-s), R(0) = 1.
inline long long recurrence_Rr(int n, int r) {
  if (n < 0 || r < 1) throw std::invalid_argument("recurrence_Rr: n >= 0, r >= 1 required");
  std::vector<long long> R(n + 1, 0);
  R[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int s = 1; s <= m; ++s) {
      if (r % s != 0) continue;
      R[m] += factorial(m - 1) / factorial(m - s) * R[m - s];
    }
  return R[n];
}

/// Divisor-sum form of the r-th indicator for modules at the orbital of the
/// two points moved by the top transposition: the indicator of the induced
/// module equals sum over 2 <= s <= n, s | r of the r-th indicator of the
/// restriction of chi to the symmetric group on the first n-s points, with
/// the empty restriction contributing chi(1).
inline Rational fs_r_divisor_sum(int n, const CharFn& chi, int r) {
  if (n < 2) throw std::invalid_argument("fs_r_divisor_sum: n >= 2 required");
  Rational total = 0;
  for (int s = 2; s <= n; ++s) {
    if (r % s != 0) continue;
    if (s == n) {
      total += chi(Permutation(n));
      continue;
    }
    std::vector<int> pts(n - s);
    std::iota(pts.begin(), pts.end(), 0);
    auto Sns = PermGroup::on_points(n, pts);
    Rational term = 0;
    for (const auto& h : Sns->elements()) term += chi(h.pow(-r));
    total += term / Rational(static_cast<long>(Sns->size()));
  }
  return total;
}

/// Class-function expansion of the coset-wise root count over the
/// irreducible characters of the two-point stabilizer. Automatic when the
/// stabilizer is a product of symmetric groups on blocks (the Young case).
struct ExpansionResult {
  GSetPtr X;
  int x = 0, y = 0;
  StabilizerData stab;
  std::vector<PartitionMatrix> labels;
  std::vector<Rational> coefficients;  // FS_r per label
  std::vector<ProductCharacter> characters;

  /// Value sum_lambda FS_r(lambda) chi_lambda(a) for a in K.
  Rational value_at(const Permutation& a) const {
    Rational s = 0;
    for (std::size_t i = 0; i < labels.size(); ++i)
      s += coefficients[i] * Rational(static_cast<long>(characters[i].eval(a)));
    return s;
  }

  ClassFunction as_class_function() const {
    return ClassFunction::from_evaluator(stab.K, [this](const Permutation& a) {
      return value_at(a);
    });
  }
};

/// Expansion at a prebuilt ordered-set-partition space; x is its base point.
inline ExpansionResult coset_root_expansion_at(GSetPtr X, int y, int r) {
  ExpansionResult er;
  er.X = std::move(X);
  er.x = er.X->base_point();
  er.y = y;
  er.stab = two_point_stabilizer(*er.X, er.x, er.y);
  er.labels = partition_matrices(er.stab.gamma);
  const RootScan rs = root_scan(*er.X, er.x, er.y, r);
  for (const auto& lam : er.labels) {
    ProductCharacter chi = character_on_stabilizer(er.stab, lam);
    er.coefficients.push_back(fs_from_scan(rs, chi.fn()));
    er.characters.push_back(std::move(chi));
  }
  return er;
}

inline ExpansionResult coset_root_expansion(ConstGroupPtr G, const Composition& alpha,
                                            const Permutation& b, int r) {
  if (!alpha.all_positive())
    throw std::invalid_argument("coset_root_expansion: alpha must have positive parts");
  auto X = GSet::ordered_set_partitions(std::move(G), alpha);
  const int y = X->act(b, X->base_point());
  return coset_root_expansion_at(std::move(X), y, r);
}

/// Expansion with caller-supplied irreducible characters of the stabilizer,
/// for orbitals whose stabilizer is not covered automatically.
inline ClassFunction expansion_from_characters(const GSet& X, int x, int y, ConstGroupPtr K,
                                               const std::vector<ClassFunction>& irreducibles,
                                               int r) {
  const RootScan rs = root_scan(X, x, y, r);
  std::vector<Rational> coeff;
  for (const auto& chi : irreducibles) coeff.push_back(fs_from_scan(rs, chi.fn()));
  return ClassFunction::from_evaluator(std::move(K), [&](const Permutation& a) {
    Rational s = 0;
    for (std::size_t i = 0; i < irreducibles.size(); ++i)
      s += coeff[i] * irreducibles[i].value_at(a);
    return s;
  });
}

/// Root counts in the coset moving the top point, with both sides of the
/// induced-class-function identity materialized on the stabilizer and the
/// character property (nonnegative integral multiplicities) certified.
struct CosetRootsReport {
  long long count = 0;                  // |{a in b S_{n-1} : a^r = 1}|, divisor-sum form
  long long oracle_count = 0;           // literal enumeration
  bool induced_identity_ok = false;     // lhs == sum of induced root-count functions
  bool character_property_ok = false;   // all multiplicities nonnegative integers
  std::vector<Rational> multiplicities; // by partitions_of(n-2) order
};

inline CosetRootsReport coset_roots_Sn(int n, int r) {
  if (n < 2) throw std::invalid_argument("coset_roots_Sn: n >= 2 required");
  CosetRootsReport rep;
  for (int s = 2; s <= n; ++s) {
    if (r % s != 0) continue;
    rep.count += factorial(n - 2) / factorial(n - s) * recurrence_Rr(n - s, r);
  }

  std::vector<int> kpts(n - 2);
  std::iota(kpts.begin(), kpts.end(), 0);
  auto K = PermGroup::on_points(n, kpts);
  std::vector<int> hpts(n - 1);
  std::iota(hpts.begin(), hpts.end(), 0);
  auto H = PermGroup::on_points(n, hpts);
  const Permutation b = Permutation::transposition(n, n - 2, n - 1);

  rep.oracle_count = oracle::count_roots_in_coset(*H, b, r, Permutation(n));

  ClassFunction lhs = ClassFunction::from_evaluator(K, [&](const Permutation& a) {
    return Rational(static_cast<long>(oracle::count_roots_in_coset(*H, b, r, a)));
  });
  bool first = true;
  std::optional<ClassFunction> rhs;
  for (int s = 2; s <= n; ++s) {
    if (r % s != 0) continue;
    std::vector<int> pts(n - s);
    std::iota(pts.begin(), pts.end(), 0);
    auto Sns = PermGroup::on_points(n, pts);
    ClassFunction Rr = ClassFunction::from_evaluator(Sns, [&](const Permutation& a) {
      long long cnt = 0;
      for (const auto& c : Sns->elements())
        if (c.pow(r) == a) ++cnt;
      return Rational(static_cast<long>(cnt));
    });
    ClassFunction ind = induce_to(Rr, K);
    rhs = first ? ind : *rhs + ind;
    first = false;
  }
  if (!rhs) rhs = ClassFunction::from_evaluator(K, [](const Permutation&) { return Rational(0); });
  rep.induced_identity_ok = (lhs == *rhs);

  rep.character_property_ok = true;
  for (const auto& mu : partitions_of(n - 2)) {
    const Rational m = inner_product(lhs, irreducible_character(K, kpts, mu));
    rep.multiplicities.push_back(m);
    if (!is_integer(m) || m < 0) rep.character_property_ok = false;
  }
  return rep;
}

/// Sum of coset-wise root counts over double cosets, weighted by the number
/// of left cosets inside each double coset.
struct DoubleCosetSum {
  long long whole_group = 0;  // R^r_G(1) by enumeration
  long long summed = 0;
  struct Term {
    Permutation rep;
    long long multiplicity = 0;  // |H| / |H n b H b^-1|
    long long coset_count = 0;   // roots of 1 in bH
  };
  std::vector<Term> terms;
};

inline DoubleCosetSum sum_over_double_cosets(const PermGroup& G, const PermGroup& H, int r) {
  DoubleCosetSum out;
  const Permutation id(G.degree());
  for (const auto& g : G.elements())
    if (g.pow(r) == id) ++out.whole_group;
  for (const auto& b : G.double_cosets(H).reps) {
    DoubleCosetSum::Term t;
    t.rep = b;
    long long inter = 0;
    const Permutation binv = b.inverse();
    for (const auto& h : H.elements())
      if (H.contains(binv * h * b)) ++inter;
    t.multiplicity = static_cast<long long>(H.size()) / inter;
    t.coset_count = oracle::count_roots_in_coset(H, b, r, id);
    out.summed += t.multiplicity * t.coset_count;
    out.terms.push_back(std::move(t));
  }
  return out;
}

/// Convolution identity for total standard-tableau counts:
/// stab_total(n) = sum_k m! m'! / (k! (m-k)! (m'-k)!) stab_total(m-k) stab_total(m'-k).
inline bool stab_identity(int n, int m) {
  if (m <= 0 || m >= n) throw std::invalid_argument("stab_identity: 0 < m < n required");
  const int mp = n - m;
  long long rhs = 0;
  for (int k = 0; k <= std::min(m, mp); ++k) {
    rhs += factorial(m) / (factorial(k) * factorial(m - k)) * factorial(mp) /
           factorial(mp - k) * stab_total(m - k) * stab_total(mp - k);
  }
  return rhs == stab_total(n);
}

}  // namespace cosetfs
