#pragma once

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "cosetfs/class_function.hpp"
#include "cosetfs/partitions.hpp"
#include "cosetfs/permutation.hpp"
#include "cosetfs/stabilizer.hpp"

namespace cosetfs {

namespace detail {

// Border-strip removal on beta numbers: subtract the strip size from one
// first-column hook length, keeping all values distinct and nonnegative.
// The strip height is the number of beta values jumped over.
inline long long mn_rec(std::vector<int> lam, std::vector<int> mu);

inline long long mn_memoized(const std::vector<int>& lam, const std::vector<int>& mu) {
  static std::map<std::pair<std::vector<int>, std::vector<int>>, long long> memo;
  static std::mutex memo_mutex;
  const auto key = std::make_pair(lam, mu);
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  long long v = mn_rec(lam, mu);
  std::lock_guard<std::mutex> lock(memo_mutex);
  memo.emplace(key, v);
  return v;
}

inline long long mn_rec(std::vector<int> lam, std::vector<int> mu) {
  if (mu.empty()) return lam.empty() ? 1 : 0;
  const int t = mu.front();
  std::vector<int> mu_rest(mu.begin() + 1, mu.end());
  const int L = static_cast<int>(lam.size());
  if (L == 0) return 0;
  std::vector<int> beta(L);
  for (int i = 0; i < L; ++i) beta[i] = lam[i] + (L - 1 - i);
  long long total = 0;
  for (int i = 0; i < L; ++i) {
    const int target = beta[i] - t;
    if (target < 0) continue;
    bool clash = false;
    int height = 0;
    for (int j = 0; j < L; ++j) {
      if (j == i) continue;
      if (beta[j] == target) {
        clash = true;
        break;
      }
      if (beta[j] > target && beta[j] < beta[i]) ++height;
    }
    if (clash) continue;
    std::vector<int> nb = beta;
    nb[i] = target;
    std::sort(nb.rbegin(), nb.rend());
    std::vector<int> nl;
    for (int k = 0; k < L; ++k) {
      int part = nb[k] - (L - 1 - k);
      if (part > 0) nl.push_back(part);
    }
    const long long sub = mn_memoized(nl, mu_rest);
    total += (height % 2 == 0) ? sub : -sub;
  }
  return total;
}

}  // namespace detail

/// Irreducible symmetric group character value by the Murnaghan-Nakayama
/// rule; chi_lambda at any element of cycle type mu.
inline long long mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("mn_character: |lambda| != |mu|");
  return detail::mn_memoized(lambda.parts, mu.parts);
}

/// Character of an outer tensor product of symmetric group irreducibles,
/// one factor per point block. Evaluation never locates the element in a
/// class list: it reads off the cycle type on each block.
struct ProductCharacter {
  std::vector<std::vector<int>> blocks;  // disjoint point sets, may be empty
  std::vector<Partition> lambdas;        // |lambdas[i]| = |blocks[i]|

  long long eval(const Permutation& a) const {
    long long v = 1;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      v *= mn_character(lambdas[i], cycle_type_on(a, blocks[i]));
      if (v == 0) return 0;
    }
    return v;
  }

  long long degree() const {
    long long d = 1;
    for (const auto& lam : lambdas) d *= stab_count(lam);
    return d;
  }

  CharFn fn() const {
    return [pc = *this](const Permutation& a) { return Rational(static_cast<long>(pc.eval(a))); };
  }

  std::string str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      if (i) os << "*";
      os << lambdas[i].str();
    }
    return os.str();
  }
};

/// Complete irredundant list of irreducible characters of a product of
/// symmetric groups on the given blocks, indexed by all tuples of
/// partitions (cell order fixed, partitions in reverse-lex order).
inline std::vector<ProductCharacter> product_characters(
    const std::vector<std::vector<int>>& blocks) {
  std::vector<std::vector<Partition>> choices;
  for (const auto& blk : blocks) choices.push_back(partitions_of(static_cast<int>(blk.size())));
  std::vector<ProductCharacter> out;
  std::vector<Partition> cur(blocks.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == blocks.size()) {
      out.push_back(ProductCharacter{blocks, cur});
      return;
    }
    for (const auto& lam : choices[i]) {
      cur[i] = lam;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

/// Square matrix of partitions with cell sizes prescribed by an intersection
/// matrix.
struct PartitionMatrix {
  int ell = 0;
  std::vector<Partition> cells;  // row-major

  const Partition& at(int i, int j) const { return cells[i * ell + j]; }

  bool is_symmetric() const {
    for (int i = 0; i < ell; ++i)
      for (int j = i + 1; j < ell; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }

  auto operator<=>(const PartitionMatrix&) const = default;

  /// "(2,1) ();() (1)" with rows ';'-separated and cells space-separated.
  std::string str() const {
    std::ostringstream os;
    for (int i = 0; i < ell; ++i) {
      if (i) os << ';';
      for (int j = 0; j < ell; ++j) {
        if (j) os << ' ';
        os << at(i, j).str();
      }
    }
    return os.str();
  }

  static PartitionMatrix parse(const std::string& s) {
    PartitionMatrix pm;
    std::vector<Partition> cells;
    std::istringstream rows(s);
    std::string row;
    int ell = 0;
    while (std::getline(rows, row, ';')) {
      std::istringstream is(row);
      std::string cell;
      int rowlen = 0;
      while (is >> cell) {
        cells.push_back(Partition::parse(cell));
        ++rowlen;
      }
      if (ell == 0)
        ell = rowlen;
      else if (rowlen != ell)
        throw std::invalid_argument("PartitionMatrix::parse: ragged rows in '" + s + "'");
    }
    if (ell == 0 || static_cast<int>(cells.size()) != ell * ell)
      throw std::invalid_argument("PartitionMatrix::parse: not square in '" + s + "'");
    pm.ell = ell;
    pm.cells = std::move(cells);
    return pm;
  }
};

/// All partition matrices with cell sizes given by gamma, row-major
/// cartesian order.
inline std::vector<PartitionMatrix> partition_matrices(const CompositionMatrix& gamma) {
  std::vector<std::vector<Partition>> choices;
  for (int i = 0; i < gamma.ell; ++i)
    for (int j = 0; j < gamma.ell; ++j) choices.push_back(partitions_of(gamma.at(i, j)));
  std::vector<PartitionMatrix> out;
  std::vector<Partition> cur(choices.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == choices.size()) {
      out.push_back(PartitionMatrix{gamma.ell, cur});
      return;
    }
    for (const auto& lam : choices[i]) {
      cur[i] = lam;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

/// Precompose a product character with the block isomorphism psi (k -> u^-1 k u):
/// the twisted character lives on the conjugate blocks u(block).
inline ProductCharacter twist_by_psi(const ProductCharacter& chi0, const Permutation& u) {
  ProductCharacter chi = chi0;
  for (auto& blk : chi.blocks) {
    for (auto& p : blk) p = u(p);
    std::sort(blk.begin(), blk.end());
  }
  return chi;
}

/// Character of the irreducible module labelled by a partition matrix, as a
/// function on the two-point stabilizer K (pulled back along psi; since the
/// identification of each interval with its target block is
/// order-preserving, this is the blockwise product character on B_ij).
inline ProductCharacter character_on_stabilizer(const StabilizerData& sd,
                                                const PartitionMatrix& lam) {
  if (!sd.young) throw std::invalid_argument("character_on_stabilizer: no block data");
  if (lam.ell != sd.gamma.ell)
    throw std::invalid_argument("character_on_stabilizer: shape mismatch");
  ProductCharacter chi0;
  for (int i = 0; i < lam.ell; ++i)
    for (int j = 0; j < lam.ell; ++j) {
      const int g = sd.gamma.at(i, j);
      if (static_cast<int>(lam.at(i, j).size()) != g)
        throw std::invalid_argument("character_on_stabilizer: cell size mismatch");
      std::vector<int> interval(g);
      for (int s = 0; s < g; ++s) interval[s] = sd.eps[i][j] + s;
      chi0.blocks.push_back(std::move(interval));
      chi0.lambdas.push_back(lam.at(i, j));
    }
  return twist_by_psi(chi0, sd.u);
}

/// Canonical permutation of the given cycle type: consecutive cycles,
/// longest first.
inline Permutation class_representative(int degree, const Partition& mu) {
  Permutation p(degree);
  int off = 0;
  for (int len : mu.parts) {
    std::vector<int> pts(len);
    std::iota(pts.begin(), pts.end(), off);
    p = p * Permutation::cycle(degree, pts);
    off += len;
  }
  return p;
}

/// Irreducible character of the symmetric group on a point set, as a class
/// function on an enumerated copy of that group.
inline ClassFunction irreducible_character(ConstGroupPtr sym_on_points,
                                           const std::vector<int>& points,
                                           const Partition& lambda) {
  return ClassFunction::from_evaluator(std::move(sym_on_points), [=](const Permutation& a) {
    return Rational(static_cast<long>(mn_character(lambda, cycle_type_on(a, points))));
  });
}

/// Character table of S_m (rows: partitions labelling irreducibles, columns:
/// cycle types), exported as CSV with class representatives in the header.
inline std::string character_table_csv(int m) {
  const auto parts = partitions_of(m);
  std::ostringstream os;
  os << "irreducible";
  for (const auto& mu : parts) os << ',' << '"' << class_representative(m, mu).cycles() << '"';
  os << '\n';
  for (const auto& lam : parts) {
    os << '"' << lam.str() << '"';
    for (const auto& mu : parts) os << ',' << mn_character(lam, mu);
    os << '\n';
  }
  return os.str();
}

}  // namespace cosetfs
