#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "cosetfs/config.hpp"
#include "cosetfs/perm_group.hpp"

namespace cosetfs {

namespace detail {
struct IntVecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};
}  // namespace detail

/// Finite left G-set with an indexed, deterministically ordered point list.
/// Two realizations are provided: left coset spaces G/H, and ordered set
/// partitions of [n] with prescribed block sizes (points are tuples
/// (B_1,...,B_l), acted on blockwise). The action is tabulated densely when
/// |G|*|X| is within the configured cap and computed on demand otherwise.
class GSet {
 public:
  static std::shared_ptr<GSet> coset_space(ConstGroupPtr G, const PermGroup& H) {
    auto X = std::shared_ptr<GSet>(new GSet());
    X->G_ = std::move(G);
    X->reps_ = X->G_->left_coset_reps(H);
    X->size_ = static_cast<int>(X->reps_.size());
    X->elem_to_point_.assign(X->G_->size(), -1);
    for (int j = 0; j < X->size_; ++j)
      for (const auto& h : H.elements())
        X->elem_to_point_[X->G_->index_of(X->reps_[j] * h)] = j;
    X->base_ = X->elem_to_point_[X->G_->identity_index()];
    X->maybe_tabulate();
    return X;
  }

  static std::shared_ptr<GSet> ordered_set_partitions(ConstGroupPtr Sn,
                                                      const Composition& alpha) {
    if (alpha.total() != Sn->degree())
      throw std::invalid_argument("ordered_set_partitions: alpha does not sum to n");
    auto X = std::shared_ptr<GSet>(new GSet());
    X->G_ = std::move(Sn);
    X->alpha_ = alpha;
    const int n = alpha.total();
    const int ell = alpha.length();
    // Points encoded as color vectors (color[c] = block index of point c),
    // generated in lexicographic order; the nondecreasing coloring (the
    // canonical interval tuple) comes first and is the base point.
    std::vector<int> quota = alpha.parts;
    std::vector<int> colors(n);
    auto rec = [&](auto&& self, int pos) -> void {
      if (pos == n) {
        X->colors_.push_back(colors);
        return;
      }
      for (int b = 0; b < ell; ++b) {
        if (quota[b] == 0) continue;
        quota[b]--;
        colors[pos] = b;
        self(self, pos + 1);
        quota[b]++;
      }
    };
    rec(rec, 0);
    X->size_ = static_cast<int>(X->colors_.size());
    X->color_index_.reserve(X->size_ * 2);
    for (int i = 0; i < X->size_; ++i) X->color_index_.emplace(X->colors_[i], i);
    X->base_ = 0;
    X->maybe_tabulate();
    return X;
  }

  int size() const { return size_; }
  const PermGroup& group() const { return *G_; }
  const ConstGroupPtr& group_ptr() const { return G_; }
  int base_point() const { return base_; }
  bool is_osp() const { return !colors_.empty(); }
  const Composition& alpha() const { return alpha_; }

  int act(int elem_idx, int pt) const {
    if (!table_.empty()) return table_[elem_idx][pt];
    return act_direct(G_->element(elem_idx), pt);
  }
  int act(const Permutation& g, int pt) const {
    if (!table_.empty()) {
      int gi = G_->index_of(g);
      if (gi >= 0) return table_[gi][pt];
    }
    return act_direct(g, pt);
  }

  /// Blocks of an ordered-set-partition point, each sorted ascending.
  std::vector<std::vector<int>> blocks_of(int pt) const {
    if (!is_osp()) throw std::invalid_argument("blocks_of: not an ordered set partition G-set");
    std::vector<std::vector<int>> blocks(alpha_.length());
    for (int c = 0; c < static_cast<int>(colors_[pt].size()); ++c)
      blocks[colors_[pt][c]].push_back(c);
    return blocks;
  }

  /// Coset-space representative (minimal element of the coset).
  const Permutation& coset_rep(int pt) const {
    if (is_osp() || reps_.empty()) throw std::invalid_argument("coset_rep: not a coset space");
    return reps_[pt];
  }
  int point_of_element(const Permutation& g) const {
    if (reps_.empty()) throw std::invalid_argument("point_of_element: not a coset space");
    return elem_to_point_[G_->index_of(g)];
  }

  /// "{1,2}|{3,4}" for set partitions, coset representative cycles otherwise.
  std::string label(int pt) const {
    std::ostringstream os;
    if (is_osp()) {
      auto blocks = blocks_of(pt);
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (b) os << '|';
        os << '{';
        for (std::size_t i = 0; i < blocks[b].size(); ++i) {
          if (i) os << ',';
          os << blocks[b][i] + 1;
        }
        os << '}';
      }
    } else {
      os << reps_[pt].cycles() << "H";
    }
    return os.str();
  }

  std::vector<std::vector<int>> orbits() const {
    std::vector<char> seen(size_, 0);
    std::vector<std::vector<int>> out;
    for (int p = 0; p < size_; ++p) {
      if (seen[p]) continue;
      std::vector<int> orb{p};
      seen[p] = 1;
      for (std::size_t k = 0; k < orb.size(); ++k)
        for (const auto& g : G_->generators()) {
          int q = act(g, orb[k]);
          if (!seen[q]) {
            seen[q] = 1;
            orb.push_back(q);
          }
        }
      std::sort(orb.begin(), orb.end());
      out.push_back(std::move(orb));
    }
    return out;
  }

  GroupPtr stabilizer(int pt) const {
    std::vector<Permutation> fix;
    for (std::size_t i = 0; i < G_->size(); ++i)
      if (act(static_cast<int>(i), pt) == pt) fix.push_back(G_->element(static_cast<int>(i)));
    return PermGroup::from_elements(G_->degree(), std::move(fix));
  }

 private:
  GSet() = default;

  int act_direct(const Permutation& g, int pt) const {
    if (is_osp()) {
      const auto& col = colors_[pt];
      std::vector<int> out(col.size());
      for (std::size_t c = 0; c < col.size(); ++c) out[g(static_cast<int>(c))] = col[c];
      auto it = color_index_.find(out);
      if (it == color_index_.end()) throw std::logic_error("GSet: action left the point set");
      return it->second;
    }
    return elem_to_point_[G_->index_of(g * reps_[pt])];
  }

  void maybe_tabulate() {
    const std::size_t cells = G_->size() * static_cast<std::size_t>(size_);
    if (cells > Config::global().action_table_cap) return;
    table_.assign(G_->size(), std::vector<int>(size_));
    for (std::size_t i = 0; i < G_->size(); ++i)
      for (int p = 0; p < size_; ++p) table_[i][p] = act_direct(G_->element(static_cast<int>(i)), p);
  }

  ConstGroupPtr G_;
  int size_ = 0;
  int base_ = 0;
  std::vector<std::vector<int>> table_;

  // coset-space realization
  std::vector<Permutation> reps_;
  std::vector<int> elem_to_point_;

  // ordered-set-partition realization
  Composition alpha_;
  std::vector<std::vector<int>> colors_;
  std::unordered_map<std::vector<int>, int, detail::IntVecHash> color_index_;
};

using GSetPtr = std::shared_ptr<GSet>;
using ConstGSetPtr = std::shared_ptr<const GSet>;

/// Orbit of a point pair under the diagonal action.
struct Orbital {
  int x = 0, y = 0;
  std::vector<std::pair<int, int>> pairs;  // sorted

  bool contains(int a, int b) const {
    return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(a, b));
  }
  bool is_symmetric() const { return contains(y, x); }
};

inline Orbital orbital_of(const GSet& X, int x, int y) {
  Orbital o;
  o.x = x;
  o.y = y;
  std::vector<std::pair<int, int>> pairs{{x, y}};
  std::map<std::pair<int, int>, bool> seen{{{x, y}, true}};
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [p, q] = pairs[k];
    for (const auto& g : X.group().generators()) {
      std::pair<int, int> im{X.act(g, p), X.act(g, q)};
      if (seen.emplace(im, true).second) pairs.push_back(im);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  o.pairs = std::move(pairs);
  return o;
}

/// Minimal group element mapping (x,y) to (y,x), if the orbital is symmetric.
inline std::optional<Permutation> find_transposer(const GSet& X, int x, int y) {
  for (std::size_t i = 0; i < X.group().size(); ++i) {
    const int gi = static_cast<int>(i);
    if (X.act(gi, x) == y && X.act(gi, y) == x) return X.group().element(gi);
  }
  return std::nullopt;
}

/// l x l matrix of block intersection sizes, with its reference composition.
/// Membership in the classifying set requires every row and column sum to
/// equal the corresponding part of alpha.
struct CompositionMatrix {
  Composition alpha;
  int ell = 0;
  std::vector<int> entries;  // row-major

  int at(int i, int j) const { return entries[i * ell + j]; }
  int& at(int i, int j) { return entries[i * ell + j]; }

  bool is_symmetric() const {
    for (int i = 0; i < ell; ++i)
      for (int j = i + 1; j < ell; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }

  bool row_col_sums_ok() const {
    for (int j = 0; j < ell; ++j) {
      int rs = 0, cs = 0;
      for (int i = 0; i < ell; ++i) {
        rs += at(j, i);
        cs += at(i, j);
      }
      if (rs != alpha.parts[j] || cs != alpha.parts[j]) return false;
    }
    return true;
  }

  auto operator<=>(const CompositionMatrix&) const = default;

  std::string str() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < ell; ++i) {
      if (i) os << ';';
      for (int j = 0; j < ell; ++j) {
        if (j) os << ',';
        os << at(i, j);
      }
    }
    os << ']';
    return os.str();
  }
};

/// Intersection-size matrix of two ordered set partitions A, B:
/// entry (i,j) is |A_i n B_j|.
inline CompositionMatrix gamma_matrix(const GSet& X, int a_pt, int b_pt) {
  if (!X.is_osp()) throw std::invalid_argument("gamma_matrix: not an ordered set partition G-set");
  CompositionMatrix g;
  g.alpha = X.alpha();
  g.ell = g.alpha.length();
  g.entries.assign(static_cast<std::size_t>(g.ell) * g.ell, 0);
  auto A = X.blocks_of(a_pt), B = X.blocks_of(b_pt);
  std::vector<int> colB(X.group().degree());
  for (int j = 0; j < g.ell; ++j)
    for (int c : B[j]) colB[c] = j;
  for (int i = 0; i < g.ell; ++i)
    for (int c : A[i]) g.at(i, colB[c])++;
  return g;
}

/// Gamma matrix of the pair (A, bA) computed from block intersections only
/// (no G-set materialization); entry (i,j) = |A_i n b(A_j)|.
inline CompositionMatrix gamma_matrix_of_coset(const Composition& alpha, const Permutation& b) {
  if (alpha.total() != b.degree())
    throw std::invalid_argument("gamma_matrix_of_coset: degree mismatch");
  CompositionMatrix g;
  g.alpha = alpha;
  g.ell = alpha.length();
  g.entries.assign(static_cast<std::size_t>(g.ell) * g.ell, 0);
  std::vector<int> block_of(alpha.total());
  int off = 0;
  for (int i = 0; i < g.ell; ++i)
    for (int k = 0; k < alpha.parts[i]; ++k) block_of[off++] = i;
  // point c sits in A_i with i = block_of[c]; b(A_j) contains b(c) for c in A_j
  for (int c = 0; c < alpha.total(); ++c) g.at(block_of[b(c)], block_of[c])++;
  return g;
}

}  // namespace cosetfs
