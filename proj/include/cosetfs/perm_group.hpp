#pragma once

#include <algorithm>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "cosetfs/config.hpp"
#include "cosetfs/permutation.hpp"

namespace cosetfs {

struct ConjClass {
  int rep;                   // element index of the minimal member
  std::vector<int> members;  // ascending element indices
};

struct DoubleCosets {
  std::vector<Permutation> reps;  // canonical (minimal) representatives, ascending
  std::vector<long long> sizes;   // |H rep H|
};

/// Finitely generated permutation group, fully enumerated by breadth-first
/// closure. Elements are kept sorted lexicographically by image arrays, so
/// every "pick a representative" step below is deterministic: the
/// representative of a class or coset is its minimal element.
///
/// Immutable after construction; conjugacy classes are materialized once
/// under a one-time guard and can be read concurrently.
class PermGroup {
 public:
  static std::shared_ptr<PermGroup> closure(int degree, std::vector<Permutation> gens,
                                            std::size_t cap = Config::global().group_cap) {
    for (const auto& g : gens)
      if (g.degree() != degree)
        throw std::invalid_argument("PermGroup: generator degree mismatch");
    auto G = std::shared_ptr<PermGroup>(new PermGroup());
    G->degree_ = degree;
    G->gens_ = gens;
    std::vector<Permutation> elems{Permutation(degree)};
    std::unordered_map<Permutation, int, PermHash> seen;
    seen.emplace(elems[0], 0);
    std::deque<int> queue{0};
    while (!queue.empty()) {
      Permutation e = elems[queue.front()];
      queue.pop_front();
      for (const auto& g : G->gens_) {
        Permutation p = g * e;
        if (seen.emplace(p, static_cast<int>(elems.size())).second) {
          if (elems.size() >= cap)
            throw CapExceeded("PermGroup: element count cap (" + std::to_string(cap) +
                              ") exceeded");
          elems.push_back(p);
          queue.push_back(static_cast<int>(elems.size()) - 1);
        }
      }
    }
    std::sort(elems.begin(), elems.end());
    G->elems_ = std::move(elems);
    G->build_index();
    return G;
  }

  /// Group from an explicitly closed element set (e.g. a stabilizer scan).
  static std::shared_ptr<PermGroup> from_elements(int degree, std::vector<Permutation> elems,
                                                  std::vector<Permutation> gens = {}) {
    auto G = std::shared_ptr<PermGroup>(new PermGroup());
    G->degree_ = degree;
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (elems.empty() || !elems.front().is_identity())
      throw std::invalid_argument("PermGroup::from_elements: missing identity");
    G->elems_ = std::move(elems);
    G->gens_ = gens.empty() ? G->elems_ : std::move(gens);
    G->build_index();
    return G;
  }

  static std::shared_ptr<PermGroup> trivial(int degree) {
    return closure(degree, {});
  }

  static std::shared_ptr<PermGroup> symmetric(int n) {
    std::vector<Permutation> gens;
    if (n >= 2) gens.push_back(Permutation::transposition(n, 0, 1));
    if (n >= 3) {
      std::vector<int> pts(n);
      std::iota(pts.begin(), pts.end(), 0);
      gens.push_back(Permutation::cycle(n, pts));
    }
    return closure(n, gens);
  }

  /// Symmetric group on a point subset, inside degree-`degree` permutations.
  static std::shared_ptr<PermGroup> on_points(int degree, std::vector<int> pts) {
    std::sort(pts.begin(), pts.end());
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
      gens.push_back(Permutation::transposition(degree, pts[i], pts[i + 1]));
    auto G = closure(degree, gens);
    G->blocks_ = {pts};
    return G;
  }

  /// Young subgroup of the composition alpha: the direct product of
  /// symmetric groups on the consecutive blocks A_1 = {1..a1},
  /// A_2 = a1 + {1..a2}, ... (zero parts give empty blocks and are skipped).
  static std::shared_ptr<PermGroup> young(const Composition& alpha) {
    const int n = alpha.total();
    std::vector<std::vector<int>> blocks;
    std::vector<Permutation> gens;
    int off = 0;
    for (int part : alpha.parts) {
      std::vector<int> blk(part);
      std::iota(blk.begin(), blk.end(), off);
      for (int i = 0; i + 1 < part; ++i)
        gens.push_back(Permutation::transposition(n, off + i, off + i + 1));
      blocks.push_back(std::move(blk));
      off += part;
    }
    auto G = closure(n, gens);
    G->blocks_ = std::move(blocks);
    return G;
  }

  /// Young subgroup on arbitrary (disjoint) point blocks, inside a fixed degree.
  static std::shared_ptr<PermGroup> on_blocks(int degree,
                                              std::vector<std::vector<int>> blocks) {
    std::vector<Permutation> gens;
    for (auto& blk : blocks) {
      std::sort(blk.begin(), blk.end());
      for (std::size_t i = 0; i + 1 < blk.size(); ++i)
        gens.push_back(Permutation::transposition(degree, blk[i], blk[i + 1]));
    }
    auto G = closure(degree, gens);
    G->blocks_ = std::move(blocks);
    return G;
  }

  int degree() const { return degree_; }
  std::size_t size() const { return elems_.size(); }
  const std::vector<Permutation>& elements() const { return elems_; }
  const Permutation& element(int i) const { return elems_[i]; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

  int index_of(const Permutation& p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
  }
  bool contains(const Permutation& p) const { return index_.find(p) != index_.end(); }

  bool contains_group(const PermGroup& H) const {
    for (const auto& g : H.generators())
      if (!contains(g)) return false;
    return true;
  }

  int identity_index() const { return 0; }  // identity is the lex minimum

  const std::vector<ConjClass>& conjugacy_classes() const {
    std::call_once(classes_once_, [this] { build_classes(); });
    return classes_;
  }
  int class_of(int elem_index) const {
    conjugacy_classes();
    return class_of_[elem_index];
  }

  std::vector<Permutation> left_coset_reps(const PermGroup& H) const {
    require_subgroup(H);
    std::vector<char> used(size(), 0);
    std::vector<Permutation> reps;
    for (std::size_t i = 0; i < size(); ++i) {
      if (used[i]) continue;
      reps.push_back(elems_[i]);
      for (const auto& h : H.elements()) {
        const int idx = index_of(elems_[i] * h);
        if (idx >= 0) used[idx] = 1;
      }
    }
    return reps;
  }

  std::vector<Permutation> right_coset_reps(const PermGroup& H) const {
    require_subgroup(H);
    std::vector<char> used(size(), 0);
    std::vector<Permutation> reps;
    for (std::size_t i = 0; i < size(); ++i) {
      if (used[i]) continue;
      reps.push_back(elems_[i]);
      for (const auto& h : H.elements()) {
        const int idx = index_of(h * elems_[i]);
        if (idx >= 0) used[idx] = 1;
      }
    }
    return reps;
  }

  DoubleCosets double_cosets(const PermGroup& H) const {
    require_subgroup(H);
    std::vector<char> used(size(), 0);
    DoubleCosets dc;
    for (std::size_t i = 0; i < size(); ++i) {
      if (used[i]) continue;
      dc.reps.push_back(elems_[i]);
      long long count = 0;
      // H b H as an H x H product; marking counts each element once.
      for (const auto& h1 : H.elements()) {
        Permutation left = h1 * elems_[i];
        for (const auto& h2 : H.elements()) {
          const int idx = index_of(left * h2);
          if (idx >= 0 && !used[idx]) {
            used[idx] = 1;
            ++count;
          }
        }
      }
      dc.sizes.push_back(count);
    }
    return dc;
  }

 private:
  PermGroup() = default;
  PermGroup(const PermGroup&) = delete;
  PermGroup& operator=(const PermGroup&) = delete;

  void build_index() {
    index_.reserve(elems_.size() * 2);
    for (std::size_t i = 0; i < elems_.size(); ++i)
      index_.emplace(elems_[i], static_cast<int>(i));
  }

  void require_subgroup(const PermGroup& H) const {
    if (H.degree() != degree_ || !contains_group(H))
      throw std::invalid_argument("PermGroup: H is not a subgroup of G");
  }

  void build_classes() const {
    class_of_.assign(size(), -1);
    for (std::size_t i = 0; i < size(); ++i) {
      if (class_of_[i] != -1) continue;
      // Orbit of conjugation by generators; scanning in ascending order makes
      // elems_[i] the minimal member of its class.
      std::vector<int> members{static_cast<int>(i)};
      class_of_[i] = static_cast<int>(classes_.size());
      std::deque<int> queue{static_cast<int>(i)};
      while (!queue.empty()) {
        const Permutation e = elems_[queue.front()];
        queue.pop_front();
        for (const auto& g : gens_) {
          int idx = index_of(g * e * g.inverse());
          if (class_of_[idx] == -1) {
            class_of_[idx] = class_of_[i];
            members.push_back(idx);
            queue.push_back(idx);
          }
        }
      }
      std::sort(members.begin(), members.end());
      classes_.push_back(ConjClass{static_cast<int>(i), std::move(members)});
    }
  }

  int degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<Permutation> elems_;
  std::unordered_map<Permutation, int, PermHash> index_;
  std::vector<std::vector<int>> blocks_;

  mutable std::once_flag classes_once_;
  mutable std::vector<ConjClass> classes_;
  mutable std::vector<int> class_of_;
};

using GroupPtr = std::shared_ptr<PermGroup>;
using ConstGroupPtr = std::shared_ptr<const PermGroup>;

/// Checks t^-1 K t = K and t^2 in K, the conditions under which conjugation
/// by t twists K-modules.
inline void require_outer_involution(const PermGroup& K, const Permutation& t) {
  const Permutation tinv = t.inverse();
  for (const auto& k : K.elements())
    if (!K.contains(tinv * k * t))
      throw std::invalid_argument("outer involution: t^-1 K t != K");
  if (!K.contains(t * t)) throw std::invalid_argument("outer involution: t^2 not in K");
}

}  // namespace cosetfs
