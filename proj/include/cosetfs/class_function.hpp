#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <vector>

#include "cosetfs/perm_group.hpp"
#include "cosetfs/rational.hpp"

namespace cosetfs {

using CharFn = std::function<Rational(const Permutation&)>;

/// Exact class function on an enumerated group: one rational value per
/// conjugacy class. All values handled in this library are real, so the
/// inner product needs no conjugation.
class ClassFunction {
 public:
  ClassFunction(ConstGroupPtr K, std::vector<Rational> values)
      : K_(std::move(K)), values_(std::move(values)) {
    if (values_.size() != K_->conjugacy_classes().size())
      throw std::invalid_argument("ClassFunction: one value per conjugacy class required");
  }

  static ClassFunction from_evaluator(ConstGroupPtr K, const CharFn& fn) {
    std::vector<Rational> vals;
    for (const auto& cls : K->conjugacy_classes()) vals.push_back(fn(K->element(cls.rep)));
    return ClassFunction(std::move(K), std::move(vals));
  }

  const ConstGroupPtr& group() const { return K_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& on_class(int c) const { return values_[c]; }

  Rational value_at(const Permutation& g) const {
    int idx = K_->index_of(g);
    if (idx < 0) throw std::invalid_argument("ClassFunction: element not in group");
    return values_[K_->class_of(idx)];
  }

  CharFn fn() const {
    return [cf = *this](const Permutation& g) { return cf.value_at(g); };
  }

  bool operator==(const ClassFunction& o) const {
    return K_ == o.K_ && values_ == o.values_;
  }

  ClassFunction operator+(const ClassFunction& o) const {
    require_same_group(o);
    std::vector<Rational> v(values_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.values_[i];
    return ClassFunction(K_, std::move(v));
  }

  ClassFunction operator-(const ClassFunction& o) const {
    require_same_group(o);
    std::vector<Rational> v(values_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= o.values_[i];
    return ClassFunction(K_, std::move(v));
  }

  friend ClassFunction operator*(const Rational& s, const ClassFunction& f) {
    std::vector<Rational> v(f.values_);
    for (auto& x : v) x *= s;
    return ClassFunction(f.K_, std::move(v));
  }

  void require_same_group(const ClassFunction& o) const {
    if (K_ != o.K_) throw std::invalid_argument("ClassFunction: group mismatch");
  }

 private:
  ConstGroupPtr K_;
  std::vector<Rational> values_;
};

/// (f|g) = |K|^-1 sum_a f(a) g(a).
inline Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
  f.require_same_group(g);
  const auto& classes = f.group()->conjugacy_classes();
  Rational s = 0;
  for (std::size_t c = 0; c < classes.size(); ++c)
    s += Rational(static_cast<long>(classes[c].members.size())) * f.on_class(static_cast<int>(c)) *
         g.on_class(static_cast<int>(c));
  return s / Rational(static_cast<long>(f.group()->size()));
}

inline ClassFunction restrict_to(const ClassFunction& f, ConstGroupPtr H) {
  if (!f.group()->contains_group(*H))
    throw std::invalid_argument("restrict_to: H is not a subgroup");
  return ClassFunction::from_evaluator(std::move(H),
                                       [&](const Permutation& h) { return f.value_at(h); });
}

/// Induced class function: Ind(f)(g) = |H|^-1 sum_{x in G} f0(x^-1 g x),
/// where f0 extends f by zero off H.
inline ClassFunction induce_to(const ClassFunction& f, ConstGroupPtr G) {
  const auto& H = *f.group();
  if (!G->contains_group(H)) throw std::invalid_argument("induce_to: not a subgroup");
  std::vector<Rational> vals;
  for (const auto& cls : G->conjugacy_classes()) {
    const Permutation g = G->element(cls.rep);
    Rational s = 0;
    for (const auto& x : G->elements()) {
      Permutation conj = x.inverse() * g * x;
      if (H.contains(conj)) s += f.value_at(conj);
    }
    vals.push_back(s / Rational(static_cast<long>(H.size())));
  }
  return ClassFunction(std::move(G), std::move(vals));
}

}  // namespace cosetfs
