#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "cosetfs/config.hpp"
#include "cosetfs/gset.hpp"
#include "cosetfs/rational.hpp"

namespace cosetfs {

/// The pair (G, X) underlying the face algebra spanned by the symbols
/// e^x_y a  (x, y in X, a in G), with the structure maps
///
///   (e^x_y a)(e^z_w b) = [x = az][y = aw] e^x_y ab,
///   Delta(e^x_y a)     = sum_z e^x_z a (x) e^z_y a,
///   eps(e^x_y a)       = [x = y],
///   S(e^x_y a)         = a^-1 e^y_x = e^{a^-1 y}_{a^-1 x} a^-1,
///   1                  = sum_{x,y} e^x_y.
///
/// The symbol universe has |X|^2 |G| basis elements; construction rejects
/// ambients above the configured cap so that exhaustive symbol sweeps stay
/// affordable.
class Ambient {
 public:
  Ambient(ConstGroupPtr G, ConstGSetPtr X, std::size_t cap = Config::global().ambient_cap)
      : G_(std::move(G)), X_(std::move(X)) {
    if (X_->group_ptr().get() != G_.get())
      throw std::invalid_argument("Ambient: X is not a G-set for the given G");
    const std::size_t u =
        G_->size() * static_cast<std::size_t>(X_->size()) * static_cast<std::size_t>(X_->size());
    if (u > cap)
      throw CapExceeded("Ambient: |X|^2 |G| = " + std::to_string(u) + " exceeds cap " +
                        std::to_string(cap));
  }

  const PermGroup& group() const { return *G_; }
  const GSet& gset() const { return *X_; }
  int points() const { return X_->size(); }
  int order() const { return static_cast<int>(G_->size()); }

  int act(int g, int pt) const { return X_->act(g, pt); }
  int inv(int g) const {
    ensure_tables();
    return inv_[g];
  }
  int mult(int g, int h) const {
    ensure_tables();
    if (!mult_.empty()) return mult_[static_cast<std::size_t>(g) * G_->size() + h];
    return G_->index_of(G_->element(g) * G_->element(h));
  }
  int power(int g, long long r) const { return G_->index_of(G_->element(g).pow(r)); }

 private:
  void ensure_tables() const {
    std::call_once(tables_once_, [this] {
      const std::size_t n = G_->size();
      inv_.resize(n);
      for (std::size_t i = 0; i < n; ++i)
        inv_[i] = G_->index_of(G_->element(static_cast<int>(i)).inverse());
      if (n * n <= 4000000) {
        mult_.resize(n * n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            mult_[i * n + j] =
                G_->index_of(G_->element(static_cast<int>(i)) * G_->element(static_cast<int>(j)));
      }
    });
  }

  ConstGroupPtr G_;
  ConstGSetPtr X_;
  mutable std::once_flag tables_once_;
  mutable std::vector<int> inv_;
  mutable std::vector<int> mult_;
};

using AmbientPtr = std::shared_ptr<const Ambient>;

struct FaceSymbol {
  int x = 0, y = 0, g = 0;  // e^x_y (element index g)
  auto operator<=>(const FaceSymbol&) const = default;
};

/// Sparse element of the face algebra: finite rational combination of
/// symbols; zero coefficients are never stored.
class FaceElement {
 public:
  explicit FaceElement(AmbientPtr amb) : amb_(std::move(amb)) {}

  static FaceElement symbol(AmbientPtr amb, int x, int y, int g, const Rational& c = 1) {
    FaceElement e(std::move(amb));
    e.add(FaceSymbol{x, y, g}, c);
    return e;
  }

  static FaceElement unit(AmbientPtr amb) {
    FaceElement e(amb);
    const int id = amb->group().identity_index();
    for (int x = 0; x < amb->points(); ++x)
      for (int y = 0; y < amb->points(); ++y) e.add(FaceSymbol{x, y, id}, 1);
    return e;
  }

  /// Embedding of a group element: a = sum_{x,y} e^x_y a.
  static FaceElement group_element(AmbientPtr amb, int g) {
    FaceElement e(amb);
    for (int x = 0; x < amb->points(); ++x)
      for (int y = 0; y < amb->points(); ++y) e.add(FaceSymbol{x, y, g}, 1);
    return e;
  }

  const AmbientPtr& ambient() const { return amb_; }
  const std::map<FaceSymbol, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add(const FaceSymbol& s, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(s, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool operator==(const FaceElement& o) const { return terms_ == o.terms_; }

  FaceElement operator+(const FaceElement& o) const {
    require_same(o);
    FaceElement r(*this);
    for (const auto& [s, c] : o.terms_) r.add(s, c);
    return r;
  }

  FaceElement operator-(const FaceElement& o) const {
    require_same(o);
    FaceElement r(*this);
    for (const auto& [s, c] : o.terms_) r.add(s, -c);
    return r;
  }

  friend FaceElement operator*(const Rational& s, const FaceElement& e) {
    FaceElement r(e.amb_);
    if (s != 0)
      for (const auto& [sym, c] : e.terms_) r.terms_.emplace(sym, s * c);
    return r;
  }

  FaceElement operator*(const FaceElement& o) const {
    require_same(o);
    FaceElement r(amb_);
    for (const auto& [s1, c1] : terms_)
      for (const auto& [s2, c2] : o.terms_) {
        if (s1.x != amb_->act(s1.g, s2.x)) continue;
        if (s1.y != amb_->act(s1.g, s2.y)) continue;
        r.add(FaceSymbol{s1.x, s1.y, amb_->mult(s1.g, s2.g)}, c1 * c2);
      }
    return r;
  }

  Rational counit() const {
    Rational s = 0;
    for (const auto& [sym, c] : terms_)
      if (sym.x == sym.y) s += c;
    return s;
  }

  FaceElement antipode() const {
    FaceElement r(amb_);
    for (const auto& [sym, c] : terms_) {
      const int gi = amb_->inv(sym.g);
      r.add(FaceSymbol{amb_->act(gi, sym.y), amb_->act(gi, sym.x), gi}, c);
    }
    return r;
  }

  /// eps^L(alpha) = sum_{x,y,z} eps(e^x_z alpha) e^z_y. On a symbol e^p_q b
  /// this collapses to [p = q] sum_y e^q_y.
  FaceElement epsilon_L() const {
    FaceElement r(amb_);
    const int id = amb_->group().identity_index();
    for (const auto& [sym, c] : terms_) {
      if (sym.x != sym.y) continue;
      for (int y = 0; y < amb_->points(); ++y) r.add(FaceSymbol{sym.y, y, id}, c);
    }
    return r;
  }

  /// eps^R(alpha) = sum_{x,y,z} e^x_z eps(alpha e^z_y); on e^p_q b this is
  /// [p = q] sum_x e^x_{b^-1 p}.
  FaceElement epsilon_R() const {
    FaceElement r(amb_);
    const int id = amb_->group().identity_index();
    for (const auto& [sym, c] : terms_) {
      if (sym.x != sym.y) continue;
      const int w = amb_->act(amb_->inv(sym.g), sym.x);
      for (int x = 0; x < amb_->points(); ++x) r.add(FaceSymbol{x, w, id}, c);
    }
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << to_string(c) << "*e[" << s.x << "," << s.y << "]"
         << amb_->group().element(s.g).cycles();
    }
    return os.str();
  }

 private:
  void require_same(const FaceElement& o) const {
    if (amb_.get() != o.amb_.get()) throw std::invalid_argument("FaceElement: ambient mismatch");
  }

  AmbientPtr amb_;
  std::map<FaceSymbol, Rational> terms_;
};

/// Sparse element of the tensor square, keyed by symbol pairs. Only the
/// coproduct output is represented this way; higher tensor powers are folded
/// into the iterated product-of-coproduct below.
using TensorSquare = std::map<std::pair<FaceSymbol, FaceSymbol>, Rational>;

inline TensorSquare coproduct(const FaceElement& e) {
  TensorSquare out;
  const auto& amb = *e.ambient();
  for (const auto& [s, c] : e.terms())
    for (int z = 0; z < amb.points(); ++z) {
      auto key = std::make_pair(FaceSymbol{s.x, z, s.g}, FaceSymbol{z, s.y, s.g});
      auto [it, inserted] = out.emplace(key, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) out.erase(it);
      }
    }
  return out;
}

/// The idempotent two-sided integral: |G|^-1 sum_{a,x} e^x_x a.
inline FaceElement integral(AmbientPtr amb) {
  FaceElement e(amb);
  const Rational c = Rational(1) / Rational(static_cast<long>(amb->order()));
  for (int g = 0; g < amb->order(); ++g)
    for (int x = 0; x < amb->points(); ++x) e.add(FaceSymbol{x, x, g}, c);
  return e;
}

/// Closed form of the r-fold product-of-coproduct of the integral:
/// |G|^-1 sum over a in G, x in X with a^r x = x of e^x_{a^-1 x} a^r.
inline FaceElement integral_r_closed(AmbientPtr amb, int r) {
  if (r < 1) throw std::invalid_argument("integral_r_closed: r >= 1 required");
  if (r == 1) return integral(amb);
  FaceElement e(amb);
  const Rational c = Rational(1) / Rational(static_cast<long>(amb->order()));
  for (int g = 0; g < amb->order(); ++g) {
    const int gr = amb->power(g, r);
    const int ginv = amb->inv(g);
    for (int x = 0; x < amb->points(); ++x) {
      if (amb->act(gr, x) != x) continue;
      e.add(FaceSymbol{x, amb->act(ginv, x), gr}, c);
    }
  }
  return e;
}

/// The same element written with the group part on the left,
/// e^{a^r x}_{a^{r-1} x} a^r; must coincide with integral_r_closed.
inline FaceElement integral_r_closed_alt(AmbientPtr amb, int r) {
  if (r < 1) throw std::invalid_argument("integral_r_closed_alt: r >= 1 required");
  if (r == 1) return integral(amb);
  FaceElement e(amb);
  const Rational c = Rational(1) / Rational(static_cast<long>(amb->order()));
  for (int g = 0; g < amb->order(); ++g) {
    const int gr = amb->power(g, r);
    const int grm1 = amb->power(g, r - 1);
    for (int x = 0; x < amb->points(); ++x) {
      if (amb->act(gr, x) != x) continue;
      e.add(FaceSymbol{amb->act(gr, x), amb->act(grm1, x), gr}, c);
    }
  }
  return e;
}

/// Literal m^(r) o Delta^(r) applied to the integral, folding one coproduct
/// leg at a time: with P_1[z] = e^x_z a and
/// P_k[z] = sum_w P_{k-1}[w] (e^w_z a), the term of the integral at (a, x)
/// contributes sum_z P_{r-1}[z] (e^z_x a).
inline FaceElement integral_r_composed(AmbientPtr amb, int r) {
  if (r < 1) throw std::invalid_argument("integral_r_composed: r >= 1 required");
  if (r == 1) return integral(amb);
  FaceElement total(amb);
  const Rational c = Rational(1) / Rational(static_cast<long>(amb->order()));
  const int nx = amb->points();
  for (int g = 0; g < amb->order(); ++g) {
    for (int x = 0; x < nx; ++x) {
      std::vector<FaceElement> prev;
      prev.reserve(nx);
      for (int z = 0; z < nx; ++z) prev.push_back(FaceElement::symbol(amb, x, z, g));
      for (int k = 2; k < r; ++k) {
        std::vector<FaceElement> cur;
        cur.reserve(nx);
        for (int z = 0; z < nx; ++z) {
          FaceElement acc(amb);
          for (int w = 0; w < nx; ++w)
            acc = acc + prev[w] * FaceElement::symbol(amb, w, z, g);
          cur.push_back(std::move(acc));
        }
        prev = std::move(cur);
      }
      for (int z = 0; z < nx; ++z) {
        FaceElement last = prev[z] * FaceElement::symbol(amb, z, x, g);
        for (const auto& [s, coeff] : last.terms()) total.add(s, c * coeff);
      }
    }
  }
  return total;
}

}  // namespace cosetfs
