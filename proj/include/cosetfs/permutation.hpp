#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cosetfs/partitions.hpp"

namespace cosetfs {

/// Permutation of {0..n-1} stored as an image array (img[i] is the image of
/// point i), so application is O(1) and comparison is lexicographic on
/// images. All text I/O is 1-based: one-line "[2,1,3]" and cycle form
/// "(1 2)(3 4)" with "()" for the identity.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree) : img_(degree) {
    std::iota(img_.begin(), img_.end(), 0);
  }

  static Permutation from_images(std::vector<int> images) {
    Permutation p;
    p.img_ = std::move(images);
    const int n = p.degree();
    std::vector<char> seen(n, 0);
    for (int v : p.img_) {
      if (v < 0 || v >= n || seen[v])
        throw std::invalid_argument("Permutation: images are not a bijection");
      seen[v] = 1;
    }
    return p;
  }

  /// Transposition (a b), 0-based points.
  static Permutation transposition(int degree, int a, int b) {
    Permutation p(degree);
    if (a < 0 || b < 0 || a >= degree || b >= degree)
      throw std::invalid_argument("Permutation::transposition: point out of range");
    std::swap(p.img_[a], p.img_[b]);
    return p;
  }

  /// Single cycle (c0 c1 ... ck), 0-based points.
  static Permutation cycle(int degree, const std::vector<int>& pts) {
    Permutation p(degree);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      int from = pts[i], to = pts[(i + 1) % pts.size()];
      if (from < 0 || from >= degree)
        throw std::invalid_argument("Permutation::cycle: point out of range");
      p.img_[from] = to;
    }
    // validate: distinct points
    return from_images(p.img_);
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  /// Left-action composition: (a*b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
      throw std::invalid_argument("Permutation: degree mismatch in compose");
    Permutation r;
    r.img_.resize(a.degree());
    for (int i = 0; i < a.degree(); ++i) r.img_[i] = a.img_[b.img_[i]];
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.img_.resize(degree());
    for (int i = 0; i < degree(); ++i) r.img_[img_[i]] = i;
    return r;
  }

  /// r-fold composition; negative r uses the inverse, pow(a,0) = id.
  Permutation pow(long long r) const {
    Permutation base = r < 0 ? inverse() : *this;
    unsigned long long e = r < 0 ? static_cast<unsigned long long>(-r)
                                 : static_cast<unsigned long long>(r);
    Permutation acc(degree());
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  long long order() const {
    long long ord = 1;
    for (int len : cycle_lengths()) ord = std::lcm(ord, static_cast<long long>(len));
    return ord;
  }

  /// Cycle lengths (including fixed points), weakly decreasing.
  std::vector<int> cycle_lengths() const {
    std::vector<char> seen(degree(), 0);
    std::vector<int> lens;
    for (int i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      int len = 0, j = i;
      while (!seen[j]) {
        seen[j] = 1;
        j = img_[j];
        ++len;
      }
      lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return lens;
  }

  auto operator<=>(const Permutation&) const = default;

  std::string one_line() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < degree(); ++i) {
      if (i) os << ',';
      os << img_[i] + 1;
    }
    os << ']';
    return os.str();
  }

  static Permutation parse_one_line(const std::string& s) {
    std::string t = s;
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
      throw std::invalid_argument("parse_one_line: expected '[...]', got '" + s + "'");
    t = t.substr(1, t.size() - 2);
    std::vector<int> img;
    std::string cell;
    std::istringstream is(t);
    while (std::getline(is, cell, ',')) img.push_back(std::stoi(cell) - 1);
    return from_images(img);
  }

  /// Cycle form, fixed points omitted, cycles sorted by smallest point.
  std::string cycles() const {
    std::vector<char> seen(degree(), 0);
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < degree(); ++i) {
      if (seen[i] || img_[i] == i) {
        seen[i] = 1;
        continue;
      }
      os << '(';
      int j = i;
      bool first = true;
      while (!seen[j]) {
        seen[j] = 1;
        if (!first) os << ' ';
        os << j + 1;
        first = false;
        j = img_[j];
      }
      os << ')';
      any = true;
    }
    return any ? os.str() : "()";
  }

  static Permutation parse_cycles(const std::string& s, int degree) {
    Permutation p(degree);
    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    skip_ws();
    bool any = false;
    while (i < s.size()) {
      if (s[i] != '(') throw std::invalid_argument("parse_cycles: expected '(' in '" + s + "'");
      ++i;
      std::vector<int> pts;
      std::string num;
      while (i < s.size() && s[i] != ')') {
        if (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',') {
          if (!num.empty()) {
            pts.push_back(std::stoi(num) - 1);
            num.clear();
          }
        } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
          num.push_back(s[i]);
        } else {
          throw std::invalid_argument("parse_cycles: bad character in '" + s + "'");
        }
        ++i;
      }
      if (i >= s.size()) throw std::invalid_argument("parse_cycles: unbalanced '(' in '" + s + "'");
      ++i;  // ')'
      if (!num.empty()) pts.push_back(std::stoi(num) - 1);
      if (!pts.empty()) {
        for (int x : pts)
          if (x < 0 || x >= degree)
            throw std::invalid_argument("parse_cycles: point out of range in '" + s + "'");
        p = p * Permutation::cycle(degree, pts);
      }
      any = true;
      skip_ws();
    }
    if (!any) throw std::invalid_argument("parse_cycles: empty input");
    return p;
  }

 private:
  std::vector<int> img_;
};

inline Partition cycle_type(const Permutation& a) {
  return Partition(a.cycle_lengths());
}

/// Cycle type of a restricted to a set of points; the permutation must map
/// the set to itself.
inline Partition cycle_type_on(const Permutation& a, const std::vector<int>& points) {
  std::vector<char> inset(a.degree(), 0);
  for (int p : points) inset[p] = 1;
  std::vector<char> seen(a.degree(), 0);
  std::vector<int> lens;
  for (int p : points) {
    if (seen[p]) continue;
    int len = 0, j = p;
    while (!seen[j]) {
      seen[j] = 1;
      if (!inset[j])
        throw std::invalid_argument("cycle_type_on: permutation does not preserve the point set");
      j = a(j);
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return Partition(lens);
}

struct PermHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.images()) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace cosetfs
