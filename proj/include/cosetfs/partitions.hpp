#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cosetfs {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// () is the unique partition of 0 and is a first-class value.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
      if (i > 0 && parts[i] > parts[i - 1])
        throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
  }

  int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  int length() const { return static_cast<int>(parts.size()); }
  bool empty() const { return parts.empty(); }

  auto operator<=>(const Partition&) const = default;

  /// Text form "(3,1,1)"; "()" is the empty partition.
  std::string str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) os << ',';
      os << parts[i];
    }
    os << ')';
    return os.str();
  }

  static Partition parse(const std::string& s) {
    std::string t = s;
    if (t.size() < 2 || t.front() != '(' || t.back() != ')')
      throw std::invalid_argument("Partition::parse: expected '(...)', got '" + s + "'");
    t = t.substr(1, t.size() - 2);
    std::vector<int> p;
    std::string cell;
    std::istringstream is(t);
    while (std::getline(is, cell, ',')) {
      if (cell.empty()) continue;
      p.push_back(std::stoi(cell));
    }
    return Partition(p);
  }
};

/// Composition (alpha_1,...,alpha_l). Parts are nonnegative so that flattened
/// block-size sequences with empty blocks can be carried around; operations
/// that require positive parts validate on entry.
struct Composition {
  std::vector<int> parts;

  Composition() = default;
  explicit Composition(std::vector<int> p) : parts(std::move(p)) {
    for (int x : parts)
      if (x < 0) throw std::invalid_argument("Composition: negative part");
  }

  int total() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  int length() const { return static_cast<int>(parts.size()); }
  bool all_positive() const {
    return std::all_of(parts.begin(), parts.end(), [](int x) { return x > 0; });
  }

  auto operator<=>(const Composition&) const = default;

  std::string str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) os << ',';
      os << parts[i];
    }
    return os.str();
  }

  /// Parses "2,2" or "(2,2)".
  static Composition parse(const std::string& s) {
    std::string t = s;
    if (!t.empty() && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
    std::vector<int> p;
    std::string cell;
    std::istringstream is(t);
    while (std::getline(is, cell, ',')) {
      if (cell.empty()) continue;
      p.push_back(std::stoi(cell));
    }
    if (p.empty()) throw std::invalid_argument("Composition::parse: empty '" + s + "'");
    return Composition(p);
  }
};

/// All partitions of m, first part largest first (reverse-lexicographic):
/// (m), (m-1,1), ..., (1^m). partitions_of(0) = {()}.
inline std::vector<Partition> partitions_of(int m) {
  if (m < 0) throw std::invalid_argument("partitions_of: negative m");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem, int maxpart) -> void {
    if (rem == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (int k = std::min(rem, maxpart); k >= 1; --k) {
      cur.push_back(k);
      self(self, rem - k, k);
      cur.pop_back();
    }
  };
  rec(rec, m, m);
  return out;
}

inline long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// Standard tableau count for a single shape, by the hook length formula.
inline long long stab_count(const Partition& lambda) {
  const int m = lambda.size();
  if (m == 0) return 1;
  const auto& p = lambda.parts;
  std::vector<int> collen(p[0], 0);
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < p[r]; ++c) collen[c]++;
  long long num = factorial(m);
  long long den = 1;
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < p[r]; ++c) {
      long long hook = (p[r] - c) + (collen[c] - r) - 1;
      den *= hook;
    }
  if (num % den != 0) throw std::logic_error("stab_count: hook product does not divide m!");
  return num / den;
}

/// Total standard tableau count with m cells over all shapes.
inline long long stab_total(int m) {
  long long s = 0;
  for (const auto& lam : partitions_of(m)) s += stab_count(lam);
  return s;
}

}  // namespace cosetfs
