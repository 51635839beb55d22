#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cosetfs/bilinear_forms.hpp"
#include "cosetfs/indicators.hpp"
#include "cosetfs/oracle.hpp"

namespace cosetfs::verify {

struct SuiteResult {
  std::string name;
  long long instances = 0;
  std::vector<std::string> failures;
  double seconds = 0;
  bool ok() const { return failures.empty(); }
};

/// Work-stealing loop over [0, count); results must be written to
/// per-index slots so the merge stays deterministic.
inline void parallel_for(std::size_t count, int workers,
                         const std::function<void(std::size_t)>& fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const int nw = std::min<std::size_t>(workers, count);
  for (int w = 0; w < nw; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) fn(i);
    });
  for (auto& th : pool) th.join();
}

inline std::vector<Composition> all_compositions(int n) {
  std::vector<Composition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem) -> void {
    if (rem == 0) {
      out.push_back(Composition(cur));
      return;
    }
    for (int k = 1; k <= rem; ++k) {
      cur.push_back(k);
      self(self, rem - k);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

namespace detail {
class Timer {
 public:
  Timer(SuiteResult& r) : r_(r), start_(std::chrono::steady_clock::now()) {}
  ~Timer() {
    r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  SuiteResult& r_;
  std::chrono::steady_clock::time_point start_;
};
}  // namespace detail

/// Young-coset involution counts: closed form against literal enumeration,
/// for every composition of every n <= max_n and every coset representative.
inline SuiteResult run_involutions(int max_n, int workers) {
  SuiteResult res;
  res.name = "involutions";
  detail::Timer timer(res);
  struct Task {
    int n;
    Composition alpha;
  };
  std::vector<Task> tasks;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& alpha : all_compositions(n)) tasks.push_back({n, alpha});
  std::vector<std::vector<std::string>> fails(tasks.size());
  std::vector<long long> counts(tasks.size(), 0);
  std::vector<ConstGroupPtr> sym(max_n + 1);
  for (int n = 1; n <= max_n; ++n) sym[n] = PermGroup::symmetric(n);
  parallel_for(tasks.size(), workers, [&](std::size_t ti) {
    const auto& [n, alpha] = tasks[ti];
    auto H = PermGroup::young(alpha);
    const Permutation id(n);
    for (const auto& b : sym[n]->elements()) {
      const long long formula = involutions_in_young_coset(alpha, b);
      long long count = 0;
      for (const auto& h : H->elements())
        if ((b * h).pow(2) == id) ++count;
      ++counts[ti];
      if (formula != count) {
        std::ostringstream os;
        os << "n=" << n << " alpha=(" << alpha.str() << ") b=" << b.cycles() << ": formula "
           << formula << " != oracle " << count;
        fails[ti].push_back(os.str());
      }
    }
  });
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    res.instances += counts[i];
    for (auto& f : fails[i]) res.failures.push_back(std::move(f));
  }
  return res;
}

/// The two specialized involution counts (single symmetric-group block and
/// two-block case), checked at the frozen instances and against enumeration.
inline SuiteResult run_special_cases() {
  SuiteResult res;
  res.name = "special-cases";
  detail::Timer timer(res);
  auto check = [&](bool ok, const std::string& what) {
    ++res.instances;
    if (!ok) res.failures.push_back(what);
  };

  // (n, m, b) = (4, 3, (3 4)): coset of the embedded S_3, k = |[3] \ b[3]| = 1.
  {
    const int n = 4, m = 3;
    const Permutation b = Permutation::parse_cycles("(3 4)", n);
    std::vector<char> in_bm(n, 0);
    for (int i = 0; i < m; ++i) in_bm[b(i)] = 1;
    int k = 0;
    for (int i = 0; i < m; ++i)
      if (!in_bm[i]) ++k;
    auto H = PermGroup::young(Composition({m, 1}));
    bool self_paired = false;
    const Permutation binv = b.inverse();
    for (const auto& h1 : H->elements()) {
      for (const auto& h2 : H->elements())
        if (h1 * b * h2 == binv) {
          self_paired = true;
          break;
        }
      if (self_paired) break;
    }
    const long long special = self_paired ? stab_total(m - k) : 0;
    check(special == 2, "single-block special case value != 2");
    check(special == oracle::count_involutions_in_coset(*H, b),
          "single-block special case != oracle");
    check(special == involutions_in_young_coset(Composition({m, 1}), b),
          "single-block special case != general closed form");
  }

  // (n, m, b) = (4, 2, (2 3)): coset of S_2 x S_2, value k! T(m-k) T(m'-k).
  {
    const int n = 4, m = 2, mp = 2;
    const Permutation b = Permutation::parse_cycles("(2 3)", n);
    std::vector<char> in_bm(n, 0);
    for (int i = 0; i < m; ++i) in_bm[b(i)] = 1;
    int k = 0;
    for (int i = 0; i < m; ++i)
      if (!in_bm[i]) ++k;
    const long long special = factorial(k) * stab_total(m - k) * stab_total(mp - k);
    auto H = PermGroup::young(Composition({m, mp}));
    check(special == 1, "two-block special case value != 1");
    check(special == oracle::count_involutions_in_coset(*H, b),
          "two-block special case != oracle");
    check(special == involutions_in_young_coset(Composition({m, mp}), b),
          "two-block special case != general closed form");
  }
  return res;
}

/// Triple (and quadruple) agreement of the second indicator on every module
/// of every orbital of every composition of n <= max_n: combinatorial
/// closed form, stabilizer scan formula, exact integral trace, and the
/// tensor-power trace wherever dim(M)^2 fits the budget. The twisted
/// indicator is checked on symmetric orbitals.
inline SuiteResult run_indicator_triple(int max_n, int workers,
                                        long long nu_budget = Config::global().nu_budget) {
  SuiteResult res;
  res.name = "indicator-triple";
  detail::Timer timer(res);
  struct Task {
    int n;
    Composition alpha;
  };
  std::vector<Task> tasks;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& alpha : all_compositions(n)) tasks.push_back({n, alpha});
  std::vector<std::vector<std::string>> fails(tasks.size());
  std::vector<long long> counts(tasks.size(), 0);
  parallel_for(tasks.size(), workers, [&](std::size_t ti) {
    const auto& [n, alpha] = tasks[ti];
    auto G = PermGroup::symmetric(n);
    auto H = PermGroup::young(alpha);
    auto X = GSet::ordered_set_partitions(G, alpha);
    auto amb = std::make_shared<const Ambient>(G, X, 4000000);
    const int x = X->base_point();
    auto fail = [&](const std::string& what) {
      std::ostringstream os;
      os << "n=" << n << " alpha=(" << alpha.str() << ") " << what;
      fails[ti].push_back(os.str());
    };
    for (const auto& b : G->double_cosets(*H).reps) {
      const int y = X->act(b, x);
      auto sd = two_point_stabilizer(*X, x, y);
      const RootScan rs = root_scan(*X, x, y, 2);
      for (const auto& lam : partition_matrices(sd.gamma)) {
        ++counts[ti];
        const ProductCharacter chi = character_on_stabilizer(sd, lam);
        const Rational young = Rational(fs2_young(sd.gamma, lam));
        const Rational formula = fs_from_scan(rs, chi.fn());
        auto V = module_representation(sd, lam);
        auto M = InducedModule::induce(amb, x, y, V);
        const Rational direct = M->fs_direct(2);
        std::ostringstream tag;
        tag << "b=" << b.cycles() << " Lambda=[" << lam.str() << "]";
        if (!(young == formula && formula == direct))
          fail(tag.str() + ": closed form / scan / trace disagree");
        if (static_cast<long long>(M->dim()) * M->dim() <= nu_budget) {
          if (M->nu_r(2, nu_budget) != direct) fail(tag.str() + ": tensor-power trace disagrees");
        }
        if (sd.t) {
          if (twisted_fs2(*sd.K, chi.fn(), *sd.t) != direct)
            fail(tag.str() + ": twisted indicator disagrees");
        }
      }
    }
  });
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    res.instances += counts[i];
    for (auto& f : fails[i]) res.failures.push_back(std::move(f));
  }
  return res;
}

/// Divisor-sum indicator formula against the stabilizer scan at the orbital
/// of the two top points, for every irreducible of the stabilizer.
inline SuiteResult run_divisor_sum(int max_n, int max_r) {
  SuiteResult res;
  res.name = "divisor-sum";
  detail::Timer timer(res);
  for (int n = 2; n <= max_n; ++n) {
    auto G = PermGroup::symmetric(n);
    std::vector<int> hpts(n - 1);
    std::iota(hpts.begin(), hpts.end(), 0);
    auto X = GSet::coset_space(G, *PermGroup::on_points(n, hpts));
    const int x = X->base_point();
    const int y = X->act(Permutation::transposition(n, n - 2, n - 1), x);
    std::vector<int> kpts(std::max(n - 2, 0));
    std::iota(kpts.begin(), kpts.end(), 0);
    for (const auto& lam : partitions_of(n - 2)) {
      CharFn chi = [&lam, kpts](const Permutation& a) {
        return Rational(static_cast<long>(mn_character(lam, cycle_type_on(a, kpts))));
      };
      for (int r = 1; r <= max_r; ++r) {
        ++res.instances;
        const Rational lhs = fs_r_divisor_sum(n, chi, r);
        const Rational rhs = fs_formula(*X, x, y, chi, r);
        if (lhs != rhs) {
          std::ostringstream os;
          os << "n=" << n << " lambda=" << lam.str() << " r=" << r << ": divisor sum "
             << to_string(lhs) << " != scan " << to_string(rhs);
          res.failures.push_back(os.str());
        }
      }
    }
  }
  return res;
}

/// Whole-group root counts by the factorial recurrence against streaming
/// enumeration; r = 2 additionally against the frozen involution counts.
inline SuiteResult run_recurrence(int max_n, const std::vector<int>& rs) {
  SuiteResult res;
  res.name = "recurrence";
  detail::Timer timer(res);
  const long long telephone[] = {1, 1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496};
  for (int r : rs)
    for (int n = 0; n <= max_n; ++n) {
      ++res.instances;
      const long long rec = recurrence_Rr(n, r);
      if (r == 2 && n <= 10 && rec != telephone[n]) {
        res.failures.push_back("recurrence r=2 n=" + std::to_string(n) +
                               " != frozen involution count");
        continue;
      }
      const long long brute = oracle::count_roots_in_symmetric_group(n, r);
      if (rec != brute) {
        std::ostringstream os;
        os << "recurrence n=" << n << " r=" << r << ": " << rec << " != brute " << brute;
        res.failures.push_back(os.str());
      }
    }
  return res;
}

/// Double-coset decomposition of the whole-group root count, for the
/// one-point and two-block stabilizer chains.
inline SuiteResult run_double_coset(int max_n, const std::vector<int>& rs) {
  SuiteResult res;
  res.name = "double-coset";
  detail::Timer timer(res);
  for (int n = 2; n <= max_n; ++n) {
    auto G = PermGroup::symmetric(n);
    std::vector<GroupPtr> subgroups;
    {
      std::vector<int> pts(n - 1);
      std::iota(pts.begin(), pts.end(), 0);
      subgroups.push_back(PermGroup::on_points(n, pts));
    }
    for (int m = 1; m < n; ++m) subgroups.push_back(PermGroup::young(Composition({m, n - m})));
    for (const auto& H : subgroups)
      for (int r : rs) {
        ++res.instances;
        const DoubleCosetSum s = sum_over_double_cosets(*G, *H, r);
        if (s.whole_group != s.summed) {
          std::ostringstream os;
          os << "n=" << n << " |H|=" << H->size() << " r=" << r << ": " << s.whole_group
             << " != " << s.summed;
          res.failures.push_back(os.str());
        }
      }
  }
  return res;
}

/// Convolution identity for total tableau counts.
inline SuiteResult run_stab_identity(int max_n, int m_filter = 0) {
  SuiteResult res;
  res.name = "stab-identity";
  detail::Timer timer(res);
  for (int n = 2; n <= max_n; ++n)
    for (int m = 1; m < n; ++m) {
      if (m_filter > 0 && m != m_filter) continue;
      ++res.instances;
      if (!stab_identity(n, m))
        res.failures.push_back("stab identity fails at n=" + std::to_string(n) +
                               " m=" + std::to_string(m));
    }
  return res;
}

/// Class-function expansion of coset-wise root counts against pointwise
/// enumeration on the two-point stabilizer (and the vanishing off it).
inline SuiteResult run_expansion(int max_n, const std::vector<int>& rs, int workers) {
  SuiteResult res;
  res.name = "expansion";
  detail::Timer timer(res);
  struct Task {
    int n;
    Composition alpha;
  };
  std::vector<Task> tasks;
  for (int n = 2; n <= max_n; ++n)
    for (const auto& alpha : all_compositions(n)) tasks.push_back({n, alpha});
  std::vector<std::vector<std::string>> fails(tasks.size());
  std::vector<long long> counts(tasks.size(), 0);
  parallel_for(tasks.size(), workers, [&](std::size_t ti) {
    const auto& [n, alpha] = tasks[ti];
    auto G = PermGroup::symmetric(n);
    auto H = PermGroup::young(alpha);
    auto X = GSet::ordered_set_partitions(G, alpha);
    const int x = X->base_point();
    auto fail = [&](const Permutation& b, int r, const std::string& what) {
      std::ostringstream os;
      os << "n=" << n << " alpha=(" << alpha.str() << ") b=" << b.cycles() << " r=" << r << ": "
         << what;
      fails[ti].push_back(os.str());
    };
    for (const auto& b : G->double_cosets(*H).reps) {
      const int y = X->act(b, x);
      for (int r : rs) {
        ++counts[ti];
        const ExpansionResult er = coset_root_expansion_at(X, y, r);
        for (const auto& k : er.stab.K->elements()) {
          const long long ora = oracle::count_roots_in_coset(*H, b, r, k);
          if (er.value_at(k) != Rational(static_cast<long>(ora))) {
            fail(b, r, "expansion != oracle at k=" + k.cycles());
            break;
          }
        }
        for (const auto& h : H->elements()) {
          if (er.stab.K->contains(h)) continue;
          if (oracle::count_roots_in_coset(*H, b, r, h) != 0) {
            fail(b, r, "support leaks outside the two-point stabilizer at " + h.cycles());
            break;
          }
        }
      }
    }
  });
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    res.instances += counts[i];
    for (auto& f : fails[i]) res.failures.push_back(std::move(f));
  }
  return res;
}

/// Induced-class-function identity for the top-transposition coset, with
/// the character property of the left side.
inline SuiteResult run_induced_identity(int max_n, int max_r) {
  SuiteResult res;
  res.name = "induced-identity";
  detail::Timer timer(res);
  for (int n = 2; n <= max_n; ++n)
    for (int r = 1; r <= max_r; ++r) {
      ++res.instances;
      const CosetRootsReport rep = coset_roots_Sn(n, r);
      std::ostringstream tag;
      tag << "n=" << n << " r=" << r << ": ";
      if (rep.count != rep.oracle_count)
        res.failures.push_back(tag.str() + "divisor-sum count != oracle");
      if (!rep.induced_identity_ok)
        res.failures.push_back(tag.str() + "induced identity fails");
      if (!rep.character_property_ok)
        res.failures.push_back(tag.str() + "multiplicities not nonnegative integers");
    }
  return res;
}

/// Bilinear form laws on a curated set of small simple modules spanning
/// second indicators 0 and 1 (all modules of all orbitals for n <= max_n)
/// plus one engineered instance with indicator -1.
inline SuiteResult run_forms(int max_n = 4) {
  SuiteResult res;
  res.name = "forms";
  detail::Timer timer(res);

  struct Case {
    ModulePtr M;
    RepPtr V;
    Rational fs2;
    std::optional<Permutation> t;
    std::string tag;
  };
  std::vector<Case> cases;

  for (int n = 1; n <= max_n; ++n)
    for (const auto& alpha : all_compositions(n)) {
      auto G = PermGroup::symmetric(n);
      auto H = PermGroup::young(alpha);
      auto X = GSet::ordered_set_partitions(G, alpha);
      auto amb = std::make_shared<const Ambient>(G, X, 4000000);
      const int x = X->base_point();
      for (const auto& b : G->double_cosets(*H).reps) {
        const int y = X->act(b, x);
        auto sd = two_point_stabilizer(*X, x, y);
        for (const auto& lam : partition_matrices(sd.gamma)) {
          Case c;
          c.V = module_representation(sd, lam);
          c.M = InducedModule::induce(amb, x, y, c.V);
          c.fs2 = c.M->fs_direct(2);
          c.t = sd.t;
          std::ostringstream os;
          os << "n=" << n << " alpha=(" << alpha.str() << ") b=" << b.cycles() << " ["
             << lam.str() << "]";
          c.tag = os.str();
          cases.push_back(std::move(c));
        }
      }
    }

  // Engineered indicator -1: cyclic group of order 4 acting on the two
  // cosets of its order-2 subgroup, with the nontrivial character.
  {
    const Permutation t4 = Permutation::parse_cycles("(1 2 3 4)", 4);
    auto Z4 = PermGroup::closure(4, {t4});
    auto K2 = PermGroup::closure(4, {t4 * t4});
    auto XZ = GSet::coset_space(Z4, *K2);
    auto amb = std::make_shared<const Ambient>(Z4, XZ);
    const int x = XZ->base_point();
    const int y = XZ->act(t4, x);
    auto sd = two_point_stabilizer(*XZ, x, y);
    RatMatrix neg(1, 1);
    neg.at(0, 0) = -1;
    Case c;
    c.V = Representation::from_generators(sd.K, {t4 * t4}, {neg});
    c.M = InducedModule::induce(amb, x, y, c.V);
    c.fs2 = c.M->fs_direct(2);
    c.t = find_transposer(*XZ, x, y);
    c.tag = "engineered cyclic-4 instance";
    cases.push_back(std::move(c));
  }

  bool saw_minus_one = false;
  for (const auto& c : cases) {
    ++res.instances;
    auto fail = [&](const std::string& what) { res.failures.push_back(c.tag + ": " + what); };
    if (c.M->commutant_dimension() != 1) {
      fail("module is not simple");
      continue;
    }
    if (c.fs2 == Rational(-1)) saw_minus_one = true;
    const FormSpace fm = invariant_forms(*c.M);
    if (fm.basis.size() > 1) fail("dim B(M) > 1");
    if (c.fs2 == Rational(1) && !(fm.plus.size() == 1 && fm.minus.empty()))
      fail("indicator 1 but no symmetric form line");
    if (c.fs2 == Rational(-1) && !(fm.minus.size() == 1 && fm.plus.empty()))
      fail("indicator -1 but no antisymmetric form line");
    if (c.fs2 == Rational(0) && !fm.basis.empty()) fail("indicator 0 but forms exist");
    if (c.fs2 != Rational(0) && c.fs2 != Rational(1) && c.fs2 != Rational(-1))
      fail("simple module with indicator outside {0, 1, -1}");
    for (const auto& C : fm.basis)
      if (!nondegenerate(C)) fail("invariant form on a simple module is degenerate");

    if (!c.t) continue;
    const Permutation& t = *c.t;
    const FormSpace fv = twisted_forms(*c.V, t);
    if (fv.basis.size() != fm.basis.size()) fail("dim B(V,t) != dim B(M)");
    if (fv.plus.size() != fm.plus.size() || fv.minus.size() != fm.minus.size())
      fail("transpose split differs between B(V,t) and B(M)");
    for (const auto& B : fv.basis) {
      const RatMatrix C = ind_form(*c.M, B, t);
      if (!(res_form(*c.M, C, t) == B)) fail("res(ind(B)) != B");
      if (nondegenerate(B) != nondegenerate(C)) fail("non-degeneracy does not correspond");
      const RatMatrix Bt = twisted_transpose(*c.V, t, B);
      if (!(twisted_transpose(*c.V, t, Bt) == B)) fail("(B^T)^T != B");
      if (!(res_form(*c.M, C.transpose(), t) == Bt)) fail("res(C^T) != res(C)^T");
    }
    for (const auto& C : fm.basis)
      if (!(ind_form(*c.M, res_form(*c.M, C, t), t) == C)) fail("ind(res(C)) != C");
  }
  if (!saw_minus_one)
    res.failures.push_back("no indicator -1 instance was exercised");
  return res;
}

/// Integral laws on a fixed family of ambients within the symbol-universe
/// cap: idempotence, closed = composed = alternate closed form, centrality,
/// and the defining property of the integral on every basis symbol.
inline SuiteResult run_integral_laws(int max_r, int workers) {
  SuiteResult res;
  res.name = "integral-laws";
  detail::Timer timer(res);
  struct Amb {
    std::string tag;
    AmbientPtr amb;
  };
  std::vector<Amb> ambients;
  auto add_coset = [&](const std::string& tag, int n, const Composition& alpha) {
    auto G = PermGroup::symmetric(n);
    ambients.push_back({tag, std::make_shared<const Ambient>(
                                 G, GSet::coset_space(G, *PermGroup::young(alpha)), 100000)});
  };
  auto add_osp = [&](const std::string& tag, int n, const Composition& alpha) {
    auto G = PermGroup::symmetric(n);
    ambients.push_back({tag, std::make_shared<const Ambient>(
                                 G, GSet::ordered_set_partitions(G, alpha), 100000)});
  };
  add_coset("S2/1", 2, Composition({1, 1}));
  add_coset("S3/S2", 3, Composition({2, 1}));
  add_coset("S3/1", 3, Composition({1, 1, 1}));
  add_osp("S4 (2,2)", 4, Composition({2, 2}));
  add_osp("S4 (1,1,2)", 4, Composition({1, 1, 2}));
  add_coset("S4/1", 4, Composition({1, 1, 1, 1}));
  add_coset("S5/S4", 5, Composition({4, 1}));
  add_osp("S5 (3,2)", 5, Composition({3, 2}));
  {
    const Permutation t4 = Permutation::parse_cycles("(1 2 3 4)", 4);
    auto Z4 = PermGroup::closure(4, {t4});
    ambients.push_back({"Z4/Z2", std::make_shared<const Ambient>(
                                     Z4, GSet::coset_space(Z4, *PermGroup::closure(4, {t4 * t4})),
                                     100000)});
  }

  std::vector<std::vector<std::string>> fails(ambients.size());
  std::vector<long long> counts(ambients.size(), 0);
  parallel_for(ambients.size(), workers, [&](std::size_t ai) {
    const auto& [tag, amb] = ambients[ai];
    auto fail = [&](const std::string& what) { fails[ai].push_back(tag + ": " + what); };
    const FaceElement I = integral(amb);
    ++counts[ai];
    if (!(I * I == I)) fail("integral is not idempotent");
    for (int r = 1; r <= max_r; ++r) {
      ++counts[ai];
      const FaceElement closed = integral_r_closed(amb, r);
      if (!(closed == integral_r_composed(amb, r))) fail("closed != composed at r=" + std::to_string(r));
      if (!(closed == integral_r_closed_alt(amb, r)))
        fail("the two closed expressions differ at r=" + std::to_string(r));
      // centrality against the algebra generators; the integral itself
      // (r = 1) commutes with group elements but not with the idempotents
      for (const auto& g : amb->group().generators()) {
        const FaceElement c = FaceElement::group_element(amb, amb->group().index_of(g));
        if (!(closed * c == c * closed)) fail("group centrality fails at r=" + std::to_string(r));
      }
      if (r >= 2) {
        bool idem_ok = true;
        for (int yy = 0; yy < amb->points() && idem_ok; ++yy)
          for (int zz = 0; zz < amb->points() && idem_ok; ++zz) {
            const FaceElement e =
                FaceElement::symbol(amb, yy, zz, amb->group().identity_index());
            if (!(closed * e == e * closed)) idem_ok = false;
          }
        if (!idem_ok) fail("idempotent centrality fails at r=" + std::to_string(r));
      }
    }
    // defining property on every basis symbol
    bool defint_ok = true;
    for (int x = 0; x < amb->points() && defint_ok; ++x)
      for (int y = 0; y < amb->points() && defint_ok; ++y)
        for (int g = 0; g < amb->order() && defint_ok; ++g) {
          ++counts[ai];
          const FaceElement a = FaceElement::symbol(amb, x, y, g);
          if (!(a * I == a.epsilon_L() * I) || !(I * a == I * a.epsilon_R())) {
            defint_ok = false;
            fail("defining property fails at e[" + std::to_string(x) + "," + std::to_string(y) +
                 "]" + amb->group().element(g).cycles());
          }
        }
  });
  for (std::size_t i = 0; i < ambients.size(); ++i) {
    res.instances += counts[i];
    for (auto& f : fails[i]) res.failures.push_back(std::move(f));
  }
  return res;
}

struct SuiteOptions {
  int max_n = 0;  // 0 = suite default
  int max_r = 0;
  int m = 0;
  int workers = 1;
};

inline std::vector<std::string> suite_names() {
  return {"involutions",    "special-cases", "indicator-triple", "divisor-sum",
          "recurrence",     "double-coset",  "stab-identity",    "expansion",
          "induced-identity", "forms",       "integral-laws"};
}

inline SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  auto n_or = [&](int d) { return opt.max_n > 0 ? opt.max_n : d; };
  auto r_or = [&](int d) { return opt.max_r > 0 ? opt.max_r : d; };
  if (name == "involutions") return run_involutions(n_or(6), opt.workers);
  if (name == "special-cases") return run_special_cases();
  if (name == "indicator-triple") return run_indicator_triple(n_or(5), opt.workers);
  if (name == "divisor-sum") return run_divisor_sum(n_or(6), r_or(6));
  if (name == "recurrence") {
    std::vector<int> rs = opt.max_r > 0 ? std::vector<int>{opt.max_r}
                                        : std::vector<int>{2, 3, 4, 6};
    return run_recurrence(n_or(8), rs);
  }
  if (name == "double-coset") return run_double_coset(n_or(7), {2, 3});
  if (name == "stab-identity") return run_stab_identity(n_or(10), opt.m);
  if (name == "expansion") return run_expansion(n_or(6), {2, 3, 4}, opt.workers);
  if (name == "induced-identity") return run_induced_identity(n_or(7), r_or(6));
  if (name == "forms") return run_forms(n_or(4));
  if (name == "integral-laws") return run_integral_laws(r_or(8), opt.workers);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace cosetfs::verify
