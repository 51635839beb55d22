#include <catch2/catch_amalgamated.hpp>

#include "cosetfs/indicators.hpp"
#include "cosetfs/verify.hpp"

using namespace cosetfs;

TEST_CASE("stabilizer scan formula") {
  auto G = PermGroup::symmetric(3);
  auto X = GSet::coset_space(G, *PermGroup::young(Composition({2, 1})));
  const int x = X->base_point();
  CharFn triv = [](const Permutation&) { return Rational(1); };
  SECTION("first indicator on the diagonal counts the trivial multiplicity") {
    REQUIRE(fs_formula(*X, x, x, triv, 1) == 1);
  }
  SECTION("second indicator on a symmetric off-diagonal orbital") {
    for (int y = 0; y < X->size(); ++y) {
      if (y == x) continue;
      REQUIRE(fs_formula(*X, x, y, triv, 2) == 1);
      auto sd = two_point_stabilizer(*X, x, y);
      auto t = find_transposer(*X, x, y);
      REQUIRE(t);
      REQUIRE(twisted_fs2(*sd.K, triv, *t) == 1);
    }
  }
  SECTION("asymmetric orbitals vanish at r = 2") {
    auto X3 = GSet::ordered_set_partitions(G, Composition({1, 1, 1}));
    const int a = X3->base_point();
    const int b = X3->act(Permutation::parse_cycles("(1 2 3)", 3), a);
    REQUIRE(fs_formula(*X3, a, b, triv, 2) == 0);
  }
}

TEST_CASE("twisted indicator") {
  SECTION("identity twist on a full symmetric group gives 1") {
    for (int m = 2; m <= 4; ++m) {
      auto K = PermGroup::symmetric(m);
      std::vector<int> pts(m);
      std::iota(pts.begin(), pts.end(), 0);
      for (const auto& lam : partitions_of(m)) {
        CharFn chi = [&lam, pts](const Permutation& a) {
          return Rational(static_cast<long>(mn_character(lam, cycle_type_on(a, pts))));
        };
        REQUIRE(twisted_fs2(*K, chi, Permutation(m)) == 1);
      }
    }
  }
  SECTION("trivial stabilizer gives 1") {
    auto K = PermGroup::trivial(2);
    CharFn triv = [](const Permutation&) { return Rational(1); };
    REQUIRE(twisted_fs2(*K, triv, Permutation::parse_cycles("(1 2)", 2)) == 1);
  }
  SECTION("swap twist pairs the two factors") {
    auto K = PermGroup::young(Composition({2, 2}));
    const Permutation t = Permutation::parse_cycles("(1 3)(2 4)", 4);
    const ProductCharacter signxtriv{{{0, 1}, {2, 3}}, {Partition({1, 1}), Partition({2})}};
    REQUIRE(twisted_fs2(*K, signxtriv.fn(), t) == 0);
    const ProductCharacter signxsign{{{0, 1}, {2, 3}}, {Partition({1, 1}), Partition({1, 1})}};
    REQUIRE(twisted_fs2(*K, signxsign.fn(), t) == 1);
  }
  SECTION("bad twist is rejected") {
    auto K = PermGroup::young(Composition({2, 2}));
    CharFn triv = [](const Permutation&) { return Rational(1); };
    REQUIRE_THROWS_AS(twisted_fs2(*K, triv, Permutation::parse_cycles("(2 3)", 4)),
                      std::invalid_argument);
  }
}

TEST_CASE("the twisted indicator depends only on the transposer coset") {
  auto S4 = PermGroup::symmetric(4);
  for (const auto& alpha : {Composition({2, 2}), Composition({3, 1})}) {
    auto H = PermGroup::young(alpha);
    auto X = GSet::ordered_set_partitions(S4, alpha);
    const int A = X->base_point();
    for (const auto& b : S4->double_cosets(*H).reps) {
      const int B = X->act(b, A);
      auto sd = two_point_stabilizer(*X, A, B);
      if (!sd.gamma.is_symmetric()) continue;
      for (const auto& lam : partition_matrices(sd.gamma)) {
        const ProductCharacter chi = character_on_stabilizer(sd, lam);
        std::optional<Rational> first;
        for (std::size_t g = 0; g < S4->size(); ++g) {
          const int gi = static_cast<int>(g);
          if (X->act(gi, A) != B || X->act(gi, B) != A) continue;
          const Rational v = twisted_fs2(*sd.K, chi.fn(), S4->element(gi));
          if (!first)
            first = v;
          else
            REQUIRE(v == *first);
        }
        REQUIRE(first.has_value());
      }
    }
  }
}

TEST_CASE("closed-form second indicator for partition matrices") {
  CompositionMatrix diag;
  diag.alpha = Composition({2, 2});
  diag.ell = 2;
  diag.entries = {2, 0, 0, 2};
  for (const auto& lam : partition_matrices(diag)) REQUIRE(fs2_young(diag, lam) == 1);

  CompositionMatrix ones;
  ones.alpha = Composition({2, 2});
  ones.ell = 2;
  ones.entries = {1, 1, 1, 1};
  REQUIRE(fs2_young(ones, partition_matrices(ones)[0]) == 1);

  CompositionMatrix asym;
  asym.alpha = Composition({1, 1, 1});
  asym.ell = 3;
  asym.entries = {0, 1, 0, 0, 0, 1, 1, 0, 0};
  for (const auto& lam : partition_matrices(asym)) REQUIRE(fs2_young(asym, lam) == 0);

  CompositionMatrix sym_offdiag;
  sym_offdiag.alpha = Composition({2, 2});
  sym_offdiag.ell = 2;
  sym_offdiag.entries = {0, 2, 2, 0};
  int ones_count = 0;
  for (const auto& lam : partition_matrices(sym_offdiag))
    ones_count += fs2_young(sym_offdiag, lam);
  REQUIRE(ones_count == 2);  // only the transpose-fixed labels survive

  REQUIRE_THROWS_AS(fs2_young(diag, partition_matrices(ones)[0]), std::invalid_argument);
}

TEST_CASE("involution counts in young cosets") {
  REQUIRE(involutions_in_young_coset(Composition({3, 1}),
                                     Permutation::parse_cycles("(3 4)", 4)) == 2);
  REQUIRE(involutions_in_young_coset(Composition({2, 2}),
                                     Permutation::parse_cycles("(2 3)", 4)) == 1);
  REQUIRE(involutions_in_young_coset(Composition({4}), Permutation(4)) == 10);
  REQUIRE(involutions_in_young_coset(Composition({1, 1, 1}),
                                     Permutation::parse_cycles("(1 2 3)", 3)) == 0);
  REQUIRE(involutions_in_young_coset(Composition({2, 2}), Permutation(4)) ==
          stab_total(2) * stab_total(2));
}

TEST_CASE("involution formula equals enumeration everywhere small") {
  for (int n = 1; n <= 5; ++n) {
    auto G = PermGroup::symmetric(n);
    for (const auto& alpha : verify::all_compositions(n)) {
      auto H = PermGroup::young(alpha);
      for (const auto& b : G->elements())
        REQUIRE(involutions_in_young_coset(alpha, b) ==
                oracle::count_involutions_in_coset(*H, b));
    }
  }
}

TEST_CASE("divisor-sum indicator") {
  CharFn triv = [](const Permutation&) { return Rational(1); };
  SECTION("r = 2 has the single top term") {
    for (int n = 2; n <= 6; ++n) REQUIRE(fs_r_divisor_sum(n, triv, 2) == 1);
  }
  SECTION("no divisor in range gives zero") { REQUIRE(fs_r_divisor_sum(4, triv, 5) == 0); }
  SECTION("two divisors both contribute") { REQUIRE(fs_r_divisor_sum(5, triv, 6) == 2); }
  SECTION("r = 1 is the empty sum") { REQUIRE(fs_r_divisor_sum(4, triv, 1) == 0); }
}

TEST_CASE("whole-group root recurrence") {
  const long long telephone[] = {1, 1, 2, 4, 10, 26, 76, 232, 764};
  for (int n = 0; n <= 8; ++n) REQUIRE(recurrence_Rr(n, 2) == telephone[n]);
  for (int n = 0; n <= 8; ++n) REQUIRE(recurrence_Rr(n, 1) == 1);
  REQUIRE(recurrence_Rr(4, 3) == 9);
  for (int n = 0; n <= 6; ++n)
    for (int r : {2, 3, 4, 6})
      REQUIRE(recurrence_Rr(n, r) == oracle::count_roots_in_symmetric_group(n, r));
}

TEST_CASE("top-coset root counts and the induced identity") {
  REQUIRE(coset_roots_Sn(3, 2).count == 1);
  REQUIRE(coset_roots_Sn(4, 2).count == 2);
  REQUIRE(coset_roots_Sn(4, 1).count == 0);
  for (int n = 2; n <= 6; ++n)
    for (int r = 1; r <= 4; ++r) {
      const CosetRootsReport rep = coset_roots_Sn(n, r);
      REQUIRE(rep.count == rep.oracle_count);
      REQUIRE(rep.induced_identity_ok);
      REQUIRE(rep.character_property_ok);
    }
}

TEST_CASE("double-coset decomposition of whole-group root counts") {
  auto S4 = PermGroup::symmetric(4);
  SECTION("two-block subgroup reproduces the tableau convolution") {
    const DoubleCosetSum s = sum_over_double_cosets(*S4, *PermGroup::young(Composition({2, 2})), 2);
    REQUIRE(s.whole_group == 10);
    REQUIRE(s.summed == 10);
    std::vector<long long> contributions;
    for (const auto& t : s.terms) contributions.push_back(t.multiplicity * t.coset_count);
    std::sort(contributions.begin(), contributions.end());
    REQUIRE(contributions == std::vector<long long>{2, 4, 4});
  }
  SECTION("point stabilizer") {
    const DoubleCosetSum s = sum_over_double_cosets(*S4, *PermGroup::on_points(4, {0, 1, 2}), 2);
    REQUIRE(s.whole_group == 10);
    REQUIRE(s.summed == 10);
    REQUIRE(s.terms.size() == 2);
    REQUIRE(s.terms[0].multiplicity * s.terms[0].coset_count == 4);
    REQUIRE(s.terms[1].multiplicity * s.terms[1].coset_count == 6);
  }
  SECTION("whole group is a single coset") {
    const DoubleCosetSum s = sum_over_double_cosets(*S4, *S4, 2);
    REQUIRE(s.terms.size() == 1);
    REQUIRE(s.summed == s.whole_group);
  }
}

TEST_CASE("tableau-count convolution identity") {
  for (int n = 2; n <= 10; ++n)
    for (int m = 1; m < n; ++m) REQUIRE(stab_identity(n, m));
}

TEST_CASE("class-function expansion of coset root counts") {
  auto G = PermGroup::symmetric(4);
  SECTION("point-stabilizer chain at the top transposition") {
    const Composition alpha({3, 1});
    const Permutation b = Permutation::parse_cycles("(3 4)", 4);
    const ExpansionResult er = coset_root_expansion(G, alpha, b, 2);
    REQUIRE(er.value_at(Permutation(4)) == 2);
    auto H = PermGroup::young(alpha);
    for (const auto& k : er.stab.K->elements())
      REQUIRE(er.value_at(k) == Rational(static_cast<long>(
                                    oracle::count_roots_in_coset(*H, b, 2, k))));
    // elements of H moving the second base point have no roots in the coset
    for (const auto& h : H->elements()) {
      if (er.stab.K->contains(h)) continue;
      REQUIRE(oracle::count_roots_in_coset(*H, b, 2, h) == 0);
    }
  }
  SECTION("expansion as a class function certifies class constancy") {
    const Composition alpha({2, 2});
    const Permutation b = Permutation::parse_cycles("(2 3)", 4);
    const ExpansionResult er = coset_root_expansion(G, alpha, b, 2);
    const ClassFunction cf = er.as_class_function();
    const ClassFunction ora =
        oracle::class_function_R(*PermGroup::young(alpha), b, 2, er.stab.K);
    REQUIRE(cf == ora);
  }
  SECTION("caller-supplied characters reproduce the automatic expansion") {
    const Composition alpha({3, 1});
    const Permutation b = Permutation::parse_cycles("(3 4)", 4);
    const ExpansionResult er = coset_root_expansion(G, alpha, b, 2);
    std::vector<ClassFunction> irr;
    for (const auto& chi : er.characters)
      irr.push_back(ClassFunction::from_evaluator(er.stab.K, chi.fn()));
    const ClassFunction manual =
        expansion_from_characters(*er.X, er.x, er.y, er.stab.K, irr, 2);
    REQUIRE(manual == er.as_class_function());
  }
}
