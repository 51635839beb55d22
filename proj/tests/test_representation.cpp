#include <catch2/catch_amalgamated.hpp>

#include "cosetfs/rep_io.hpp"
#include "cosetfs/representation.hpp"

using namespace cosetfs;

TEST_CASE("standard tableaux enumeration") {
  REQUIRE(standard_tableaux(Partition()).size() == 1);
  REQUIRE(standard_tableaux(Partition({3})).size() == 1);
  REQUIRE(standard_tableaux(Partition({2, 1})).size() == 2);
  for (const auto& lam : partitions_of(6))
    REQUIRE(standard_tableaux(lam).size() == static_cast<std::size_t>(stab_count(lam)));
}

TEST_CASE("seminormal matrices are involutions of the right trace") {
  for (int m = 2; m <= 5; ++m)
    for (const auto& lam : partitions_of(m)) {
      const auto mats = seminormal_transposition_matrices(lam);
      REQUIRE(mats.size() == static_cast<std::size_t>(m - 1));
      for (const auto& rho : mats) {
        REQUIRE(rho * rho == RatMatrix::identity(rho.rows()));
        // character value of a transposition
        REQUIRE(rho.trace() ==
                Rational(static_cast<long>(mn_character(
                    lam, Partition([&] {
                      std::vector<int> p{2};
                      for (int i = 0; i < m - 2; ++i) p.push_back(1);
                      return p;
                    }())))));
      }
    }
}

TEST_CASE("seminormal representations are multiplicative and match characters") {
  for (int m = 2; m <= 4; ++m) {
    auto Sm = PermGroup::symmetric(m);
    std::vector<int> pts(m);
    std::iota(pts.begin(), pts.end(), 0);
    for (const auto& lam : partitions_of(m)) {
      auto rep = seminormal_irreducible(Sm, pts, lam);  // ctor verifies multiplicativity
      REQUIRE(rep->dim() == stab_count(lam));
      for (const auto& cls : Sm->conjugacy_classes()) {
        const Permutation& g = Sm->element(cls.rep);
        REQUIRE(rep->of(g).trace() ==
                Rational(static_cast<long>(mn_character(lam, cycle_type(g)))));
      }
    }
  }
}

TEST_CASE("non-multiplicative generator matrices are rejected") {
  auto S2 = PermGroup::symmetric(2);
  RatMatrix bad(1, 1);
  bad.at(0, 0) = 2;  // 2^2 != 1
  REQUIRE_THROWS_AS(Representation::from_generators(
                        S2, {Permutation::parse_cycles("(1 2)", 2)}, {bad}),
                    std::invalid_argument);
}

TEST_CASE("trivial, sign, and direct sums") {
  auto S3 = PermGroup::symmetric(3);
  auto triv = Representation::trivial(S3);
  REQUIRE(triv->dim() == 1);
  auto sgn = Representation::sign(S3);
  REQUIRE(sgn->of(Permutation::parse_cycles("(1 2)", 3)).at(0, 0) == -1);
  REQUIRE(sgn->of(Permutation::parse_cycles("(1 2 3)", 3)).at(0, 0) == 1);
  auto sum = triv->direct_sum(*sgn);
  REQUIRE(sum->dim() == 2);
  REQUIRE(sum->of(Permutation::parse_cycles("(1 2)", 3)).trace() == 0);
}

TEST_CASE("stabilizer module representations match their characters") {
  auto S4 = PermGroup::symmetric(4);
  for (const auto& alpha : {Composition({2, 2}), Composition({3, 1}), Composition({2, 1, 1})}) {
    auto H = PermGroup::young(alpha);
    auto X = GSet::ordered_set_partitions(S4, alpha);
    const int A = X->base_point();
    for (const auto& b : S4->double_cosets(*H).reps) {
      auto sd = two_point_stabilizer(*X, A, X->act(b, A));
      for (const auto& lam : partition_matrices(sd.gamma)) {
        auto rep = module_representation(sd, lam);
        const ProductCharacter chi = character_on_stabilizer(sd, lam);
        REQUIRE(rep->dim() == chi.degree());
        for (const auto& k : sd.K->elements())
          REQUIRE(rep->of(k).trace() == Rational(static_cast<long>(chi.eval(k))));
      }
    }
  }
}

TEST_CASE("representation json input") {
  const std::string text = R"json({
    "degree": 4,
    "group_generators": ["(1 3)(2 4)"],
    "matrices": [["-1"]]
  })json";
  auto rep = representation_from_json_string(text);
  REQUIRE(rep->dim() == 1);
  REQUIRE(rep->group()->size() == 2);
  REQUIRE(rep->of(Permutation::parse_cycles("(1 3)(2 4)", 4)).at(0, 0) == -1);

  const std::string frac = R"json({
    "degree": 3,
    "group_generators": ["(1 2)", "(2 3)"],
    "matrices": [["1","0","0","-1"], ["-1/2","3/4","1","1/2"]]
  })json";
  auto rep2 = representation_from_json_string(frac);
  REQUIRE(rep2->dim() == 2);
  REQUIRE(rep2->group()->size() == 6);

  REQUIRE_THROWS_AS(representation_from_json_string(R"json({"degree": 2})json"), std::invalid_argument);
  REQUIRE_THROWS_AS(representation_from_json_string(R"json({
    "degree": 2, "group_generators": ["(1 2)"], "matrices": [["1","0","0"]]
  })json"),
                    std::invalid_argument);
}
