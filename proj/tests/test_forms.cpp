#include <catch2/catch_amalgamated.hpp>

#include "cosetfs/bilinear_forms.hpp"
#include "cosetfs/indicators.hpp"

using namespace cosetfs;

namespace {

struct Z4Case {
  AmbientPtr amb;
  GSetPtr X;
  int x, y;
  GroupPtr K;
  RepPtr V;
  ModulePtr M;
  Permutation t{4};
};

// Cyclic group of order 4 on the two cosets of its order-2 subgroup, with
// the nontrivial stabilizer character: the one small instance with
// indicator -1.
Z4Case z4_case() {
  Z4Case c;
  const Permutation gen = Permutation::parse_cycles("(1 2 3 4)", 4);
  auto Z4 = PermGroup::closure(4, {gen});
  auto K2 = PermGroup::closure(4, {gen * gen});
  c.X = GSet::coset_space(Z4, *K2);
  c.amb = std::make_shared<const Ambient>(Z4, c.X);
  c.x = c.X->base_point();
  c.y = c.X->act(gen, c.x);
  c.K = two_point_stabilizer(*c.X, c.x, c.y).K;
  RatMatrix neg(1, 1);
  neg.at(0, 0) = -1;
  c.V = Representation::from_generators(c.K, {gen * gen}, {neg});
  c.M = InducedModule::induce(c.amb, c.x, c.y, c.V);
  c.t = *find_transposer(*c.X, c.x, c.y);
  return c;
}

}  // namespace

TEST_CASE("indicator 1 gives a symmetric form line") {
  auto G = PermGroup::symmetric(3);
  auto X = GSet::coset_space(G, *PermGroup::young(Composition({2, 1})));
  auto amb = std::make_shared<const Ambient>(G, X);
  auto sd = two_point_stabilizer(*X, X->base_point(), X->base_point());
  auto M = InducedModule::induce(amb, X->base_point(), X->base_point(),
                                 Representation::trivial(sd.K));
  REQUIRE(M->fs_direct(2) == 1);
  const FormSpace fs = invariant_forms(*M);
  REQUIRE(fs.basis.size() == 1);
  REQUIRE(fs.plus.size() == 1);
  REQUIRE(fs.minus.empty());
  REQUIRE(nondegenerate(fs.basis[0]));
}

TEST_CASE("asymmetric type admits no invariant form") {
  auto G = PermGroup::symmetric(3);
  auto X = GSet::ordered_set_partitions(G, Composition({1, 1, 1}));
  auto amb = std::make_shared<const Ambient>(G, X);
  const int x = X->base_point();
  const int y = X->act(Permutation::parse_cycles("(1 2 3)", 3), x);
  auto sd = two_point_stabilizer(*X, x, y);
  auto M = InducedModule::induce(amb, x, y, Representation::trivial(sd.K));
  REQUIRE(M->fs_direct(2) == 0);
  REQUIRE(invariant_forms(*M).basis.empty());
}

TEST_CASE("indicator -1 gives an antisymmetric form line") {
  const Z4Case c = z4_case();
  REQUIRE(c.M->fs_direct(2) == -1);
  REQUIRE(c.M->commutant_dimension() == 1);
  const FormSpace fs = invariant_forms(*c.M);
  REQUIRE(fs.basis.size() == 1);
  REQUIRE(fs.plus.empty());
  REQUIRE(fs.minus.size() == 1);
  REQUIRE(nondegenerate(fs.minus[0]));
  REQUIRE(fs.minus[0].transpose() == Rational(-1) * fs.minus[0]);
}

TEST_CASE("twisted pairings") {
  SECTION("trivial module always pairs symmetrically") {
    auto G = PermGroup::symmetric(4);
    auto X = GSet::ordered_set_partitions(G, Composition({2, 2}));
    const int x = X->base_point();
    const int y = X->act(Permutation::parse_cycles("(2 3)", 4), x);
    auto sd = two_point_stabilizer(*X, x, y);
    const FormSpace fs = twisted_forms(*Representation::trivial(sd.K), *sd.t);
    REQUIRE(fs.plus.size() == 1);
    REQUIRE(fs.minus.empty());
  }
  SECTION("nontrivial character of the cyclic case pairs antisymmetrically") {
    const Z4Case c = z4_case();
    const FormSpace fs = twisted_forms(*c.V, c.t);
    REQUIRE(fs.basis.size() == 1);
    REQUIRE(fs.minus.size() == 1);
    const RatMatrix bt = twisted_transpose(*c.V, c.t, fs.basis[0]);
    REQUIRE(twisted_transpose(*c.V, c.t, bt) == fs.basis[0]);
  }
  SECTION("vanishing twisted indicator means no pairing") {
    // K = S_2 x S_2 with the factor-swapping twist and the sign x trivial
    // character: the twisted indicator vanishes.
    auto K = PermGroup::young(Composition({2, 2}));
    const Permutation t = Permutation::parse_cycles("(1 3)(2 4)", 4);
    // sign on the first block, trivial on the second
    std::vector<RatMatrix> mats;
    for (const auto& g : K->generators()) {
      RatMatrix m(1, 1);
      m.at(0, 0) = (g == Permutation::parse_cycles("(1 2)", 4)) ? -1 : 1;
      mats.push_back(m);
    }
    auto V = Representation::from_generators(K, K->generators(), mats);
    ProductCharacter chi{{{0, 1}, {2, 3}}, {Partition({1, 1}), Partition({2})}};
    REQUIRE(twisted_fs2(*K, chi.fn(), t) == 0);
    const FormSpace fs = twisted_forms(*V, t);
    REQUIRE(fs.basis.empty());
  }
}

TEST_CASE("restriction and induction of forms are mutually inverse") {
  const Z4Case c = z4_case();
  const FormSpace fv = twisted_forms(*c.V, c.t);
  const FormSpace fm = invariant_forms(*c.M);
  REQUIRE(fv.basis.size() == fm.basis.size());

  const RatMatrix& B = fv.basis[0];
  const RatMatrix C = ind_form(*c.M, B, c.t);
  REQUIRE(res_form(*c.M, C, c.t) == B);
  REQUIRE(ind_form(*c.M, res_form(*c.M, fm.basis[0], c.t), c.t) == fm.basis[0]);

  // the induced form is invariant: rho(a)^T C rho(a) = C on generators
  for (const auto& g : c.amb->group().generators()) {
    const RatMatrix rho = c.M->group_action_matrix(c.amb->group().index_of(g));
    REQUIRE(rho.transpose() * C * rho == C);
  }
  // transpose equivariance and non-degeneracy correspondence
  REQUIRE(res_form(*c.M, C.transpose(), c.t) == twisted_transpose(*c.V, c.t, B));
  REQUIRE(nondegenerate(B) == nondegenerate(C));

  const RatMatrix zero(c.V->dim(), c.V->dim());
  REQUIRE(ind_form(*c.M, zero, c.t).is_zero());
}

TEST_CASE("forms on a direct sum grow quadratically") {
  auto G = PermGroup::symmetric(3);
  auto X = GSet::coset_space(G, *PermGroup::young(Composition({2, 1})));
  auto amb = std::make_shared<const Ambient>(G, X);
  auto sd = two_point_stabilizer(*X, X->base_point(), X->base_point());
  auto V = Representation::trivial(sd.K);
  auto M1 = InducedModule::induce(amb, X->base_point(), X->base_point(), V);
  auto M2 = InducedModule::induce(amb, X->base_point(), X->base_point(), V->direct_sum(*V));
  REQUIRE(invariant_forms(*M2).basis.size() == 4 * invariant_forms(*M1).basis.size());
}
