#include <catch2/catch_amalgamated.hpp>

#include "cosetfs/perm_group.hpp"

using namespace cosetfs;

TEST_CASE("closure enumerates the generated group") {
  auto S3 = PermGroup::closure(3, {Permutation::parse_cycles("(1 2)", 3),
                                   Permutation::parse_cycles("(1 2 3)", 3)});
  REQUIRE(S3->size() == 6);
  REQUIRE(PermGroup::closure(4, {})->size() == 1);
  auto V = PermGroup::closure(4, {Permutation::parse_cycles("(1 2)", 4),
                                  Permutation::parse_cycles("(3 4)", 4)});
  REQUIRE(V->size() == 4);
  REQUIRE(std::is_sorted(V->elements().begin(), V->elements().end()));
  REQUIRE(V->element(0).is_identity());
}

TEST_CASE("the element cap guards oversized closures") {
  REQUIRE_THROWS_AS(PermGroup::closure(5,
                                       {Permutation::parse_cycles("(1 2)", 5),
                                        Permutation::parse_cycles("(1 2 3 4 5)", 5)},
                                       10),
                    CapExceeded);
}

TEST_CASE("young subgroups") {
  auto Y = PermGroup::young(Composition({2, 2}));
  REQUIRE(Y->size() == 4);
  REQUIRE(Y->blocks() == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
  REQUIRE(PermGroup::young(Composition({4}))->size() == 24);
  REQUIRE(PermGroup::young(Composition({1, 1, 1}))->size() == 1);
  REQUIRE(PermGroup::young(Composition({2, 0, 2}))->size() == 4);  // zero part skipped
}

TEST_CASE("conjugacy classes") {
  auto S3 = PermGroup::symmetric(3);
  std::vector<std::size_t> sizes;
  for (const auto& c : S3->conjugacy_classes()) sizes.push_back(c.members.size());
  std::sort(sizes.begin(), sizes.end());
  REQUIRE(sizes == std::vector<std::size_t>{1, 2, 3});

  auto S4 = PermGroup::symmetric(4);
  std::vector<std::size_t> s4;
  std::size_t total = 0;
  for (const auto& c : S4->conjugacy_classes()) {
    s4.push_back(c.members.size());
    total += c.members.size();
    // the representative is the minimal member
    REQUIRE(c.rep == c.members.front());
    for (int m : c.members) REQUIRE(S4->class_of(m) == S4->class_of(c.rep));
  }
  std::sort(s4.begin(), s4.end());
  REQUIRE(s4 == std::vector<std::size_t>{1, 3, 6, 6, 8});
  REQUIRE(total == 24);

  REQUIRE(PermGroup::trivial(3)->conjugacy_classes().size() == 1);
}

TEST_CASE("left cosets") {
  auto S3 = PermGroup::symmetric(3);
  auto S2 = PermGroup::young(Composition({2, 1}));
  REQUIRE(S3->left_coset_reps(*S2).size() == 3);
  REQUIRE(S3->left_coset_reps(*S3).size() == 1);
  REQUIRE(S3->left_coset_reps(*S3).front().is_identity());
  REQUIRE(S3->right_coset_reps(*S2).size() == 3);
}

TEST_CASE("subgroup check") {
  auto S3 = PermGroup::symmetric(3);
  auto S4 = PermGroup::symmetric(4);
  REQUIRE_THROWS_AS(S3->left_coset_reps(*S4), std::invalid_argument);
  auto odd = PermGroup::closure(4, {Permutation::parse_cycles("(1 2 3)", 4)});
  REQUIRE(S4->contains_group(*odd));
}

TEST_CASE("double cosets partition the group") {
  auto S4 = PermGroup::symmetric(4);
  auto S3 = PermGroup::on_points(4, {0, 1, 2});
  const DoubleCosets dc = S4->double_cosets(*S3);
  REQUIRE(dc.reps.size() == 2);
  REQUIRE(dc.reps[0].is_identity());
  REQUIRE(dc.reps[1] == Permutation::parse_cycles("(3 4)", 4));
  long long total = 0;
  for (long long s : dc.sizes) total += s;
  REQUIRE(total == 24);

  auto Y = PermGroup::young(Composition({2, 2}));
  const DoubleCosets dy = S4->double_cosets(*Y);
  REQUIRE(dy.reps.size() == 3);
  long long ty = 0;
  for (long long s : dy.sizes) ty += s;
  REQUIRE(ty == 24);
}

TEST_CASE("outer involution guard") {
  auto K = PermGroup::closure(4, {Permutation::parse_cycles("(1 2 3 4)", 4)});
  REQUIRE_NOTHROW(require_outer_involution(*K, Permutation::parse_cycles("(1 3)", 4)));
  auto K2 = PermGroup::young(Composition({2, 2}));
  REQUIRE_THROWS_AS(require_outer_involution(*K2, Permutation::parse_cycles("(2 3)", 4)),
                    std::invalid_argument);
}
