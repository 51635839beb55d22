#include <catch2/catch_amalgamated.hpp>

#include "cosetfs/permutation.hpp"

using namespace cosetfs;

TEST_CASE("compose follows the left action convention") {
  const Permutation id4(4);
  REQUIRE(id4 * id4 == id4);

  const Permutation s12 = Permutation::parse_cycles("(1 2)", 2);
  REQUIRE(s12 * s12 == Permutation(2));

  // apply (1 2) first, then (2 3): 1 -> 3, 2 -> 1, 3 -> 2
  const Permutation a = Permutation::parse_cycles("(2 3)", 3);
  const Permutation b = Permutation::parse_cycles("(1 2)", 3);
  REQUIRE((a * b).one_line() == "[3,1,2]");
}

TEST_CASE("compose rejects degree mismatch") {
  REQUIRE_THROWS_AS(Permutation(3) * Permutation(4), std::invalid_argument);
}

TEST_CASE("powers") {
  const Permutation c3 = Permutation::parse_cycles("(1 2 3)", 3);
  REQUIRE(c3.pow(3).is_identity());
  REQUIRE(c3.pow(0).is_identity());
  const Permutation t = Permutation::parse_cycles("(1 2)", 2);
  REQUIRE(t.pow(-1) == t);
  const Permutation c4 = Permutation::parse_cycles("(1 2 3 4)", 4);
  REQUIRE(c4.pow(2) == Permutation::parse_cycles("(1 3)(2 4)", 4));
  REQUIRE(c4.pow(-3) == c4);
}

TEST_CASE("power at the order gives the identity") {
  const Permutation p = Permutation::parse_cycles("(1 2 3)(4 5)", 6);
  REQUIRE(p.order() == 6);
  REQUIRE(p.pow(p.order()).is_identity());
}

TEST_CASE("cycle types") {
  REQUIRE(cycle_type(Permutation(4)) == Partition({1, 1, 1, 1}));
  REQUIRE(cycle_type(Permutation::parse_cycles("(1 2)(3 4)", 4)) == Partition({2, 2}));
  REQUIRE(cycle_type(Permutation::parse_cycles("(1 2 3)", 5)) == Partition({3, 1, 1}));
}

TEST_CASE("cycle type on a block") {
  const Permutation p = Permutation::parse_cycles("(1 2)(3 4 5)", 5);
  REQUIRE(cycle_type_on(p, {0, 1}) == Partition({2}));
  REQUIRE(cycle_type_on(p, {2, 3, 4}) == Partition({3}));
  REQUIRE(cycle_type_on(p, {}) == Partition());
  REQUIRE_THROWS_AS(cycle_type_on(p, {0}), std::invalid_argument);
}

TEST_CASE("associativity on pseudo-random triples") {
  // deterministic scramble of S_6 elements
  std::vector<Permutation> pool;
  std::vector<int> img{0, 1, 2, 3, 4, 5};
  unsigned state = 12345;
  for (int k = 0; k < 12; ++k) {
    for (std::size_t i = img.size(); i > 1; --i) {
      state = state * 1103515245u + 12345u;
      std::swap(img[i - 1], img[(state >> 16) % i]);
    }
    pool.push_back(Permutation::from_images(img));
  }
  for (std::size_t i = 0; i + 2 < pool.size(); ++i) {
    const auto &a = pool[i], &b = pool[i + 1], &c = pool[i + 2];
    REQUIRE(a * (b * c) == (a * b) * c);
  }
}

TEST_CASE("one-line text form is bit-exact") {
  const Permutation p = Permutation::parse_one_line("[2,1,3]");
  REQUIRE(p.degree() == 3);
  REQUIRE(p.one_line() == "[2,1,3]");
  REQUIRE(Permutation::parse_one_line(p.one_line()) == p);
  REQUIRE_THROWS_AS(Permutation::parse_one_line("[2,2,3]"), std::invalid_argument);
  REQUIRE_THROWS_AS(Permutation::parse_one_line("2,1,3"), std::invalid_argument);
}

TEST_CASE("cycle text form") {
  REQUIRE(Permutation(4).cycles() == "()");
  REQUIRE(Permutation::parse_cycles("()", 4) == Permutation(4));
  const Permutation p = Permutation::parse_cycles("(1 2)(3 4)", 5);
  REQUIRE(p.cycles() == "(1 2)(3 4)");
  REQUIRE(Permutation::parse_cycles(p.cycles(), 5) == p);
  REQUIRE(Permutation::parse_cycles("(1 2 3)", 3).one_line() == "[2,3,1]");
  REQUIRE_THROWS_AS(Permutation::parse_cycles("(1 7)", 3), std::invalid_argument);
  REQUIRE_THROWS_AS(Permutation::parse_cycles("(1 2", 3), std::invalid_argument);
}

TEST_CASE("lexicographic order starts at the identity") {
  std::vector<Permutation> all;
  std::vector<int> img{0, 1, 2};
  do {
    all.push_back(Permutation::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  REQUIRE(std::is_sorted(all.begin(), all.end()));
  REQUIRE(all.front().is_identity());
}
