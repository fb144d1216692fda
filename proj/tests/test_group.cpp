#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "powcay/group.hpp"

using namespace powcay;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected powcay::Error");
  return ErrorCode::kInvalidSpec;
}

void check_axioms(const FiniteGroup& g) {
  const int n = g.order();
  const Element e = g.identity();
  for (Element a = 0; a < n; ++a) {
    CHECK(g.multiply(e, a) == a);
    CHECK(g.multiply(a, e) == a);
    CHECK(g.multiply(a, g.inverse(a)) == e);
    for (Element b = 0; b < n; ++b) {
      const Element ab = g.multiply(a, b);
      REQUIRE(ab >= 0);
      REQUIRE(ab < n);
      for (Element c = 0; c < n; ++c) REQUIRE(g.multiply(ab, c) == g.multiply(a, g.multiply(b, c)));
    }
  }
}

// S_3 built straight from permutation composition, independent of symmetric().
std::vector<std::vector<Element>> s3_table_by_hand() {
  std::vector<std::vector<int>> perms;
  std::vector<int> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<Element>> t(6, std::vector<Element>(6));
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      std::vector<int> c{perms[a][perms[b][0]], perms[a][perms[b][1]], perms[a][perms[b][2]]};
      t[a][b] = static_cast<Element>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return t;
}

}  // namespace

TEST_CASE("from_table accepts Z2") {
  const auto g = FiniteGroup::from_table({{0, 1}, {1, 0}});
  CHECK(g.order() == 2);
  CHECK(g.identity() == 0);
}

TEST_CASE("from_table rejects broken tables") {
  CHECK(code_of([] { FiniteGroup::from_table({{0, 1}, {1, 1}}); }) == ErrorCode::kNotInvertible);
  CHECK(code_of([] { FiniteGroup::from_table({{0, 2}, {1, 0}}); }) == ErrorCode::kNotClosed);
  CHECK(code_of([] { FiniteGroup::from_table({{0, 1}, {1}}); }) == ErrorCode::kNotClosed);
  CHECK(code_of([] { FiniteGroup::from_table({{1, 0}, {0, 0}}); }) == ErrorCode::kNoIdentity);
  CHECK(code_of([] { FiniteGroup::from_table({}); }) == ErrorCode::kInvalidOrder);
  // A Latin square with identity 0 that is not associative (the smallest
  // such loop has order 5).
  const std::vector<std::vector<Element>> loop{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK(code_of([&] { FiniteGroup::from_table(loop); }) == ErrorCode::kNotAssociative);
}

TEST_CASE("from_table locates a non-zero identity") {
  // Z2 with the identity stored at index 1.
  const auto g = FiniteGroup::from_table({{1, 0}, {0, 1}});
  CHECK(g.identity() == 1);
  CHECK(element_order(g, 0) == 2);
}

TEST_CASE("S3 from a hand-composed table matches symmetric(3)") {
  const auto by_hand = FiniteGroup::from_table(s3_table_by_hand());
  CHECK(by_hand.order() == 6);
  CHECK(by_hand.identity() == 0);
  CHECK(by_hand == symmetric(3));
}

TEST_CASE("cyclic") {
  CHECK(cyclic(1).order() == 1);
  CHECK(cyclic(4).multiply(1, 3) == 0);
  CHECK(code_of([] { cyclic(0); }) == ErrorCode::kInvalidOrder);
}

TEST_CASE("catalog constructors reject bad parameters") {
  CHECK(code_of([] { dihedral(1); }) == ErrorCode::kInvalidOrder);
  CHECK(code_of([] { symmetric(0); }) == ErrorCode::kInvalidOrder);
  CHECK(code_of([] { alternating(2); }) == ErrorCode::kInvalidOrder);
  CHECK(code_of([] { dicyclic(1); }) == ErrorCode::kInvalidOrder);
}

TEST_CASE("constructors satisfy the group axioms") {
  for (const auto& g : {cyclic(1), cyclic(12), dihedral(2), dihedral(7), symmetric(1), symmetric(4),
                        alternating(4), dicyclic(2), dicyclic(3), dicyclic(5), quaternion(),
                        direct_product(cyclic(2), dihedral(3))}) {
    check_axioms(g);
  }
  CHECK(dihedral(5).order() == 10);
  CHECK(symmetric(4).order() == 24);
  CHECK(alternating(4).order() == 12);
  CHECK(dicyclic(3).order() == 12);
}

TEST_CASE("structure of small catalog groups") {
  CHECK_FALSE(symmetric(3).is_abelian());
  const auto z2z3 = direct_product(cyclic(2), cyclic(3));
  CHECK(z2z3.order() == 6);
  CHECK(z2z3.is_abelian());
  CHECK(is_cyclic(z2z3));

  const auto q8 = quaternion();
  const auto profile = element_order_profile(q8);
  CHECK(std::count(profile.begin(), profile.end(), 2) == 1);
  CHECK(*std::max_element(profile.begin(), profile.end()) == 4);
  CHECK(q8.label(2) == "-1");
  // i * j = k
  CHECK(q8.multiply(1, 4) == 5);
  // j * i = -k
  CHECK(q8.multiply(4, 1) == 7);

  // D4 is not Q8: five involutions.
  const auto d4 = element_order_profile(dihedral(4));
  CHECK(std::count(d4.begin(), d4.end(), 2) == 5);
}

TEST_CASE("direct_product indexing is i*|H| + j") {
  const auto g = cyclic(3), h = cyclic(4);
  const auto p = direct_product(g, h);
  for (int x = 0; x < 12; ++x)
    for (int y = 0; y < 12; ++y)
      CHECK(p.multiply(x, y) == g.multiply(x / 4, y / 4) * 4 + h.multiply(x % 4, y % 4));
}

TEST_CASE("power") {
  const auto z6 = cyclic(6);
  CHECK(power(z6, 2, 3) == 0);
  CHECK(power(z6, 5, 0) == z6.identity());
  const auto s3 = symmetric(3);
  // Lexicographic S3: [0,1,2] [0,2,1] [1,0,2] [1,2,0] [2,0,1] [2,1,0].
  // 3 = [1,2,0] squared is [2,0,1] = 4.
  CHECK(power(s3, 3, 2) == 4);
  CHECK(power(s3, 4, 2) == 3);
  CHECK(code_of([&] { power(s3, 6, 1); }) == ErrorCode::kElementOutOfRange);
}

TEST_CASE("power agrees with iterated multiplication") {
  for (const auto& g : {cyclic(9), dihedral(6), alternating(4), dicyclic(3)}) {
    for (Element x = 0; x < g.order(); ++x) {
      Element acc = g.identity();
      for (int m = 0; m <= 2 * g.order(); ++m) {
        REQUIRE(power(g, x, m) == acc);
        acc = g.multiply(acc, x);
      }
      for (int m = 1; m <= 2 * g.order(); ++m) CHECK(power(g, x, m) == power(g, x, m % element_order(g, x)));
    }
  }
}

TEST_CASE("element_order") {
  CHECK(element_order(cyclic(8), 0) == 1);
  CHECK(element_order(cyclic(8), 2) == 4);
  // transpositions of S3 sit at indices 1, 2, 5
  const auto s3 = symmetric(3);
  for (Element t : {1, 2, 5}) CHECK(element_order(s3, t) == 2);
  CHECK(code_of([&] { element_order(s3, -1); }) == ErrorCode::kElementOutOfRange);
}

TEST_CASE("element orders divide the group order") {
  for (const auto& g : {symmetric(4), dihedral(7), direct_product(cyclic(3), cyclic(3)), dicyclic(3)}) {
    for (Element x = 0; x < g.order(); ++x) CHECK(g.order() % element_order(g, x) == 0);
  }
}

TEST_CASE("cyclic_subgroup") {
  const auto z6 = cyclic(6);
  CHECK(cyclic_subgroup(z6, 2) == std::vector<Element>{2, 4, 0});
  CHECK(cyclic_subgroup(z6, 0) == std::vector<Element>{0});
  auto all = cyclic_subgroup(cyclic(8), 3);
  std::sort(all.begin(), all.end());
  std::vector<Element> expected(8);
  std::iota(expected.begin(), expected.end(), 0);
  CHECK(all == expected);
  CHECK(static_cast<int>(cyclic_subgroup(dihedral(5), 1).size()) == element_order(dihedral(5), 1));
}

TEST_CASE("cyclic and p-group classification") {
  const auto z8 = cyclic(8);
  CHECK(is_cyclic_p_group(z8));
  CHECK(p_group_prime(z8) == 2);

  const auto z6 = cyclic(6);
  CHECK(is_cyclic(z6));
  CHECK_FALSE(is_p_group(z6));
  CHECK_FALSE(is_cyclic_p_group(z6));

  const auto q8 = quaternion();
  CHECK(p_group_prime(q8) == 2);
  CHECK_FALSE(is_cyclic(q8));

  CHECK(is_cyclic_p_group(cyclic(1)));
  CHECK(p_group_prime(cyclic(9)) == 3);
  CHECK(p_group_prime(cyclic(13)) == 13);

  for (int p : {2, 3, 5}) {
    for (int n = p; n <= 27; n *= p) CHECK(is_cyclic_p_group(cyclic(n)));
  }
  CHECK_FALSE(is_cyclic(direct_product(cyclic(2), cyclic(2))));
}

TEST_CASE("table text format round-trips") {
  for (const auto& g : {cyclic(1), quaternion(), alternating(4)}) {
    std::stringstream ss;
    write_table(ss, g);
    CHECK(read_table(ss) == g);
  }
  std::stringstream z2;
  write_table(z2, cyclic(2));
  CHECK(z2.str() == "2\n0 1\n1 0\n");
}

TEST_CASE("table reader rejects malformed input") {
  std::stringstream truncated("3\n0 1 2\n1 2");
  CHECK(code_of([&] { read_table(truncated); }) == ErrorCode::kNotClosed);
  std::stringstream range("2\n0 1\n1 5\n");
  CHECK(code_of([&] { read_table(range); }) == ErrorCode::kNotClosed);
  std::stringstream empty("");
  CHECK(code_of([&] { read_table(empty); }) == ErrorCode::kInvalidOrder);
}
