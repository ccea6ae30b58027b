#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "superschur/superpartition.hpp"

using namespace superschur;

namespace {
SuperPartition sp(const std::string& text) { return parse_superpartition(text); }
}  // namespace

TEST_CASE("star and circled") {
  CHECK(sp("3,1,0;2,1").star() == Partition{3, 2, 1, 1});
  CHECK(sp("3,1,0;2,1").circled() == Partition{4, 2, 2, 1, 1});
  CHECK(sp(";3,2,2").star() == Partition{3, 2, 2});
  CHECK(sp(";3,2,2").circled() == Partition{3, 2, 2});
  CHECK(sp("4,1;5,4").star() == Partition{5, 4, 4, 1});
  CHECK(sp("4,1;5,4").circled() == Partition{5, 5, 4, 2});
}

TEST_CASE("from_star_circled") {
  CHECK(from_star_circled({3, 2, 1, 1}, {4, 2, 2, 1, 1}) == sp("3,1,0;2,1"));
  CHECK(from_star_circled({2, 1}, {2, 1}) == sp(";2,1"));
  CHECK(from_star_circled({2}, {2, 1}) == sp("0;2"));
  CHECK_THROWS_AS(from_star_circled({1}, {3}), std::invalid_argument);        // two in a row
  CHECK_THROWS_AS(from_star_circled({1}, {2, 2}), std::invalid_argument);     // two in a column
  CHECK_THROWS_AS(from_star_circled({2, 1}, {1, 1}), std::invalid_argument);  // not contained
}

TEST_CASE("conjugate") {
  CHECK(sp("3,1,0;2,1").conjugate() == sp("4,2,0;1"));
  CHECK(sp(";2,1").conjugate() == sp(";2,1"));
  CHECK(sp("0;").conjugate() == sp("0;"));
  for (int n = 0; n <= 8; ++n)
    for (int m = 0; m <= 3; ++m)
      for (const SuperPartition& x : superpartitions_of(n, m)) {
        CHECK(x.conjugate().conjugate() == x);
        CHECK(x.conjugate().fermionic_degree() == m);
      }
}

TEST_CASE("round trip star/circled") {
  for (int n = 0; n <= 8; ++n)
    for (int m = 0; m <= 3; ++m)
      for (const SuperPartition& x : superpartitions_of(n, m)) {
        CHECK(from_star_circled(x.star(), x.circled()) == x);
        auto rows = x.circle_rows();
        CHECK(int(rows.size()) == m);
        for (int r : rows) CHECK(part(x.circled(), r) == part(x.star(), r) + 1);
      }
}

TEST_CASE("dominance") {
  CHECK(dominance_leq(sp("3,1,0;2,1"), sp("3,1,0;2,1")));
  CHECK(dominance_leq(sp("1,0;1"), sp("2,0;")));
  CHECK_FALSE(dominance_leq(sp(";2,1"), sp(";1,1,1")));
  CHECK(dominance_leq(sp(";1,1,1"), sp(";2,1")));
  CHECK_FALSE(dominance_leq(sp("1;"), sp(";1")));  // different fermionic degree

  // partial order on each fixed degree
  for (int n = 0; n <= 6; ++n)
    for (int m = 0; m <= 2; ++m) {
      auto all = superpartitions_of(n, m);
      for (const auto& a : all)
        for (const auto& b : all) {
          if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
          for (const auto& c : all)
            if (dominance_leq(a, b) && dominance_leq(b, c)) CHECK(dominance_leq(a, c));
        }
      // the deterministic order refines dominance
      for (const auto& a : all)
        for (const auto& b : all)
          if (a != b && dominance_leq(a, b)) CHECK(order_cmp(b, a) < 0);
    }
}

TEST_CASE("strips") {
  CHECK(strips({1}, 1, StripKind::horizontal) ==
        std::vector<Partition>{{2}, {1, 1}});
  CHECK(strips({2, 1}, 2, StripKind::vertical) ==
        std::vector<Partition>{{3, 2}, {3, 1, 1}, {2, 2, 1}, {2, 1, 1, 1}});
  CHECK(strips({3, 1}, 0, StripKind::horizontal) == std::vector<Partition>{{3, 1}});
  CHECK(strips({3, 1}, 0, StripKind::vertical) == std::vector<Partition>{{3, 1}});

  // brute-force cross-check against the definition via all partitions
  for (int ell = 1; ell <= 3; ++ell)
    for (const Partition& la : partitions_of(4))
      for (StripKind k : {StripKind::horizontal, StripKind::vertical}) {
        std::set<Partition> expect;
        for (const Partition& mu : partitions_of(weight(la) + ell))
          if (is_strip(mu, la, k)) expect.insert(mu);
        auto got = strips(la, ell, k);
        CHECK(std::set<Partition>(got.begin(), got.end()) == expect);
        CHECK(got.size() == expect.size());  // no duplicates
        for (std::size_t i = 0; i + 1 < got.size(); ++i) CHECK(got[i] > got[i + 1]);
      }
}

TEST_CASE("circle rows") {
  CHECK(sp("3,1,0;2,1").circle_rows() == std::vector<int>{1, 3, 5});
  CHECK(sp(";4,2").circle_rows().empty());
  CHECK(sp("4,1;5,4").circle_rows() == std::vector<int>{2, 4});
}

TEST_CASE("text and validation") {
  CHECK(sp(";2").to_string() == ";2");
  CHECK(sp("3,1;").to_string() == "3,1;");
  CHECK(parse_superpartition(";") == SuperPartition({}, {}));
  CHECK_THROWS_AS(parse_superpartition("1,1;2"), std::invalid_argument);  // a not strict
  CHECK_THROWS_AS(parse_superpartition("2;1,3"), std::invalid_argument);  // s not sorted
  CHECK_THROWS_AS(parse_superpartition("2,1"), std::invalid_argument);    // no semicolon
  CHECK_THROWS_AS(parse_superpartition("x;1"), std::invalid_argument);
}
