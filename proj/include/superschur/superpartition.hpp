#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "superschur/partition.hpp"

namespace superschur {

/// A superpartition (Lambda^a; Lambda^s): `a` strictly decreasing with m
/// entries (the last one may be 0), `s` an ordinary partition without
/// trailing zeros.  Equivalently the pair (star, circled) where
/// circled/star is an m-rook strip; circles are drawn at the cells of
/// circled/star.
struct SuperPartition {
  std::vector<int> a;
  std::vector<int> s;

  SuperPartition() = default;
  SuperPartition(std::vector<int> a_, std::vector<int> s_);

  int fermionic_degree() const { return int(a.size()); }   // m
  int total_degree() const;                                // n = |star|
  int rows() const;                                        // rows of circled

  Partition star() const;
  Partition circled() const;
  /// Rows of the circles, 1-based, strictly increasing.
  std::vector<int> circle_rows() const;
  /// (row, column) of each circle, top to bottom.
  std::vector<std::pair<int, int>> circle_cells() const;

  SuperPartition conjugate() const;

  bool operator==(const SuperPartition& o) const { return a == o.a && s == o.s; }
  bool operator!=(const SuperPartition& o) const { return !(*this == o); }

  std::string to_string() const;  // "a1,a2,...;s1,s2,..."
};

bool is_valid_superpartition(const std::vector<int>& a, const std::vector<int>& s);

/// Inverse of (star, circled); throws std::invalid_argument when the skew
/// circled/star is not an m-rook strip or the inputs are not partitions.
SuperPartition from_star_circled(const Partition& star, const Partition& circled);

/// Dominance: equal degrees (n|m), star <= star and circled <= circled.
bool dominance_leq(const SuperPartition& omega, const SuperPartition& lambda);

/// Deterministic total order refining dominance: sorted by (n, m), then
/// dominant elements first (lex-decreasing on circled, then star).
/// Returns <0, 0, >0 like strcmp; "before" means closer to the front.
int order_cmp(const SuperPartition& x, const SuperPartition& y);

struct SpBefore {
  bool operator()(const SuperPartition& x, const SuperPartition& y) const {
    return order_cmp(x, y) < 0;
  }
};

/// All superpartitions of degree (n|m) in the deterministic order.
std::vector<SuperPartition> superpartitions_of(int n, int m);

/// Parses the text form "a1,a2,...;s1,s2,..." (either side may be empty,
/// the semicolon is mandatory).  Throws std::invalid_argument on bad input.
SuperPartition parse_superpartition(const std::string& text);

std::ostream& operator<<(std::ostream& os, const SuperPartition& sp);

}  // namespace superschur
