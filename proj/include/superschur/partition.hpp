#pragma once

#include <string>
#include <vector>

namespace superschur {

/// A partition is a weakly decreasing vector of nonnegative integers.
/// Canonical form carries no trailing zeros; rows and columns are 1-based.
using Partition = std::vector<int>;

bool is_partition(const std::vector<int>& p);
Partition canonical(Partition p);

int weight(const Partition& p);
int num_parts(const Partition& p);

/// 1-based part access; rows past the end are 0.
inline int part(const Partition& p, int i) {
  return (i >= 1 && i <= int(p.size())) ? p[i - 1] : 0;
}

Partition conjugate_partition(const Partition& p);
bool contains(const Partition& outer, const Partition& inner);

/// Dominance order: |mu| = |la| and all prefix sums of mu are <= those of la.
bool dominance_leq(const Partition& mu, const Partition& la);

enum class StripKind { horizontal, vertical };

/// True iff inner <= outer and outer/inner has no two cells in the same
/// column (horizontal) or row (vertical).
bool is_strip(const Partition& outer, const Partition& inner, StripKind kind);

/// All mu containing la with |mu/la| = ell and mu/la a strip of the given
/// kind, in lexicographically decreasing order of mu.
std::vector<Partition> strips(const Partition& la, int ell, StripKind kind);

/// All partitions of n, lexicographically decreasing.
std::vector<Partition> partitions_of(int n);

std::string partition_to_string(const Partition& p);

}  // namespace superschur
