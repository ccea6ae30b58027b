#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "superschur/bases.hpp"
#include "superschur/pieri.hpp"
#include "superschur/superpartition.hpp"

namespace superschur::verify {

struct Report {
  std::string suite;
  int checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Monomial expansion of (family element La) * generator, computed by
/// polynomial arithmetic on bisymmetric representatives — the brute-force
/// side of the Pieri oracle test.
SymSuperFunc product_by_polynomials(Basis family, const SuperPartition& la, Generator g,
                                    int ell);

/// Compares pieri(kind, La, ell) against the polynomial route for one case.
bool pieri_case_matches(PieriKind kind, const SuperPartition& la, int ell, std::string* diag);

struct OracleBounds {
  int max_n = 4;
  int max_m = 2;
  int max_ell = 3;
  unsigned jobs = 0;  // 0 = hardware default
};

Report pieri_oracle(const OracleBounds& b);
Report dualities(int max_n, int max_m);
Report cauchy(int nx, int ny, int max_degree);
Report appendix(std::uint64_t seed, int instances);
Report tableaux_suite(int max_n, int max_m);

}  // namespace superschur::verify
