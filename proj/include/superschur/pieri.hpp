#pragma once

#include <string>
#include <vector>

#include "superschur/bases.hpp"
#include "superschur/superpartition.hpp"

namespace superschur {

/// One output term of a Pieri rule.
struct SignedTerm {
  SuperPartition omega;
  int sign = 1;  // +1 or -1
  bool operator==(const SignedTerm& o) const { return sign == o.sign && omega == o.omega; }
};

/// The ten rule families: the left factor's basis and the generator it is
/// multiplied by (on the right).
enum class PieriKind {
  sstar_h,
  sstar_htilde,
  sbar_e,
  sbar_etilde,
  sbarstar_h,
  sbarstar_htilde,
  s_e,
  s_etilde,
  s_h,
  s_ptilde,
};

std::string pieri_kind_name(PieriKind k);
PieriKind parse_pieri_kind(const std::string& name);
std::vector<PieriKind> all_pieri_kinds();

/// True for the kinds whose generator carries fermionic degree one
/// (htilde, etilde, ptilde); these raise m by one and admit ell = 0.
bool pieri_kind_fermionic(PieriKind k);

/// The combinatorial Pieri expansion, multiplicity-free, sorted with
/// dominant terms first.
std::vector<SignedTerm> pieri(PieriKind kind, const SuperPartition& la, int ell);

enum class Generator { h, htilde, e, etilde, ptilde };

std::string generator_name(Generator g);

/// Linear extension of the Pieri rules: f must be expressed in a Schur
/// family basis compatible with the generator; the generator multiplies on
/// the right.
SymSuperFunc multiply_by_generator(const SymSuperFunc& f, Generator g, int ell);

struct IdentityCheck {
  std::string name;
  bool passed;
  std::string detail;
};

/// Verifies the closed product identities (products of fermionic
/// generators collapsing to a single Schur-family element) for all
/// strictly-decreasing Lambda^a with |Lambda^a| <= max_weight and
/// m <= max_m, both combinatorially and in the monomial basis.
std::vector<IdentityCheck> product_identities(int max_weight = 5, int max_m = 3);

}  // namespace superschur
