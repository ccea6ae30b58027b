#pragma once

#include <map>
#include <string>
#include <vector>

#include "superschur/bases.hpp"
#include "superschur/pieri.hpp"
#include "superschur/superpartition.hpp"

namespace superschur {

/// Monomial expansion of one Schur-family element (basis must be one of s,
/// sbar, sstar, sbarstar).  s and sbar are built from the Pieri-driven
/// Kostka matrices; for total degree <= schur_self_check_max_degree() the
/// result is also recomputed through the divided-difference construction
/// and the two must agree.  sstar and sbarstar are obtained by inverting
/// the Kostka matrices into the h basis.
SymSuperFunc schur_family_in_monomials(const SuperPartition& sp, Basis family);

/// Convenience wrapper returning the expansion in the monomial basis.
SymSuperFunc schur(const SuperPartition& sp, Basis family);

int schur_self_check_max_degree();
void set_schur_self_check_max_degree(int n);

enum class KostkaKind { K, Kbar };

/// h_La = sum_Om K_{Om,La} sbarstar_Om   (kind K)
/// h_La = sum_Om Kbar_{Om,La} sstar_Om   (kind Kbar)
struct KostkaMatrix {
  int n = 0, m = 0;
  KostkaKind kind = KostkaKind::K;
  std::vector<SuperPartition> order;  // deterministic, dominant first
  std::vector<std::vector<Rat>> entry;

  Rat at(const SuperPartition& omega, const SuperPartition& lambda) const;
  bool unitriangular_nonnegative(std::string* diag = nullptr) const;
};

const KostkaMatrix& kostka(int n, int m, KostkaKind which);

/// phi homomorphism: phi(h_r) = e_r, phi(ptilde_r) = etilde_r.  Result in
/// the monomial basis.
SymSuperFunc phi(const SymSuperFunc& f);

/// Littlewood-Richardson expansion of the product
/// family_Gamma * family_Omega (family is s or sbar).
std::map<SuperPartition, Rat, SpBefore> lr(const SuperPartition& gamma,
                                           const SuperPartition& omega, Basis family);

/// Skew Schur function via the LR coefficients; result in the family's own
/// basis.  Empty when no term survives.
SymSuperFunc skew(const SuperPartition& lambda, const SuperPartition& omega, Basis family);

/// Verifies the Cauchy kernel expansion on a doubled alphabet through the
/// given total degree; the fermionic degree is capped at min(nx, ny).
bool cauchy_check(int max_degree, int nx, int ny, std::string* diag = nullptr);

}  // namespace superschur
