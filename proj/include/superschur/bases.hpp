#pragma once

#include <map>
#include <string>
#include <vector>

#include "superschur/superpartition.hpp"
#include "superschur/superpoly.hpp"

namespace superschur {

enum class Basis { m, p, e, h, s, sbar, sstar, sbarstar };

std::string basis_name(Basis b);
Basis parse_basis(const std::string& name);

/// Exact linear combination of basis elements indexed by superpartitions.
/// Mixed degrees are allowed; zero coefficients are never stored.
struct SymSuperFunc {
  Basis basis = Basis::m;
  std::map<SuperPartition, Rat, SpBefore> coeffs;

  SymSuperFunc() = default;
  explicit SymSuperFunc(Basis b) : basis(b) {}
  static SymSuperFunc unit(Basis b, const SuperPartition& sp, const Rat& c = 1);

  bool is_zero() const { return coeffs.empty(); }
  void add(const SuperPartition& sp, const Rat& c);
  Rat coeff(const SuperPartition& sp) const;

  SymSuperFunc& operator+=(const SymSuperFunc& o);  // same basis
  SymSuperFunc& operator-=(const SymSuperFunc& o);
  SymSuperFunc& operator*=(const Rat& c);
  bool operator==(const SymSuperFunc& o) const { return basis == o.basis && coeffs == o.coeffs; }
  bool operator!=(const SymSuperFunc& o) const { return !(*this == o); }

  /// Largest total degree (n|m) pair needed to realize every term stably.
  int max_vars_needed() const;
  std::string to_string() const;
};

Rat z_weight(const Partition& la);

/// Concrete polynomial of one basis element in N variables; b must be one
/// of m, p, e, h.  N >= n+m gives the stable expansion.
SuperPolynomial realize(const SuperPartition& sp, Basis b, int nvars);
/// Realize a full combination (any basis; Schur families go through their
/// monomial expansions).
SuperPolynomial realize(const SymSuperFunc& f, int nvars);

/// Inverse of realize on diagonal invariants; throws on non-invariant
/// input.
SymSuperFunc to_monomial(const SuperPolynomial& p);

/// Exact change of basis.  Schur-family targets use the unitriangular
/// monomial expansions from the Schur-family tables.
SymSuperFunc convert(const SymSuperFunc& f, Basis target);

/// omega involution (result in the monomial basis).
SymSuperFunc omega(const SymSuperFunc& f);

Rat scalar_product(const SymSuperFunc& f, const SymSuperFunc& g);

/// Bisymmetric representative of m_Lambda in N variables:
/// s_{Lambda^a - delta}(x_1..x_m) * m_{Lambda^s}(x_{m+1}..x_N).
Polynomial rep_of_monomial(const SuperPartition& sp, int nvars);
/// Expands a bisymmetric representative of fermionic degree m over the
/// rep_of_monomial images (greedy on the lex-leading term); throws if f is
/// not in their span.
SymSuperFunc rep_to_monomial(const Polynomial& f, int m);

/// Memoized realization tables; disabling the cache must not change any
/// result (used by tests).
void set_realize_cache_enabled(bool enabled);
void clear_realize_cache();

}  // namespace superschur
