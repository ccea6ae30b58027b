#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "superschur/polynomial.hpp"
#include "superschur/superpartition.hpp"
#include "superschur/superpoly.hpp"

namespace superschur {

/// A composition: nonnegative exponent vector of length N.
using Composition = std::vector<int>;

/// One atom of an operator word: a divided difference or multiplication by
/// a fixed polynomial.  Words act on the polynomial to their right, so the
/// last atom is applied first.
struct Op {
  enum Kind { partial, pi, pihat, mult } kind;
  int index = 0;
  Polynomial factor;

  static Op d(int i) { return {partial, i, Polynomial()}; }
  static Op p(int i) { return {pi, i, Polynomial()}; }
  static Op ph(int i) { return {pihat, i, Polynomial()}; }
  static Op times(Polynomial f) { return {mult, 0, std::move(f)}; }
};

using OperatorWord = std::vector<Op>;

Polynomial apply_word(const OperatorWord& word, Polynomial p);

/// Reduced word (as operator indices) for the longest element of the
/// symmetric group on positions lo..hi; empty when hi <= lo.
std::vector<int> longest_word(int lo, int hi);

/// pi_{(b,a)} = pi_b pi_{b-1} ... pi_a (identity if b < a), applied to p.
Polynomial apply_pi_desc(Polynomial p, int b, int a);
/// pi_{[a,b]} = pi_a pi_{a+1} ... pi_b (identity if a > b), applied to p.
Polynomial apply_pi_asc(Polynomial p, int a, int b);
/// pihat_{[a,b]} = pihat_a ... pihat_b (identity if a > b), applied to p.
Polynomial apply_pihat_asc(Polynomial p, int a, int b);
/// Longest-element operators on a variable block.
Polynomial apply_partial_longest(Polynomial p, int lo, int hi);
Polynomial apply_pi_longest(Polynomial p, int lo, int hi);
Polynomial apply_pihat_longest(Polynomial p, int lo, int hi);

/// Key polynomial K_eta and adjoint Key polynomial Khat_eta in
/// eta.size() variables.
Polynomial key(const Composition& eta);
Polynomial key_hat(const Composition& eta);

/// R_{N,[alpha...]} = pi_{w_{N-m}} pi_{(N-m,a_1)} ... pi_{(N-1,a_m)}.
Polynomial apply_R(int nvars, const std::vector<int>& alphas, Polynomial p);
/// P_{N,[alpha...]} = d_{w_m} pi_{w_{m^c}} pihat_{w_m}
///                    pihat_{[m,a_m-1]} ... pihat_{[1,a_1-1]}.
Polynomial apply_P(int nvars, const std::vector<int>& alphas, Polynomial p);

/// Composition (Lambda^a reversed, Lambda^s) padded to length N.
Composition composition_a_rev_s(const SuperPartition& sp, int nvars);
/// Composition (Lambda^s reversed and padded to N-m, Lambda^a).
Composition composition_s_rev_a(const SuperPartition& sp, int nvars);

/// Bisymmetric representative of s_Lambda in N variables:
/// (-1)^C(m,2) d_{w_m} pi_{w_{m^c}} Khat_{(La^a)^R,La^s}.
Polynomial schur_rep(const SuperPartition& sp, int nvars);
/// Representative of sbar_Lambda in the reversed alphabet y_i = x_{N+1-i}
/// (operators act on y); sbar_rep converts back to x coordinates.
Polynomial sbar_rep_y(const SuperPartition& sp, int nvars);
Polynomial sbar_rep(const SuperPartition& sp, int nvars);

/// Full superpolynomials via the identification.  N must cover the rows of
/// circled(Lambda); N >= n+m gives a stable monomial expansion.
SuperPolynomial schur_oracle(const SuperPartition& sp, int nvars);
SuperPolynomial sbar_oracle(const SuperPartition& sp, int nvars);

int min_oracle_vars(const SuperPartition& sp);

/// Identity ids accepted by check_identity.
std::vector<std::string> identity_names();

/// Checks one named operator identity on `instances` random instances drawn
/// from the given seed (N <= 6, degree <= 6, m <= 3).  On failure *diag
/// receives a description of the first failing instance.
bool check_identity(const std::string& name, std::uint64_t seed, int instances,
                    std::string* diag = nullptr);

}  // namespace superschur
