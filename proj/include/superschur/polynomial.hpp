#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "superschur/partition.hpp"
#include "superschur/util.hpp"

namespace superschur {

/// Exact rational coefficient.  No floating point anywhere in the core.
using Rat = mpq_class;

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }
std::string rat_to_string(const Rat& r);

// Monomials are packed into a uint64: variable i (1-based, at most 16
// variables) occupies the 4-bit nibble starting at bit 4*(16-i), so plain
// integer comparison is lexicographic with x_1 most significant.  Exponents
// are capped at 15; arithmetic checks for overflow and throws.
constexpr int kMaxVars = 16;
constexpr int kMaxExp = 15;

using Mono = std::uint64_t;

inline int mono_shift(int var) { return 4 * (kMaxVars - var); }
inline int mono_exp(Mono m, int var) { return int((m >> mono_shift(var)) & 0xF); }

Mono mono_from_exponents(const std::vector<int>& exps);
std::vector<int> mono_exponents(Mono m, int nvars);
Mono mono_mul(Mono a, Mono b);  // throws on exponent overflow
Mono mono_set(Mono m, int var, int e);
int mono_degree(Mono m, int nvars);

/// Sparse polynomial over Q in commuting variables x_1..x_N.
class Polynomial {
 public:
  explicit Polynomial(int nvars = 0);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  const std::unordered_map<Mono, Rat>& terms() const { return terms_; }

  static Polynomial zero(int nvars) { return Polynomial(nvars); }
  static Polynomial constant(int nvars, const Rat& c);
  static Polynomial monomial(int nvars, const std::vector<int>& exps, const Rat& c = 1);
  static Polynomial variable(int nvars, int i);

  void add_term(Mono m, const Rat& c);
  Rat coeff(Mono m) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial& operator*=(const Rat& c);
  Polynomial operator*(const Rat& c) const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Swap variables i and i+1 (1-based).
  Polynomial kappa(int i) const;
  /// Apply a permutation of the variables: variable i goes to perm[i-1].
  Polynomial permute_vars(const std::vector<int>& perm) const;
  /// Substitution x_i -> x_{N+1-i}.
  Polynomial reverse_vars() const;
  /// Set variable i to zero.
  Polynomial set_var_zero(int i) const;

  /// Exact division by (x_i - x_j), i < j; throws on nonzero remainder.
  Polynomial divide_linear(int i, int j) const;

  int total_degree() const;
  Mono lex_max() const;  // requires nonzero

  /// Deterministic (lex-descending) list of terms.
  std::vector<std::pair<Mono, Rat>> sorted_terms() const;
  std::string to_string() const;

 private:
  int nvars_;
  std::unordered_map<Mono, Rat> terms_;
};

/// Divided difference (1 - kappa_i)/(x_i - x_{i+1}).
Polynomial apply_partial(const Polynomial& p, int i);
/// Isobaric divided difference (x_i - x_{i+1} kappa_i)/(x_i - x_{i+1}).
Polynomial apply_pi(const Polynomial& p, int i);
/// pihat_i = pi_i - 1.
Polynomial apply_pihat(const Polynomial& p, int i);

/// Elementary symmetric e_ell(x_1..x_N), optionally skipping variables i
/// with skip[i-1] true.  h_ell is the complete homogeneous analogue.
Polynomial elementary(int nvars, int ell, const std::vector<bool>& skip = {});
Polynomial homogeneous(int nvars, int ell, const std::vector<bool>& skip = {});
/// Classical Schur polynomial s_la(x_1..x_N) (0 if la has more than N rows).
Polynomial schur_classical(int nvars, const Partition& la);
/// Vandermonde prod_{1<=i<j<=m} (x_i - x_j) in N variables.
Polynomial vandermonde(int nvars, int m);

bool is_symmetric_in_block(const Polynomial& p, int lo, int hi);
bool is_antisymmetric_in_block(const Polynomial& p, int lo, int hi);
/// Symmetric in x_1..x_m and in x_{m+1}..x_N.
bool is_bisymmetric(const Polynomial& p, int m);

}  // namespace superschur

namespace std {
// nothing: Mono is already a uint64_t hashed by default
}
