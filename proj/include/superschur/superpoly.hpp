#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "superschur/polynomial.hpp"

namespace superschur {

/// A monomial in commuting x's and anticommuting theta's, normal-ordered:
/// the theta set is a bitmask (bit i-1 = theta_i present), always read in
/// increasing index order.
struct SMono {
  Mono x = 0;
  std::uint32_t th = 0;
  bool operator==(const SMono& o) const { return x == o.x && th == o.th; }
};

struct SMonoHash {
  std::size_t operator()(const SMono& m) const { return hash_combine(m.x, m.th); }
};

/// Sorts theta indices into normal order; returns (sorted, sign) or nullopt
/// when an index repeats (theta_i^2 = 0).
std::optional<std::pair<std::vector<int>, int>> normal_order(std::vector<int> indices);

/// Merge two normal-ordered theta masks; nullopt if they intersect,
/// otherwise the union with the anticommutation sign.
std::optional<std::pair<std::uint32_t, int>> theta_merge(std::uint32_t a, std::uint32_t b);

enum class ActMode { diagonal, x_only };

/// Exact sparse polynomial in x_1..x_N and theta_1..theta_N, canonical:
/// normal-ordered monomials, no zero coefficients.
class SuperPolynomial {
 public:
  explicit SuperPolynomial(int nvars = 0);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  const std::unordered_map<SMono, Rat, SMonoHash>& terms() const { return terms_; }

  static SuperPolynomial constant(int nvars, const Rat& c);
  static SuperPolynomial from_polynomial(const Polynomial& p);
  static SuperPolynomial theta(int nvars, int i);

  void add_term(SMono m, const Rat& c);

  SuperPolynomial& operator+=(const SuperPolynomial& o);
  SuperPolynomial& operator-=(const SuperPolynomial& o);
  SuperPolynomial operator+(const SuperPolynomial& o) const;
  SuperPolynomial operator-(const SuperPolynomial& o) const;
  SuperPolynomial operator*(const SuperPolynomial& o) const;
  SuperPolynomial operator-() const;
  SuperPolynomial& operator*=(const Rat& c);
  bool operator==(const SuperPolynomial& o) const;
  bool operator!=(const SuperPolynomial& o) const { return !(*this == o); }

  /// K_sigma (diagonal) or kappa_sigma (x_only): variable i -> perm[i-1].
  SuperPolynomial act(const std::vector<int>& perm, ActMode mode) const;

  /// Fermionic degree when homogeneous in the thetas; -1 if mixed or zero.
  int theta_degree() const;

  std::string to_string() const;

 private:
  int nvars_;
  std::unordered_map<SMono, Rat, SMonoHash> terms_;
};

bool is_diagonal_invariant(const SuperPolynomial& p);

/// Coefficient of theta_1...theta_m as an ordinary polynomial.
Polynomial theta_coefficient(const SuperPolynomial& p, int m);

/// Exact quotient f / Delta_m; throws when f is not divisible (which flags
/// an upstream bug).
Polynomial vandermonde_divide(const Polynomial& f, int m);

/// Inverse of the bisymmetric identification: f must be symmetric in
/// x_1..x_m and in x_{m+1}..x_N; returns sum over minimal coset
/// representatives of K_sigma theta_1..theta_m Delta_m f.
SuperPolynomial reconstruct(const Polynomial& f, int m, int nvars);

/// d = theta_1 d/dx_1 + ... + theta_N d/dx_N.
SuperPolynomial d_operator(const SuperPolynomial& p);

}  // namespace superschur
