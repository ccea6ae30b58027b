#include "superschur/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace superschur {

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

Mono mono_from_exponents(const std::vector<int>& exps) {
  if (int(exps.size()) > kMaxVars) throw std::runtime_error("monomial: too many variables");
  Mono m = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > kMaxExp) throw std::runtime_error("monomial: exponent out of range");
    m |= Mono(exps[i]) << mono_shift(int(i) + 1);
  }
  return m;
}

std::vector<int> mono_exponents(Mono m, int nvars) {
  std::vector<int> e(nvars);
  for (int i = 1; i <= nvars; ++i) e[i - 1] = mono_exp(m, i);
  return e;
}

Mono mono_mul(Mono a, Mono b) {
  Mono sum = a + b;
  // A carry into bit 4k means nibble k-1 overflowed past 15.
  if ((a ^ b ^ sum) & 0x1111111111111110ULL) throw std::runtime_error("monomial: exponent overflow");
  return sum;
}

Mono mono_set(Mono m, int var, int e) {
  int sh = mono_shift(var);
  return (m & ~(Mono(0xF) << sh)) | (Mono(e) << sh);
}

int mono_degree(Mono m, int nvars) {
  int d = 0;
  for (int i = 1; i <= nvars; ++i) d += mono_exp(m, i);
  return d;
}

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVars) throw std::runtime_error("polynomial: bad variable count");
}

Polynomial Polynomial::constant(int nvars, const Rat& c) {
  Polynomial p(nvars);
  p.add_term(0, c);
  return p;
}

Polynomial Polynomial::monomial(int nvars, const std::vector<int>& exps, const Rat& c) {
  if (int(exps.size()) > nvars) throw std::runtime_error("polynomial: exponents exceed nvars");
  Polynomial p(nvars);
  p.add_term(mono_from_exponents(exps), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  Polynomial p(nvars);
  p.add_term(mono_set(0, i, 1), 1);
  return p;
}

void Polynomial::add_term(Mono m, const Rat& c) {
  if (superschur::is_zero(c)) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (superschur::is_zero(it->second)) terms_.erase(it);
  }
}

Rat Polynomial::coeff(Mono m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (nvars_ != o.nvars_) throw std::runtime_error("polynomial: mixed variable counts");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (nvars_ != o.nvars_) throw std::runtime_error("polynomial: mixed variable counts");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  r -= o;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw std::runtime_error("polynomial: mixed variable counts");
  Polynomial r(nvars_);
  r.terms_.reserve(terms_.size() * std::min<std::size_t>(o.terms_.size(), 4));
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial& Polynomial::operator*=(const Rat& c) {
  if (superschur::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator*(const Rat& c) const {
  Polynomial r = *this;
  r *= c;
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
  for (const auto& [m, c] : terms_) {
    auto it = o.terms_.find(m);
    if (it == o.terms_.end() || it->second != c) return false;
  }
  return true;
}

Polynomial Polynomial::kappa(int i) const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    int a = mono_exp(m, i), b = mono_exp(m, i + 1);
    r.terms_.emplace(mono_set(mono_set(m, i, b), i + 1, a), c);
  }
  return r;
}

Polynomial Polynomial::permute_vars(const std::vector<int>& perm) const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    Mono nm = 0;
    for (int i = 1; i <= nvars_; ++i) nm = mono_set(nm, perm[i - 1], mono_exp(m, i));
    r.add_term(nm, c);
  }
  return r;
}

Polynomial Polynomial::reverse_vars() const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    Mono nm = 0;
    for (int i = 1; i <= nvars_; ++i) nm = mono_set(nm, nvars_ + 1 - i, mono_exp(m, i));
    r.terms_.emplace(nm, c);
  }
  return r;
}

Polynomial Polynomial::set_var_zero(int i) const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_)
    if (mono_exp(m, i) == 0) r.terms_.emplace(m, c);
  return r;
}

Polynomial Polynomial::divide_linear(int i, int j) const {
  // Leading-term division by (x_i - x_j) in lex order (x_i dominates x_j
  // since i < j); the remainder must vanish.
  if (i >= j) throw std::runtime_error("divide_linear: need i < j");
  Polynomial rem = *this;
  Polynomial quot(nvars_);
  while (!rem.is_zero()) {
    Mono lead = rem.lex_max();
    int ei = mono_exp(lead, i);
    if (ei == 0) throw std::runtime_error("divide_linear: nonzero remainder");
    Rat c = rem.coeff(lead);
    Mono q = mono_set(lead, i, ei - 1);
    quot.add_term(q, c);
    rem.add_term(lead, -c);
    rem.add_term(mono_mul(q, mono_set(0, j, 1)), c);
  }
  return quot;
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, mono_degree(m, nvars_));
  return d;
}

Mono Polynomial::lex_max() const {
  if (terms_.empty()) throw std::runtime_error("lex_max of zero polynomial");
  Mono best = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (first || m > best) best = m;
    first = false;
  }
  return best;
}

std::vector<std::pair<Mono, Rat>> Polynomial::sorted_terms() const {
  std::vector<std::pair<Mono, Rat>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  return v;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : sorted_terms()) {
    if (!first) os << (sgn(c) >= 0 ? " + " : " - ");
    else if (sgn(c) < 0) os << "-";
    Rat ac = abs(c);
    bool unit = ac == 1 && m != 0;
    if (!unit) os << rat_to_string(ac);
    bool any = false;
    for (int i = 1; i <= nvars_; ++i) {
      int e = mono_exp(m, i);
      if (!e) continue;
      if (any || !unit) os << "*";
      os << "x" << i;
      if (e > 1) os << "^" << e;
      any = true;
    }
    first = false;
  }
  return os.str();
}

// --------------------------------------------------------------------------
// Divided differences, term by term.

Polynomial apply_partial(const Polynomial& p, int i) {
  if (i < 1 || i + 1 > p.nvars()) throw std::runtime_error("apply_partial: index out of range");
  Polynomial r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    int a = mono_exp(m, i), b = mono_exp(m, i + 1);
    if (a == b) continue;
    Mono base = mono_set(mono_set(m, i, 0), i + 1, 0);
    if (a > b) {
      for (int k = b; k <= a - 1; ++k)
        r.add_term(mono_set(mono_set(base, i, k), i + 1, a + b - 1 - k), c);
    } else {
      for (int k = a; k <= b - 1; ++k)
        r.add_term(mono_set(mono_set(base, i, k), i + 1, a + b - 1 - k), -c);
    }
  }
  return r;
}

Polynomial apply_pi(const Polynomial& p, int i) {
  if (i < 1 || i + 1 > p.nvars()) throw std::runtime_error("apply_pi: index out of range");
  // pi_i = partial_i . (multiplication by x_i): same sum with a raised.
  Polynomial r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    int a = mono_exp(m, i) + 1, b = mono_exp(m, i + 1);
    if (a == b) continue;
    Mono base = mono_set(mono_set(m, i, 0), i + 1, 0);
    if (a > b) {
      for (int k = b; k <= a - 1; ++k)
        r.add_term(mono_set(mono_set(base, i, k), i + 1, a + b - 1 - k), c);
    } else {
      for (int k = a; k <= b - 1; ++k)
        r.add_term(mono_set(mono_set(base, i, k), i + 1, a + b - 1 - k), -c);
    }
  }
  return r;
}

Polynomial apply_pihat(const Polynomial& p, int i) { return apply_pi(p, i) - p; }

// --------------------------------------------------------------------------

namespace {
void elem_rec(int nvars, int ell, int from, const std::vector<bool>& skip, Mono m,
              Polynomial& out) {
  if (ell == 0) {
    out.add_term(m, 1);
    return;
  }
  for (int i = from; i + ell - 1 <= nvars; ++i) {
    if (!skip.empty() && skip[i - 1]) continue;
    elem_rec(nvars, ell - 1, i + 1, skip, mono_set(m, i, 1), out);
  }
}

void homog_rec(int nvars, int ell, int from, const std::vector<bool>& skip, Mono m,
               Polynomial& out) {
  if (ell == 0) {
    out.add_term(m, 1);
    return;
  }
  if (from > nvars) return;
  if (!skip.empty() && skip[from - 1]) {
    homog_rec(nvars, ell, from + 1, skip, m, out);
    return;
  }
  for (int e = 0; e <= ell; ++e) {
    homog_rec(nvars, ell - e, from + 1, skip, mono_set(m, from, e), out);
  }
}
}  // namespace

Polynomial elementary(int nvars, int ell, const std::vector<bool>& skip) {
  Polynomial p(nvars);
  if (ell < 0) return p;
  elem_rec(nvars, ell, 1, skip, 0, p);
  return p;
}

Polynomial homogeneous(int nvars, int ell, const std::vector<bool>& skip) {
  Polynomial p(nvars);
  if (ell < 0) return p;
  homog_rec(nvars, ell, 1, skip, 0, p);
  return p;
}

namespace {
// Enumerate semistandard tableaux row by row; weight vector -> monomial.
void ssyt_rec(const Partition& la, int nvars, int row, std::vector<std::vector<int>>& rows,
              Polynomial& out) {
  if (row > num_parts(la)) {
    std::vector<int> w(nvars, 0);
    for (const auto& r : rows)
      for (int v : r) w[v - 1] += 1;
    out.add_term(mono_from_exponents(w), 1);
    return;
  }
  int len = la[row - 1];
  std::vector<int> cur(len);
  std::function<void(int)> fill = [&](int col) {
    if (col > len) {
      rows.push_back(cur);
      ssyt_rec(la, nvars, row + 1, rows, out);
      rows.pop_back();
      return;
    }
    int lo = col <= 1 ? 1 : cur[col - 2];                      // weakly increasing in rows
    if (row > 1) lo = std::max(lo, rows[row - 2][col - 1] + 1);  // strictly increasing in cols
    for (int v = lo; v <= nvars; ++v) {
      cur[col - 1] = v;
      fill(col + 1);
    }
  };
  fill(1);
}
}  // namespace

Polynomial schur_classical(int nvars, const Partition& la) {
  Polynomial p(nvars);
  if (num_parts(la) > nvars) return p;
  std::vector<std::vector<int>> rows;
  ssyt_rec(canonical(la), nvars, 1, rows, p);
  return p;
}

Polynomial vandermonde(int nvars, int m) {
  Polynomial p = Polynomial::constant(nvars, 1);
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      p = p * (Polynomial::variable(nvars, i) - Polynomial::variable(nvars, j));
  return p;
}

bool is_symmetric_in_block(const Polynomial& p, int lo, int hi) {
  for (int i = lo; i < hi; ++i)
    if (p.kappa(i) != p) return false;
  return true;
}

bool is_antisymmetric_in_block(const Polynomial& p, int lo, int hi) {
  for (int i = lo; i < hi; ++i)
    if (p.kappa(i) != -p) return false;
  return true;
}

bool is_bisymmetric(const Polynomial& p, int m) {
  return is_symmetric_in_block(p, 1, m) && is_symmetric_in_block(p, m + 1, p.nvars());
}

}  // namespace superschur
