#include "superschur/bases.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

#include "superschur/keyops.hpp"

namespace superschur {

// Defined in schur.cpp; bases only needs the monomial expansions of the
// Schur families for conversion targets.
SymSuperFunc schur_family_in_monomials(const SuperPartition& sp, Basis family);

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::m: return "m";
    case Basis::p: return "p";
    case Basis::e: return "e";
    case Basis::h: return "h";
    case Basis::s: return "s";
    case Basis::sbar: return "sbar";
    case Basis::sstar: return "sstar";
    case Basis::sbarstar: return "sbarstar";
  }
  return "?";
}

Basis parse_basis(const std::string& name) {
  for (Basis b : {Basis::m, Basis::p, Basis::e, Basis::h, Basis::s, Basis::sbar, Basis::sstar,
                  Basis::sbarstar})
    if (basis_name(b) == name) return b;
  throw std::invalid_argument("unknown basis: " + name);
}

SymSuperFunc SymSuperFunc::unit(Basis b, const SuperPartition& sp, const Rat& c) {
  SymSuperFunc f(b);
  f.add(sp, c);
  return f;
}

void SymSuperFunc::add(const SuperPartition& sp, const Rat& c) {
  if (superschur::is_zero(c)) return;
  auto it = coeffs.find(sp);
  if (it == coeffs.end()) {
    coeffs.emplace(sp, c);
  } else {
    it->second += c;
    if (superschur::is_zero(it->second)) coeffs.erase(it);
  }
}

Rat SymSuperFunc::coeff(const SuperPartition& sp) const {
  auto it = coeffs.find(sp);
  return it == coeffs.end() ? Rat(0) : it->second;
}

SymSuperFunc& SymSuperFunc::operator+=(const SymSuperFunc& o) {
  if (basis != o.basis) throw std::runtime_error("SymSuperFunc: mixed bases");
  for (const auto& [sp, c] : o.coeffs) add(sp, c);
  return *this;
}

SymSuperFunc& SymSuperFunc::operator-=(const SymSuperFunc& o) {
  if (basis != o.basis) throw std::runtime_error("SymSuperFunc: mixed bases");
  for (const auto& [sp, c] : o.coeffs) add(sp, -c);
  return *this;
}

SymSuperFunc& SymSuperFunc::operator*=(const Rat& c) {
  if (superschur::is_zero(c)) {
    coeffs.clear();
    return *this;
  }
  for (auto& [sp, v] : coeffs) v *= c;
  return *this;
}

int SymSuperFunc::max_vars_needed() const {
  int best = 1;
  for (const auto& [sp, c] : coeffs)
    best = std::max(best, sp.total_degree() + sp.fermionic_degree());
  return best;
}

std::string SymSuperFunc::to_string() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [sp, c] : coeffs) {
    if (!first) os << (sgn(c) >= 0 ? " + " : " - ");
    else if (sgn(c) < 0) os << "-";
    Rat ac = abs(c);
    if (ac != 1) os << rat_to_string(ac) << "*";
    os << basis_name(basis) << "(" << sp.to_string() << ")";
    first = false;
  }
  return os.str();
}

Rat z_weight(const Partition& la) {
  Rat z = 1;
  int run = 1;
  for (std::size_t i = 0; i < la.size(); ++i) {
    if (i + 1 < la.size() && la[i + 1] == la[i]) {
      ++run;
      continue;
    }
    for (int k = 1; k <= run; ++k) z *= Rat(la[i]) * k;
    run = 1;
  }
  return z;
}

// --------------------------------------------------------------------------
// Realizations.

namespace {

// m_Lambda: distinct assignments of the fermionic parts to ordered
// positions and of the bosonic multiset to the remaining positions; the
// sign is the inversion parity of the theta word.
SuperPolynomial realize_monomial(const SuperPartition& sp, int nvars) {
  SuperPolynomial out(nvars);
  int m = sp.fermionic_degree();
  if (m + num_parts(sp.s) > nvars) return out;  // vanishes: not enough variables
  std::vector<int> positions;                   // positions[i] holds part a_i
  std::vector<bool> used(nvars + 1, false);
  // Bosonic multiset (value -> count) padded with zeros for all free slots.
  std::vector<std::pair<int, int>> vals;
  for (int v : sp.s) {
    if (!vals.empty() && vals.back().first == v)
      vals.back().second++;
    else
      vals.emplace_back(v, 1);
  }
  if (nvars - m > int(sp.s.size())) vals.emplace_back(0, nvars - m - int(sp.s.size()));

  std::function<void(int, std::vector<int>&)> fill_bosonic = [&](int from,
                                                                 std::vector<int>& exps) {
    int pos = -1;
    for (int i = from; i <= nvars; ++i)
      if (!used[i]) {
        pos = i;
        break;
      }
    if (pos < 0) {
      std::uint32_t th = 0;
      int inv = 0;
      for (int i = 0; i < m; ++i) {
        th |= 1u << (positions[i] - 1);
        for (int j = i + 1; j < m; ++j)
          if (positions[i] > positions[j]) ++inv;
      }
      out.add_term({mono_from_exponents(exps), th}, inv % 2 ? -1 : 1);
      return;
    }
    for (auto& [v, cnt] : vals) {
      if (cnt == 0) continue;
      --cnt;
      exps[pos - 1] = v;
      used[pos] = true;
      fill_bosonic(pos + 1, exps);
      used[pos] = false;
      exps[pos - 1] = 0;
      ++cnt;
    }
  };
  std::function<void(int)> fill_fermionic = [&](int idx) {
    if (idx == m) {
      std::vector<int> exps(nvars, 0);
      for (int i = 0; i < m; ++i) exps[positions[i] - 1] = sp.a[i];
      fill_bosonic(1, exps);
      return;
    }
    for (int p = 1; p <= nvars; ++p) {
      if (used[p]) continue;
      used[p] = true;
      positions.push_back(p);
      fill_fermionic(idx + 1);
      positions.pop_back();
      used[p] = false;
    }
  };
  fill_fermionic(0);
  return out;
}

SuperPolynomial realize_ptilde(int nvars, int k) {
  SuperPolynomial out(nvars);
  for (int i = 1; i <= nvars; ++i) {
    std::vector<int> e(nvars, 0);
    e[i - 1] = k;
    out.add_term({mono_from_exponents(e), 1u << (i - 1)}, 1);
  }
  return out;
}

SuperPolynomial realize_power(int nvars, int r) {
  SuperPolynomial out(nvars);
  for (int i = 1; i <= nvars; ++i) {
    std::vector<int> e(nvars, 0);
    e[i - 1] = r;
    out.add_term({mono_from_exponents(e), 0}, 1);
  }
  return out;
}

SuperPolynomial realize_etilde(int nvars, int k) {
  return realize_monomial(SuperPartition({0}, Partition(std::size_t(k), 1)), nvars);
}

SuperPolynomial realize_htilde(int nvars, int k) {
  SuperPolynomial out(nvars);
  for (const SuperPartition& sp : superpartitions_of(k, 1)) {
    SuperPolynomial t = realize_monomial(sp, nvars);
    t *= Rat(sp.a[0] + 1);
    out += t;
  }
  return out;
}

SuperPolynomial realize_product(const SuperPartition& sp, int nvars,
                                SuperPolynomial (*ferm)(int, int), bool h_like) {
  SuperPolynomial out = SuperPolynomial::constant(nvars, 1);
  for (int k : sp.a) out = out * ferm(nvars, k);
  for (int r : sp.s)
    out = out * SuperPolynomial::from_polynomial(h_like ? homogeneous(nvars, r)
                                                        : elementary(nvars, r));
  return out;
}

bool g_cache_enabled = true;
std::shared_mutex g_cache_mu;
std::map<std::tuple<int, std::string, int>, SymSuperFunc> g_mexp_cache;

}  // namespace

void set_realize_cache_enabled(bool enabled) {
  std::unique_lock lock(g_cache_mu);
  g_cache_enabled = enabled;
  g_mexp_cache.clear();
}

void clear_realize_cache() {
  std::unique_lock lock(g_cache_mu);
  g_mexp_cache.clear();
}

SuperPolynomial realize(const SuperPartition& sp, Basis b, int nvars) {
  switch (b) {
    case Basis::m: return realize_monomial(sp, nvars);
    case Basis::p: {
      SuperPolynomial out = SuperPolynomial::constant(nvars, 1);
      for (int k : sp.a) out = out * realize_ptilde(nvars, k);
      for (int r : sp.s) out = out * realize_power(nvars, r);
      return out;
    }
    case Basis::e: return realize_product(sp, nvars, realize_etilde, false);
    case Basis::h: return realize_product(sp, nvars, realize_htilde, true);
    default: break;
  }
  // Schur families realize through their monomial expansions.
  SymSuperFunc f = schur_family_in_monomials(sp, b);
  SuperPolynomial out(nvars);
  for (const auto& [om, c] : f.coeffs) {
    SuperPolynomial t = realize_monomial(om, nvars);
    t *= c;
    out += t;
  }
  return out;
}

SuperPolynomial realize(const SymSuperFunc& f, int nvars) {
  SuperPolynomial out(nvars);
  for (const auto& [sp, c] : f.coeffs) {
    SuperPolynomial t = realize(sp, f.basis, nvars);
    t *= c;
    out += t;
  }
  return out;
}

SymSuperFunc to_monomial(const SuperPolynomial& p) {
  if (!is_diagonal_invariant(p)) throw std::runtime_error("to_monomial: input not invariant");
  SymSuperFunc out(Basis::m);
  int nv = p.nvars();
  for (const auto& [mono, c] : p.terms()) {
    int m = 0;
    while (m < nv && (mono.th & (1u << m))) ++m;
    if (mono.th != (m == 0 ? 0u : ((1u << m) - 1))) continue;
    std::vector<int> a, s;
    bool canonical_term = true;
    for (int i = 1; i <= m; ++i) {
      int e = mono_exp(mono.x, i);
      if (i > 1 && e >= a.back()) {
        canonical_term = false;
        break;
      }
      a.push_back(e);
    }
    if (!canonical_term) continue;
    for (int i = m + 1; i <= nv && canonical_term; ++i) {
      int e = mono_exp(mono.x, i);
      if (i > m + 1 && e > s.back()) canonical_term = false;
      s.push_back(e);
    }
    if (!canonical_term) continue;
    out.add(SuperPartition(a, canonical(s)), c);
  }
  return out;
}

// --------------------------------------------------------------------------
// Conversions.

namespace {

// Monomial expansion of one p/e/h basis element, memoized.
SymSuperFunc basis_in_monomials(Basis b, const SuperPartition& sp) {
  int nv = sp.total_degree() + sp.fermionic_degree();
  nv = std::max(nv, 1);
  auto key = std::make_tuple(int(b), sp.to_string(), nv);
  {
    std::shared_lock lock(g_cache_mu);
    if (g_cache_enabled) {
      auto it = g_mexp_cache.find(key);
      if (it != g_mexp_cache.end()) return it->second;
    }
  }
  SymSuperFunc res = to_monomial(realize(sp, b, nv));
  std::unique_lock lock(g_cache_mu);
  if (g_cache_enabled) g_mexp_cache.emplace(key, res);
  return res;
}

// Exact dense solve A x = b over Q; A is square and invertible.
std::vector<Rat> solve_linear(std::vector<std::vector<Rat>> A, std::vector<Rat> b) {
  std::size_t n = A.size();
  std::vector<std::size_t> cols(n);
  std::iota(cols.begin(), cols.end(), 0);
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t piv = r;
    while (piv < n && superschur::is_zero(A[piv][r])) ++piv;
    if (piv == n) throw std::runtime_error("solve_linear: singular matrix");
    std::swap(A[r], A[piv]);
    std::swap(b[r], b[piv]);
    for (std::size_t k = r + 1; k < n; ++k) {
      if (superschur::is_zero(A[k][r])) continue;
      Rat f = A[k][r] / A[r][r];
      for (std::size_t j = r; j < n; ++j) A[k][j] -= f * A[r][j];
      b[k] -= f * b[r];
    }
  }
  std::vector<Rat> x(n, 0);
  for (std::size_t ri = n; ri-- > 0;) {
    Rat acc = b[ri];
    for (std::size_t j = ri + 1; j < n; ++j) acc -= A[ri][j] * x[j];
    x[ri] = acc / A[ri][ri];
  }
  return x;
}

// Expand f (m-basis) over the given multiplicative basis degree by degree.
SymSuperFunc solve_against_basis(const SymSuperFunc& f, Basis target) {
  SymSuperFunc out(target);
  std::map<std::pair<int, int>, SymSuperFunc> slices;
  for (const auto& [sp, c] : f.coeffs) {
    auto& slice = slices[{sp.total_degree(), sp.fermionic_degree()}];
    slice.basis = Basis::m;
    slice.add(sp, c);
  }
  for (const auto& [deg, slice] : slices) {
    std::vector<SuperPartition> sps = superpartitions_of(deg.first, deg.second);
    std::size_t n = sps.size();
    std::vector<std::vector<Rat>> A(n, std::vector<Rat>(n, 0));
    std::vector<Rat> rhs(n, 0);
    for (std::size_t col = 0; col < n; ++col) {
      SymSuperFunc mexp = basis_in_monomials(target, sps[col]);
      for (std::size_t row = 0; row < n; ++row) A[row][col] = mexp.coeff(sps[row]);
    }
    for (std::size_t row = 0; row < n; ++row) rhs[row] = slice.coeff(sps[row]);
    std::vector<Rat> x = solve_linear(std::move(A), std::move(rhs));
    for (std::size_t col = 0; col < n; ++col) out.add(sps[col], x[col]);
  }
  return out;
}

SymSuperFunc convert_to_m(const SymSuperFunc& f) {
  if (f.basis == Basis::m) return f;
  SymSuperFunc out(Basis::m);
  if (f.basis == Basis::p || f.basis == Basis::e || f.basis == Basis::h) {
    for (const auto& [sp, c] : f.coeffs) {
      SymSuperFunc mexp = basis_in_monomials(f.basis, sp);
      mexp *= c;
      out += mexp;
    }
    return out;
  }
  for (const auto& [sp, c] : f.coeffs) {
    SymSuperFunc mexp = schur_family_in_monomials(sp, f.basis);
    mexp *= c;
    out += mexp;
  }
  return out;
}

// Schur families s and sbar are unitriangular in the monomial basis, so a
// greedy subtraction on the dominance-leading term terminates.
SymSuperFunc greedy_schur_solve(SymSuperFunc fm, Basis family) {
  SymSuperFunc out(family);
  while (!fm.is_zero()) {
    auto it = fm.coeffs.begin();  // dominance-compatible order, leading first
    SuperPartition sp = it->first;
    Rat c = it->second;
    SymSuperFunc mexp = schur_family_in_monomials(sp, family);
    mexp *= c;
    fm -= mexp;
    out.add(sp, c);
    if (fm.coeffs.count(sp))
      throw std::runtime_error("schur conversion: leading term did not cancel");
  }
  return out;
}

}  // namespace

SymSuperFunc convert(const SymSuperFunc& f, Basis target) {
  if (f.basis == target) return f;
  SymSuperFunc fm = convert_to_m(f);
  switch (target) {
    case Basis::m: return fm;
    case Basis::p:
    case Basis::e:
    case Basis::h: return solve_against_basis(fm, target);
    case Basis::s:
    case Basis::sbar: return greedy_schur_solve(std::move(fm), target);
    case Basis::sstar:
    case Basis::sbarstar: return solve_against_basis(fm, target);
  }
  throw std::runtime_error("convert: unreachable");
}

SymSuperFunc omega(const SymSuperFunc& f) {
  SymSuperFunc fp = convert(f, Basis::p);
  for (auto& [sp, c] : fp.coeffs) {
    long s = 0;
    for (int k : sp.a) s += k;                       // omega(pt_k) = (-1)^k pt_k
    for (int r : sp.s) s += r - 1;                   // omega(p_r) = (-1)^{r-1} p_r
    if (s % 2) c = -c;
  }
  return convert(fp, Basis::m);
}

Rat scalar_product(const SymSuperFunc& f, const SymSuperFunc& g) {
  SymSuperFunc fp = f.basis == Basis::p ? f : convert(f, Basis::p);
  SymSuperFunc gp = g.basis == Basis::p ? g : convert(g, Basis::p);
  Rat acc = 0;
  for (const auto& [sp, c] : fp.coeffs) {
    auto it = gp.coeffs.find(sp);
    if (it == gp.coeffs.end()) continue;
    acc += c * it->second * z_weight(sp.s);
  }
  return acc;
}

// --------------------------------------------------------------------------
// Bisymmetric-representative helpers.

Polynomial rep_of_monomial(const SuperPartition& sp, int nvars) {
  int m = sp.fermionic_degree();
  Partition la;  // Lambda^a - delta_m
  for (int i = 0; i < m; ++i) la.push_back(sp.a[i] - (m - 1 - i));
  Polynomial out(nvars);
  if (m + num_parts(sp.s) > nvars) return out;
  // s_la on x_1..x_m
  Polynomial sl(nvars);
  {
    Polynomial small = schur_classical(m, canonical(la));
    for (const auto& [mono, c] : small.terms()) {
      std::vector<int> e(nvars, 0);
      for (int i = 1; i <= m; ++i) e[i - 1] = mono_exp(mono, i);
      sl.add_term(mono_from_exponents(e), c);
    }
    if (m == 0) sl = Polynomial::constant(nvars, 1);
  }
  // m_{Lambda^s} on x_{m+1}..x_N: distinct arrangements of the multiset
  Polynomial ms(nvars);
  {
    std::vector<std::pair<int, int>> vals;
    int tail = nvars - m;
    int zeros = tail - num_parts(sp.s);
    for (int v : sp.s) {
      if (!vals.empty() && vals.back().first == v)
        vals.back().second++;
      else
        vals.emplace_back(v, 1);
    }
    if (zeros > 0) vals.emplace_back(0, zeros);
    std::vector<int> e(nvars, 0);
    std::function<void(int)> rec = [&](int pos) {
      if (pos > nvars) {
        ms.add_term(mono_from_exponents(e), 1);
        return;
      }
      for (auto& [v, cnt] : vals) {
        if (cnt == 0) continue;
        --cnt;
        e[pos - 1] = v;
        rec(pos + 1);
        e[pos - 1] = 0;
        ++cnt;
      }
    };
    rec(m + 1);
  }
  return sl * ms;
}

SymSuperFunc rep_to_monomial(const Polynomial& f, int m) {
  SymSuperFunc out(Basis::m);
  Polynomial rem = f;
  int nvars = f.nvars();
  while (!rem.is_zero()) {
    Mono lead = rem.lex_max();
    std::vector<int> a, s;
    for (int i = 1; i <= m; ++i) a.push_back(mono_exp(lead, i) + (m - i));
    for (int i = m + 1; i <= nvars; ++i) s.push_back(mono_exp(lead, i));
    if (!is_valid_superpartition(a, canonical(s)))
      throw std::runtime_error("rep_to_monomial: leading term is not block-sorted");
    SuperPartition sp(a, canonical(s));
    Rat c = rem.coeff(lead);
    rem -= rep_of_monomial(sp, nvars) * c;
    out.add(sp, c);
    if (!superschur::is_zero(rem.coeff(lead)))
      throw std::runtime_error("rep_to_monomial: leading term did not cancel");
  }
  return out;
}

}  // namespace superschur
