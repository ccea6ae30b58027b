#include "superschur/schur.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

#include "superschur/keyops.hpp"

namespace superschur {

namespace {

std::atomic<int> g_self_check_max{6};

std::shared_mutex g_kostka_mu;
std::map<std::tuple<int, int, int>, KostkaMatrix> g_kostka_cache;

std::shared_mutex g_fam_mu;
std::map<std::pair<int, std::string>, SymSuperFunc> g_fam_cache;

}  // namespace

int schur_self_check_max_degree() { return g_self_check_max.load(); }
void set_schur_self_check_max_degree(int n) { g_self_check_max.store(n); }

Rat KostkaMatrix::at(const SuperPartition& omega, const SuperPartition& lambda) const {
  auto idx = [&](const SuperPartition& sp) -> int {
    for (std::size_t i = 0; i < order.size(); ++i)
      if (order[i] == sp) return int(i);
    return -1;
  };
  int i = idx(omega), j = idx(lambda);
  if (i < 0 || j < 0) return 0;
  return entry[std::size_t(i)][std::size_t(j)];
}

bool KostkaMatrix::unitriangular_nonnegative(std::string* diag) const {
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < order.size(); ++j) {
      const Rat& v = entry[i][j];
      if (sgn(v) < 0) {
        if (diag) *diag = "negative entry at (" + order[i].to_string() + ", " +
                          order[j].to_string() + ")";
        return false;
      }
      if (v.get_den() != 1) {
        if (diag) *diag = "non-integer entry";
        return false;
      }
      if (i == j && v != 1) {
        if (diag) *diag = "diagonal entry != 1 at " + order[i].to_string();
        return false;
      }
      // nonzero entries need Omega >= Lambda in dominance
      if (sgn(v) != 0 && i != j && !dominance_leq(order[j], order[i])) {
        if (diag) *diag = "entry outside dominance at (" + order[i].to_string() + ", " +
                          order[j].to_string() + ")";
        return false;
      }
    }
  return true;
}

const KostkaMatrix& kostka(int n, int m, KostkaKind which) {
  auto key = std::make_tuple(n, m, int(which));
  {
    std::shared_lock lock(g_kostka_mu);
    auto it = g_kostka_cache.find(key);
    if (it != g_kostka_cache.end()) return it->second;
  }
  KostkaMatrix km;
  km.n = n;
  km.m = m;
  km.kind = which;
  km.order = superpartitions_of(n, m);
  std::size_t sz = km.order.size();
  km.entry.assign(sz, std::vector<Rat>(sz, 0));
  Basis dual = which == KostkaKind::K ? Basis::sbarstar : Basis::sstar;
  std::vector<std::vector<Rat>> cols(sz);
  parallel_for(sz, [&](std::size_t j) {
    const SuperPartition& la = km.order[j];
    SymSuperFunc f = SymSuperFunc::unit(dual, SuperPartition({}, {}));
    for (int k : la.a) f = multiply_by_generator(f, Generator::htilde, k);
    for (int r : la.s) f = multiply_by_generator(f, Generator::h, r);
    std::vector<Rat> col(sz, 0);
    for (std::size_t i = 0; i < sz; ++i) col[i] = f.coeff(km.order[i]);
    cols[j] = std::move(col);
  });
  for (std::size_t j = 0; j < sz; ++j)
    for (std::size_t i = 0; i < sz; ++i) km.entry[i][j] = cols[j][i];
  std::unique_lock lock(g_kostka_mu);
  return g_kostka_cache.emplace(key, std::move(km)).first->second;
}

namespace {

// s / sbar: read one row of the Kostka matrix.
SymSuperFunc family_from_kostka_row(const SuperPartition& sp, Basis family) {
  int n = sp.total_degree(), m = sp.fermionic_degree();
  const KostkaMatrix& km = kostka(n, m, family == Basis::s ? KostkaKind::Kbar : KostkaKind::K);
  SymSuperFunc out(Basis::m);
  for (std::size_t j = 0; j < km.order.size(); ++j) {
    Rat c = km.at(sp, km.order[j]);
    out.add(km.order[j], c);
  }
  return out;
}

// sstar / sbarstar: invert the triangular Kostka system into the h basis,
// then expand the h's in monomials.
SymSuperFunc dual_family_in_monomials(const SuperPartition& sp, Basis family) {
  int n = sp.total_degree(), m = sp.fermionic_degree();
  const KostkaMatrix& km =
      kostka(n, m, family == Basis::sstar ? KostkaKind::Kbar : KostkaKind::K);
  std::size_t sz = km.order.size();
  // h-basis expansions of every dual element at this degree, dominant first.
  std::vector<SymSuperFunc> in_h(sz, SymSuperFunc(Basis::h));
  for (std::size_t idx = 0; idx < sz; ++idx) {
    SymSuperFunc cur = SymSuperFunc::unit(Basis::h, km.order[idx]);
    for (std::size_t j = 0; j < idx; ++j) {
      const Rat& c = km.entry[j][idx];
      if (superschur::is_zero(c)) continue;
      SymSuperFunc t = in_h[j];
      t *= c;
      cur -= t;
    }
    for (std::size_t j = idx + 1; j < sz; ++j)
      if (!superschur::is_zero(km.entry[j][idx]))
        throw std::runtime_error("kostka matrix is not triangular");
    in_h[idx] = std::move(cur);
  }
  for (std::size_t idx = 0; idx < sz; ++idx)
    if (km.order[idx] == sp) return convert(in_h[idx], Basis::m);
  throw std::runtime_error("dual_family_in_monomials: superpartition not at its degree");
}

}  // namespace

SymSuperFunc schur_family_in_monomials(const SuperPartition& sp, Basis family) {
  if (family != Basis::s && family != Basis::sbar && family != Basis::sstar &&
      family != Basis::sbarstar)
    throw std::invalid_argument("schur_family_in_monomials: not a Schur family");
  auto key = std::make_pair(int(family), sp.to_string());
  {
    std::shared_lock lock(g_fam_mu);
    auto it = g_fam_cache.find(key);
    if (it != g_fam_cache.end()) return it->second;
  }
  SymSuperFunc res(Basis::m);
  if (family == Basis::s || family == Basis::sbar) {
    res = family_from_kostka_row(sp, family);
    if (sp.total_degree() <= g_self_check_max.load()) {
      int nv = std::max(1, sp.total_degree() + sp.fermionic_degree());
      Polynomial rep = family == Basis::s ? schur_rep(sp, nv) : sbar_rep(sp, nv);
      SymSuperFunc other = rep_to_monomial(rep, sp.fermionic_degree());
      if (other != res)
        throw std::runtime_error("Pieri and divided-difference constructions disagree at " +
                                 sp.to_string());
    }
  } else {
    res = dual_family_in_monomials(sp, family);
  }
  std::unique_lock lock(g_fam_mu);
  return g_fam_cache.emplace(key, std::move(res)).first->second;
}

SymSuperFunc schur(const SuperPartition& sp, Basis family) {
  return schur_family_in_monomials(sp, family);
}

// --------------------------------------------------------------------------

namespace {

// H_La = ptilde-part of p times h-part of h; its monomial expansion.
SymSuperFunc h_mixed_in_monomials(const SuperPartition& sp) {
  int nv = std::max(1, sp.total_degree() + sp.fermionic_degree());
  SuperPolynomial out = SuperPolynomial::constant(nv, 1);
  out = out * realize(SuperPartition(sp.a, {}), Basis::p, nv);
  out = out * realize(SuperPartition({}, sp.s), Basis::h, nv);
  return to_monomial(out);
}

}  // namespace

SymSuperFunc phi(const SymSuperFunc& f) {
  SymSuperFunc fm = convert(f, Basis::m);
  // slice by degree and solve against the mixed basis H
  std::map<std::pair<int, int>, SymSuperFunc> slices;
  for (const auto& [sp, c] : fm.coeffs) {
    auto& s = slices[{sp.total_degree(), sp.fermionic_degree()}];
    s.basis = Basis::m;
    s.add(sp, c);
  }
  SymSuperFunc out(Basis::m);
  for (const auto& [deg, slice] : slices) {
    std::vector<SuperPartition> sps = superpartitions_of(deg.first, deg.second);
    std::size_t sz = sps.size();
    std::vector<SymSuperFunc> htab(sz);
    for (std::size_t j = 0; j < sz; ++j) htab[j] = h_mixed_in_monomials(sps[j]);
    // exact dense solve
    std::vector<std::vector<Rat>> A(sz, std::vector<Rat>(sz, 0));
    std::vector<Rat> b(sz, 0);
    for (std::size_t j = 0; j < sz; ++j)
      for (std::size_t i = 0; i < sz; ++i) A[i][j] = htab[j].coeff(sps[i]);
    for (std::size_t i = 0; i < sz; ++i) b[i] = slice.coeff(sps[i]);
    // Gaussian elimination
    std::vector<Rat> x(sz, 0);
    {
      for (std::size_t r = 0; r < sz; ++r) {
        std::size_t piv = r;
        while (piv < sz && superschur::is_zero(A[piv][r])) ++piv;
        if (piv == sz) throw std::runtime_error("phi: singular H system");
        std::swap(A[r], A[piv]);
        std::swap(b[r], b[piv]);
        for (std::size_t k = r + 1; k < sz; ++k) {
          if (superschur::is_zero(A[k][r])) continue;
          Rat fac = A[k][r] / A[r][r];
          for (std::size_t jj = r; jj < sz; ++jj) A[k][jj] -= fac * A[r][jj];
          b[k] -= fac * b[r];
        }
      }
      for (std::size_t ri = sz; ri-- > 0;) {
        Rat acc = b[ri];
        for (std::size_t jj = ri + 1; jj < sz; ++jj) acc -= A[ri][jj] * x[jj];
        x[ri] = acc / A[ri][ri];
      }
    }
    // phi(H_La) = e_La
    for (std::size_t j = 0; j < sz; ++j) {
      if (superschur::is_zero(x[j])) continue;
      SymSuperFunc e_exp = convert(SymSuperFunc::unit(Basis::e, sps[j]), Basis::m);
      e_exp *= x[j];
      out += e_exp;
    }
  }
  return out;
}

std::map<SuperPartition, Rat, SpBefore> lr(const SuperPartition& gamma,
                                           const SuperPartition& omega, Basis family) {
  if (family != Basis::s && family != Basis::sbar)
    throw std::invalid_argument("lr: family must be s or sbar");
  int n = gamma.total_degree() + omega.total_degree();
  int m = gamma.fermionic_degree() + omega.fermionic_degree();
  int nv = std::max(1, n + m);
  SuperPolynomial prod = realize(schur_family_in_monomials(gamma, family), nv) *
                         realize(schur_family_in_monomials(omega, family), nv);
  SymSuperFunc fm = to_monomial(prod);
  SymSuperFunc fam = convert(fm, family);
  return fam.coeffs;
}

SymSuperFunc skew(const SuperPartition& lambda, const SuperPartition& omega, Basis family) {
  if (family != Basis::s && family != Basis::sbar)
    throw std::invalid_argument("skew: family must be s or sbar");
  SymSuperFunc out(family);
  int n = lambda.total_degree() - omega.total_degree();
  int m = lambda.fermionic_degree() - omega.fermionic_degree();
  if (n < 0 || m < 0) return out;
  SuperPartition lc = lambda.conjugate(), oc = omega.conjugate();
  for (const SuperPartition& gamma : superpartitions_of(n, m)) {
    Rat c;
    if (family == Basis::s) {
      auto prod = lr(gamma.conjugate(), oc, Basis::sbar);  // cbar^{La'}_{Ga' Om'}
      auto it = prod.find(lc);
      c = it == prod.end() ? Rat(0) : it->second;
    } else {
      auto prod = lr(omega, gamma, Basis::s);  // c^{La}_{Om Ga}
      auto it = prod.find(lambda);
      c = it == prod.end() ? Rat(0) : it->second;
    }
    out.add(gamma, c);
  }
  return out;
}

bool cauchy_check(int max_degree, int nx, int ny, std::string* diag) {
  int nn = nx + ny;
  if (nn > kMaxVars) throw std::invalid_argument("cauchy_check: too many variables");
  SuperPolynomial lhs = SuperPolynomial::constant(nn, 1);
  for (int i = 1; i <= nx; ++i)
    for (int j = 1; j <= ny; ++j) {
      SuperPolynomial factor = SuperPolynomial::constant(nn, 1);
      std::vector<int> e(nn, 0);
      e[i - 1] = 1;
      e[nx + j - 1] = 1;
      factor.add_term({mono_from_exponents(e), 0}, 1);
      factor.add_term({0, (1u << (i - 1)) | (1u << (nx + j - 1))}, 1);
      lhs = lhs * factor;
    }
  auto embed = [&](const SuperPolynomial& p, int shift) {
    SuperPolynomial q(nn);
    for (const auto& [mono, c] : p.terms()) {
      Mono x = 0;
      for (int i = 1; i <= p.nvars(); ++i) x = mono_set(x, i + shift, mono_exp(mono.x, i));
      q.add_term({x, mono.th << shift}, c);
    }
    return q;
  };
  SuperPolynomial rhs(nn);
  int mmax = std::min(nx, ny);
  for (int m = 0; m <= mmax; ++m)
    for (int n = 0; n <= nx * ny; ++n)
      for (const SuperPartition& sp : superpartitions_of(n, m)) {
        Partition ci = sp.circled();
        if (int(ci.size()) > nx) continue;
        if (!ci.empty() && ci[0] > ny) continue;
        SuperPolynomial sx = realize(schur_family_in_monomials(sp, Basis::s), nx);
        SuperPolynomial sy =
            realize(schur_family_in_monomials(sp.conjugate(), Basis::sbar), ny);
        rhs += embed(sx, 0) * embed(sy, nx);
      }
  SuperPolynomial delta = lhs - rhs;
  for (const auto& [mono, c] : delta.terms()) {
    int deg = mono_degree(mono.x, nn);
    int fdeg = 0;
    for (int i = 0; i < nn; ++i)
      if (mono.th & (1u << i)) ++fdeg;
    if (deg + 0 <= max_degree && fdeg / 2 <= mmax) {
      if (diag) {
        std::ostringstream os;
        os << "cauchy mismatch at a degree-" << deg << " term";
        *diag = os.str();
      }
      return false;
    }
  }
  return true;
}

}  // namespace superschur
