#include "superschur/verify.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "superschur/keyops.hpp"
#include "superschur/schur.hpp"
#include "superschur/tableaux.hpp"

namespace superschur::verify {

namespace {

Basis kind_family(PieriKind k) {
  switch (k) {
    case PieriKind::sstar_h:
    case PieriKind::sstar_htilde: return Basis::sstar;
    case PieriKind::sbar_e:
    case PieriKind::sbar_etilde: return Basis::sbar;
    case PieriKind::sbarstar_h:
    case PieriKind::sbarstar_htilde: return Basis::sbarstar;
    default: return Basis::s;
  }
}

Generator kind_generator(PieriKind k) {
  switch (k) {
    case PieriKind::sstar_h:
    case PieriKind::sbarstar_h:
    case PieriKind::s_h: return Generator::h;
    case PieriKind::sstar_htilde:
    case PieriKind::sbarstar_htilde: return Generator::htilde;
    case PieriKind::sbar_e:
    case PieriKind::s_e: return Generator::e;
    case PieriKind::sbar_etilde:
    case PieriKind::s_etilde: return Generator::etilde;
    case PieriKind::s_ptilde: return Generator::ptilde;
  }
  return Generator::h;
}

Polynomial skip_var(int nvars, int ell, int v, bool elem) {
  std::vector<bool> skip(nvars, false);
  skip[v - 1] = true;
  return elem ? elementary(nvars, ell, skip) : homogeneous(nvars, ell, skip);
}

// theta_{m+1}-coefficient of the generator: the factor entering the
// fermionic representative transition.
Polynomial fermionic_factor(Generator g, int nvars, int ell, int m) {
  switch (g) {
    case Generator::etilde: return skip_var(nvars, ell, m + 1, true);
    case Generator::ptilde: {
      std::vector<int> e(nvars, 0);
      e[m] = ell;
      return Polynomial::monomial(nvars, e);
    }
    case Generator::htilde: {
      Polynomial f(nvars);
      for (int j = 0; j <= ell; ++j) {
        std::vector<int> e(nvars, 0);
        e[m] = j;
        f += Polynomial::monomial(nvars, e, Rat(j + 1)) * skip_var(nvars, ell - j, m + 1, false);
      }
      return f;
    }
    default: throw std::invalid_argument("fermionic_factor: bosonic generator");
  }
}

}  // namespace

SymSuperFunc product_by_polynomials(Basis family, const SuperPartition& la, Generator g,
                                    int ell) {
  int m = la.fermionic_degree();
  bool fermionic = g == Generator::htilde || g == Generator::etilde || g == Generator::ptilde;
  int mr = m + (fermionic ? 1 : 0);
  int nr = la.total_degree() + ell;
  int nvars = std::max(1, nr + mr);
  SymSuperFunc mexp = schur_family_in_monomials(la, family);
  Polynomial rep(nvars);
  for (const auto& [om, c] : mexp.coeffs) rep += rep_of_monomial(om, nvars) * c;
  Polynomial res(nvars);
  if (!fermionic) {
    res = rep * (g == Generator::h ? homogeneous(nvars, ell) : elementary(nvars, ell));
  } else {
    res = fermionic_factor(g, nvars, ell, m) * rep;
    for (int i = m; i >= 1; --i) res = apply_partial(res, i);
  }
  return rep_to_monomial(res, mr);
}

bool pieri_case_matches(PieriKind kind, const SuperPartition& la, int ell, std::string* diag) {
  Basis family = kind_family(kind);
  Generator g = kind_generator(kind);
  SymSuperFunc combinatorial(family);
  for (const SignedTerm& t : pieri(kind, la, ell)) combinatorial.add(t.omega, t.sign);
  SymSuperFunc brute = convert(product_by_polynomials(family, la, g, ell), family);
  if (combinatorial == brute) return true;
  if (diag) {
    std::ostringstream os;
    os << pieri_kind_name(kind) << " La=(" << la.to_string() << ") ell=" << ell
       << ": rule gives " << combinatorial.to_string() << " but polynomials give "
       << brute.to_string();
    *diag = os.str();
  }
  return false;
}

Report pieri_oracle(const OracleBounds& b) {
  Report rep;
  rep.suite = "pieri-oracle";
  struct Case {
    PieriKind kind;
    SuperPartition la;
    int ell;
  };
  std::vector<Case> cases;
  for (PieriKind kind : all_pieri_kinds()) {
    int ell_lo = pieri_kind_fermionic(kind) ? 0 : 1;
    for (int m = 0; m <= b.max_m; ++m)
      for (int n = 0; n <= b.max_n; ++n)
        for (const SuperPartition& la : superpartitions_of(n, m))
          for (int ell = ell_lo; ell <= b.max_ell; ++ell) cases.push_back({kind, la, ell});
  }
  std::mutex mu;
  parallel_for(
      cases.size(),
      [&](std::size_t i) {
        std::string diag;
        bool ok = pieri_case_matches(cases[i].kind, cases[i].la, cases[i].ell, &diag);
        std::lock_guard lock(mu);
        ++rep.checked;
        if (!ok) rep.failures.push_back(diag);
      },
      b.jobs);
  std::sort(rep.failures.begin(), rep.failures.end());
  return rep;
}

Report dualities(int max_n, int max_m) {
  Report rep;
  rep.suite = "dualities";
  auto expect = [&](bool cond, const std::string& what) {
    ++rep.checked;
    if (!cond) rep.failures.push_back(what);
  };
  for (int m = 0; m <= max_m; ++m)
    for (int n = 0; n <= max_n; ++n) {
      std::vector<SuperPartition> sps = superpartitions_of(n, m);
      for (const SuperPartition& la : sps) {
        int sign = (m * (m - 1) / 2) % 2 ? -1 : 1;
        // propdual: sstar = +/- omega(sbar'), sbarstar = +/- omega(s')
        SymSuperFunc om_sbar = omega(schur_family_in_monomials(la.conjugate(), Basis::sbar));
        om_sbar *= sign;
        expect(om_sbar == schur_family_in_monomials(la, Basis::sstar),
               "propdual sstar failed at (" + la.to_string() + ")");
        SymSuperFunc om_s = omega(schur_family_in_monomials(la.conjugate(), Basis::s));
        om_s *= sign;
        expect(om_s == schur_family_in_monomials(la, Basis::sbarstar),
               "propdual sbarstar failed at (" + la.to_string() + ")");
        // omega(h_La) = e_La and involutivity
        SymSuperFunc h_la = SymSuperFunc::unit(Basis::h, la);
        SymSuperFunc w = omega(h_la);
        expect(w == convert(SymSuperFunc::unit(Basis::e, la), Basis::m),
               "omega(h) != e at (" + la.to_string() + ")");
        expect(omega(w) == convert(h_la, Basis::m),
               "omega not involutive at (" + la.to_string() + ")");
        // phi(s_La) = +/- s_{La'}
        SymSuperFunc ph = phi(schur_family_in_monomials(la, Basis::s));
        SymSuperFunc target = schur_family_in_monomials(la.conjugate(), Basis::s);
        target *= sign;
        expect(ph == target, "phi(s) != +/- s' at (" + la.to_string() + ")");
        for (const SuperPartition& om : sps) {
          Rat d = la == om ? 1 : 0;
          expect(scalar_product(SymSuperFunc::unit(Basis::h, la),
                                SymSuperFunc::unit(Basis::m, om)) == d,
                 "h/m duality failed at (" + la.to_string() + "),(" + om.to_string() + ")");
          expect(scalar_product(schur_family_in_monomials(la, Basis::sstar),
                                schur_family_in_monomials(om, Basis::s)) == d,
                 "sstar/s duality failed at (" + la.to_string() + "),(" + om.to_string() + ")");
          expect(scalar_product(schur_family_in_monomials(la, Basis::sbarstar),
                                schur_family_in_monomials(om, Basis::sbar)) == d,
                 "sbarstar/sbar duality failed at (" + la.to_string() + "),(" +
                     om.to_string() + ")");
          // omega isometry on the h x m sweep
          expect(scalar_product(omega(SymSuperFunc::unit(Basis::h, la)),
                                omega(SymSuperFunc::unit(Basis::m, om))) ==
                     scalar_product(SymSuperFunc::unit(Basis::h, la),
                                    SymSuperFunc::unit(Basis::m, om)),
                 "omega isometry failed at (" + la.to_string() + "),(" + om.to_string() + ")");
        }
      }
    }
  return rep;
}

Report cauchy(int nx, int ny, int max_degree) {
  Report rep;
  rep.suite = "cauchy";
  std::string diag;
  ++rep.checked;
  if (!cauchy_check(max_degree, nx, ny, &diag)) rep.failures.push_back(diag);
  return rep;
}

Report appendix(std::uint64_t seed, int instances) {
  Report rep;
  rep.suite = "appendix";
  for (const std::string& name : identity_names()) {
    ++rep.checked;
    std::string diag;
    if (!check_identity(name, seed, instances, &diag)) rep.failures.push_back(diag);
  }
  return rep;
}

Report tableaux_suite(int max_n, int max_m) {
  Report rep;
  rep.suite = "tableaux";
  for (int m = 0; m <= max_m; ++m)
    for (int n = 0; n <= max_n; ++n)
      for (const SuperPartition& la : superpartitions_of(n, m))
        for (Basis family : {Basis::s, Basis::sbar}) {
          ++rep.checked;
          SymSuperFunc gen = generating_function(la, SuperPartition({}, {}), family);
          if (gen != schur_family_in_monomials(la, family))
            rep.failures.push_back("tableau generating function != " + basis_name(family) +
                                   " at (" + la.to_string() + ")");
        }
  return rep;
}

}  // namespace superschur::verify
