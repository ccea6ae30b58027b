#include "superschur/pieri.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>

namespace superschur {

SymSuperFunc schur_family_in_monomials(const SuperPartition& sp, Basis family);

std::string pieri_kind_name(PieriKind k) {
  switch (k) {
    case PieriKind::sstar_h: return "sstar_h";
    case PieriKind::sstar_htilde: return "sstar_htilde";
    case PieriKind::sbar_e: return "sbar_e";
    case PieriKind::sbar_etilde: return "sbar_etilde";
    case PieriKind::sbarstar_h: return "sbarstar_h";
    case PieriKind::sbarstar_htilde: return "sbarstar_htilde";
    case PieriKind::s_e: return "s_e";
    case PieriKind::s_etilde: return "s_etilde";
    case PieriKind::s_h: return "s_h";
    case PieriKind::s_ptilde: return "s_ptilde";
  }
  return "?";
}

std::vector<PieriKind> all_pieri_kinds() {
  return {PieriKind::sstar_h,  PieriKind::sstar_htilde,   PieriKind::sbar_e,
          PieriKind::sbar_etilde, PieriKind::sbarstar_h,  PieriKind::sbarstar_htilde,
          PieriKind::s_e,      PieriKind::s_etilde,       PieriKind::s_h,
          PieriKind::s_ptilde};
}

PieriKind parse_pieri_kind(const std::string& name) {
  for (PieriKind k : all_pieri_kinds())
    if (pieri_kind_name(k) == name) return k;
  throw std::invalid_argument("unknown pieri kind: " + name);
}

bool pieri_kind_fermionic(PieriKind k) {
  return k == PieriKind::sstar_htilde || k == PieriKind::sbar_etilde ||
         k == PieriKind::sbarstar_htilde || k == PieriKind::s_etilde ||
         k == PieriKind::s_ptilde;
}

namespace {

// Builds the superpartition with the given star and circle rows, or nullopt
// when the circles collide or do not sit at addable corners.
std::optional<SuperPartition> make_sp(const Partition& star, std::vector<int> rows) {
  std::sort(rows.begin(), rows.end());
  for (std::size_t i = 0; i + 1 < rows.size(); ++i)
    if (rows[i] == rows[i + 1]) return std::nullopt;
  std::set<int> cols;
  for (int r : rows) {
    if (!cols.insert(part(star, r) + 1).second) return std::nullopt;
  }
  Partition ci = star;
  if (!rows.empty() && rows.back() > int(ci.size())) ci.resize(rows.back(), 0);
  for (int r : rows) ci[r - 1] += 1;
  if (!is_partition(ci)) return std::nullopt;
  std::vector<int> a, s;
  for (std::size_t r = 0; r < ci.size(); ++r) {
    int stv = int(r) < int(star.size()) ? star[r] : 0;
    if (ci[r] != stv)
      a.push_back(stv);
    else
      s.push_back(stv);
  }
  return SuperPartition(a, canonical(s));
}

int col_height(const Partition& p, int c) {  // p'_c
  if (c <= 0) return 1 << 20;  // column 0 is infinitely tall
  int h = 0;
  for (int v : p)
    if (v >= c) ++h;
  return h;
}

// Strip-movement rules of the h/e expansions of sstar and sbar: the i-th
// circle (from below) stays, or moves one row below / one column right
// when the strip covers its row / column.
std::optional<std::vector<int>> moved_rows_rule_a(const SuperPartition& la, const Partition& mu,
                                                  bool horizontal) {
  Partition st = la.star();
  std::vector<int> rows;
  if (horizontal) {
    for (int r : la.circle_rows()) rows.push_back(part(mu, r) > part(st, r) ? r + 1 : r);
  } else {
    for (auto [r, c] : la.circle_cells()) {
      int cc = col_height(mu, c) > col_height(st, c) ? c + 1 : c;
      int rr = col_height(mu, cc) + 1;
      if (part(mu, rr) != cc - 1) return std::nullopt;  // no addable corner in that column
      rows.push_back(rr);
    }
  }
  return rows;
}

std::vector<SignedTerm> rule_a(const SuperPartition& la, int ell, bool horizontal) {
  std::vector<SignedTerm> out;
  StripKind sk = horizontal ? StripKind::horizontal : StripKind::vertical;
  for (const Partition& mu : strips(la.star(), ell, sk)) {
    auto rows = moved_rows_rule_a(la, mu, horizontal);
    if (!rows) continue;
    if (auto sp = make_sp(mu, *rows)) out.push_back({*sp, 1});
  }
  return out;
}

std::vector<SignedTerm> rule_b(const SuperPartition& la, int ell, bool horizontal) {
  std::vector<SignedTerm> out;
  Partition st = la.star();
  StripKind sk = horizontal ? StripKind::horizontal : StripKind::vertical;
  for (const Partition& mu : strips(st, ell, sk)) {
    auto rows = moved_rows_rule_a(la, mu, horizontal);
    if (!rows) continue;
    int new_row;
    if (horizontal) {
      // first column without a strip cell; the new circle sits at its foot
      int c0 = 1;
      for (;; ++c0) {
        int rows_ge = col_height(mu, c0), was = col_height(st, c0);
        if (rows_ge == was) break;
      }
      new_row = col_height(mu, c0) + 1;
      if (part(mu, new_row) != c0 - 1) continue;
    } else {
      int r0 = 1;
      while (part(mu, r0) != part(st, r0)) ++r0;
      new_row = r0;
    }
    int below = 0;
    for (int r : *rows)
      if (r > new_row) ++below;
    std::vector<int> all = *rows;
    all.push_back(new_row);
    if (auto sp = make_sp(mu, all)) out.push_back({*sp, below % 2 ? -1 : 1});
  }
  return out;
}

// Candidate circle positions of the h/e expansions of s and sbarstar: the
// i-th circles (top down) share a row or a column, with a same-row push
// capped by the row above in Lambda (same-column capped by the column to
// the left in the vertical reading).
std::vector<SignedTerm> rule_c(const SuperPartition& la, int ell, bool horizontal) {
  std::vector<SignedTerm> out;
  Partition st = la.star();
  Partition stc = conjugate_partition(st);
  auto circles = la.circle_cells();
  int m = la.fermionic_degree();
  StripKind sk = horizontal ? StripKind::horizontal : StripKind::vertical;
  std::set<std::string> seen;
  for (const Partition& mu : strips(st, ell, sk)) {
    std::vector<std::vector<int>> cand(m);  // candidate rows per circle
    for (int i = 0; i < m; ++i) {
      auto [r, c] = circles[std::size_t(i)];
      if (horizontal) {
        // same row r (bounded by the length of row r-1 of Lambda^*)
        int col = part(mu, r) + 1;
        if ((r == 1 || col <= part(st, r - 1)) && (r == 1 || part(mu, r - 1) >= col))
          cand[i].push_back(r);
        // same column c: only live position is at the column's foot
        int t = col_height(mu, c) + 1;
        if (part(mu, t) == c - 1 && t != r) cand[i].push_back(t);
      } else {
        // same column c (bounded by the height of column c-1 of Lambda^*)
        int t = col_height(mu, c) + 1;
        if (part(mu, t) == c - 1 && (c == 1 || t <= col_height(st, c - 1)))
          cand[i].push_back(t);
        // same row r: pushed one column right by the cell on the circle
        if (part(mu, r) == c && (r == 1 || part(mu, r - 1) >= c + 1)) {
          if (part(mu, r) + 1 == c + 1 && (cand[i].empty() || cand[i].back() != r))
            cand[i].push_back(r);
        }
      }
    }
    std::vector<int> pick(m, 0);
    std::function<void(int)> rec = [&](int i) {
      if (i == m) {
        std::vector<int> rows;
        for (int k = 0; k < m; ++k) rows.push_back(cand[k][pick[k]]);
        // top-down matching must stay aligned
        for (int k = 0; k + 1 < m; ++k)
          if (rows[k] >= rows[k + 1]) return;
        if (auto sp = make_sp(mu, rows)) {
          if (seen.insert(sp->to_string()).second) out.push_back({*sp, 1});
        }
        return;
      }
      for (pick[i] = 0; pick[i] < int(cand[i].size()); ++pick[i]) rec(i + 1);
      pick[i] = 0;
    };
    bool any_empty = false;
    for (int i = 0; i < m; ++i) any_empty |= cand[i].empty();
    if (!any_empty) rec(0);
  }
  return out;
}

// The htilde/etilde/ptilde expansions of s and sbarstar: strips live on the
// circled diagrams and the extremal strip cell becomes the new circle.
std::vector<SignedTerm> rule_d(const SuperPartition& la, int ell, bool horizontal) {
  std::vector<SignedTerm> out;
  Partition st = la.star();
  Partition ci = la.circled();
  auto circles = la.circle_cells();
  int m = la.fermionic_degree();
  StripKind sk = horizontal ? StripKind::horizontal : StripKind::vertical;
  std::set<std::string> seen;
  for (const Partition& nu : strips(ci, ell + 1, sk)) {
    // skew cells of nu/circled
    std::vector<std::pair<int, int>> cells;
    for (int r = 1; r <= num_parts(nu); ++r)
      for (int c = part(ci, r) + 1; c <= part(nu, r); ++c) cells.emplace_back(r, c);
    if (cells.empty()) continue;
    std::pair<int, int> new_cell = cells[0];
    for (auto& rc : cells) {
      if (horizontal ? rc.second > new_cell.second : rc.first > new_cell.first) new_cell = rc;
    }
    auto [r0, c0] = new_cell;
    if (part(nu, r0) != c0) continue;  // the new circle must end its row
    // candidate circle cells per old circle
    std::vector<std::vector<std::pair<int, int>>> cand(m);
    for (int i = 0; i < m; ++i) {
      auto [r, c] = circles[std::size_t(i)];
      if (horizontal) {
        if (r == 1 || part(nu, r) <= part(st, r - 1)) cand[i].push_back({r, part(nu, r)});
        for (int t = r; t <= num_parts(nu); ++t)
          if (part(nu, t) == c && t != r) cand[i].push_back({t, c});
      } else {
        int t = col_height(nu, c);
        if (part(nu, t) == c && (c == 1 || t <= col_height(st, c - 1)))
          cand[i].push_back({t, c});
        if (part(nu, r) != c && (cand[i].empty() || cand[i].back() != std::make_pair(r, part(nu, r))))
          cand[i].push_back({r, part(nu, r)});
      }
    }
    std::vector<int> pick(m, 0);
    std::function<void(int)> rec = [&](int i) {
      if (i == m) {
        std::vector<std::pair<int, int>> pos;
        for (int k = 0; k < m; ++k) pos.push_back(cand[k][pick[k]]);
        pos.push_back({r0, c0});
        // distinct rows and columns
        std::set<int> rset, cset;
        for (auto [r, c] : pos) {
          if (!rset.insert(r).second || !cset.insert(c).second) return;
        }
        // alignment of the old circles, top down
        for (int k = 0; k + 1 < m; ++k)
          if (pos[k].first >= pos[k + 1].first) return;
        // star = nu minus the circle cells; every circle must end its row
        Partition star = nu;
        for (auto [r, c] : pos) {
          if (part(nu, r) != c) return;
          star[r - 1] -= 1;
        }
        star = canonical(star);
        if (!is_partition(star) || !contains(star, st)) return;
        std::vector<int> rows;
        for (auto [r, c] : pos) rows.push_back(r);
        auto sp = make_sp(star, rows);
        if (!sp || sp->circled() != canonical(nu)) return;
        int below = 0;
        for (int k = 0; k < m; ++k)
          if (pos[k].first > r0) ++below;
        if (seen.insert(sp->to_string()).second) out.push_back({*sp, below % 2 ? -1 : 1});
      } else {
        for (pick[i] = 0; pick[i] < int(cand[i].size()); ++pick[i]) rec(i + 1);
        pick[i] = 0;
      }
    };
    bool any_empty = false;
    for (int i = 0; i < m; ++i) any_empty |= cand[i].empty();
    if (!any_empty || m == 0) rec(0);
  }
  return out;
}

}  // namespace

std::vector<SignedTerm> pieri(PieriKind kind, const SuperPartition& la, int ell) {
  bool fermionic = pieri_kind_fermionic(kind);
  if (ell < (fermionic ? 0 : 1))
    throw std::invalid_argument("pieri: ell out of range for " + pieri_kind_name(kind));
  std::vector<SignedTerm> out;
  switch (kind) {
    case PieriKind::sstar_h: out = rule_a(la, ell, true); break;
    case PieriKind::sbar_e: out = rule_a(la, ell, false); break;
    case PieriKind::sstar_htilde: out = rule_b(la, ell, true); break;
    case PieriKind::sbar_etilde: out = rule_b(la, ell, false); break;
    case PieriKind::sbarstar_h:
    case PieriKind::s_h: out = rule_c(la, ell, true); break;
    case PieriKind::s_e: out = rule_c(la, ell, false); break;
    case PieriKind::sbarstar_htilde:
    case PieriKind::s_ptilde: out = rule_d(la, ell, true); break;
    case PieriKind::s_etilde: out = rule_d(la, ell, false); break;
  }
  std::sort(out.begin(), out.end(), [](const SignedTerm& x, const SignedTerm& y) {
    return order_cmp(x.omega, y.omega) < 0;
  });
  return out;
}

std::string generator_name(Generator g) {
  switch (g) {
    case Generator::h: return "h";
    case Generator::htilde: return "htilde";
    case Generator::e: return "e";
    case Generator::etilde: return "etilde";
    case Generator::ptilde: return "ptilde";
  }
  return "?";
}

SymSuperFunc multiply_by_generator(const SymSuperFunc& f, Generator g, int ell) {
  PieriKind kind;
  if (f.basis == Basis::sstar && g == Generator::h) kind = PieriKind::sstar_h;
  else if (f.basis == Basis::sstar && g == Generator::htilde) kind = PieriKind::sstar_htilde;
  else if (f.basis == Basis::sbar && g == Generator::e) kind = PieriKind::sbar_e;
  else if (f.basis == Basis::sbar && g == Generator::etilde) kind = PieriKind::sbar_etilde;
  else if (f.basis == Basis::sbarstar && g == Generator::h) kind = PieriKind::sbarstar_h;
  else if (f.basis == Basis::sbarstar && g == Generator::htilde) kind = PieriKind::sbarstar_htilde;
  else if (f.basis == Basis::s && g == Generator::e) kind = PieriKind::s_e;
  else if (f.basis == Basis::s && g == Generator::etilde) kind = PieriKind::s_etilde;
  else if (f.basis == Basis::s && g == Generator::h) kind = PieriKind::s_h;
  else if (f.basis == Basis::s && g == Generator::ptilde) kind = PieriKind::s_ptilde;
  else
    throw std::invalid_argument("multiply_by_generator: " + generator_name(g) +
                                " is not compatible with basis " + basis_name(f.basis));
  SymSuperFunc out(f.basis);
  for (const auto& [sp, c] : f.coeffs)
    for (const SignedTerm& t : pieri(kind, sp, ell)) out.add(t.omega, t.sign > 0 ? c : -c);
  return out;
}

namespace {

// Fold the fermionic generators of h_{(a;0)} (etc.) through the Pieri rules
// and expect a single signed term.
bool fold_single(Basis basis, Generator g, const std::vector<int>& a,
                 const SuperPartition& expect, int expect_sign, std::string* detail) {
  SymSuperFunc f = SymSuperFunc::unit(basis, SuperPartition({}, {}));
  for (int k : a) f = multiply_by_generator(f, g, k);
  bool ok = f.coeffs.size() == 1 && f.coeff(expect) == expect_sign;
  if (!ok && detail)
    *detail = "fold gave " + f.to_string() + ", expected " + std::to_string(expect_sign) + "*(" +
              expect.to_string() + ")";
  return ok;
}

bool same_in_monomials(const SymSuperFunc& lhs_basis_elt, Basis family,
                       const SuperPartition& target, const Rat& sign, std::string* detail) {
  SymSuperFunc lhs = convert(lhs_basis_elt, Basis::m);
  SymSuperFunc rhs = schur_family_in_monomials(target, family);
  rhs *= sign;
  if (lhs == rhs) return true;
  if (detail) *detail = "monomial expansions differ: " + lhs.to_string() + " vs " + rhs.to_string();
  return false;
}

}  // namespace

std::vector<IdentityCheck> product_identities(int max_weight, int max_m) {
  std::vector<IdentityCheck> checks;
  for (int m = 1; m <= max_m; ++m) {
    int wmin = m * (m - 1) / 2;
    for (int w = wmin; w <= max_weight; ++w) {
      for (const SuperPartition& sp : superpartitions_of(w, m)) {
        if (!sp.s.empty()) continue;
        SuperPartition lam({}, {});
        SuperPartition target(sp.a, {});
        SuperPartition targetc = target.conjugate();
        int sgn_binom = (m * (m - 1) / 2) % 2 ? -1 : 1;
        std::string base = "(" + target.to_string() + "): ";
        std::string d;
        checks.push_back({base + "h-fold = sstar", fold_single(Basis::sstar, Generator::htilde,
                                                               sp.a, target, 1, &d), d});
        d.clear();
        checks.push_back({base + "h-fold = sbarstar",
                          fold_single(Basis::sbarstar, Generator::htilde, sp.a, target, 1, &d),
                          d});
        d.clear();
        checks.push_back({base + "e-fold = sbar'",
                          fold_single(Basis::sbar, Generator::etilde, sp.a, targetc, sgn_binom,
                                      &d),
                          d});
        d.clear();
        checks.push_back(
            {base + "e-fold = s'",
             fold_single(Basis::s, Generator::etilde, sp.a, targetc, sgn_binom, &d), d});
        d.clear();
        checks.push_back(
            {base + "p-fold = s", fold_single(Basis::s, Generator::ptilde, sp.a, target, 1, &d),
             d});
        d.clear();
        checks.push_back({base + "h = sstar (monomials)",
                          same_in_monomials(SymSuperFunc::unit(Basis::h, target), Basis::sstar,
                                            target, 1, &d),
                          d});
        d.clear();
        checks.push_back({base + "e = sbar' (monomials)",
                          same_in_monomials(SymSuperFunc::unit(Basis::e, target), Basis::sbar,
                                            targetc, sgn_binom, &d),
                          d});
        d.clear();
        checks.push_back({base + "p = s (monomials)",
                          same_in_monomials(SymSuperFunc::unit(Basis::p, target), Basis::s,
                                            target, 1, &d),
                          d});
      }
    }
  }
  return checks;
}

}  // namespace superschur
