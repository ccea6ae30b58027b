#include "superschur/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "superschur/keyops.hpp"
#include "superschur/schur.hpp"
#include "superschur/tableaux.hpp"
#include "superschur/verify.hpp"

namespace superschur {

namespace {

using nlohmann::json;

struct BoundsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Limits {
  int max_n = 8;
  int max_m = 3;
  int max_vars = 12;
};

void check_sp_bounds(const SuperPartition& sp, const Limits& lim) {
  if (sp.total_degree() > lim.max_n)
    throw BoundsError("total degree " + std::to_string(sp.total_degree()) +
                      " exceeds ceiling " + std::to_string(lim.max_n));
  if (sp.fermionic_degree() > lim.max_m)
    throw BoundsError("fermionic degree " + std::to_string(sp.fermionic_degree()) +
                      " exceeds ceiling " + std::to_string(lim.max_m));
  if (sp.total_degree() + sp.fermionic_degree() > lim.max_vars)
    throw BoundsError("needs " + std::to_string(sp.total_degree() + sp.fermionic_degree()) +
                      " variables, ceiling " + std::to_string(lim.max_vars));
}

json sp_to_json(const SuperPartition& sp) { return json{{"a", sp.a}, {"s", sp.s}}; }

SuperPartition sp_from_arg(const std::string& text) {
  std::string t = text;
  std::size_t b = t.find_first_not_of(" \t");
  if (b != std::string::npos && t[b] == '{') {
    json j = json::parse(t);
    std::vector<int> a = j.at("a").get<std::vector<int>>();
    std::vector<int> s = j.at("s").get<std::vector<int>>();
    if (!is_valid_superpartition(a, canonical(s)))
      throw std::invalid_argument("not a superpartition: " + text);
    return SuperPartition(a, canonical(s));
  }
  return parse_superpartition(text);
}

std::string latex_sp(const SuperPartition& sp) { return "(" + sp.to_string() + ")"; }

std::string latex_basis(Basis b) {
  switch (b) {
    case Basis::m: return "m";
    case Basis::p: return "p";
    case Basis::e: return "e";
    case Basis::h: return "h";
    case Basis::s: return "s";
    case Basis::sbar: return "\\bar{s}";
    case Basis::sstar: return "s^{*}";
    case Basis::sbarstar: return "\\bar{s}^{*}";
  }
  return "?";
}

void print_func(const SymSuperFunc& f, const std::string& fmt, std::ostream& out) {
  if (fmt == "json") {
    json terms = json::array();
    for (const auto& [sp, c] : f.coeffs)
      terms.push_back(json{{"coeff", rat_to_string(c)}, {"index", sp_to_json(sp)}});
    out << json{{"basis", basis_name(f.basis)}, {"terms", terms}}.dump() << "\n";
    return;
  }
  if (fmt == "latex") {
    if (f.coeffs.empty()) {
      out << "0\n";
      return;
    }
    bool first = true;
    for (const auto& [sp, c] : f.coeffs) {
      if (!first) out << (sgn(c) >= 0 ? " + " : " - ");
      else if (sgn(c) < 0) out << "-";
      Rat ac = abs(c);
      if (ac != 1) out << rat_to_string(ac) << "\\,";
      out << latex_basis(f.basis) << "_{" << latex_sp(sp) << "}";
      first = false;
    }
    out << "\n";
    return;
  }
  out << f.to_string() << "\n";
}

int cmd_verify(const std::string& suite, int n, int m, int ell, int nx, int ny, int deg,
               std::uint64_t seed, int instances, unsigned jobs, const std::string& fmt,
               std::ostream& out) {
  verify::Report rep;
  if (suite == "pieri-oracle") {
    verify::OracleBounds b;
    b.max_n = n;
    b.max_m = m;
    b.max_ell = ell;
    b.jobs = jobs;
    rep = verify::pieri_oracle(b);
  } else if (suite == "dualities") {
    rep = verify::dualities(n, m);
  } else if (suite == "cauchy") {
    rep = verify::cauchy(nx, ny, deg);
  } else if (suite == "appendix") {
    rep = verify::appendix(seed, instances);
  } else if (suite == "tableaux") {
    rep = verify::tableaux_suite(n, m);
  } else {
    throw std::invalid_argument("unknown suite: " + suite);
  }
  if (fmt == "json") {
    out << json{{"suite", rep.suite},
                {"checked", rep.checked},
                {"failures", rep.failures},
                {"pass", rep.ok()}}
               .dump()
        << "\n";
  } else {
    out << "suite " << rep.suite << ": checked " << rep.checked << ", "
        << (rep.ok() ? "PASS" : "FAIL") << "\n";
    for (const std::string& f : rep.failures) out << "  counterexample: " << f << "\n";
  }
  return rep.ok() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schur functions in superspace: expansions, Pieri rules, Kostka and "
               "Littlewood-Richardson tables, tableaux, verification suites"};
  app.require_subcommand(1);

  Limits lim;
  if (const char* env = std::getenv("SUPERSCHUR_MAX_N")) {
    int v = std::atoi(env);
    if (v > 0) {
      lim.max_vars = std::min(v, kMaxVars);
      lim.max_n = std::max(lim.max_n, lim.max_vars - 1);
    }
  }
  std::string fmt = "plain";
  app.add_option("--format", fmt, "output format")->check(CLI::IsMember({"plain", "json", "latex"}));
  app.add_option("--max-n", lim.max_n, "total-degree ceiling");
  app.add_option("--max-m", lim.max_m, "fermionic-degree ceiling");
  app.add_option("--max-vars", lim.max_vars, "variable-count ceiling");

  // expand
  auto* cexp = app.add_subcommand("expand", "expand a Schur-family element in a basis");
  std::string lambda_arg, family_arg = "s", basis_arg = "m";
  cexp->add_option("--lambda", lambda_arg, "superpartition \"a1,a2;s1,s2\" or JSON")->required();
  cexp->add_option("--family", family_arg, "s | sbar | sstar | sbarstar");
  cexp->add_option("--basis", basis_arg, "target basis m | p | e | h | s | sbar");

  // pieri
  auto* cpi = app.add_subcommand("pieri", "combinatorial Pieri expansion");
  std::string kind_arg;
  int ell_arg = 1;
  cpi->add_option("--kind", kind_arg, "rule kind, e.g. sstar_h")->required();
  cpi->add_option("--lambda", lambda_arg, "superpartition")->required();
  cpi->add_option("--ell", ell_arg, "generator degree")->required();

  // kostka
  auto* cko = app.add_subcommand("kostka", "Kostka matrix at degree (n|m)");
  int kn = 0, km = 0;
  std::string which_arg = "Kbar";
  cko->add_option("--n", kn)->required();
  cko->add_option("--m", km)->required();
  cko->add_option("--which", which_arg, "K | Kbar")->check(CLI::IsMember({"K", "Kbar"}));

  // lr
  auto* clr = app.add_subcommand("lr", "Littlewood-Richardson expansion of a product");
  std::string gamma_arg, omega_arg = ";", lrfam_arg = "s";
  clr->add_option("--gamma", gamma_arg)->required();
  clr->add_option("--omega", omega_arg)->required();
  clr->add_option("--family", lrfam_arg, "s | sbar");

  // tableaux
  auto* cta = app.add_subcommand("tableaux", "enumerate tableaux of a shape and weight");
  std::string weight_arg, tfam_arg = "s", tomega_arg = ";";
  cta->add_option("--lambda", lambda_arg)->required();
  cta->add_option("--omega", tomega_arg, "inner shape (default empty)");
  cta->add_option("--weight", weight_arg, "letters, fermionic marked with ~: \"3~,1~,2,1\"")
      ->required();
  cta->add_option("--family", tfam_arg, "s | sbar");

  // verify
  auto* cve = app.add_subcommand("verify", "run a verification suite");
  std::string suite_arg;
  int vn = 4, vm = 2, vell = 3, vnx = 2, vny = 2, vdeg = 3, vinst = 20;
  std::uint64_t vseed = 42;
  unsigned vjobs = 0;
  cve->add_option("--suite", suite_arg, "pieri-oracle | dualities | cauchy | appendix | tableaux")
      ->required();
  cve->add_option("--n", vn);
  cve->add_option("--m", vm);
  cve->add_option("--ell", vell);
  cve->add_option("--nx", vnx);
  cve->add_option("--ny", vny);
  cve->add_option("--deg", vdeg);
  cve->add_option("--seed", vseed);
  cve->add_option("--instances", vinst);
  cve->add_option("--jobs", vjobs);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*cexp) {
      SuperPartition la = sp_from_arg(lambda_arg);
      check_sp_bounds(la, lim);
      Basis family = parse_basis(family_arg);
      if (family != Basis::s && family != Basis::sbar && family != Basis::sstar &&
          family != Basis::sbarstar)
        throw std::invalid_argument("expand: --family must be a Schur family");
      SymSuperFunc f = schur_family_in_monomials(la, family);
      Basis target = parse_basis(basis_arg);
      if (target != Basis::m) f = convert(f, target);
      print_func(f, fmt, out);
      return 0;
    }
    if (*cpi) {
      SuperPartition la = sp_from_arg(lambda_arg);
      check_sp_bounds(la, lim);
      if (ell_arg > lim.max_n) throw BoundsError("ell exceeds ceiling");
      auto terms = pieri(parse_pieri_kind(kind_arg), la, ell_arg);
      if (fmt == "json") {
        json jt = json::array();
        for (const auto& t : terms)
          jt.push_back(json{{"sign", t.sign}, {"omega", sp_to_json(t.omega)}});
        out << json{{"kind", kind_arg},
                    {"lambda", sp_to_json(la)},
                    {"ell", ell_arg},
                    {"terms", jt}}
                   .dump()
            << "\n";
      } else if (fmt == "latex") {
        std::string fam = kind_arg.substr(0, kind_arg.find('_'));
        for (const auto& t : terms)
          out << (t.sign > 0 ? "+" : "-") << latex_basis(parse_basis(fam)) << "_{"
              << latex_sp(t.omega) << "}\n";
      } else {
        for (const auto& t : terms)
          out << (t.sign > 0 ? "+1 (" : "-1 (") << t.omega.to_string() << ")\n";
      }
      return 0;
    }
    if (*cko) {
      if (kn > lim.max_n || km > lim.max_m) throw BoundsError("kostka degree exceeds ceilings");
      const KostkaMatrix& mat =
          kostka(kn, km, which_arg == "K" ? KostkaKind::K : KostkaKind::Kbar);
      if (fmt == "json") {
        json order = json::array();
        for (const auto& sp : mat.order) order.push_back(sp_to_json(sp));
        json rows = json::array();
        for (const auto& row : mat.entry) {
          json r = json::array();
          for (const Rat& v : row) r.push_back(rat_to_string(v));
          rows.push_back(r);
        }
        out << json{{"n", kn}, {"m", km}, {"which", which_arg}, {"order", order},
                    {"entries", rows}}
                   .dump()
            << "\n";
      } else {
        out << "order:";
        for (const auto& sp : mat.order) out << " (" << sp.to_string() << ")";
        out << "\n";
        for (const auto& row : mat.entry) {
          out << "[";
          for (std::size_t j = 0; j < row.size(); ++j)
            out << (j ? " " : "") << rat_to_string(row[j]);
          out << "]\n";
        }
      }
      return 0;
    }
    if (*clr) {
      SuperPartition ga = sp_from_arg(gamma_arg), om = sp_from_arg(omega_arg);
      check_sp_bounds(ga, lim);
      check_sp_bounds(om, lim);
      if (ga.total_degree() + om.total_degree() > lim.max_n ||
          ga.fermionic_degree() + om.fermionic_degree() > lim.max_m)
        throw BoundsError("product degree exceeds ceilings");
      Basis family = parse_basis(lrfam_arg);
      auto coeffs = lr(ga, om, family);
      SymSuperFunc f(family);
      for (const auto& [sp, c] : coeffs) f.add(sp, c);
      print_func(f, fmt, out);
      return 0;
    }
    if (*cta) {
      SuperPartition la = sp_from_arg(lambda_arg), om = sp_from_arg(tomega_arg);
      check_sp_bounds(la, lim);
      auto weight = parse_weight(weight_arg);
      Basis family = parse_basis(tfam_arg);
      auto tabs = enumerate_tableaux(la, om, weight, family);
      if (fmt == "json") {
        json jt = json::array();
        for (const auto& t : tabs) {
          json chain = json::array();
          for (const auto& sp : t.chain) chain.push_back(sp_to_json(sp));
          jt.push_back(json{{"sign", t.sign}, {"chain", chain}});
        }
        out << json{{"lambda", sp_to_json(la)},
                    {"omega", sp_to_json(om)},
                    {"weight", weight_to_string(weight)},
                    {"count", tabs.size()},
                    {"tableaux", jt}}
                   .dump()
            << "\n";
      } else {
        out << tabs.size() << " tableaux\n";
        for (const auto& t : tabs) {
          out << "sign " << (t.sign > 0 ? "+1" : "-1") << "\n";
          out << render(t, fmt == "latex" ? RenderFormat::latex : RenderFormat::plain);
          if (fmt == "latex") out << "\n";
        }
      }
      return 0;
    }
    if (*cve)
      return cmd_verify(suite_arg, vn, vm, vell, vnx, vny, vdeg, vseed, vinst, vjobs, fmt, out);
  } catch (const BoundsError& e) {
    err << "bounds error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace superschur
