// Command-line front end for the verification library.

#include "artifact/exteralg.hpp"
#include "artifact/ggpcheck.hpp"
#include "artifact/hodge.hpp"
#include "artifact/lgamma.hpp"
#include "artifact/periodring.hpp"
#include "artifact/rootsys.hpp"
#include "artifact/rotation.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

using namespace artifact;

namespace {

enum class Format { Text, Json, Markdown };

Format pick_format(bool json, bool md) { return json ? Format::Json : md ? Format::Markdown : Format::Text; }

int cmd_invariants(const std::string& spec, Format fmt) {
  auto g = rootsys::parse_group(spec);
  auto inv = rootsys::invariants(g);
  auto cplx = rootsys::complexified_type(g);
  auto comp = rootsys::compact_type(g);
  std::string wi = inv.weyl_index ? to_string(*inv.weyl_index)
                                  : inv.delta == 0 ? std::string("n/a (delta = 0)")
                                                   : std::string("not tabulated");
  std::string dk = to_string(inv.delta_K_pi_exponent);
  if (fmt == Format::Json) {
    nlohmann::ordered_json j;
    j["group"] = g.str();
    j["g_type"] = inv.g_type;
    j["k_type"] = inv.k_type;
    j["d_G"] = inv.d_G;
    j["r_G"] = inv.r_G;
    j["d_K"] = inv.d_K;
    j["r_K"] = inv.r_K;
    j["delta"] = inv.delta;
    j["q"] = inv.q;
    j["d_symm"] = inv.d_symm;
    j["weyl_index"] = wi;
    j["delta_K_pi_exponent"] = dk;
    j["delta_G_over_K"] = inv.delta_G_over_K;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::vector<std::pair<std::string, std::string>> rows = {
      {"group", g.str()},
      {"g (complexified)", cplx.str()},
      {"k (complexified)", comp.str()},
      {"d_G", std::to_string(inv.d_G)},
      {"r_G", std::to_string(inv.r_G)},
      {"d_K", std::to_string(inv.d_K)},
      {"r_K", std::to_string(inv.r_K)},
      {"delta", std::to_string(inv.delta)},
      {"q", std::to_string(inv.q)},
      {"d_symm", std::to_string(inv.d_symm)},
      {"[W_G:W_K]", wi},
      {"Delta_K", "pi^(" + dk + ")"},
      {"Delta_G/Delta_K", inv.delta_G_over_K},
  };
  if (fmt == Format::Markdown) {
    std::cout << "| invariant | value |\n|---|---|\n";
    for (auto& [k, v] : rows) std::cout << "| " << k << " | " << v << " |\n";
  } else {
    for (auto& [k, v] : rows) std::cout << k << ": " << v << "\n";
  }
  return 0;
}

int cmd_cohomology_model(int delta, int q, int k) {
  auto dims = exteralg::model_dims(delta, q, k);
  std::cout << "tempered cohomology model: delta=" << delta << " q=" << q << " k=" << k << "\n";
  for (auto& [deg, dim] : dims) std::cout << "  H^" << deg << ": " << to_string(dim) << "\n";
  if (delta <= 6 && k <= 4) {
    auto m = exteralg::make_model(delta, q, k, exteralg::reversal(delta));
    auto rep = exteralg::poincare_adjoint_report(m);
    std::cout << "freeness: " << (exteralg::freeness_check(m) ? "ok" : "FAIL") << "\n"
              << "Poincare adjointness (signed): " << (rep.signed_ok ? "ok" : "FAIL") << "\n"
              << "Poincare adjointness (up to sign): " << (rep.unsigned_ok ? "ok" : "FAIL") << "\n";
  }
  return 0;
}

int cmd_hodge(const std::string& cs, int n, const std::string& show) {
  CaseKind kind = parse_case(cs);
  describe(kind, n);
  hodge::HodgeStructure h;
  if (show == "M") h = hodge::standard_motive(kind, n, Factor::M);
  else if (show == "N") h = hodge::standard_motive(kind, n, Factor::N);
  else if (show == "AdM") h = hodge::adjoint_motive(kind, n, Factor::M);
  else if (show == "AdN") h = hodge::adjoint_motive(kind, n, Factor::N);
  else h = hodge::tensor(hodge::standard_motive(kind, n, Factor::M), hodge::standard_motive(kind, n, Factor::N));
  std::cout << show << " (" << case_name(kind) << ", n=" << n << "): " << h.str() << "\n";
  auto d = hodge::deligne_data(h);
  std::cout << "d+ = " << d.dplus << ", d- = " << d.dminus << ", p+ = " << to_string(d.pplus)
            << ", p- = " << to_string(d.pminus) << "\n";
  return 0;
}

int cmd_lfactor(const std::string& cs, int n, Format fmt) {
  CaseKind kind = parse_case(cs);
  auto rho = lgamma::rho_factor(kind, n);
  auto ad = lgamma::adjoint_factor(kind, n);
  auto row = lgamma::table1_row(kind, n);
  auto cd = describe(kind, n);
  if (fmt == Format::Json) {
    nlohmann::ordered_json j;
    j["case"] = case_name(kind);
    j["n"] = n;
    j["L_inf(rho)"] = rho.str();
    j["L_inf(rho) pi exponent"] = to_string(row.l_rho);
    j["L_inf(Ad)"] = ad.str();
    j["L_inf(Ad) pi exponent"] = to_string(row.l_ad);
    j["ratio"] = to_string(row.ratio);
    j["m"] = cd.m;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (fmt == Format::Markdown) {
    std::cout << "| factor | Gamma product | pi exponent |\n|---|---|---|\n"
              << "| L_inf(1/2, rho) | " << rho.str() << " | " << to_string(row.l_rho) << " |\n"
              << "| L_inf(0, Ad) | " << ad.str() << " | " << to_string(row.l_ad) << " |\n"
              << "| ratio | | " << to_string(row.ratio) << " (m = " << cd.m << ") |\n";
    return 0;
  }
  std::cout << "L_inf(s, rho) = " << rho.str() << "  -> pi^(" << to_string(row.l_rho) << ") at s = " << cd.r << "\n"
            << "L_inf(s, Ad)  = " << ad.str() << "  -> pi^(" << to_string(row.l_ad) << ") at s = 0\n"
            << "ratio = pi^(" << to_string(row.ratio) << "), m = " << cd.m << "\n";
  return 0;
}

int cmd_period(const std::string& expr, const std::vector<std::string>& rels) {
  auto rep = period::evaluate_expression(expr, rels);
  std::cout << "mod Q*:       " << rep.canonical_q << (rep.trivial_q ? "  (trivial)" : "") << "\n"
            << "mod sqrt(Q*): " << rep.canonical_sqrt_q << (rep.trivial_sqrt_q ? "  (trivial)" : "") << "\n";
  return 0;
}

int cmd_check(const std::string& cs, int n, Format fmt) {
  auto r = ggp::run_case(parse_case(cs), n);
  if (fmt == Format::Json) std::cout << ggp::report_json(r) << "\n";
  else if (fmt == Format::Markdown) std::cout << ggp::report_markdown(r);
  else std::cout << ggp::report_text(r);
  return r.pass() ? 0 : 1;
}

int cmd_torsion() {
  auto rep = ggp::run_torsion();
  std::cout << rep.text;
  return rep.pass() ? 0 : 1;
}

int cmd_rotation(const std::string& f1, const std::string& f2, const std::string& fs) {
  auto res = rotation::rotation_check(rotation::read_matrix(f1), rotation::read_matrix(f2), rotation::read_matrix(fs));
  std::cout << res.describe();
  return res.ok && res.verified ? 0 : 1;
}

int cmd_verify_all(int n_max, const std::vector<std::string>& perturb) {
  std::vector<ggp::Perturbation> faults;
  for (const auto& p : perturb) faults.push_back(ggp::Perturbation::parse(p));
  auto s = ggp::verify_all(n_max, faults);
  std::cout << ggp::summary_table(s);
  if (!s.pass()) std::cerr << "first failing identity: " << s.first_failure << "\n";
  return s.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic checks of archimedean factors, period invariants and volume ledgers"};
  app.require_subcommand(1);

  std::string group, cs, show = "M", expr, v1, v2, sigma;
  int n = 1, delta = 1, q = 0, k = 1, n_max = 0;
  bool json = false, md = false;
  std::vector<std::string> relations, perturb;
  const std::vector<std::string> cases = {"pgl-q", "pgl-e", "so-even", "so-odd"};

  auto* inv = app.add_subcommand("invariants", "Root-system invariants of a real group");
  inv->add_option("--group", group, "e.g. \"SO(3,2)\", \"GL(3)/C x GL(2)/R\"")->required();
  auto add_format = [&](CLI::App* sc) {
    auto* j = sc->add_flag("--json", json, "JSON output");
    auto* m = sc->add_flag("--md", md, "Markdown output");
    j->excludes(m);
  };
  add_format(inv);

  auto* coh = app.add_subcommand("cohomology-model", "Dimensions and checks of the free exterior-algebra model");
  coh->add_option("--delta", delta)->required()->check(CLI::Range(0, exteralg::kMaxDim));
  coh->add_option("--q", q)->required()->check(CLI::NonNegativeNumber);
  coh->add_option("--k", k)->required()->check(CLI::PositiveNumber);

  auto case_opts = [&](CLI::App* sc) {
    sc->add_option("--case", cs, "pgl-q, pgl-e, so-even or so-odd")->required()->check(CLI::IsMember(cases));
    sc->add_option("--n", n)->required()->check(CLI::Range(1, kMaxCaseN));
  };
  auto* hod = app.add_subcommand("hodge", "Hodge numbers of the case motives");
  case_opts(hod);
  hod->add_option("--show", show)->check(CLI::IsMember({"M", "N", "AdM", "AdN", "MxN"}));

  auto* lf = app.add_subcommand("lfactor", "Archimedean L-factors of a case");
  case_opts(lf);
  add_format(lf);

  auto* per = app.add_subcommand("period", "Reduce a period expression modulo Q* and sqrt(Q*)");
  per->add_option("--expr", expr, "s-expression, e.g. \"(* (^ pi 2) (inv 2pii))\"")->required();
  per->add_option("--rel", relations, "expressions asserted to lie in Q*");

  auto* chk = app.add_subcommand("check", "Run one case end to end");
  case_opts(chk);
  add_format(chk);

  app.add_subcommand("torsion", "Derive the volume-ledger identities");

  auto* rot = app.add_subcommand("rotation", "Find the rotation relating two sigma-stable lattices");
  rot->add_option("--v1", v1)->required()->check(CLI::ExistingFile);
  rot->add_option("--v2", v2)->required()->check(CLI::ExistingFile);
  rot->add_option("--sigma", sigma)->required()->check(CLI::ExistingFile);

  auto* va = app.add_subcommand("verify-all", "Run every case, the ledger and all self-checks");
  va->add_option("--n-max", n_max)->required()->check(CLI::Range(1, kMaxCaseN));
  va->add_option("--perturb", perturb, "inject a fault: m:<case>, twist:<case>, vol:<case>, table1:[<case>:]<entry>, "
                                       "torsion:<family>");

  CLI11_PARSE(app, argc, argv);

  try {
    Format fmt = pick_format(json, md);
    if (*inv) return cmd_invariants(group, fmt);
    if (*coh) return cmd_cohomology_model(delta, q, k);
    if (*hod) return cmd_hodge(cs, n, show);
    if (*lf) return cmd_lfactor(cs, n, fmt);
    if (*per) return cmd_period(expr, relations);
    if (*chk) return cmd_check(cs, n, fmt);
    if (app.got_subcommand("torsion")) return cmd_torsion();
    if (*rot) return cmd_rotation(v1, v2, sigma);
    if (*va) return cmd_verify_all(n_max, perturb);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
