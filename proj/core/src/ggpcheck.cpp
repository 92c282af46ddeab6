#include "artifact/ggpcheck.hpp"

#include "artifact/exteralg.hpp"
#include "artifact/hodge.hpp"
#include "artifact/rootsys.hpp"
#include "artifact/rotation.hpp"

#include <json.hpp>

#include <functional>
#include <future>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace artifact::ggp {

namespace {

using period::CaseModel;
using period::PeriodScalar;

const char* kind_name(Perturbation::Kind k) {
  switch (k) {
    case Perturbation::Kind::M: return "m";
    case Perturbation::Kind::Twist: return "twist";
    case Perturbation::Kind::Vol: return "vol";
    case Perturbation::Kind::Table1: return "table1";
    case Perturbation::Kind::Torsion: return "torsion";
  }
  return "?";
}

bool is_half_integral(const Rational& x) { return is_integer(x * 2); }

std::string case_label(const CaseDescriptor& d) {
  return case_name(d.kind) + ", n=" + std::to_string(d.n);
}

nlohmann::json exponent_json(const std::optional<Rational>& x, const std::string& text) {
  if (!x) return text;
  if (is_integer(*x)) return static_cast<long long>(numerator(*x));
  return to_string(*x);
}

}  // namespace

Perturbation Perturbation::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos || colon + 1 == text.size())
    throw std::invalid_argument("perturbation must look like kind:target, got '" + text + "'");
  std::string kind = text.substr(0, colon), rest = text.substr(colon + 1);
  Perturbation p{};
  if (kind == "m" || kind == "twist" || kind == "vol") {
    p.kind = kind == "m" ? Kind::M : kind == "twist" ? Kind::Twist : Kind::Vol;
    if (rest != "all") p.which = parse_case(rest);
    return p;
  }
  if (kind == "table1") {
    p.kind = Kind::Table1;
    auto c2 = rest.find(':');
    if (c2 != std::string::npos) {
      try {
        p.which = parse_case(rest.substr(0, c2));
        rest = rest.substr(c2 + 1);
      } catch (const std::invalid_argument&) {
        // an entry name that happens to contain ':'
      }
    }
    p.target = rest;
    return p;
  }
  if (kind == "torsion") {
    p.kind = Kind::Torsion;
    p.target = rest;
    return p;
  }
  throw std::invalid_argument("unknown perturbation kind '" + kind + "' (expected m, twist, vol, table1, torsion)");
}

std::string Perturbation::str() const {
  std::string s = kind_name(kind);
  s += ":";
  if (which) s += case_name(*which) + (target.empty() ? "" : ":");
  else if (target.empty()) s += "all";
  return s + target;
}

bool CaseReport::pass() const { return first_failure().empty(); }

std::string CaseReport::first_failure() const {
  std::string where = " (" + case_label(desc) + ")";
  for (const auto& e : table1.entries)
    if (!e.pass) return "table1 " + e.name + where;
  if (!gamma1_pass) return "gamma1'" + where;
  if (!gamma2_pass) return "gamma2'" + where;
  if (!c_inf_pass) return "c_inf" + where;
  if (!condensate.pass || !condensate.minus_pass) return "condensate" + where;
  return {};
}

PeriodScalar c_infty(CaseKind kind, int n) {
  CaseModel model(kind, n);
  auto row = lgamma::table1_row(kind, n);
  return model.alphabet()->pi().pow(row.dk_du + row.dg_dh + row.ratio);
}

CaseReport run_case(CaseKind kind, int n, const std::vector<Perturbation>& faults) {
  CaseReport r;
  r.desc = describe(kind, n);
  r.table1 = lgamma::table1_row(kind, n);

  period::CondensateOptions opts;
  for (const auto& f : faults) {
    if (!f.applies_to(kind)) continue;
    switch (f.kind) {
      case Perturbation::Kind::M: opts.m_shift += 2; break;
      case Perturbation::Kind::Twist: opts.twist_shift += 1; break;
      case Perturbation::Kind::Vol: opts.vol_shift += 1; break;
      case Perturbation::Kind::Table1:
        for (auto& e : r.table1.entries) {
          if (e.name != f.target) continue;
          if (e.computed_exp) {
            *e.computed_exp += 1;
            e.computed = to_string(*e.computed_exp);
          } else {
            e.computed += " (perturbed)";
          }
          e.refresh();
        }
        break;
      case Perturbation::Kind::Torsion: break;
    }
  }

  CaseModel model(kind, n);
  const auto& A = model.alphabet();
  const auto& rels = model.relations();
  r.gamma1 = A->pi().pow(r.table1.ratio);
  r.gamma1_pass = rels.equivalent(r.gamma1, A->two_pi_i().pow(Rational(-r.desc.m)), period::Modulus::Q);
  r.gamma2 = A->pi().pow(r.table1.dk_du + r.table1.dg_dh);
  r.gamma2_pass = rels.trivial(r.gamma2, period::Modulus::Q);
  Rational c = r.table1.dk_du + r.table1.dg_dh + r.table1.ratio;
  r.c_inf = A->pi().pow(c);
  r.c_inf_pass = is_half_integral(c);
  r.condensate = period::condensate(model, opts);
  return r;
}

bool TorsionReport::pass() const { return first_failure().empty(); }

std::string TorsionReport::first_failure() const {
  for (const auto& d : derivations)
    if (!d.derived || !d.replay_ok) return "torsion " + d.target;
  for (const auto& d : derivations)
    if (d.uses_conditional) return "torsion " + d.target + " (uses a conditional axiom)";
  if (!negative_control_ok) return "torsion negative control (buggerme without rt2)";
  if (rotation_ok != rotation_instances) return "rotation round trip";
  return {};
}

TorsionReport run_torsion(const std::vector<Perturbation>& faults, int rotation_instances) {
  TorsionReport rep;
  auto ledger = torsion::VolumeLedger::standard();
  for (const auto& f : faults) {
    if (f.kind != Perturbation::Kind::Torsion) continue;
    bool conditional = false;
    for (const auto& a : ledger.axioms())
      if (a.family == f.target && a.conditional) conditional = true;
    if (conditional)
      throw std::invalid_argument("torsion family '" + f.target + "' is conditional and never used by a derivation");
    if (ledger.remove_family(f.target) == 0)
      throw std::invalid_argument("unknown torsion axiom family '" + f.target + "'");
    rep.removed_families.push_back(f.target);
  }
  rep.derivations = ledger.derive_all();

  auto control = torsion::VolumeLedger::standard();
  control.remove_family("rt2");
  rep.negative_control_ok = !control.derive(control.target("buggerme")).derived;

  rep.rotation_instances = rotation_instances;
  for (int i = 0; i < rotation_instances; ++i) {
    auto inst = rotation::make_instance(static_cast<std::uint64_t>(i) + 1);
    auto res = rotation::rotation_check(inst.v1, inst.v2, inst.sigma);
    if (!res.ok || !res.verified) continue;
    // The recovered alpha may differ from the planted one by an automorphism of V2.
    QMat planted = rotation::group_algebra_matrix(inst.sigma, inst.x, inst.y, inst.w);
    QMat found = rotation::group_algebra_matrix(inst.sigma, res.x, res.y, res.w);
    QMat u = linalg::multiply(*linalg::inverse(planted), found);
    bool same = Lattice(3, linalg::multiply(inst.v2, linalg::transpose(u))).basis() == Lattice(3, inst.v2).basis();
    rotation::Eisenstein zp{inst.x - inst.w, inst.y - inst.w};
    if (same && zp.norm() == res.b) ++rep.rotation_ok;
  }

  std::ostringstream out;
  out << torsion::format_ledger(ledger, rep.derivations);
  if (!rep.removed_families.empty()) {
    out << "removed families:";
    for (const auto& f : rep.removed_families) out << " " << f;
    out << "\n";
  }
  out << "negative control (rt2 removed, buggerme): "
      << (rep.negative_control_ok ? "underdetermined as expected" : "UNEXPECTEDLY DERIVED") << "\n";
  out << "rotation lemma round trips: " << rep.rotation_ok << "/" << rep.rotation_instances << "\n";
  rep.text = out.str();
  return rep;
}

std::vector<SelfCheck> module_self_checks() {
  std::vector<std::pair<std::string, std::function<bool()>>> checks = {
      {"rootsys chamber enumeration SL(3)/R", [] { return rootsys::chamber_check(rootsys::parse_group("SL(3)/R")); }},
      {"rootsys chamber enumeration SL(4)/R", [] { return rootsys::chamber_check(rootsys::parse_group("SL(4)/R")); }},
      {"rootsys 2q+delta = dim G/K",
       [] {
         for (CaseKind k : kAllCases)
           for (int n = 1; n <= 3; ++n) {
             auto inv = rootsys::invariants(rootsys::parse_group(group_G(k, n)));
             if (2 * inv.q + inv.delta != inv.d_symm) return false;
           }
         return true;
       }},
      {"rootsys Macdonald volume SU(3)",
       [] { return rootsys::macdonald_volume(rootsys::parse_group("SU(3)")).pi_exponent == 5; }},
      {"rootsys dual trace form GL(2)/R",
       [] { return rootsys::dual_trace_form(rootsys::parse_group("GL(2)/R")) == 1; }},
      {"rootsys dual trace form SO(5)/R",
       [] { return rootsys::dual_trace_form(rootsys::parse_group("SO(5)/R")) == Rational(1, 4); }},
      {"exteralg adjointness",
       [] { return exteralg::adjointness_check(exteralg::MetricSpace::euclidean(3), 10); }},
      {"exteralg derivation rule", [] { return exteralg::derivation_check(3); }},
      {"exteralg Poincare adjointness",
       [] { return exteralg::poincare_adjoint_check(exteralg::make_model(2, 1, 2, exteralg::reversal(2)), 5); }},
      {"exteralg freeness", [] { return exteralg::freeness_check(exteralg::make_model(3, 1, 3)); }},
      {"hodge Deligne data of M (x) N",
       [] {
         for (CaseKind k : kAllCases)
           for (int n = 1; n <= 3; ++n)
             hodge::deligne_data(hodge::tensor(hodge::standard_motive(k, n, Factor::M),
                                               hodge::standard_motive(k, n, Factor::N)));
         return true;
       }},
      {"lgamma gamma consistency", [] { return lgamma::gamma_consistency(6); }},
  };
  std::vector<SelfCheck> out;
  for (auto& [name, fn] : checks) {
    bool ok = false;
    try {
      ok = fn();
    } catch (const std::exception&) {
      ok = false;
    }
    out.push_back({name, ok});
  }
  return out;
}

VerifySummary verify_all(int n_max, const std::vector<Perturbation>& faults) {
  if (n_max < 1 || n_max > kMaxCaseN)
    throw std::invalid_argument("n-max must lie in [1, " + std::to_string(kMaxCaseN) + "], got " +
                                std::to_string(n_max));
  VerifySummary s;
  std::vector<std::future<CaseReport>> jobs;
  for (CaseKind k : kAllCases)
    for (int n = 1; n <= n_max; ++n) jobs.push_back(std::async(std::launch::async, run_case, k, n, faults));
  for (auto& j : jobs) s.cases.push_back(j.get());

  for (const auto& f : faults) {
    if (f.kind != Perturbation::Kind::Table1) continue;
    bool hit = false;
    for (const auto& r : s.cases)
      if (f.applies_to(r.desc.kind) && r.table1.find(f.target)) hit = true;
    if (!hit) throw std::invalid_argument("perturbation " + f.str() + " matches no Table 1 entry");
  }

  s.torsion = run_torsion(faults);
  s.self_checks = module_self_checks();

  for (const auto& r : s.cases)
    if (auto f = r.first_failure(); !f.empty()) {
      s.first_failure = f;
      return s;
    }
  if (auto f = s.torsion.first_failure(); !f.empty()) {
    s.first_failure = f;
    return s;
  }
  for (const auto& c : s.self_checks)
    if (!c.pass) {
      s.first_failure = "self-check " + c.name;
      return s;
    }
  return s;
}

std::string report_json(const CaseReport& r, int indent) {
  nlohmann::ordered_json j;
  j["case"] = case_name(r.desc.kind);
  j["n"] = r.desc.n;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& e : r.table1.entries) {
    nlohmann::ordered_json row;
    row["name"] = e.name;
    row["computed_exp"] = exponent_json(e.computed_exp, e.computed);
    row["expected_exp"] = exponent_json(e.expected_exp, e.expected);
    row["pass"] = e.pass;
    rows.push_back(row);
  }
  j["table1"] = rows;
  nlohmann::ordered_json c;
  c["residual"] = r.condensate.residual.str();
  c["m"] = r.condensate.m;
  c["pass"] = r.condensate.pass && r.condensate.minus_pass;
  j["condensate"] = c;
  return j.dump(indent);
}

std::string report_markdown(const CaseReport& r) {
  std::ostringstream out;
  out << "### " << case_name(r.desc.kind) << ", n = " << r.desc.n << "\n\n"
      << "r = " << r.desc.r << ", m = " << r.desc.m << ", e = " << r.desc.e << "\n\n"
      << "| entry | computed | expected | pass |\n|---|---|---|---|\n";
  for (const auto& e : r.table1.entries)
    out << "| " << e.name << " | " << e.computed << " | " << e.expected << " | " << (e.pass ? "yes" : "**no**")
        << " |\n";
  out << "\n- gamma1' = " << r.gamma1.str() << (r.gamma1_pass ? " (ok)" : " (FAIL)") << "\n"
      << "- gamma2' = " << r.gamma2.str() << (r.gamma2_pass ? " (ok)" : " (FAIL)") << "\n"
      << "- c_inf = " << r.c_inf.str() << (r.c_inf_pass ? " (half-integral)" : " (FAIL)") << "\n"
      << "- condensate = " << r.condensate.display << ", residual " << r.condensate.residual.str()
      << (r.condensate.pass && r.condensate.minus_pass ? " (pass)" : " (FAIL)") << "\n";
  return out.str();
}

std::string report_text(const CaseReport& r) {
  std::ostringstream out;
  out << case_label(r.desc) << "  r=" << r.desc.r << " m=" << r.desc.m << " e=" << r.desc.e << "\n";
  std::size_t w = 0;
  for (const auto& e : r.table1.entries) w = std::max(w, e.name.size());
  for (const auto& e : r.table1.entries)
    out << "  " << std::left << std::setw(static_cast<int>(w)) << e.name << "  " << (e.pass ? "ok  " : "FAIL") << "  "
        << e.computed << (e.pass ? "" : "  expected " + e.expected) << "\n";
  out << "  gamma1' = " << r.gamma1.str() << (r.gamma1_pass ? "  ok" : "  FAIL") << "\n"
      << "  gamma2' = " << r.gamma2.str() << (r.gamma2_pass ? "  ok" : "  FAIL") << "\n"
      << "  c_inf = " << r.c_inf.str() << (r.c_inf_pass ? "  ok" : "  FAIL") << "\n"
      << "  condensate = " << r.condensate.display << "  residual " << r.condensate.residual.str()
      << (r.condensate.pass && r.condensate.minus_pass ? "  ok" : "  FAIL") << "\n";
  return out.str();
}

std::string summary_table(const VerifySummary& s) {
  std::ostringstream out;
  out << std::left << std::setw(10) << "case" << std::setw(4) << "n" << std::setw(6) << "m" << std::setw(8)
      << "table1" << std::setw(8) << "gamma" << std::setw(11) << "condensate" << "\n";
  for (const auto& r : s.cases) {
    bool gam = r.gamma1_pass && r.gamma2_pass && r.c_inf_pass;
    out << std::setw(10) << case_name(r.desc.kind) << std::setw(4) << r.desc.n << std::setw(6) << r.desc.m
        << std::setw(8) << (r.table1.pass() ? "ok" : "FAIL") << std::setw(8) << (gam ? "ok" : "FAIL")
        << std::setw(11) << (r.condensate.pass && r.condensate.minus_pass ? "ok" : "FAIL") << "\n";
  }
  out << "torsion ledger: " << (s.torsion.pass() ? "ok" : "FAIL") << " (" << s.torsion.rotation_ok << "/"
      << s.torsion.rotation_instances << " rotation round trips)\n";
  for (const auto& c : s.self_checks) out << "self-check " << c.name << ": " << (c.pass ? "ok" : "FAIL") << "\n";
  out << (s.pass() ? "ALL PASS" : "FAILED: " + s.first_failure) << "\n";
  return out.str();
}

}  // namespace artifact::ggp
