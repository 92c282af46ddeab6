// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include "artifact/caseperiods.hpp"
#include "artifact/exteralg.hpp"
#include "artifact/ggpcheck.hpp"
#include "artifact/hodge.hpp"
#include "artifact/lgamma.hpp"
#include "artifact/rootsys.hpp"
#include "artifact/rotation.hpp"
#include "artifact/torsion.hpp"
#include "oracles.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace artifact;

namespace {

// Pinned limits. All mathematical comparisons are exact (zero tolerance).
constexpr double kTable1Seconds = 5.0;
constexpr double kCancellationSeconds = 5.0;
constexpr double kRootSystemSeconds = 10.0;
constexpr int kMaxN = 8;
constexpr int kRandomTrials = 1000;
constexpr int kRotationInstances = 100;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

int case_index(CaseKind k) {
  return static_cast<int>(std::find(kAllCases.begin(), kAllCases.end(), k) - kAllCases.begin());
}

Outcome table1() {
  Outcome o;
  std::size_t entries = 0;
  for (CaseKind k : kAllCases)
    for (int n = 1; n <= kMaxN; ++n) {
      auto row = lgamma::table1_row(k, n);
      auto t = oracle::table1(case_index(k), n);
      std::string where = case_name(k) + " n=" + std::to_string(n);
      for (const auto& e : row.entries) o.require(e.pass, where + " entry " + e.name);
      o.require(row.dk_du == t.dk_du && row.dg_dh == t.dg_dh, where + " measure columns");
      o.require(row.l_rho == t.l_rho && row.l_ad == t.l_ad && row.ratio == -t.m, where + " L-factor columns");
      entries += row.entries.size();
    }
  o.require(entries >= 128, "fewer than 128 entries");
  if (o.pass) o.detail = std::to_string(entries) + " entries";
  return o;
}

Outcome cancellation() {
  Outcome o;
  for (CaseKind k : kAllCases)
    for (int n = 1; n <= kMaxN; ++n) {
      period::CaseModel model(k, n);
      auto c = period::condensate(model);
      std::string where = case_name(k) + " n=" + std::to_string(n);
      o.require(c.m == oracle::table1(case_index(k), n).m, where + " m");
      o.require(c.pass && c.minus_pass && c.residual.is_one(), where + " residual " + c.residual.str());
    }
  if (o.pass) o.detail = "residual (2 pi i)^m exactly, 32 runs";
  return o;
}

Outcome root_systems() {
  Outcome o;
  int chambers = 0;
  for (const char* spec : {"SL(3)/R", "SL(4)/R", "SL(5)/R", "PGL(4)/R", "GL(4)/R", "SO(3,3)", "SO(1,3)", "SO(5,3)",
                           "SO(3,5)", "SO(5,5)", "SO(1,5)", "SL(2)/C", "SL(3)/C", "GL(4)/C", "SO(4)/C", "SO(5)/C"}) {
    auto g = rootsys::parse_group(spec);
    auto rep = rootsys::chamber_enumeration(g);
    o.require(rep.surjective && Integer(rep.chambers) == rootsys::weyl_index(g), std::string("chambers ") + spec);
    ++chambers;
  }
  for (CaseKind k : kAllCases)
    for (int n = 1; n <= kMaxN; ++n)
      for (const auto& spec : {group_G(k, n), group_H(k, n)}) {
        auto inv = rootsys::invariants(rootsys::parse_group(spec));
        o.require(2 * inv.q + inv.delta == inv.d_symm, "2q+delta " + spec);
      }
  for (int n = 1; n <= 6; ++n) {
    auto ns = std::to_string(n);
    auto check = [&](const std::string& spec) {
      auto g = rootsys::parse_group(spec);
      auto inv = rootsys::invariants(g);
      o.require(rootsys::macdonald_volume(g).pi_exponent == Rational(inv.d_K + inv.r_K, 2), "Macdonald " + spec);
    };
    check("U(" + ns + ")");
    if (n >= 2) check("SU(" + ns + ")");
    if (n >= 2) check("SO(" + ns + ",0)");
  }
  if (o.pass) o.detail = std::to_string(chambers) + " chamber enumerations";
  return o;
}

Outcome exterior_algebra() {
  using namespace exteralg;
  Outcome o;
  for (int delta = 1; delta <= 4; ++delta) {
    o.require(adjointness_check(MetricSpace::euclidean(delta), 0), "adjointness delta=" + std::to_string(delta));
    for (int q = 0; q <= 2; ++q)
      for (int k = 1; k <= 2; ++k) {
        auto m = make_model(delta, q, k, reversal(delta));
        std::string where = " delta=" + std::to_string(delta) + " q=" + std::to_string(q);
        o.require(poincare_adjoint_check(m), "Poincare" + where);
        o.require(freeness_check(m), "freeness" + where);
        o.require(isometry_check(m, MetricSpace::euclidean(delta)), "isometry" + where);
      }
  }
  auto m = make_model(4, 1, 2, reversal(4));
  o.require(adjointness_check(MetricSpace::euclidean(4), kRandomTrials), "random adjointness");
  o.require(poincare_adjoint_check(m, kRandomTrials), "random Poincare");
  o.require(isometry_check(m, MetricSpace::euclidean(4), kRandomTrials), "random isometry");
  if (o.pass) o.detail = "exhaustive delta<=4 plus " + std::to_string(kRandomTrials) + " seeded trials";
  return o;
}

Outcome torsion_ledger() {
  Outcome o;
  auto L = torsion::VolumeLedger::standard();
  for (const auto& d : L.derive_all())
    o.require(d.derived && d.replay_ok && !d.uses_conditional, "derivation of " + d.target);
  auto without = torsion::VolumeLedger::standard();
  without.remove_family("rt2");
  o.require(!without.derive(without.target("buggerme")).derived, "buggerme derivable without rt2");
  auto rep = ggp::run_torsion({}, kRotationInstances);
  o.require(rep.rotation_ok == kRotationInstances,
            "rotation round trips " + std::to_string(rep.rotation_ok) + "/" + std::to_string(kRotationInstances));
  if (o.pass) o.detail = "3 targets derived, negative control ok, " + std::to_string(rep.rotation_ok) + " rotations";
  return o;
}

Outcome hodge_oracles() {
  using namespace hodge;
  Outcome o;
  for (CaseKind k : kAllCases)
    for (int n = 1; n <= kMaxN; ++n) {
      std::string where = case_name(k) + " n=" + std::to_string(n);
      auto M = standard_motive(k, n, Factor::M), N = standard_motive(k, n, Factor::N);
      o.require(oracle::count(oracle::tensor(oracle::expand(M), oracle::expand(N))).matches(tensor(M, N)),
                "tensor " + where);
      for (Factor f : {Factor::M, Factor::N}) {
        auto h = f == Factor::M ? M : N;
        auto b = oracle::expand(h);
        oracle::Counts expect;
        switch (pairing_of(k, f)) {
          case Pairing::Linear: expect = oracle::linear_adjoint(b); break;
          case Pairing::Orthogonal: expect = oracle::count(oracle::twist(oracle::square(b, false), h.weight)); break;
          case Pairing::Symplectic: expect = oracle::count(oracle::twist(oracle::square(b, true), h.weight)); break;
        }
        o.require(expect.matches(adjoint_motive(k, n, f)), "adjoint " + where);
      }
    }
  if (o.pass) o.detail = "tensor and adjoint, 4 cases x n<=8";
  return o;
}

Outcome trace_form() {
  Outcome o;
  for (int n = 1; n <= 4; ++n) {
    auto ns = std::to_string(n);
    o.require(rootsys::dual_trace_form(rootsys::parse_group("GL(" + ns + ")/R")) == 1, "GL(" + ns + ")/R");
    o.require(rootsys::dual_trace_form(rootsys::parse_group("GL(" + ns + ")/C")) == 1, "GL(" + ns + ")/C");
  }
  for (int n = 2; n <= 5; ++n) {
    auto ns = std::to_string(n);
    o.require(rootsys::dual_trace_form(rootsys::parse_group("SO(" + ns + ")/R")) == Rational(1, 4), "SO(" + ns + ")");
  }
  if (o.pass) o.detail = "GL_n -> 1, SO_n -> 1/4";
  return o;
}

struct RunResult {
  int status;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(ARTIFACT_CLI_PATH) + " " + args + " 2>&1";
  RunResult r{-1, {}};
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, p)) r.output.append(buf, got);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

Outcome cli() {
  Outcome o;
  auto ok = run_cli("verify-all --n-max 8");
  o.require(ok.status == 0, "verify-all --n-max 8 exited " + std::to_string(ok.status));
  o.require(run_cli("verify-all --n-max 0").status != 0, "n-max 0 accepted");
  const char* faults[] = {"m:pgl-q",         "m:so-odd",         "twist:pgl-e",        "twist:so-even",
                          "vol:pgl-q",       "vol:so-odd",       "table1:gamma1'",     "table1:gamma2'",
                          "table1:c_inf",    "table1:so-even:MxN", "torsion:rt1",      "torsion:rt2",
                          "torsion:RTalt",   "torsion:duality",  "torsion:Trivial_Volume", "torsion:trivvolume",
                          "torsion:factorization", "torsion:fixed"};
  int caught = 0;
  for (const char* f : faults) {
    auto r = run_cli(std::string("verify-all --n-max 8 --perturb \"") + f + "\"");
    bool named = r.output.find("first failing identity:") != std::string::npos;
    if (std::string(f).rfind("m:", 0) == 0) named = named && r.output.find("condensate") != std::string::npos;
    o.require(r.status == 1 && named, std::string("perturbation ") + f + " not caught");
    caught += r.status == 1 && named;
  }
  if (o.pass) o.detail = "exit 0 unperturbed, " + std::to_string(caught) + " perturbations caught";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double limit;  // seconds, 0 = none
  };
  const Criterion criteria[] = {
      {"1 Table 1 exponents (4 cases x n<=8)", table1, kTable1Seconds},
      {"2 Condensate cancellation to (2 pi i)^m", cancellation, kCancellationSeconds},
      {"3 Root systems: Weyl index, 2q+delta, Macdonald", root_systems, kRootSystemSeconds},
      {"4 Exterior algebra sweeps and random trials", exterior_algebra, 0},
      {"5 Torsion ledger and rotation lemma", torsion_ledger, 0},
      {"6 Hodge adjoint and tensor vs oracles", hodge_oracles, 0},
      {"7 Dual trace form constants", trace_form, 0},
      {"8 CLI verify-all and fault injection", cli, 0},
  };
  bool all = true;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit > 0 && secs > c.limit) {
      o.pass = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(c.limit)) + " s limit)";
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (o.pass ? "PASS " : "FAIL ") << c.name << "  [" << secs << " s]  " << o.detail;
    std::cout << line.str() << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
