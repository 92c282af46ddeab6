#pragma once

// End-to-end case drivers: Table 1 row, gamma reductions, condensate verdict,
// plus the torsion ledger and the combined verify-all run.

#include "artifact/caseperiods.hpp"
#include "artifact/cases.hpp"
#include "artifact/lgamma.hpp"
#include "artifact/periodring.hpp"
#include "artifact/torsion.hpp"

#include <optional>
#include <string>
#include <vector>

namespace artifact::ggp {

/// A single injected fault, written "kind:target" on the command line:
/// m:<case>, twist:<case>, vol:<case>, table1:[<case>:]<entry>, torsion:<family>.
struct Perturbation {
  enum class Kind { M, Twist, Vol, Table1, Torsion };
  Kind kind;
  std::optional<CaseKind> which;  // empty means every case
  std::string target;             // entry name or axiom family

  static Perturbation parse(const std::string& text);  // throws std::invalid_argument
  std::string str() const;
  bool applies_to(CaseKind k) const { return !which || *which == k; }
};

struct CaseReport {
  CaseDescriptor desc;
  lgamma::Table1Row table1;
  period::PeriodScalar gamma1, gamma2, c_inf;
  bool gamma1_pass = false, gamma2_pass = false, c_inf_pass = false;
  period::CondensateResult condensate;

  bool pass() const;
  /// Name of the first failing identity, empty when everything passes.
  std::string first_failure() const;
};

CaseReport run_case(CaseKind kind, int n, const std::vector<Perturbation>& faults = {});

/// pi-power product of the three Table 1 columns.
period::PeriodScalar c_infty(CaseKind kind, int n);

struct TorsionReport {
  std::vector<torsion::Derivation> derivations;
  bool negative_control_ok = false;  // without rt2, buggerme is underdetermined
  int rotation_instances = 0, rotation_ok = 0;
  std::vector<std::string> removed_families;
  std::string text;

  bool pass() const;
  std::string first_failure() const;
};

TorsionReport run_torsion(const std::vector<Perturbation>& faults = {}, int rotation_instances = 100);

struct SelfCheck {
  std::string name;
  bool pass;
};

/// Small fixed instances of each module's internal identities.
std::vector<SelfCheck> module_self_checks();

struct VerifySummary {
  std::vector<CaseReport> cases;  // ordered by case, then n
  TorsionReport torsion;
  std::vector<SelfCheck> self_checks;
  std::string first_failure;
  bool pass() const { return first_failure.empty(); }
};

/// Throws std::invalid_argument unless 1 <= n_max <= 12, or when a fault matches nothing.
VerifySummary verify_all(int n_max, const std::vector<Perturbation>& faults = {});

std::string report_json(const CaseReport& r, int indent = 2);
std::string report_markdown(const CaseReport& r);
std::string report_text(const CaseReport& r);
std::string summary_table(const VerifySummary& s);

}  // namespace artifact::ggp
