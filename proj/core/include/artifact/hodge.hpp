#pragma once

// Hodge numbers with F_inf eigenvalue counts on the middle piece.

#include "artifact/cases.hpp"
#include "artifact/linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace artifact::hodge {

struct HodgeStructure {
  int weight = 0;
  std::map<int, int> mult;  // p -> dim H^{p, weight - p}
  int fplus = 0, fminus = 0;
  bool over_E = false;

  int at(int p) const;
  int rank() const;
  bool has_middle() const { return weight % 2 == 0 && at(weight / 2) > 0; }
  /// Throws std::logic_error unless Hodge symmetry and the F_inf counts hold.
  void validate() const;
  std::string str() const;
  bool operator==(const HodgeStructure& o) const;
};

enum class Pairing { Linear, Orthogonal, Symplectic };

HodgeStructure unit(bool over_E = false);  // Q(0), F_inf = +1
HodgeStructure direct_sum(const HodgeStructure& a, const HodgeStructure& b);
HodgeStructure tensor(const HodgeStructure& a, const HodgeStructure& b);
HodgeStructure dual(const HodgeStructure& a);
HodgeStructure tate_twist(const HodgeStructure& a, int j);
HodgeStructure adjoint(const HodgeStructure& a, Pairing pairing);
HodgeStructure restrict_scalars(const HodgeStructure& a);

struct DeligneData {
  int dplus = 0, dminus = 0;
  Rational pplus, pminus;
};

/// Throws std::domain_error("Deligne_period violated") when F_inf is not
/// scalar on a non-zero middle piece.
DeligneData deligne_data(const HodgeStructure& a);

/// Standard motives of each case. `psi_twist` flips F_inf on the middle piece
/// (only meaningful for the PGL case over Q).
HodgeStructure standard_motive(CaseKind kind, int n, Factor factor, bool psi_twist = false);
Pairing pairing_of(CaseKind kind, Factor factor);
HodgeStructure adjoint_motive(CaseKind kind, int n, Factor factor);

/// Multiplicities of a weight-zero structure listed from level top down to -top,
/// where level l means Hodge type (l, -l).
std::vector<int> levels(const HodgeStructure& a, int top);

/// Closed-form multiplicity lists from the table layout (levels top..-top).
std::vector<int> expected_tensor_levels(CaseKind kind, int n);  // M (x) N, p from weight down to 0
std::vector<int> expected_adjoint_levels(CaseKind kind, int n, Factor factor);
/// Top level of the closed-form adjoint pattern.
int adjoint_top_level(CaseKind kind, int n, Factor factor);

}  // namespace artifact::hodge
