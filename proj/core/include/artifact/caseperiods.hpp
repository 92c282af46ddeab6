#pragma once

// Period invariants, L-volumes and Deligne periods for the four case families,
// encoded as closed-form products over a per-case alphabet.

#include "artifact/cases.hpp"
#include "artifact/periodring.hpp"

#include <string>

namespace artifact::period {

enum class Sign { Plus, Minus };

inline Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline const char* sign_str(Sign s) { return s == Sign::Plus ? "+" : "-"; }

/// Alphabet and relations of one case; immutable once built.
class CaseModel {
 public:
  CaseModel(CaseKind kind, int n);

  CaseKind kind() const { return kind_; }
  int n() const { return n_; }
  const AlphabetPtr& alphabet() const { return alphabet_; }
  const RelationSet& relations() const { return relations_; }
  /// Q for the PGL case over Q, sqrt(Q) for the cases over E.
  Modulus modulus() const { return modulus_; }

  /// Period invariant of M (Q_p) or N (R_p), in the sigma embedding over E.
  PeriodScalar q(int p) const;
  PeriodScalar r(int p) const;

  PeriodScalar vol_L(Factor factor) const;
  /// Untwisted Deligne period c^sign of M (x) N, or of Res(M (x) N) over E.
  /// `psi` replaces M by its twist by a quadratic character of sign -1.
  PeriodScalar deligne_c(Sign sign, bool psi = false) const;
  /// c^sign((M (x) N)(r)) using the Tate twist rule; `extra_twist` perturbs its (2 pi i)-exponent.
  PeriodScalar twisted_c(Sign sign, bool psi = false, int extra_twist = 0) const;
  /// (2 pi i)-exponent of the Tate twist to the centre.
  Rational twist_exponent() const;

 private:
  std::string sym(const std::string& base) const;  // adds [s] for embedded symbols
  PeriodScalar get(const std::string& base) const;
  PeriodScalar D(const Rational& k) const;  // D^k as a power of sqrtD

  CaseKind kind_;
  int n_;
  AlphabetPtr alphabet_;
  RelationSet relations_;
  Modulus modulus_;
  bool embedded_;
};

/// Knobs used to inject faults into the condensate computation.
struct CondensateOptions {
  int m_shift = 0;       // wrong (2 pi i)-power expectation
  int twist_shift = 0;   // wrong Tate-twist exponent
  int vol_shift = 0;     // extra Q_0 factor in vol(L_M)
};

struct CondensateResult {
  PeriodScalar ratio;     // c^+(...)^e / (vol L_M vol L_N), product over psi for PGL over Q
  PeriodScalar residual;  // reduced ratio / (2 pi i)^m
  std::string display;    // (2 pi i)^m times the reduced residual
  int m = 0;
  int e = 1;
  bool pass = false;
  bool minus_pass = false;  // same identity with c^- (PGL over Q); equals pass elsewhere
};

CondensateResult condensate(const CaseModel& model, const CondensateOptions& opts = {});

}  // namespace artifact::period
