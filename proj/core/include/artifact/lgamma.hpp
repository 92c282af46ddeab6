#pragma once

// Archimedean Gamma factors as formal products and their pi-exponents.

#include "artifact/cases.hpp"
#include "artifact/hodge.hpp"
#include "artifact/linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace artifact::lgamma {

enum class GammaKind { R, C };

/// prod Gamma_X(s + shift)^mult; multiplicities may be negative.
class GammaProduct {
 public:
  using Key = std::pair<GammaKind, int>;

  GammaProduct() = default;
  static GammaProduct single(GammaKind kind, int shift, int mult = 1);

  GammaProduct& add(GammaKind kind, int shift, int mult);
  const std::map<Key, int>& factors() const { return factors_; }
  int multiplicity(GammaKind kind, int shift) const;

  GammaProduct operator*(const GammaProduct& o) const;
  GammaProduct& operator*=(const GammaProduct& o);
  GammaProduct pow(int k) const;
  GammaProduct inverse() const { return pow(-1); }
  /// Substitutes s -> s + k.
  GammaProduct shifted(int k) const;
  /// Merges Gamma_R(s+a) Gamma_R(s+a+1) into Gamma_C(s+a) wherever possible.
  GammaProduct normalized() const;
  /// Keeps only the factors whose shift is not in `shifts`.
  GammaProduct without_shifts(const std::vector<int>& shifts) const;

  bool operator==(const GammaProduct& o) const { return factors_ == o.factors_; }
  /// With at_zero the factors are printed as constants Gamma_X(shift).
  std::string str(bool at_zero = false) const;

 private:
  std::map<Key, int> factors_;
};

/// pi-exponent of Gamma_C(k) or Gamma_R(k) (leading coefficient at poles).
Rational gamma_pi_exponent(GammaKind kind, int k);

/// Leading Taylor coefficient at s0, as a pi-exponent modulo Q*.
Rational leading_coeff(const GammaProduct& g, int s0);

/// Hodge-to-Gamma dictionary: Gamma_C(s-p)^m for p < q, and
/// Gamma_R(s-p)^{f+} Gamma_R(s-p+1)^{f-} on the middle piece.
GammaProduct l_infinity(const hodge::HodgeStructure& h);

bool gamma_consistency(int m);

/// Delta_{G,inf} = prod Gamma_X(d_i) over the degrees of basic invariants,
/// Gamma_R for real groups and Gamma_C for complex ones; evaluated at s = 0.
GammaProduct delta_infinity(const std::string& group_spec);

struct Table1Entry {
  std::string name;
  std::string computed, expected;
  std::optional<Rational> computed_exp, expected_exp;  // set for numeric rows
  bool pass = false;

  void refresh();  // recomputes pass from the stored values
};

struct Table1Row {
  CaseKind kind;
  int n;
  std::vector<Table1Entry> entries;
  Rational dk_du, dg_dh, l_rho, l_ad, ratio;  // computed pi-exponents

  bool pass() const;
  const Table1Entry* find(const std::string& name) const;
};

/// Closed-form pi-exponents of the table columns.
struct Table1Closed {
  Rational dk_du, dg_dh, l_rho, l_ad, ratio;
  int dk_rk, du_ru;
};
Table1Closed table1_closed(CaseKind kind, int n);

/// L(1/2, rho) and L*(0, Ad) as Gamma products in the case conventions.
GammaProduct rho_factor(CaseKind kind, int n);
GammaProduct adjoint_factor(CaseKind kind, int n);

Table1Row table1_row(CaseKind kind, int n);

}  // namespace artifact::lgamma
