#pragma once

// Exterior algebra over Q^delta with a metric, and the free module model
// of tempered cohomology it acts on.

#include "artifact/linalg.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace artifact::exteralg {

using Mask = std::uint32_t;  // bit i set <=> e_{i+1} occurs

inline constexpr std::uint32_t kDefaultSeed = 0x5eed2024u;
inline constexpr int kMaxDim = 16;

int popcount(Mask m);

/// Sign of e_a ^ e_b relative to e_{a|b}; zero when a and b overlap.
int wedge_sign(Mask a, Mask b);

class MetricSpace {
 public:
  MetricSpace(int dim, QMat gram);  // validates symmetry and positivity
  static MetricSpace euclidean(int dim);

  int dim() const { return dim_; }
  const QMat& gram() const { return gram_; }

 private:
  int dim_;
  QMat gram_;
};

class ExteriorElement {
 public:
  explicit ExteriorElement(int dim);
  static ExteriorElement basis(int dim, Mask m, const Rational& c = 1);
  static ExteriorElement scalar(int dim, const Rational& c);
  static ExteriorElement vector(const QVec& v);

  int dim() const { return dim_; }
  const std::map<Mask, Rational>& terms() const { return terms_; }
  Rational coeff(Mask m) const;
  bool is_zero() const { return terms_.empty(); }
  /// Degree of a homogeneous element; -1 for zero, throws if mixed.
  int degree() const;

  ExteriorElement& add(Mask m, const Rational& c);
  ExteriorElement operator+(const ExteriorElement& o) const;
  ExteriorElement operator-(const ExteriorElement& o) const;
  ExteriorElement operator*(const Rational& s) const;
  bool operator==(const ExteriorElement& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }

 private:
  void check_same(const ExteriorElement& o) const;
  int dim_;
  std::map<Mask, Rational> terms_;
};

ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b);

/// Interior product with a linear functional; a degree -1 derivation.
ExteriorElement contract(const QVec& functional, const ExteriorElement& b);

/// Induced action of a linear map g (columns = images of e_i) on the algebra.
ExteriorElement apply_linear(const QMat& g, const ExteriorElement& a);

/// Metric pairing <e_I, e_J> = det(G[I,J]) extended bilinearly.
Rational inner(const MetricSpace& space, const ExteriorElement& a, const ExteriorElement& b);

/// Coefficient of e_1 ^ ... ^ e_dim.
Rational top_coefficient(const ExteriorElement& a);

std::vector<Mask> masks_of_degree(int dim, int degree);

/// <X ^ A, B> = <A, (G X) contracted into B>: exhaustive basis sweep plus
/// `trials` seeded random rational triples.
bool adjointness_check(const MetricSpace& space, int trials, std::uint32_t seed = kDefaultSeed);

/// Leibniz rule for contraction, checked on all basis pairs.
bool derivation_check(int dim);

std::vector<std::pair<int, Integer>> model_dims(int delta, int q, int k);

struct TemperedCohomologyModel {
  int delta = 0, q = 0, k = 1;
  QMat generators;  // k x k; rows are the degree-q generators in a free basis
  QMat w;           // long Weyl element, a signed permutation with w^2 = 1
  QMat pairing;     // k x k pairing of generators in the top-degree form
};

/// Free model with identity generators and pairing; w defaults to the identity.
TemperedCohomologyModel make_model(int delta, int q, int k, QMat w = {});
QMat reversal(int delta, int sign = 1);  // sign times the order-reversing permutation

/// Module element: one exterior-algebra coefficient per free generator.
using ModuleElement = std::vector<ExteriorElement>;

ModuleElement right_action(const ModuleElement& f, const ExteriorElement& x);
ModuleElement left_action(const ExteriorElement& x, const ModuleElement& f);
Rational poincare_pairing(const TemperedCohomologyModel& m, const ModuleElement& f1, const ModuleElement& f2);

bool freeness_check(const TemperedCohomologyModel& m);

struct PoincareReport {
  bool signed_ok = true;    // B(f1 X, f2) = B(f1, (wX) f2)
  bool unsigned_ok = true;  // |B(f1 X, f2)| = |B(f1, f2 (wX))|
  std::size_t cases = 0;
  bool ok() const { return signed_ok && unsigned_ok; }
};

PoincareReport poincare_adjoint_report(const TemperedCohomologyModel& m, int trials = 0,
                                       std::uint32_t seed = kDefaultSeed);
bool poincare_adjoint_check(const TemperedCohomologyModel& m, int trials = 0, std::uint32_t seed = kDefaultSeed);

/// ||omega . nu||^2 = ||omega||^2 ||nu||^2 for omega of degree q.
bool isometry_check(const TemperedCohomologyModel& m, const MetricSpace& space, int trials = 0,
                    std::uint32_t seed = kDefaultSeed);

/// The twisted real structure id (x) w commutes with the action.
bool conjugation_check(const TemperedCohomologyModel& m);

}  // namespace artifact::exteralg
