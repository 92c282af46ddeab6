#pragma once

// Formal products of periods modulo Q* and modulo sqrt(Q*).

#include "artifact/linalg.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace artifact::period {

enum class GeneratorKind { Indeterminate, SqrtDisc, SqrtD, ImagUnit, Pi, TwoPiI };
enum class Embedding { None, Sigma, SigmaBar };
enum class Modulus { Q, SqrtQ };

struct Generator {
  std::string name;  // display name, unique within an alphabet
  GeneratorKind kind = GeneratorKind::Indeterminate;
  Embedding embedding = Embedding::None;
  std::string base;  // shared by a sigma / sigma-bar pair
};

class PeriodScalar;

/// Ordered generator alphabet. Indeterminates come first so that the
/// Hermite reduction eliminates them before touching the constants.
class Alphabet : public std::enable_shared_from_this<Alphabet> {
 public:
  class Builder {
   public:
    Builder& indeterminate(const std::string& name);
    /// Adds the pair name[s], name[sb] exchanged by complex conjugation.
    Builder& embedded(const std::string& base);
    /// A square root of a rational number, e.g. of a discriminant.
    Builder& sqrt_disc(const std::string& name);
    std::shared_ptr<const Alphabet> build() const;

   private:
    std::vector<Generator> gens_;
  };

  static std::string sigma_name(const std::string& base) { return base + "[s]"; }
  static std::string sigma_bar_name(const std::string& base) { return base + "[sb]"; }

  std::size_t size() const { return gens_.size(); }
  const Generator& generator(std::size_t i) const { return gens_.at(i); }
  std::optional<std::size_t> find(const std::string& name) const;
  std::size_t index(const std::string& name) const;  // throws std::out_of_range

  std::size_t pi_index() const { return pi_; }
  std::size_t two_pi_i_index() const { return two_pi_i_; }
  std::size_t i_index() const { return i_; }
  std::size_t sqrt_d_index() const { return sqrt_d_; }

  PeriodScalar one() const;
  PeriodScalar var(const std::string& name) const;
  PeriodScalar sigma(const std::string& base) const;
  PeriodScalar sigma_bar(const std::string& base) const;
  PeriodScalar pi() const;
  PeriodScalar two_pi_i() const;
  PeriodScalar i() const;
  PeriodScalar sqrt_d() const;
  PeriodScalar sqrt_minus_d() const;  // i * sqrt(D)

  /// Vectors that are trivial mod Q* for every relation set over this alphabet.
  const QMat& builtin_relations() const { return builtin_; }
  /// Linear action of complex conjugation on exponent vectors.
  QVec conj(const QVec& x) const;

 private:
  Alphabet() = default;
  std::vector<Generator> gens_;
  std::size_t pi_ = 0, two_pi_i_ = 0, i_ = 0, sqrt_d_ = 0;
  std::vector<std::size_t> partner_;  // conjugate generator index
  QMat builtin_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// An element of C* / Q* recorded as a rational exponent vector.
class PeriodScalar {
 public:
  PeriodScalar() = default;  // empty placeholder, assign before use
  PeriodScalar(AlphabetPtr alphabet, QVec exponents);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const QVec& exponents() const { return exps_; }
  const Rational& exponent(const std::string& name) const;

  PeriodScalar operator*(const PeriodScalar& o) const;
  PeriodScalar operator/(const PeriodScalar& o) const;
  PeriodScalar& operator*=(const PeriodScalar& o);
  PeriodScalar& operator/=(const PeriodScalar& o);
  bool operator==(const PeriodScalar& o) const { return exps_ == o.exps_; }

  PeriodScalar pow(const Rational& e) const;
  PeriodScalar inv() const { return pow(Rational(-1)); }
  PeriodScalar conj() const;
  bool is_one() const;

  /// Human-readable product, e.g. "(2*pi*i)^6 * Q_1[s]^(-1/2)".
  std::string str() const;

 private:
  void check_same(const PeriodScalar& o) const;
  AlphabetPtr alphabet_;
  QVec exps_;
};

PeriodScalar pow(const PeriodScalar& x, const Rational& e);

/// Multiplicative relations closed under conjugation; the induced
/// equivalence is membership of exponent differences in a Z-lattice.
class RelationSet {
 public:
  explicit RelationSet(AlphabetPtr alphabet);
  RelationSet(const RelationSet& other);
  RelationSet& operator=(const RelationSet& other);

  const AlphabetPtr& alphabet() const { return alphabet_; }

  /// lhs ~ rhs mod Q*; the conjugate relation is added as well.
  void add(const std::string& label, const PeriodScalar& lhs, const PeriodScalar& rhs);
  void add_trivial(const std::string& label, const PeriodScalar& x);
  /// lhs ~ rhs mod sqrt(Q*).
  void add_sqrt(const std::string& label, const PeriodScalar& lhs, const PeriodScalar& rhs);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  PeriodScalar reduce(const PeriodScalar& x, Modulus mod = Modulus::Q) const;
  bool trivial(const PeriodScalar& x, Modulus mod = Modulus::Q) const;
  bool equivalent(const PeriodScalar& a, const PeriodScalar& b, Modulus mod = Modulus::Q) const;

  /// Throws std::domain_error when the relations force a non-trivial
  /// combination of constants (pi, i, sqrt D, ...) to be rational.
  void check_consistent() const;

 private:
  const Lattice& lattice() const;

  AlphabetPtr alphabet_;
  QMat vectors_;
  std::vector<std::string> labels_;
  mutable std::mutex mu_;
  mutable std::shared_ptr<const Lattice> cache_;
};

/// x * volHB / volF1, the volume rewrite used in Beilinson-type formulas.
PeriodScalar beilinson_volume(const PeriodScalar& lstar, const PeriodScalar& vol_hb,
                              const PeriodScalar& vol_f1);

/// Result of evaluating an s-expression against relations given as s-expressions.
struct ExprReport {
  std::string canonical_q;
  std::string canonical_sqrt_q;
  bool trivial_q = false;
  bool trivial_sqrt_q = false;
};

/// Grammar:
///   expr := number | symbol | "(" op expr... ")"
///   op   := "*" | "/" | "^" | "inv" | "conj" | "sqrt"
/// Symbols: pi, i, 2pii, sqrtD, sqrt-D; anything else is an indeterminate,
/// and NAME[s] / NAME[sb] declare a conjugate pair. Relations are
/// expressions asserted to lie in Q*.
ExprReport evaluate_expression(const std::string& expr, const std::vector<std::string>& relations = {});

}  // namespace artifact::period
