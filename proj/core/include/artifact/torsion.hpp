#pragma once

// Volume/torsion bookkeeping for the cubic base-change example: volumes of
// cohomology groups as free symbols, relations as integer exponent vectors.

#include "artifact/linalg.hpp"
#include "artifact/periodring.hpp"

#include <string>
#include <utility>
#include <vector>

namespace artifact::torsion {

/// An exponent vector asserted to be trivial modulo Q*.
struct Axiom {
  std::string label;   // unique, e.g. "duality vol^s H^4_Pi"
  std::string family;  // rt1, rt2, RTalt, factorization, duality, Trivial_Volume, trivvolume, fixed, KP1, KP2
  std::string statement;
  QVec v;
  bool conditional = false;
};

struct Target {
  std::string label;
  std::string statement;
  QVec v;
  period::Modulus mod;
};

struct Derivation {
  std::string target;
  bool derived = false;
  period::Modulus mod = period::Modulus::Q;
  /// Integer coefficients c_a with sum c_a v_a = k * target (k = 1 mod Q*, 2 mod sqrt(Q*)).
  std::vector<std::pair<std::string, Integer>> combination;
  std::vector<std::string> families;  // families that occur with non-zero coefficient
  bool uses_conditional = false;
  bool replay_ok = false;
  std::string message;
};

class VolumeLedger {
 public:
  /// The full axiom set, including the conditional KP1 and KP2.
  static VolumeLedger standard();

  const std::vector<std::string>& symbols() const { return symbols_; }
  std::size_t symbol(const std::string& name) const;
  const std::vector<Axiom>& axioms() const { return axioms_; }
  std::vector<Target> targets() const;
  Target target(const std::string& label) const;

  /// Drops every axiom of the given family; returns how many were removed.
  std::size_t remove_family(const std::string& family);

  Derivation derive(const Target& t) const;
  /// Like derive, but throws std::runtime_error("underdetermined: ...") on failure.
  Derivation require(const Target& t) const;
  std::vector<Derivation> derive_all() const;

  /// Recomputes sum c_a v_a and compares it with k * target.
  bool replay(const Derivation& d) const;

 private:
  using Term = std::pair<std::string, Rational>;
  QVec vec(const std::vector<Term>& terms) const;
  void axiom(std::string label, std::string family, std::string statement, const std::vector<Term>& terms,
             bool conditional = false);

  std::vector<std::string> symbols_;
  std::vector<Axiom> axioms_;
};

std::string format_ledger(const VolumeLedger& ledger, const std::vector<Derivation>& ds);

}  // namespace artifact::torsion
