#pragma once

// Rotations in R[sigma] relating two sigma-stable lattices in a 3-space.

#include "artifact/linalg.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace artifact::rotation {

/// Element a + c zeta of Q(zeta_3).
struct Eisenstein {
  Rational a, c;
  Rational norm() const { return a * a - a * c + c * c; }
  Eisenstein operator*(const Eisenstein& o) const;
  Eisenstein inverse() const;
  bool operator==(const Eisenstein& o) const { return a == o.a && c == o.c; }
  std::string str() const;
};

/// p + q sqrt(b) with b a fixed positive rational.
struct QuadraticNumber {
  Rational p, q;
  QuadraticNumber operator+(const QuadraticNumber& o) const { return {p + o.p, q + o.q}; }
  QuadraticNumber mul(const QuadraticNumber& o, const Rational& b) const {
    return {p * o.p + q * o.q * b, p * o.q + q * o.p};
  }
  bool operator==(const QuadraticNumber& o) const { return p == o.p && q == o.q; }
};
using QuadMatrix = std::vector<std::vector<QuadraticNumber>>;

struct RotationResult {
  bool ok = false;
  std::string diagnostic;  // set when a hypothesis fails or no rotation exists

  /// alpha = x + y sigma + w sigma^2 with x + y + w = 1, so alpha = (1, z).
  Rational x, y, w;
  Eisenstein z;
  Rational b;               // |z|^2 = vol(V1) / vol(V2)
  Integer b_class;          // squarefree representative of b in Q*/Q*^2
  int unit_index = 0;       // k in z = z0 * (+-zeta^k) that was selected
  bool verified = false;    // exact check of V1 = rot(S_b V2) in Q(sqrt b)

  std::string describe() const;
};

/// Rows of v1 and v2 are lattice bases; sigma acts on column vectors.
RotationResult rotation_check(const QMat& v1, const QMat& v2, const QMat& sigma);

/// Matrix of x + y sigma + w sigma^2.
QMat group_algebra_matrix(const QMat& sigma, const Rational& x, const Rational& y, const Rational& w);

/// Squarefree integer in the class of a positive rational modulo squares.
Integer squarefree_class(const Rational& b);

struct Instance {
  QMat v1, v2, sigma;
  Rational x, y, w;  // the rotation used to build v2 from v1
};

/// Random sigma-stable lattice V1 and V2 = alpha^{-1} V1 for a random alpha = (1, z).
Instance make_instance(std::uint64_t seed);

/// Reads "# rows cols" (or "rows cols") followed by rationals in row-major order.
QMat read_matrix(const std::string& path);

}  // namespace artifact::rotation
