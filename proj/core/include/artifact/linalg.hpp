#pragma once

// Exact rational and integer linear algebra shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace artifact {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;  // row-major
using ZVec = std::vector<Integer>;
using ZMat = std::vector<ZVec>;

std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

/// Parses "a", "-a/b" or a terminating decimal such as "0.25".
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& x);
Integer floor_of(const Rational& x);
Integer binomial(int n, int k);
Integer factorial(int n);

namespace linalg {

QMat zeros(std::size_t rows, std::size_t cols);
QMat identity(std::size_t n);
QMat transpose(const QMat& a);
QMat multiply(const QMat& a, const QMat& b);
QVec apply(const QMat& a, const QVec& v);      // a * v (column convention)
QVec row_apply(const QVec& v, const QMat& a);  // v * a (row convention)
Rational dot(const QVec& a, const QVec& b);
QMat add(const QMat& a, const QMat& b);
QMat scale(const QMat& a, const Rational& s);
bool equal(const QMat& a, const QMat& b);

/// Reduced row echelon form; pivot columns are reported when requested.
QMat rref(QMat a, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const QMat& a);
Rational determinant(QMat a);
std::optional<QMat> inverse(const QMat& a);

/// Some solution of a * x = b, or nullopt when inconsistent.
std::optional<QVec> solve(const QMat& a, const QVec& b);

/// Rows form a basis of {x : a * x = 0}.
QMat nullspace(const QMat& a);

QMat submatrix(const QMat& a, const std::vector<std::size_t>& rows,
               const std::vector<std::size_t>& cols);

ZMat to_integer(const QMat& a);  // throws if an entry is not integral
QMat to_rational(const ZMat& a);

/// Row Hermite normal form of an integer matrix; zero rows are dropped.
/// Pivots are positive and entries above a pivot lie in [0, pivot).
ZMat hermite(ZMat a);

/// Rows form a Z-basis of {x in Z^m : x * a = 0} for an m x n integer matrix.
ZMat integer_left_kernel(const ZMat& a);

}  // namespace linalg

/// A full or partial Z-lattice in Q^d, stored as a canonical Hermite basis.
class Lattice {
 public:
  explicit Lattice(std::size_t dim = 0);
  Lattice(std::size_t dim, const QMat& generators);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }
  const QMat& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Canonical representative of v modulo the lattice.
  QVec reduce(QVec v) const;
  bool contains(const QVec& v) const;
  Lattice scaled(const Rational& s) const;

 private:
  std::size_t dim_;
  QMat basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace artifact
