#pragma once

// Root systems, real forms and the invariants delta, q, [W_G:W_K].

#include "artifact/linalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace artifact::rootsys {

enum class RootType { A, B, C, D, BC, E, F, G };

std::string type_name(RootType t, int rank);

struct SimpleFactor {
  RootType type;
  int rank;
};

/// A reductive complex Lie algebra: simple factors plus a central torus.
struct LieType {
  std::vector<SimpleFactor> simple;
  int torus = 0;

  int dim() const;
  int rank() const;
  int positive_roots() const;
  std::vector<int> exponents() const;  // torus contributes exponent 0
  std::vector<int> degrees() const;    // exponents + 1
  Integer weyl_order() const;
  std::string str() const;

  LieType& operator+=(const LieType& o);
};

int dimension(RootType t, int rank);
int positive_root_count(RootType t, int rank);
std::vector<int> exponents(RootType t, int rank);
/// Closed formulas for classical types; cached values for E6, E7, E8, F4, G2.
Integer weyl_order(RootType t, int rank);

using IVec = std::vector<std::int64_t>;

/// Roots in doubled orthonormal coordinates, so half-integral entries stay integral.
struct RootSystem {
  RootType type;
  int rank;
  int ambient;
  std::vector<IVec> roots;
  std::vector<int> exponents;
};

RootSystem root_system(RootType t, int rank);

std::int64_t dot(const IVec& a, const IVec& b);
IVec reflect(const IVec& x, const IVec& alpha);
/// Positive roots with respect to a generic linear functional.
std::vector<IVec> positive_roots(const std::vector<IVec>& roots);
std::vector<IVec> simple_roots(const std::vector<IVec>& roots);
/// Sum of positive roots; regular and inside the root lattice.
IVec two_rho(const std::vector<IVec>& roots);
std::vector<IVec> orbit(const IVec& x0, const std::vector<IVec>& simple);
/// |W| by enumerating the orbit of a regular vector under simple reflections.
Integer weyl_order_oracle(const RootSystem& rs);

enum class Family { PGL, SL, GL, SO, SU, U, E6 };
enum class Base { Real, ComplexAsReal };
enum class E6Form { Split, IV };

struct GroupDescriptor {
  Family family = Family::SL;
  int n = 1;
  Base base = Base::Real;
  int p = 0, q = 0;  // SO signature
  E6Form e6 = E6Form::Split;
  std::vector<GroupDescriptor> product;  // non-empty for products

  bool is_product() const { return !product.empty(); }
  bool is_compact() const;
  std::string str() const;
};

/// Grammar: family(n)[/R|/C], SO(p,q), E6(split|IV), products "A x B".
/// SO(n)/R is the split form; SO(n,0), SU(n) and U(n) are compact.
GroupDescriptor parse_group(std::string_view spec);

GroupDescriptor make_group(Family f, int n, Base b = Base::Real);
GroupDescriptor make_so(int p, int q);
GroupDescriptor make_product(std::vector<GroupDescriptor> factors);

/// Complexified Lie types of G and of a maximal compact K.
LieType complexified_type(const GroupDescriptor& g);
LieType compact_type(const GroupDescriptor& g);

struct GroupInvariants {
  int d_G = 0, r_G = 0, d_K = 0, r_K = 0;
  int delta = 0, q = 0, d_symm = 0;
  std::optional<Integer> weyl_index;
  Rational delta_K_pi_exponent;  // Delta_K ~ pi^((d_K + r_K) / 2)
  std::string delta_G_over_K = "Delta_G/Delta_K";
  std::string g_type, k_type;
};

GroupInvariants invariants(const GroupDescriptor& g);

/// [W_G:W_K] as |W(Delta(g:b))| / |W(Delta(k:b))|; throws "not tabulated".
Integer weyl_index(const GroupDescriptor& g);

struct ChamberReport {
  std::size_t chambers = 0;  // Delta(g:b)-chambers inside the positive Delta(k:b)-chamber
  std::size_t reached = 0;   // of those, how many W_M reaches
  bool surjective = false;
};

/// Brute-force check that W_M maps onto W_G / W_K (restricted rank <= 4).
ChamberReport chamber_enumeration(const GroupDescriptor& g);
bool chamber_check(const GroupDescriptor& g);

struct MacdonaldVolume {
  Rational coefficient;  // rational part of prod 2 pi^(m+1) / m!
  Rational pi_exponent;
};

MacdonaldVolume macdonald_volume(const LieType& compact);
MacdonaldVolume macdonald_volume(const GroupDescriptor& compact);

/// Constant c with (dual of tr(X^2)) = c * (trace form of the dual group)
/// on the split Cartan, computed from explicit cocharacter matrices.
Rational dual_trace_form(const GroupDescriptor& g);

}  // namespace artifact::rootsys
