#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "artifact/rootsys.hpp"
#include "oracles.hpp"

using namespace artifact;
using namespace artifact::rootsys;

namespace {

GroupDescriptor G(const char* spec) { return parse_group(spec); }

}  // namespace

TEST_CASE("Weyl orders agree with reflection-group closure") {
  struct Row {
    RootType t;
    char c;
    int rank;
  };
  const Row rows[] = {{RootType::A, 'A', 1}, {RootType::A, 'A', 2}, {RootType::A, 'A', 3}, {RootType::A, 'A', 4},
                      {RootType::B, 'B', 2}, {RootType::B, 'B', 3}, {RootType::B, 'B', 4}, {RootType::C, 'C', 3},
                      {RootType::D, 'D', 4}, {RootType::G, 'G', 2}, {RootType::F, 'F', 4}};
  for (const auto& r : rows) {
    CAPTURE(type_name(r.t, r.rank));
    auto closure = oracle::reflection_group_order(oracle::simple_roots(r.c, r.rank));
    CHECK(weyl_order(r.t, r.rank) == closure);
    CHECK(weyl_order_oracle(root_system(r.t, r.rank)) == closure);
  }
  CHECK(weyl_order(RootType::A, 2) == 6);
  CHECK(weyl_order(RootType::F, 4) == 1152);
}

TEST_CASE("Weyl index examples from the root-system table") {
  CHECK(weyl_index(G("SL(4)/R")) == 2);
  CHECK(weyl_index(G("SO(3,3)")) == 2);
  CHECK(weyl_index(G("SO(5,3)")) == 3);  // (k+l choose k) with k=2, l=1
  CHECK(weyl_index(G("SO(5,5)")) == 6);
  for (const char* spec : {"GL(2)/C", "SL(3)/C", "SO(4)/C", "PGL(3)/C"}) CHECK(weyl_index(G(spec)) == 1);
  CHECK_THROWS_WITH_AS(weyl_index(G("SO(3,2)")), doctest::Contains("not tabulated"), std::invalid_argument);
}

TEST_CASE("Weyl index equals chamber enumeration for small groups") {
  for (const char* spec : {"SL(3)/R", "SL(4)/R", "SL(5)/R", "PGL(4)/R", "GL(4)/R", "SO(3,3)", "SO(1,3)", "SO(5,3)",
                           "SO(3,5)", "SO(5,5)", "SL(2)/C", "SL(3)/C", "GL(3)/C", "SO(4)/C", "SO(5)/C"}) {
    CAPTURE(spec);
    auto g = G(spec);
    auto rep = chamber_enumeration(g);
    CHECK(rep.surjective);
    CHECK(Integer(rep.chambers) == weyl_index(g));
  }
}

TEST_CASE("2q + delta = dim G/K for every supported family") {
  for (const char* spec : {"SL(2)/R", "SL(5)/R", "GL(4)/R", "PGL(6)/R", "SL(3)/C", "GL(4)/C", "SO(3,2)", "SO(4,4)",
                           "SO(7)/R", "SO(6)/C", "SU(3)", "U(2)", "E6(split)", "E6(IV)",
                           "PGL(2)/R x PGL(3)/R", "SO(4)/C x SO(5)/C"}) {
    CAPTURE(spec);
    auto inv = invariants(G(spec));
    CHECK(2 * inv.q + inv.delta == inv.d_symm);
    CHECK(inv.delta >= 0);
  }
}

TEST_CASE("invariants are additive over products") {
  auto a = invariants(G("GL(3)/R")), b = invariants(G("SO(4)/C"));
  auto ab = invariants(G("GL(3)/R x SO(4)/C"));
  CHECK(ab.d_G == a.d_G + b.d_G);
  CHECK(ab.r_G == a.r_G + b.r_G);
  CHECK(ab.d_K == a.d_K + b.d_K);
  CHECK(ab.delta == a.delta + b.delta);
  CHECK(ab.q == a.q + b.q);
}

TEST_CASE("Macdonald volume has pi exponent (d_K + r_K)/2") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    if (n >= 2) CHECK(macdonald_volume(G(("SU(" + std::to_string(n) + ")").c_str())).pi_exponent ==
                      Rational(n * n - 1 + n - 1, 2));
    CHECK(macdonald_volume(G(("U(" + std::to_string(n) + ")").c_str())).pi_exponent == Rational(n * n + n, 2));
    if (n >= 2) {
      int d = n * (n - 1) / 2, r = n / 2;
      CHECK(macdonald_volume(G(("SO(" + std::to_string(n) + ",0)").c_str())).pi_exponent == Rational(d + r, 2));
    }
  }
  CHECK(macdonald_volume(G("SU(2)")).pi_exponent == 2);
  CHECK(macdonald_volume(G("U(1)")).pi_exponent == 1);
  CHECK(macdonald_volume(G("SU(2) x U(1)")).pi_exponent == 3);
}

TEST_CASE("dual trace form constants") {
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    CHECK(dual_trace_form(G(("GL(" + std::to_string(n) + ")/R").c_str())) == 1);
    CHECK(dual_trace_form(G(("GL(" + std::to_string(n) + ")/C").c_str())) == 1);
  }
  for (int n = 2; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(dual_trace_form(G(("SO(" + std::to_string(n) + ")/R").c_str())) == Rational(1, 4));
  }
}

TEST_CASE("malformed group specifications are rejected") {
  CHECK_THROWS(parse_group("XY(3)"));
  CHECK_THROWS(parse_group("GL(3) x"));
  CHECK_THROWS(parse_group("SL(0)/R"));
}
