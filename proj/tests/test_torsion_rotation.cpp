#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "artifact/rotation.hpp"
#include "artifact/torsion.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>

using namespace artifact;
using namespace artifact::torsion;

namespace {

/// Recomputes sum c_a v_a from the ledger's axiom table, independently of replay().
QVec combine(const VolumeLedger& L, const Derivation& d) {
  QVec sum(L.symbols().size(), Rational(0));
  for (const auto& [label, c] : d.combination) {
    auto it = std::find_if(L.axioms().begin(), L.axioms().end(), [&](const Axiom& a) { return a.label == label; });
    REQUIRE(it != L.axioms().end());
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += Rational(c) * it->v[i];
  }
  return sum;
}

bool has(const std::vector<std::string>& v, const std::string& x) { return std::find(v.begin(), v.end(), x) != v.end(); }

QMat cyclic() { return {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}; }

}  // namespace

TEST_CASE("all three targets are derived and replay") {
  auto L = VolumeLedger::standard();
  const std::set<std::string> allowed = {"rt1", "rt2", "RTalt", "duality", "Trivial_Volume", "trivvolume",
                                         "factorization", "fixed"};
  for (const auto& d : L.derive_all()) {
    CAPTURE(d.target);
    REQUIRE(d.derived);
    CHECK(d.replay_ok);
    CHECK_FALSE(d.uses_conditional);
    for (const auto& f : d.families) CHECK(allowed.count(f) == 1);
    auto t = L.target(d.target);
    QVec expect = t.v;
    const int k = t.mod == period::Modulus::Q ? 1 : 2;
    for (auto& x : expect) x *= k;
    CHECK(combine(L, d) == expect);
  }
}

TEST_CASE("oinkA uses the expected families") {
  auto L = VolumeLedger::standard();
  auto d = L.require(L.target("oinkA"));
  for (const char* f : {"rt1", "RTalt", "factorization", "Trivial_Volume", "duality"}) CHECK(has(d.families, f));
  CHECK_FALSE(has(d.families, "rt2"));
  auto b = L.require(L.target("buggerme"));
  CHECK(has(b.families, "rt2"));
  CHECK(has(b.families, "trivvolume"));
}

TEST_CASE("removing rt2 makes buggerme underdetermined") {
  auto L = VolumeLedger::standard();
  CHECK(L.remove_family("rt2") == 1);
  auto d = L.derive(L.target("buggerme"));
  CHECK_FALSE(d.derived);
  CHECK(d.message.find("underdetermined") != std::string::npos);
  CHECK_THROWS_WITH(L.require(L.target("buggerme")), doctest::Contains("underdetermined"));
  CHECK(L.derive(L.target("oinkA")).derived);
}

TEST_CASE("every unconditional family is needed by some target") {
  for (const char* f : {"rt1", "rt2", "RTalt", "duality", "Trivial_Volume", "trivvolume", "factorization", "fixed"}) {
    CAPTURE(f);
    auto L = VolumeLedger::standard();
    REQUIRE(L.remove_family(f) > 0);
    auto ds = L.derive_all();
    CHECK(std::any_of(ds.begin(), ds.end(), [](const Derivation& d) { return !d.derived; }));
  }
}

TEST_CASE("tampered certificates fail replay") {
  auto L = VolumeLedger::standard();
  auto d = L.require(L.target("oink1"));
  d.combination[0].second += 1;
  CHECK_FALSE(L.replay(d));
  d.combination[0].first = "no such axiom";
  CHECK_FALSE(L.replay(d));
}

TEST_CASE("rotation: identity on Z^3") {
  QMat I = linalg::identity(3);
  auto r = rotation::rotation_check(I, I, cyclic());
  REQUIRE(r.ok);
  CHECK(r.verified);
  CHECK(r.x == 1);
  CHECK(r.y == 0);
  CHECK(r.w == 0);
  CHECK(r.b == 1);
  CHECK(r.b_class == 1);
}

TEST_CASE("rotation: a rational sigma-commuting rotation is recovered") {
  // z = (3 + zeta)^2 / N(3 + zeta) = (8 + 5 zeta)/7 has |z| = 1 but is not a root of unity.
  const Rational x(6, 7), y(3, 7), w(-2, 7);
  QMat M = rotation::group_algebra_matrix(cyclic(), x, y, w);
  QMat v1 = linalg::identity(3);
  QMat v2 = linalg::multiply(v1, linalg::transpose(*linalg::inverse(M)));
  auto r = rotation::rotation_check(v1, v2, cyclic());
  REQUIRE(r.ok);
  CHECK(r.verified);
  CHECK(r.b == 1);
  // Z^3 is also fixed by sigma itself, so z is recovered up to a power of zeta.
  rotation::Eisenstein planted{Rational(8, 7), Rational(5, 7)};
  auto q = r.z * planted.inverse();
  CHECK((q == rotation::Eisenstein{1, 0} || q == rotation::Eisenstein{0, 1} || q == rotation::Eisenstein{-1, -1}));
}

TEST_CASE("rotation: a plane scaling gives the square class of |z|^2") {
  // A planted alpha whose plane component is not a unit.
  const Rational x(5, 7), y(3, 7), w(-1, 7);  // x + y + w = 1
  QMat M = rotation::group_algebra_matrix(cyclic(), x, y, w);
  QMat v1 = linalg::identity(3);
  QMat v2 = linalg::multiply(v1, linalg::transpose(*linalg::inverse(M)));
  auto r = rotation::rotation_check(v1, v2, cyclic());
  REQUIRE(r.ok);
  CHECK(r.verified);
  rotation::Eisenstein z{x - w, y - w};
  CHECK(r.b == z.norm());
  CHECK(r.b_class == rotation::squarefree_class(z.norm()));
}

TEST_CASE("rotation: 100 constructed instances round trip") {
  int ok = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto inst = rotation::make_instance(seed);
    auto r = rotation::rotation_check(inst.v1, inst.v2, inst.sigma);
    if (!r.ok || !r.verified) continue;
    QMat found = rotation::group_algebra_matrix(inst.sigma, r.x, r.y, r.w);
    bool onto = Lattice(3, linalg::multiply(inst.v2, linalg::transpose(found))).basis() == Lattice(3, inst.v1).basis();
    rotation::Eisenstein z{inst.x - inst.w, inst.y - inst.w};
    if (onto && r.b == z.norm() && r.z.norm() == z.norm()) ++ok;
  }
  CHECK(ok == 100);
}

TEST_CASE("rotation: hypothesis failures are diagnosed") {
  QMat I = linalg::identity(3);
  // Scaling the invariant direction changes vol^sigma.
  QMat v2 = {{2, 2, 2}, {1, -1, 0}, {0, 1, -1}};
  auto r = rotation::rotation_check(I, v2, cyclic());
  CHECK_FALSE(r.ok);
  CHECK(r.diagnostic.find("sigma-invariant volumes differ") != std::string::npos);
  QMat not_stable = {{1, 0, 0}, {0, 2, 0}, {0, 0, 1}};
  CHECK(rotation::rotation_check(I, not_stable, cyclic()).diagnostic.find("not sigma-stable") != std::string::npos);
  QMat swap = {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
  CHECK(rotation::rotation_check(I, I, swap).diagnostic.find("order 3") != std::string::npos);
  QMat sing = {{1, 0, 0}, {1, 0, 0}, {0, 0, 1}};
  CHECK(rotation::rotation_check(sing, I, cyclic()).diagnostic.find("not a basis") != std::string::npos);
}

TEST_CASE("square classes") {
  CHECK(rotation::squarefree_class(Rational(12)) == 3);
  CHECK(rotation::squarefree_class(Rational(1, 8)) == 2);
  CHECK(rotation::squarefree_class(Rational(9, 4)) == 1);
  CHECK(rotation::squarefree_class(Rational(7, 3)) == 21);
  CHECK_THROWS(rotation::squarefree_class(Rational(-1)));
}

TEST_CASE("matrix files") {
  const std::string path = "rotation_matrix_test.txt";
  {
    std::ofstream out(path);
    out << "# 2 3\n1 -1/2 0.5\n3 4 5\n";
  }
  auto m = rotation::read_matrix(path);
  REQUIRE(m.size() == 2);
  CHECK(m[0][1] == Rational(-1, 2));
  CHECK(m[1][2] == 5);
  {
    std::ofstream out(path);
    out << "2 2\n1 2 3\n";
  }
  CHECK_THROWS(rotation::read_matrix(path));
  std::remove(path.c_str());
}
