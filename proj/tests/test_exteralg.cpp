#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "artifact/exteralg.hpp"

#include <random>

using namespace artifact;
using namespace artifact::exteralg;

namespace {

/// Sign of sorting the concatenated index lists of a and b, by counting inversions.
int inversion_sign(Mask a, Mask b) {
  if (a & b) return 0;
  int inv = 0;
  for (int i = 0; i < 32; ++i)
    if (a >> i & 1)
      for (int j = 0; j < i; ++j)
        if (b >> j & 1) ++inv;
  return inv % 2 ? -1 : 1;
}

/// Leibniz determinant of the minor G[rows, cols].
Rational leibniz_minor(const QMat& g, const std::vector<int>& rows, const std::vector<int>& cols) {
  std::vector<int> perm(cols.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  Rational total = 0;
  do {
    Rational term = 1;
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      term *= g[rows[i]][cols[perm[i]]];
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[j] < perm[i]) ++inv;
    }
    total += inv % 2 ? Rational(-term) : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::vector<int> indices(Mask m) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (m >> i & 1) out.push_back(i);
  return out;
}

MetricSpace skewed_space(int dim) {
  // Positive definite: identity plus a rank-one bump.
  QMat g = linalg::identity(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g[i][j] += Rational(1, (i + 1) * (j + 1));
  return MetricSpace(dim, g);
}

ExteriorElement random_element(int dim, std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-3, 3);
  ExteriorElement x(dim);
  for (Mask m = 0; m < (Mask(1) << dim); ++m)
    if (int v = c(rng)) x.add(m, v);
  return x;
}

}  // namespace

TEST_CASE("wedge signs agree with inversion counting") {
  for (Mask a = 0; a < 32; ++a)
    for (Mask b = 0; b < 32; ++b) CHECK(wedge_sign(a, b) == inversion_sign(a, b));
}

TEST_CASE("wedge is associative and graded commutative") {
  std::mt19937 rng(7);
  for (int dim = 1; dim <= 4; ++dim)
    for (int t = 0; t < 20; ++t) {
      auto a = random_element(dim, rng), b = random_element(dim, rng), c = random_element(dim, rng);
      CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    }
  auto u = ExteriorElement::vector({1, 2, 3}), v = ExteriorElement::vector({0, -1, 5});
  CHECK(wedge(u, v) == wedge(v, u) * Rational(-1));
  CHECK(wedge(u, u).is_zero());
}

TEST_CASE("inner product on basis elements is the Gram minor") {
  auto space = skewed_space(4);
  for (int d = 0; d <= 4; ++d)
    for (Mask I : masks_of_degree(4, d))
      for (Mask J : masks_of_degree(4, d)) {
        Rational expect = d == 0 ? Rational(1) : leibniz_minor(space.gram(), indices(I), indices(J));
        CHECK(inner(space, ExteriorElement::basis(4, I), ExteriorElement::basis(4, J)) == expect);
      }
}

TEST_CASE("induced linear action is multiplicative and scales the top degree by det") {
  QMat g = {{1, 2, 0}, {0, 1, -1}, {3, 0, 1}};
  std::mt19937 rng(11);
  for (int t = 0; t < 20; ++t) {
    auto a = random_element(3, rng), b = random_element(3, rng);
    CHECK(apply_linear(g, wedge(a, b)) == wedge(apply_linear(g, a), apply_linear(g, b)));
  }
  auto top = ExteriorElement::basis(3, 0b111);
  CHECK(top_coefficient(apply_linear(g, top)) == linalg::determinant(g));
}

TEST_CASE("model dimensions are k * binom(delta, j - q)") {
  for (int delta = 0; delta <= 6; ++delta)
    for (int q = 0; q <= 3; ++q)
      for (int k = 1; k <= 3; ++k) {
        auto dims = model_dims(delta, q, k);
        REQUIRE(dims.size() == static_cast<std::size_t>(delta + 1));
        for (int j = 0; j <= delta; ++j) {
          CHECK(dims[j].first == q + j);
          CHECK(dims[j].second == k * binomial(delta, j));
        }
      }
  auto d = model_dims(0, 5, 2);
  REQUIRE(d.size() == 1);
  CHECK(d[0].first == 5);
  CHECK(d[0].second == 2);
}

TEST_CASE("exhaustive sweeps for delta <= 4") {
  for (int delta = 1; delta <= 4; ++delta) {
    CAPTURE(delta);
    CHECK(adjointness_check(MetricSpace::euclidean(delta), 0));
    CHECK(adjointness_check(skewed_space(delta), 0));
    CHECK(derivation_check(delta));
    for (int q = 0; q <= 2; ++q)
      for (int k = 1; k <= 2; ++k) {
        CAPTURE(q);
        CAPTURE(k);
        auto m = make_model(delta, q, k, reversal(delta));
        CHECK(freeness_check(m));
        CHECK(poincare_adjoint_check(m));
        CHECK(isometry_check(m, MetricSpace::euclidean(delta)));
        CHECK(conjugation_check(m));
      }
  }
}

TEST_CASE("seeded random trials") {
  auto space = skewed_space(4);
  CHECK(adjointness_check(space, 1000, 1234));
  auto m = make_model(4, 1, 2, reversal(4));
  CHECK(poincare_adjoint_check(m, 1000, 1234));
  CHECK(isometry_check(m, MetricSpace::euclidean(4), 1000, 1234));
}

TEST_CASE("invalid metrics are rejected") {
  CHECK_THROWS(MetricSpace(2, QMat{{1, 2}, {0, 1}}));
  CHECK_THROWS(MetricSpace(2, QMat{{1, 0}, {0, -1}}));
}
