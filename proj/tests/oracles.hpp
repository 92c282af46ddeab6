#pragma once

// Independent brute-force oracles used by the tests. Nothing here calls the
// library code it is compared against.

#include "artifact/hodge.hpp"
#include "artifact/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracle {

using artifact::Rational;

/// A Hodge structure as an explicit basis: each vector has a type (p, q), and
/// F_inf is a signed permutation of the basis that maps (p, q) to (q, p).
struct HodgeBasis {
  struct Vec {
    int p, q;
  };
  std::vector<Vec> v;
  std::vector<std::size_t> f;  // F_inf image
  std::vector<int> sign;

  std::size_t size() const { return v.size(); }
};

/// Expands a structure into a basis: conjugate pairs are swapped by F_inf,
/// middle vectors are eigenvectors with the recorded signs.
inline HodgeBasis expand(const artifact::hodge::HodgeStructure& h) {
  HodgeBasis b;
  const int w = h.weight;
  for (const auto& [p, m] : h.mult) {
    int q = w - p;
    if (p > q) continue;
    for (int k = 0; k < m; ++k) {
      if (p < q) {
        std::size_t a = b.v.size();
        b.v.push_back({p, q});
        b.v.push_back({q, p});
        b.f.push_back(a + 1);
        b.f.push_back(a);
        b.sign.push_back(1);
        b.sign.push_back(1);
      } else {
        b.v.push_back({p, p});
        b.f.push_back(b.v.size() - 1);
        b.sign.push_back(k < h.fplus ? 1 : -1);
      }
    }
  }
  return b;
}

struct Counts {
  int weight = 0;
  std::map<int, int> mult;
  int fplus = 0, fminus = 0;

  bool matches(const artifact::hodge::HodgeStructure& h) const {
    std::map<int, int> hm;
    for (const auto& [p, m] : h.mult)
      if (m) hm[p] = m;
    return weight == h.weight && mult == hm && fplus == h.fplus && fminus == h.fminus;
  }
};

/// Hodge numbers and the middle F_inf eigenvalue counts (trace of a signed permutation).
inline Counts count(const HodgeBasis& b) {
  Counts c;
  if (b.v.empty()) return c;
  c.weight = b.v[0].p + b.v[0].q;
  int mid_dim = 0, trace = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b.v[i].p + b.v[i].q != c.weight) throw std::logic_error("oracle: mixed weights");
    c.mult[b.v[i].p] += 1;
    if (b.v[i].p == b.v[i].q) {
      ++mid_dim;
      if (b.f[i] == i) trace += b.sign[i];
    }
  }
  c.fplus = (mid_dim + trace) / 2;
  c.fminus = (mid_dim - trace) / 2;
  return c;
}

inline HodgeBasis tensor(const HodgeBasis& a, const HodgeBasis& b) {
  HodgeBasis t;
  const std::size_t nb = b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      t.v.push_back({a.v[i].p + b.v[j].p, a.v[i].q + b.v[j].q});
      t.f.push_back(a.f[i] * nb + b.f[j]);
      t.sign.push_back(a.sign[i] * b.sign[j]);
    }
  return t;
}

inline HodgeBasis dual(HodgeBasis a) {
  for (auto& x : a.v) x = {-x.p, -x.q};
  return a;
}

inline HodgeBasis twist(HodgeBasis a, int j) {
  for (auto& x : a.v) x = {x.p - j, x.q - j};
  if (j % 2 != 0)
    for (auto& s : a.sign) s = -s;
  return a;
}

/// Lambda^2 or Sym^2 on the basis {e_i e_j : i < j} (resp. i <= j).
inline HodgeBasis square(const HodgeBasis& a, bool symmetric) {
  HodgeBasis s;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = symmetric ? i : i + 1; j < a.size(); ++j) {
      index[{i, j}] = s.v.size();
      s.v.push_back({a.v[i].p + a.v[j].p, a.v[i].q + a.v[j].q});
    }
  s.f.resize(s.v.size());
  s.sign.resize(s.v.size());
  for (const auto& [ij, k] : index) {
    auto [i, j] = ij;
    std::size_t fi = a.f[i], fj = a.f[j];
    int sg = a.sign[i] * a.sign[j];
    if (fi > fj) {
      std::swap(fi, fj);
      if (!symmetric) sg = -sg;
    }
    s.f[k] = index.at({fi, fj});
    s.sign[k] = sg;
  }
  return s;
}

/// Two copies exchanged by F_inf, with (p, q) in one copy sent to (q, p) in the other.
inline HodgeBasis restrict_scalars(const HodgeBasis& a) {
  HodgeBasis r;
  const std::size_t n = a.size();
  for (int copy = 0; copy < 2; ++copy)
    for (std::size_t i = 0; i < n; ++i) {
      r.v.push_back(a.v[i]);
      r.f.push_back((1 - copy) * n + a.f[i]);
      r.sign.push_back(1);
    }
  return r;
}

/// M (x) M^dual with one trivial summand removed.
inline Counts linear_adjoint(const HodgeBasis& a) {
  Counts c = count(tensor(a, dual(a)));
  c.mult[0] -= 1;
  if (c.mult[0] == 0) c.mult.erase(0);
  c.fplus -= 1;
  return c;
}

/// Order of the group generated by reflections in the given roots, by closure
/// over integer matrices (a different algorithm from orbit counting).
inline std::size_t reflection_group_order(const std::vector<std::vector<long>>& roots) {
  const std::size_t d = roots.at(0).size();
  using Mat = std::vector<Rational>;  // row-major
  auto reflection = [&](const std::vector<long>& a) {
    long aa = 0;
    for (long x : a) aa += x * x;
    Mat m(d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m[i * d + j] = Rational(i == j ? 1 : 0) - Rational(2 * a[i] * a[j], aa);
    return m;
  };
  auto mul = [&](const Mat& x, const Mat& y) {
    Mat z(d * d, Rational(0));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k) {
        if (x[i * d + k] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) z[i * d + j] += x[i * d + k] * y[k * d + j];
      }
    return z;
  };
  std::vector<Mat> gens;
  for (const auto& r : roots) gens.push_back(reflection(r));
  Mat id(d * d, Rational(0));
  for (std::size_t i = 0; i < d; ++i) id[i * d + i] = 1;
  std::set<Mat> seen = {id};
  std::vector<Mat> frontier = {id};
  while (!frontier.empty()) {
    std::vector<Mat> next;
    for (const auto& g : frontier)
      for (const auto& s : gens) {
        Mat h = mul(g, s);
        if (seen.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

/// Simple roots in standard coordinates (F4 doubled to stay integral).
inline std::vector<std::vector<long>> simple_roots(char type, int rank) {
  std::vector<std::vector<long>> out;
  auto e = [](std::size_t dim, std::vector<std::pair<std::size_t, long>> entries) {
    std::vector<long> v(dim, 0);
    for (auto [i, x] : entries) v[i] = x;
    return v;
  };
  const std::size_t r = static_cast<std::size_t>(rank);
  switch (type) {
    case 'A':
      for (std::size_t i = 0; i < r; ++i) out.push_back(e(r + 1, {{i, 1}, {i + 1, -1}}));
      break;
    case 'B':
      for (std::size_t i = 0; i + 1 < r; ++i) out.push_back(e(r, {{i, 1}, {i + 1, -1}}));
      out.push_back(e(r, {{r - 1, 1}}));
      break;
    case 'C':
      for (std::size_t i = 0; i + 1 < r; ++i) out.push_back(e(r, {{i, 1}, {i + 1, -1}}));
      out.push_back(e(r, {{r - 1, 2}}));
      break;
    case 'D':
      for (std::size_t i = 0; i + 1 < r; ++i) out.push_back(e(r, {{i, 1}, {i + 1, -1}}));
      out.push_back(e(r, {{r - 2, 1}, {r - 1, 1}}));
      break;
    case 'G':  // in the plane x + y + z = 0
      out = {e(3, {{0, 1}, {1, -1}}), e(3, {{0, -1}, {1, 2}, {2, -1}})};
      break;
    case 'F':  // doubled coordinates
      out = {e(4, {{1, 2}, {2, -2}}), e(4, {{2, 2}, {3, -2}}), e(4, {{3, 2}}), {1, -1, -1, -1}};
      break;
    default:
      throw std::invalid_argument("oracle: unsupported type");
  }
  return out;
}

/// Closed-form pi-exponents of the Table 1 columns, written out per case.
struct TableOracle {
  Rational dk_rk, du_ru, dk_du, dg_dh, l_rho, l_ad;
  int m;
};

inline TableOracle table1(int which, int n) {  // 0 = PGL/Q, 1 = PGL/E, 2 = SO even, 3 = SO odd
  TableOracle t;
  const Rational N(n);
  const int h = n / 2;
  switch (which) {
    case 0:
      t.dk_rk = 2 * n * n + 2 * n;
      t.du_ru = n * (n - 1) + 2 * h;
      t.dk_du = 2 * n - 2 * h;
      t.dg_dh = 2 * (h - n);
      t.l_rho = -Rational(2, 3) * N * (N + 1) * (N + 2);
      t.l_ad = -Rational(1, 3) * N * (N + 1) * (2 * N + 1);
      t.m = n * (n + 1);
      break;
    case 1:
      t.dk_rk = 2 * n * n + 4 * n - 2;
      t.du_ru = n * n + n;
      t.dk_du = n - 1;
      t.dg_dh = 1 - n;
      t.l_rho = -Rational(2, 3) * N * (N + 1) * (N + 2);
      t.l_ad = -Rational(1, 3) * N * (N + 1) * (2 * N + 1);
      t.m = n * (n + 1);
      break;
    case 2:
      t.dk_rk = 4 * n * n + 2 * n;
      t.du_ru = 2 * n * n;
      t.dk_du = n;
      t.dg_dh = -n;
      t.l_rho = -Rational(1, 3) * (2 * N - 1) * (2 * N) * (2 * N + 1) - N * (N + 1);
      t.l_ad = -Rational(8, 3) * (N - 1) * N * (N + 1) + N * N - 3 * N;
      t.m = 2 * n * n;
      break;
    default:
      t.dk_rk = 4 * n * n + 6 * n + 2;
      t.du_ru = 2 * n * n + 2 * n;
      t.dk_du = n + 1;
      t.dg_dh = -n - 1;
      t.l_rho = -Rational(1, 3) * (2 * N) * (2 * N + 1) * (2 * N + 2) - N * (N + 1);
      t.l_ad = -Rational(4, 3) * N * (N + 1) * (2 * N + 1) + N * (N + 1);
      t.m = 2 * n * (n + 1);
      break;
  }
  return t;
}

}  // namespace oracle
