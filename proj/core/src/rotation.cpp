#include "artifact/rotation.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace artifact::rotation {

namespace {

using linalg::multiply;
using linalg::transpose;

Rational round_half(const Rational& x) { return Rational(floor_of(x + Rational(1, 2))); }

Rational norm2(const QVec& u) { return u[0] * u[0] - u[0] * u[1] + u[1] * u[1]; }
Rational pair2(const QVec& u, const QVec& v) {
  return u[0] * v[0] + u[1] * v[1] - (u[0] * v[1] + u[1] * v[0]) / 2;
}

/// Shortest non-zero vector of a rank-2 lattice for the norm a^2 - ac + c^2.
QVec gauss_reduce(QVec u, QVec v) {
  for (;;) {
    if (norm2(u) > norm2(v)) std::swap(u, v);
    Rational mu = round_half(pair2(u, v) / norm2(u));
    if (mu == 0) return u;
    v[0] -= mu * u[0];
    v[1] -= mu * u[1];
    if (norm2(v) >= norm2(u)) return u;
  }
}

/// The plane (1 - P) V_R identified with Q(zeta) through a cyclic vector omega.
struct PlaneChart {
  QMat P;          // projector onto the sigma-invariant line
  QMat frame;      // 3 x 2, columns omega and sigma omega
  QVec fixed_dir;  // spans the invariant line

  Eisenstein coords(const QVec& u) const {
    auto s = linalg::solve(frame, linalg::apply(linalg::add(linalg::identity(3), linalg::scale(P, -1)), u));
    if (!s) throw std::logic_error("rotation: plane chart failed");
    return {(*s)[0], (*s)[1]};
  }
};

PlaneChart make_chart(const QMat& sigma) {
  PlaneChart ch;
  QMat s2 = multiply(sigma, sigma);
  ch.P = linalg::scale(linalg::add(linalg::add(linalg::identity(3), sigma), s2), Rational(1, 3));
  QMat Q = linalg::add(linalg::identity(3), linalg::scale(ch.P, -1));
  for (std::size_t k = 0; k < 3; ++k) {
    QVec e(3, Rational(0));
    e[k] = 1;
    QVec pe = linalg::apply(ch.P, e);
    if (ch.fixed_dir.empty() && std::any_of(pe.begin(), pe.end(), [](const Rational& r) { return r != 0; }))
      ch.fixed_dir = pe;
    QVec om = linalg::apply(Q, e);
    if (ch.frame.empty() && std::any_of(om.begin(), om.end(), [](const Rational& r) { return r != 0; })) {
      QVec so = linalg::apply(sigma, om);
      ch.frame = QMat(3, QVec(2));
      for (std::size_t i = 0; i < 3; ++i) {
        ch.frame[i][0] = om[i];
        ch.frame[i][1] = so[i];
      }
    }
  }
  return ch;
}

Rational abs_det(const QMat& m) {
  Rational d = linalg::determinant(m);
  return d < 0 ? Rational(-d) : d;
}

/// Squared length of a generator of V intersected with the invariant line.
Rational invariant_volume(const QMat& basis, const PlaneChart& ch) {
  QMat Q = linalg::add(linalg::identity(3), linalg::scale(ch.P, -1));
  QMat proj = multiply(basis, transpose(Q));  // rows: plane parts of the basis vectors
  Integer common = 1;
  for (const auto& r : proj)
    for (const auto& x : r) common = boost::multiprecision::lcm(common, Integer(denominator(x)));
  ZMat k = linalg::integer_left_kernel(linalg::to_integer(linalg::scale(proj, Rational(common))));
  if (k.size() != 1) throw std::logic_error("rotation: invariant sublattice is not of rank one");
  QVec g = linalg::row_apply(linalg::to_rational(k)[0], basis);
  return linalg::dot(g, g);
}

Eisenstein ideal_generator(const QMat& basis, const PlaneChart& ch) {
  QMat gens;
  for (const auto& v : basis) {
    Eisenstein e = ch.coords(v);
    gens.push_back({e.a, e.c});
  }
  Lattice L(2, gens);
  if (L.rank() != 2) throw std::logic_error("rotation: plane projection is degenerate");
  QVec g = gauss_reduce(L.basis()[0], L.basis()[1]);
  return {g[0], g[1]};
}

bool maps_onto(const QMat& M, const QMat& v2, const QMat& v1) {
  return Lattice(3, multiply(v2, transpose(M))).basis() == Lattice(3, v1).basis();
}

QuadMatrix quad_mul(const QuadMatrix& a, const QuadMatrix& b, const Rational& r) {
  QuadMatrix out(a.size(), std::vector<QuadraticNumber>(b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b[0].size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k) out[i][j] = out[i][j] + a[i][k].mul(b[k][j], r);
  return out;
}

QuadMatrix quad_transpose(const QuadMatrix& a) {
  QuadMatrix t(a[0].size(), std::vector<QuadraticNumber>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

QuadMatrix rational_part(const QMat& m) {
  QuadMatrix out(m.size(), std::vector<QuadraticNumber>(m[0].size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[0].size(); ++j) out[i][j] = {m[i][j], 0};
  return out;
}

/// rot = P + (M - P)/sqrt(b) and S = P + sqrt(b)(1 - P); checks rot S = M,
/// rot orthogonal, rot commuting with sigma and fixing the invariant line.
bool verify_rotation(const QMat& M, const QMat& sigma, const PlaneChart& ch, const Rational& b) {
  QuadMatrix rot(3, std::vector<QuadraticNumber>(3)), S(3, std::vector<QuadraticNumber>(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Rational id = i == j ? 1 : 0;
      rot[i][j] = {ch.P[i][j], (M[i][j] - ch.P[i][j]) / b};
      S[i][j] = {ch.P[i][j], id - ch.P[i][j]};
    }
  if (quad_mul(rot, S, b) != rational_part(M)) return false;
  if (quad_mul(quad_transpose(rot), rot, b) != rational_part(linalg::identity(3))) return false;
  if (quad_mul(rot, rational_part(sigma), b) != quad_mul(rational_part(sigma), rot, b)) return false;
  QuadMatrix f(3, std::vector<QuadraticNumber>(1));
  for (std::size_t i = 0; i < 3; ++i) f[i][0] = {ch.fixed_dir[i], 0};
  return quad_mul(rot, f, b) == f;
}

std::string check_sigma(const QMat& sigma) {
  if (sigma.size() != 3 || std::any_of(sigma.begin(), sigma.end(), [](const QVec& r) { return r.size() != 3; }))
    return "sigma must be a 3 x 3 matrix";
  QMat id = linalg::identity(3);
  if (!linalg::equal(multiply(sigma, multiply(sigma, sigma)), id)) return "sigma does not have order 3";
  if (linalg::equal(sigma, id)) return "sigma is the identity";
  if (!linalg::equal(multiply(transpose(sigma), sigma), id)) return "sigma is not orthogonal";
  if (linalg::rank(linalg::add(sigma, linalg::scale(id, -1))) != 2) return "sigma-invariant subspace is not a line";
  return {};
}

std::string check_lattice(const QMat& v, const QMat& sigma, const char* name) {
  if (v.size() != 3 || std::any_of(v.begin(), v.end(), [](const QVec& r) { return r.size() != 3; }))
    return std::string(name) + " must be a 3 x 3 basis matrix";
  if (linalg::determinant(v) == 0) return std::string(name) + " is not a basis";
  Lattice L(3, v);
  for (const auto& row : v)
    if (!L.contains(linalg::apply(sigma, row))) return std::string(name) + " is not sigma-stable";
  return {};
}

}  // namespace

Eisenstein Eisenstein::operator*(const Eisenstein& o) const {
  // zeta^2 = -1 - zeta
  Rational cc = c * o.c;
  return {a * o.a - cc, a * o.c + c * o.a - cc};
}

Eisenstein Eisenstein::inverse() const {
  Rational n = norm();
  if (n == 0) throw std::domain_error("Eisenstein: zero has no inverse");
  // conj(a + c zeta) = (a - c) - c zeta
  return {(a - c) / n, -c / n};
}

std::string Eisenstein::str() const { return to_string(a) + " + " + to_string(c) + " zeta"; }

QMat group_algebra_matrix(const QMat& sigma, const Rational& x, const Rational& y, const Rational& w) {
  QMat s2 = multiply(sigma, sigma);
  return linalg::add(linalg::add(linalg::scale(linalg::identity(3), x), linalg::scale(sigma, y)),
                     linalg::scale(s2, w));
}

Integer squarefree_class(const Rational& b) {
  if (b <= 0) throw std::domain_error("squarefree_class: b must be positive");
  Integer n = numerator(b) * denominator(b);
  Integer out = 1;
  for (Integer d = 2; d * d <= n && d < 1000000; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e % 2) out *= d;
  }
  Integer r = boost::multiprecision::sqrt(n);
  if (r * r != n) out *= n;
  return out;
}

RotationResult rotation_check(const QMat& v1, const QMat& v2, const QMat& sigma) {
  RotationResult res;
  if (auto m = check_sigma(sigma); !m.empty()) {
    res.diagnostic = m;
    return res;
  }
  if (auto m = check_lattice(v1, sigma, "V1"); !m.empty()) {
    res.diagnostic = m;
    return res;
  }
  if (auto m = check_lattice(v2, sigma, "V2"); !m.empty()) {
    res.diagnostic = m;
    return res;
  }
  PlaneChart ch = make_chart(sigma);
  Rational inv1 = invariant_volume(v1, ch), inv2 = invariant_volume(v2, ch);
  if (inv1 != inv2) {
    res.diagnostic = "hypothesis violated: sigma-invariant volumes differ (" + to_string(inv1) + " vs " +
                     to_string(inv2) + ")";
    return res;
  }
  res.b = abs_det(v1) / abs_det(v2);
  res.b_class = squarefree_class(res.b);

  Eisenstein z0 = ideal_generator(v1, ch) * ideal_generator(v2, ch).inverse();
  const std::array<Eisenstein, 6> units = {Eisenstein{1, 0},  Eisenstein{0, 1},  Eisenstein{-1, -1},
                                           Eisenstein{-1, 0}, Eisenstein{0, -1}, Eisenstein{1, 1}};
  for (int k = 0; k < 6; ++k) {
    Eisenstein z = z0 * units[k];
    // x + y zeta + w zeta^2 = (x - w) + (y - w) zeta with x + y + w = 1.
    Rational w = (1 - z.a - z.c) / 3;
    Rational x = z.a + w, y = z.c + w;
    QMat M = group_algebra_matrix(sigma, x, y, w);
    if (!maps_onto(M, v2, v1)) continue;
    res.ok = true;
    res.x = x;
    res.y = y;
    res.w = w;
    res.z = z;
    res.unit_index = k;
    res.verified = z.norm() == res.b && verify_rotation(M, sigma, ch, res.b);
    if (!res.verified) res.diagnostic = "rotation found but the Q(sqrt b) verification failed";
    return res;
  }
  res.diagnostic = "no element (1, z) of Q[sigma] maps V2 onto V1 (plane generators " + z0.str() +
                   " up to units did not match)";
  return res;
}

std::string RotationResult::describe() const {
  std::ostringstream out;
  if (!ok) {
    out << "rotation: none\n  " << diagnostic << "\n";
    return out.str();
  }
  out << "alpha = " << to_string(x) << " + " << to_string(y) << " sigma + " << to_string(w) << " sigma^2\n"
      << "  (1, z) with z = " << z.str() << ", unit index " << unit_index << "\n"
      << "  b = |z|^2 = " << to_string(b) << ", square class " << to_string(b_class) << "\n"
      << "  rotation (1, z / sqrt(b)); V1 = rot(S_b V2) " << (verified ? "verified" : "NOT verified") << "\n";
  if (!diagnostic.empty()) out << "  " << diagnostic << "\n";
  return out.str();
}

Instance make_instance(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  // sigma = conjugate of the cyclic shift by a random signed permutation.
  QMat C = linalg::zeros(3, 3);
  for (int i = 0; i < 3; ++i) C[(i + 1) % 3][i] = 1;
  std::array<int, 3> perm = {0, 1, 2};
  std::shuffle(perm.begin(), perm.end(), rng);
  QMat Q = linalg::zeros(3, 3);
  for (int i = 0; i < 3; ++i) Q[i][perm[i]] = uniform(0, 1) ? 1 : -1;
  Instance inst;
  inst.sigma = multiply(Q, multiply(C, transpose(Q)));

  for (;;) {
    QMat gens;
    for (int g = 0; g < 2; ++g) {
      QVec v(3);
      for (auto& e : v) e = uniform(-4, 4);
      QVec sv = linalg::apply(inst.sigma, v), ssv = linalg::apply(inst.sigma, sv);
      gens.insert(gens.end(), {v, sv, ssv});
      if (uniform(0, 3) == 0) {
        QVec t(3);
        for (int i = 0; i < 3; ++i) t[i] = (v[i] + sv[i] + ssv[i]) / 3;
        gens.push_back(t);
      }
    }
    Lattice L(3, gens);
    if (L.rank() == 3) {
      inst.v1 = L.basis();
      break;
    }
  }
  Eisenstein z;
  do {
    z = {Rational(uniform(-5, 5), uniform(1, 3)), Rational(uniform(-5, 5), uniform(1, 3))};
  } while (z.norm() == 0);
  inst.w = (1 - z.a - z.c) / 3;
  inst.x = z.a + inst.w;
  inst.y = z.c + inst.w;
  QMat M = group_algebra_matrix(inst.sigma, inst.x, inst.y, inst.w);
  inst.v2 = multiply(inst.v1, transpose(*linalg::inverse(M)));
  return inst;
}

QMat read_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string header;
  while (std::getline(in, header) && header.find_first_not_of(" \t\r") == std::string::npos) {
  }
  auto pos = header.find('#');
  if (pos != std::string::npos) header = header.substr(pos + 1);
  std::istringstream hs(header);
  int rows = 0, cols = 0;
  if (!(hs >> rows >> cols) || rows <= 0 || cols <= 0)
    throw std::runtime_error(path + ": expected a header line \"# rows cols\"");
  QMat m(rows, QVec(cols));
  std::string tok;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (!(in >> tok)) throw std::runtime_error(path + ": not enough entries");
      m[i][j] = parse_rational(tok);
    }
  if (in >> tok) throw std::runtime_error(path + ": trailing entries after " + std::to_string(rows * cols));
  return m;
}

}  // namespace artifact::rotation
