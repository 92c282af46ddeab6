#include "artifact/exteralg.hpp"

#include <random>
#include <stdexcept>

namespace artifact::exteralg {

int popcount(Mask m) { return __builtin_popcount(m); }

int wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  // Count pairs (i in a, j in b) with i > j.
  int inversions = 0;
  for (Mask bb = b; bb; bb &= bb - 1) {
    int j = __builtin_ctz(bb);
    inversions += popcount(a >> (j + 1));
  }
  return inversions % 2 ? -1 : 1;
}

MetricSpace::MetricSpace(int dim, QMat gram) : dim_(dim), gram_(std::move(gram)) {
  if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("MetricSpace: unsupported dimension");
  if (gram_.size() != static_cast<std::size_t>(dim)) throw std::invalid_argument("MetricSpace: gram has wrong size");
  for (std::size_t i = 0; i < gram_.size(); ++i) {
    if (gram_[i].size() != gram_.size()) throw std::invalid_argument("MetricSpace: gram not square");
    for (std::size_t j = 0; j < i; ++j)
      if (gram_[i][j] != gram_[j][i]) throw std::invalid_argument("MetricSpace: gram not symmetric");
  }
  for (std::size_t k = 1; k <= gram_.size(); ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t t = 0; t < k; ++t) idx[t] = t;
    if (linalg::determinant(linalg::submatrix(gram_, idx, idx)) <= 0)
      throw std::invalid_argument("MetricSpace: gram not positive definite");
  }
}

MetricSpace MetricSpace::euclidean(int dim) { return MetricSpace(dim, linalg::identity(static_cast<std::size_t>(dim))); }

ExteriorElement::ExteriorElement(int dim) : dim_(dim) {
  if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("ExteriorElement: unsupported dimension");
}

ExteriorElement ExteriorElement::basis(int dim, Mask m, const Rational& c) {
  ExteriorElement e(dim);
  if (m >> dim) throw std::invalid_argument("ExteriorElement: index out of range");
  e.add(m, c);
  return e;
}

ExteriorElement ExteriorElement::scalar(int dim, const Rational& c) { return basis(dim, 0, c); }

ExteriorElement ExteriorElement::vector(const QVec& v) {
  ExteriorElement e(static_cast<int>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) e.add(Mask(1) << i, v[i]);
  return e;
}

Rational ExteriorElement::coeff(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int ExteriorElement::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int dm = popcount(m);
    if (d >= 0 && dm != d) throw std::logic_error("degree of an inhomogeneous element");
    d = dm;
  }
  return d;
}

ExteriorElement& ExteriorElement::add(Mask m, const Rational& c) {
  if (c == 0) return *this;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

void ExteriorElement::check_same(const ExteriorElement& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("exterior elements over different spaces");
}

ExteriorElement ExteriorElement::operator+(const ExteriorElement& o) const {
  check_same(o);
  ExteriorElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add(m, c);
  return r;
}

ExteriorElement ExteriorElement::operator-(const ExteriorElement& o) const { return *this + o * Rational(-1); }

ExteriorElement ExteriorElement::operator*(const Rational& s) const {
  ExteriorElement r(dim_);
  if (s == 0) return r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
  return r;
}

ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("wedge: ambient mismatch");
  ExteriorElement r(a.dim());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      int s = wedge_sign(ma, mb);
      if (s != 0) r.add(ma | mb, s * ca * cb);
    }
  return r;
}

ExteriorElement contract(const QVec& functional, const ExteriorElement& b) {
  if (static_cast<int>(functional.size()) != b.dim()) throw std::invalid_argument("contract: ambient mismatch");
  ExteriorElement r(b.dim());
  for (const auto& [m, c] : b.terms()) {
    int position = 0;
    for (int i = 0; i < b.dim(); ++i) {
      if (!(m & (Mask(1) << i))) continue;
      const Rational& f = functional[static_cast<std::size_t>(i)];
      if (f != 0) r.add(m & ~(Mask(1) << i), (position % 2 ? -1 : 1) * f * c);
      ++position;
    }
  }
  return r;
}

ExteriorElement apply_linear(const QMat& g, const ExteriorElement& a) {
  int n = a.dim();
  if (static_cast<int>(g.size()) != n) throw std::invalid_argument("apply_linear: shape mismatch");
  std::vector<ExteriorElement> images;
  for (int i = 0; i < n; ++i) {
    QVec col(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) col[static_cast<std::size_t>(j)] = g[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    images.push_back(ExteriorElement::vector(col));
  }
  ExteriorElement r(n);
  for (const auto& [m, c] : a.terms()) {
    ExteriorElement img = ExteriorElement::scalar(n, c);
    for (int i = 0; i < n; ++i)
      if (m & (Mask(1) << i)) img = wedge(img, images[static_cast<std::size_t>(i)]);
    r = r + img;
  }
  return r;
}

namespace {

std::vector<std::size_t> indices(Mask m) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; m; ++i, m >>= 1)
    if (m & 1) idx.push_back(i);
  return idx;
}

}  // namespace

Rational inner(const MetricSpace& space, const ExteriorElement& a, const ExteriorElement& b) {
  if (a.dim() != space.dim() || b.dim() != space.dim()) throw std::invalid_argument("inner: ambient mismatch");
  Rational s = 0;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      if (popcount(ma) != popcount(mb)) continue;
      Rational det = ma == 0 ? Rational(1) : linalg::determinant(linalg::submatrix(space.gram(), indices(ma), indices(mb)));
      s += ca * cb * det;
    }
  return s;
}

Rational top_coefficient(const ExteriorElement& a) {
  Mask top = a.dim() == 0 ? 0 : (Mask(1) << a.dim()) - 1;
  return a.coeff(top);
}

std::vector<Mask> masks_of_degree(int dim, int degree) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask(1) << dim); ++m)
    if (popcount(m) == degree) out.push_back(m);
  return out;
}

namespace {

struct RandomRationals {
  explicit RandomRationals(std::uint32_t seed) : rng(seed) {}
  std::mt19937 rng;

  Rational next() {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
    return Rational(num(rng), den(rng));
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  ExteriorElement homogeneous(int dim, int degree) {
    ExteriorElement e(dim);
    for (Mask m : masks_of_degree(dim, degree)) e.add(m, next());
    return e;
  }
  QVec vec(int dim) {
    QVec v(static_cast<std::size_t>(dim));
    for (auto& x : v) x = next();
    return v;
  }
};

ExteriorElement metric_dual(const MetricSpace& space, const QVec& x, QVec& functional) {
  functional = linalg::apply(space.gram(), x);
  return ExteriorElement::vector(x);
}

bool adjoint_identity(const MetricSpace& space, const QVec& x, const ExteriorElement& a, const ExteriorElement& b) {
  QVec f;
  ExteriorElement xe = metric_dual(space, x, f);
  return inner(space, wedge(xe, a), b) == inner(space, a, contract(f, b));
}

}  // namespace

bool adjointness_check(const MetricSpace& space, int trials, std::uint32_t seed) {
  int n = space.dim();
  if (n > 6) throw std::invalid_argument("adjointness_check: dimension above 6");
  for (int i = 0; i < n; ++i) {
    QVec x(static_cast<std::size_t>(n), Rational(0));
    x[static_cast<std::size_t>(i)] = 1;
    for (Mask a = 0; a < (Mask(1) << n); ++a)
      for (Mask b : masks_of_degree(n, popcount(a) + 1))
        if (!adjoint_identity(space, x, ExteriorElement::basis(n, a), ExteriorElement::basis(n, b))) return false;
  }
  RandomRationals rnd(seed);
  for (int t = 0; t < trials && n > 0; ++t) {
    int d = rnd.integer(0, n - 1);
    if (!adjoint_identity(space, rnd.vec(n), rnd.homogeneous(n, d), rnd.homogeneous(n, d + 1))) return false;
  }
  return true;
}

bool derivation_check(int dim) {
  for (int i = 0; i < dim; ++i) {
    QVec f(static_cast<std::size_t>(dim), Rational(0));
    f[static_cast<std::size_t>(i)] = 1;
    for (Mask a = 0; a < (Mask(1) << dim); ++a)
      for (Mask b = 0; b < (Mask(1) << dim); ++b) {
        auto ea = ExteriorElement::basis(dim, a), eb = ExteriorElement::basis(dim, b);
        auto lhs = contract(f, wedge(ea, eb));
        auto rhs = wedge(contract(f, ea), eb) + wedge(ea, contract(f, eb)) * Rational(popcount(a) % 2 ? -1 : 1);
        if (!(lhs == rhs)) return false;
      }
  }
  return true;
}

std::vector<std::pair<int, Integer>> model_dims(int delta, int q, int k) {
  if (delta < 0 || k < 0) throw std::invalid_argument("model_dims: negative parameter");
  std::vector<std::pair<int, Integer>> out;
  for (int i = 0; i <= delta; ++i) out.emplace_back(q + i, Integer(k) * binomial(delta, i));
  return out;
}

QMat reversal(int delta, int sign) {
  QMat w = linalg::zeros(static_cast<std::size_t>(delta), static_cast<std::size_t>(delta));
  for (int i = 0; i < delta; ++i) w[static_cast<std::size_t>(i)][static_cast<std::size_t>(delta - 1 - i)] = sign;
  return w;
}

TemperedCohomologyModel make_model(int delta, int q, int k, QMat w) {
  if (delta < 0 || delta > kMaxDim || k < 1) throw std::invalid_argument("make_model: bad parameters");
  std::size_t d = static_cast<std::size_t>(delta);
  if (w.empty()) w = linalg::identity(d);
  if (w.size() != d) throw std::invalid_argument("make_model: w has wrong size");
  for (const auto& row : w) {
    int nonzero = 0;
    for (const auto& x : row) {
      if (x != 0 && x != 1 && x != -1) throw std::invalid_argument("make_model: w is not a signed permutation");
      nonzero += x != 0;
    }
    if (nonzero != 1) throw std::invalid_argument("make_model: w is not a signed permutation");
  }
  if (!linalg::equal(linalg::multiply(w, w), linalg::identity(d)))
    throw std::invalid_argument("make_model: w is not an involution");
  TemperedCohomologyModel m;
  m.delta = delta;
  m.q = q;
  m.k = k;
  m.generators = linalg::identity(static_cast<std::size_t>(k));
  m.w = std::move(w);
  m.pairing = linalg::identity(static_cast<std::size_t>(k));
  return m;
}

ModuleElement right_action(const ModuleElement& f, const ExteriorElement& x) {
  ModuleElement r;
  for (const auto& c : f) r.push_back(wedge(c, x));
  return r;
}

ModuleElement left_action(const ExteriorElement& x, const ModuleElement& f) {
  ModuleElement r;
  for (const auto& c : f) r.push_back(wedge(x, c));
  return r;
}

Rational poincare_pairing(const TemperedCohomologyModel& m, const ModuleElement& f1, const ModuleElement& f2) {
  std::size_t k = static_cast<std::size_t>(m.k);
  if (f1.size() != k || f2.size() != k) throw std::invalid_argument("poincare_pairing: wrong number of components");
  Rational s = 0;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      if (m.pairing[a][b] == 0) continue;
      s += m.pairing[a][b] * top_coefficient(wedge(f1[a], apply_linear(m.w, f2[b])));
    }
  return s;
}

bool freeness_check(const TemperedCohomologyModel& m) {
  std::size_t k = static_cast<std::size_t>(m.k);
  for (int i = 0; i <= m.delta; ++i) {
    auto masks = masks_of_degree(m.delta, i);
    std::size_t nm = masks.size();
    QMat rows;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t s = 0; s < nm; ++s) {
        QVec row(k * nm, Rational(0));
        for (std::size_t b = 0; b < k; ++b) row[b * nm + s] = m.generators[a][b];
        rows.push_back(std::move(row));
      }
    if (linalg::rank(rows) != k * nm) return false;
  }
  return true;
}

namespace {

ModuleElement basis_element(const TemperedCohomologyModel& m, std::size_t a, Mask mask) {
  ModuleElement f(static_cast<std::size_t>(m.k), ExteriorElement(m.delta));
  f[a] = ExteriorElement::basis(m.delta, mask);
  return f;
}

void poincare_case(const TemperedCohomologyModel& m, const ModuleElement& f1, const ModuleElement& f2,
                   const ExteriorElement& x, PoincareReport& rep) {
  ExteriorElement wx = apply_linear(m.w, x);
  Rational lhs = poincare_pairing(m, right_action(f1, x), f2);
  Rational rhs_signed = poincare_pairing(m, f1, left_action(wx, f2));
  Rational rhs_unsigned = poincare_pairing(m, f1, right_action(f2, wx));
  if (lhs != rhs_signed) rep.signed_ok = false;
  if (abs(lhs) != abs(rhs_unsigned)) rep.unsigned_ok = false;
  ++rep.cases;
}

}  // namespace

PoincareReport poincare_adjoint_report(const TemperedCohomologyModel& m, int trials, std::uint32_t seed) {
  PoincareReport rep;
  int n = m.delta;
  std::size_t k = static_cast<std::size_t>(m.k);
  for (Mask x = 0; x < (Mask(1) << n); ++x)
    for (Mask i = 0; i < (Mask(1) << n); ++i) {
      int rest = n - popcount(x) - popcount(i);
      if (rest < 0) continue;
      for (Mask j : masks_of_degree(n, rest))
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b)
            poincare_case(m, basis_element(m, a, i), basis_element(m, b, j), ExteriorElement::basis(n, x), rep);
    }
  RandomRationals rnd(seed);
  for (int t = 0; t < trials; ++t) {
    int dx = rnd.integer(0, n), d1 = rnd.integer(0, n - dx);
    ModuleElement f1, f2;
    for (std::size_t a = 0; a < k; ++a) {
      f1.push_back(rnd.homogeneous(n, d1));
      f2.push_back(rnd.homogeneous(n, n - dx - d1));
    }
    poincare_case(m, f1, f2, rnd.homogeneous(n, dx), rep);
  }
  return rep;
}

bool poincare_adjoint_check(const TemperedCohomologyModel& m, int trials, std::uint32_t seed) {
  return poincare_adjoint_report(m, trials, seed).ok();
}

namespace {

Rational module_norm2(const MetricSpace& space, const ModuleElement& f) {
  Rational s = 0;
  for (const auto& c : f) s += inner(space, c, c);
  return s;
}

}  // namespace

bool isometry_check(const TemperedCohomologyModel& m, const MetricSpace& space, int trials, std::uint32_t seed) {
  if (space.dim() != m.delta) throw std::invalid_argument("isometry_check: metric has wrong dimension");
  int n = m.delta;
  std::size_t k = static_cast<std::size_t>(m.k);
  auto identity_holds = [&](const ModuleElement& omega, const ExteriorElement& nu) {
    return module_norm2(space, right_action(omega, nu)) == module_norm2(space, omega) * inner(space, nu, nu);
  };
  for (std::size_t a = 0; a < k; ++a)
    for (Mask v = 0; v < (Mask(1) << n); ++v)
      if (!identity_holds(basis_element(m, a, 0), ExteriorElement::basis(n, v))) return false;
  RandomRationals rnd(seed);
  for (int t = 0; t < trials; ++t) {
    ModuleElement omega;
    for (std::size_t a = 0; a < k; ++a) omega.push_back(ExteriorElement::scalar(n, rnd.next()));
    if (!identity_holds(omega, rnd.homogeneous(n, rnd.integer(0, n)))) return false;
  }
  return true;
}

bool conjugation_check(const TemperedCohomologyModel& m) {
  int n = m.delta;
  std::size_t k = static_cast<std::size_t>(m.k);
  auto c = [&](const ModuleElement& f) {
    ModuleElement r;
    for (const auto& x : f) r.push_back(apply_linear(m.w, x));
    return r;
  };
  for (std::size_t a = 0; a < k; ++a)
    for (Mask i = 0; i < (Mask(1) << n); ++i) {
      ModuleElement f = basis_element(m, a, i);
      if (c(c(f)) != f) return false;
      for (Mask x = 0; x < (Mask(1) << n); ++x) {
        ExteriorElement ex = ExteriorElement::basis(n, x);
        if (c(right_action(f, ex)) != right_action(c(f), apply_linear(m.w, ex))) return false;
      }
    }
  return true;
}

}  // namespace artifact::exteralg
