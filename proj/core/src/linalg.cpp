#include "artifact/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace artifact {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

std::string to_string(const Rational& x) { return x.str(); }
std::string to_string(const Integer& x) { return x.str(); }

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

Integer parse_integer(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("malformed number: " + std::string(s));
  Integer v{std::string(s)};
  return neg ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw std::invalid_argument("malformed denominator: " + std::string(text));
    Integer den(std::string{den_text});
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool neg = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty()))
      throw std::invalid_argument("malformed decimal: " + std::string(text));
    Integer w = whole.empty() ? Integer(0) : Integer(std::string(whole));
    Integer f = frac.empty() ? Integer(0) : Integer(std::string(frac));
    Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac.size()));
    Rational r = Rational(w) + Rational(f, scale);
    return neg ? Rational(-r) : r;
  }
  return Rational(parse_integer(text));
}

bool is_integer(const Rational& x) { return denominator(x) == 1; }

Integer floor_of(const Rational& x) {
  Integer n = numerator(x);
  Integer d = denominator(x);
  Integer q = n / d;
  if (n % d != 0 && n < 0) q -= 1;
  return q;
}

Integer factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace linalg {

QMat zeros(std::size_t rows, std::size_t cols) { return QMat(rows, QVec(cols, Rational(0))); }

QMat identity(std::size_t n) {
  QMat m = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

QMat transpose(const QMat& a) {
  if (a.empty()) return {};
  QMat t = zeros(a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

QMat multiply(const QMat& a, const QMat& b) {
  if (a.empty()) return {};
  std::size_t inner = a[0].size();
  if (b.size() != inner) throw std::invalid_argument("multiply: shape mismatch");
  std::size_t cols = b.empty() ? 0 : b[0].size();
  QMat c = zeros(a.size(), cols);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

QVec apply(const QMat& a, const QVec& v) {
  QVec out(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != v.size()) throw std::invalid_argument("apply: shape mismatch");
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  }
  return out;
}

QVec row_apply(const QVec& v, const QMat& a) {
  if (a.size() != v.size()) throw std::invalid_argument("row_apply: shape mismatch");
  std::size_t cols = a.empty() ? 0 : a[0].size();
  QVec out(cols, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) out[j] += v[i] * a[i][j];
  return out;
}

Rational dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QMat add(const QMat& a, const QMat& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: shape mismatch");
  QMat c = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) throw std::invalid_argument("add: shape mismatch");
    for (std::size_t j = 0; j < a[i].size(); ++j) c[i][j] += b[i][j];
  }
  return c;
}

QMat scale(const QMat& a, const Rational& s) {
  QMat c = a;
  for (auto& row : c)
    for (auto& x : row) x *= s;
  return c;
}

bool equal(const QMat& a, const QMat& b) { return a == b; }

QMat rref(QMat a, std::vector<std::size_t>* pivots) {
  if (pivots) pivots->clear();
  if (a.empty()) return a;
  std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return a;
}

std::size_t rank(const QMat& a) {
  std::vector<std::size_t> piv;
  rref(a, &piv);
  return piv.size();
}

Rational determinant(QMat a) {
  std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

std::optional<QMat> inverse(const QMat& a) {
  std::size_t n = a.size();
  QMat aug = zeros(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("inverse: matrix not square");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  std::vector<std::size_t> piv;
  aug = rref(std::move(aug), &piv);
  if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) return std::nullopt;
  QMat inv = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

std::optional<QVec> solve(const QMat& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve: shape mismatch");
  std::size_t cols = a.empty() ? 0 : a[0].size();
  QMat aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  std::vector<std::size_t> piv;
  aug = rref(std::move(aug), &piv);
  QVec x(cols, Rational(0));
  for (std::size_t k = 0; k < piv.size(); ++k) {
    if (piv[k] == cols) return std::nullopt;
    x[piv[k]] = aug[k][cols];
  }
  return x;
}

QMat nullspace(const QMat& a) {
  if (a.empty()) return {};
  std::size_t cols = a[0].size();
  std::vector<std::size_t> piv;
  QMat r = rref(a, &piv);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : piv) is_pivot[p] = true;
  QMat basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    QVec v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r[k][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

QMat submatrix(const QMat& a, const std::vector<std::size_t>& rows,
               const std::vector<std::size_t>& cols) {
  QMat s = zeros(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s[i][j] = a.at(rows[i]).at(cols[j]);
  return s;
}

ZMat to_integer(const QMat& a) {
  ZMat z(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (const auto& x : a[i]) {
      if (!is_integer(x)) throw std::invalid_argument("to_integer: non-integral entry " + x.str());
      z[i].push_back(numerator(x));
    }
  return z;
}

QMat to_rational(const ZMat& a) {
  QMat q(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (const auto& x : a[i]) q[i].emplace_back(x);
  return q;
}

ZMat hermite(ZMat a) {
  if (a.empty()) return a;
  std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Euclid on column c among rows r.. until a single nonzero remains.
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (a[i][c] != 0 && (best == rows || abs(a[i][c]) < abs(a[best][c]))) best = i;
      if (best == rows) break;
      std::swap(a[r], a[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a[i][c] == 0) continue;
        Integer q = a[i][c] / a[r][c];
        if (q != 0)
          for (std::size_t j = c; j < cols; ++j) a[i][j] -= q * a[r][j];
        if (a[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (a[r][c] == 0) continue;
    if (a[r][c] < 0)
      for (auto& x : a[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = a[i][c] / a[r][c];
      if (a[i][c] % a[r][c] != 0 && a[i][c] < 0) q -= 1;
      if (q != 0)
        for (std::size_t j = c; j < cols; ++j) a[i][j] -= q * a[r][j];
    }
    ++r;
  }
  a.resize(r);
  return a;
}

ZMat integer_left_kernel(const ZMat& a) {
  std::size_t m = a.size();
  if (m == 0) return {};
  std::size_t n = a[0].size();
  ZMat aug(m, ZVec(n + m, Integer(0)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  ZMat h = hermite(std::move(aug));
  ZMat kernel;
  for (const auto& row : h) {
    bool zero_head = std::all_of(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(n),
                                 [](const Integer& x) { return x == 0; });
    if (zero_head) kernel.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(n), row.end());
  }
  return kernel;
}

}  // namespace linalg

Lattice::Lattice(std::size_t dim) : dim_(dim) {}

Lattice::Lattice(std::size_t dim, const QMat& generators) : dim_(dim) {
  if (generators.empty()) return;
  Integer common = 1;
  for (const auto& g : generators) {
    if (g.size() != dim) throw std::invalid_argument("Lattice: generator has wrong dimension");
    for (const auto& x : g) common = boost::multiprecision::lcm(common, Integer(denominator(x)));
  }
  ZMat z(generators.size());
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (const auto& x : generators[i]) z[i].push_back(numerator(Rational(x * common)));
  ZMat h = linalg::hermite(std::move(z));
  for (const auto& row : h) {
    QVec q;
    q.reserve(dim);
    for (const auto& x : row) q.emplace_back(Rational(x, common));
    std::size_t p = 0;
    while (q[p] == 0) ++p;
    pivots_.push_back(p);
    basis_.push_back(std::move(q));
  }
}

QVec Lattice::reduce(QVec v) const {
  if (v.size() != dim_) throw std::invalid_argument("Lattice::reduce: wrong dimension");
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    std::size_t c = pivots_[k];
    Integer q = floor_of(v[c] / basis_[k][c]);
    if (q == 0) continue;
    Rational rq(q);
    for (std::size_t j = c; j < dim_; ++j) v[j] -= rq * basis_[k][j];
  }
  return v;
}

bool Lattice::contains(const QVec& v) const {
  QVec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
}

Lattice Lattice::scaled(const Rational& s) const { return Lattice(dim_, linalg::scale(basis_, s)); }

}  // namespace artifact
