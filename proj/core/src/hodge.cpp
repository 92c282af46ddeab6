#include "artifact/hodge.hpp"

#include <sstream>
#include <stdexcept>

namespace artifact::hodge {

namespace {

int choose2(int h) { return h * (h - 1) / 2; }

void put(HodgeStructure& h, int p, int m) {
  if (m == 0) return;
  h.mult[p] += m;
}

}  // namespace

int HodgeStructure::at(int p) const {
  auto it = mult.find(p);
  return it == mult.end() ? 0 : it->second;
}

int HodgeStructure::rank() const {
  int r = 0;
  for (const auto& [p, m] : mult) r += m;
  return r;
}

void HodgeStructure::validate() const {
  for (const auto& [p, m] : mult) {
    if (m < 0) throw std::logic_error("negative Hodge number");
    if (at(weight - p) != m) throw std::logic_error("Hodge symmetry fails at p = " + std::to_string(p));
  }
  int middle = weight % 2 == 0 ? at(weight / 2) : 0;
  if (fplus < 0 || fminus < 0 || fplus + fminus != middle)
    throw std::logic_error("F_inf counts do not match the middle Hodge number");
}

std::string HodgeStructure::str() const {
  std::ostringstream out;
  bool first = true;
  for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
    if (it->second == 0) continue;
    out << (first ? "" : ", ") << "(" << it->first << "," << weight - it->first << ")";
    if (it->second != 1) out << "^" << it->second;
    first = false;
  }
  if (first) out << "0";
  if (weight % 2 == 0 && at(weight / 2) > 0) out << " [F+=" << fplus << ", F-=" << fminus << "]";
  return out.str();
}

bool HodgeStructure::operator==(const HodgeStructure& o) const {
  auto clean = [](const std::map<int, int>& m) {
    std::map<int, int> c;
    for (const auto& [p, k] : m)
      if (k) c[p] = k;
    return c;
  };
  return weight == o.weight && clean(mult) == clean(o.mult) && fplus == o.fplus && fminus == o.fminus &&
         over_E == o.over_E;
}

HodgeStructure unit(bool over_E) {
  HodgeStructure h;
  h.mult[0] = 1;
  h.fplus = 1;
  h.over_E = over_E;
  return h;
}

HodgeStructure direct_sum(const HodgeStructure& a, const HodgeStructure& b) {
  if (a.weight != b.weight) throw std::invalid_argument("direct_sum: weights differ");
  HodgeStructure h = a;
  for (const auto& [p, m] : b.mult) put(h, p, m);
  h.fplus += b.fplus;
  h.fminus += b.fminus;
  h.over_E = a.over_E || b.over_E;
  return h;
}

HodgeStructure tensor(const HodgeStructure& a, const HodgeStructure& b) {
  HodgeStructure h;
  h.weight = a.weight + b.weight;
  h.over_E = a.over_E || b.over_E;
  for (const auto& [p1, m1] : a.mult)
    for (const auto& [p2, m2] : b.mult) put(h, p1 + p2, m1 * m2);
  if (h.weight % 2 == 0) {
    int mid = h.weight / 2;
    for (const auto& [p1, m1] : a.mult) {
      int q1 = a.weight - p1;
      int p2 = mid - p1;
      int m2 = b.at(p2);
      if (m1 == 0 || m2 == 0) continue;
      if (p1 < q1) {
        // F_inf swaps H^{p1,q1} (x) H^{p2,q2} with its conjugate summand.
        h.fplus += m1 * m2;
        h.fminus += m1 * m2;
      } else if (p1 == q1) {
        h.fplus += a.fplus * b.fplus + a.fminus * b.fminus;
        h.fminus += a.fplus * b.fminus + a.fminus * b.fplus;
      }
    }
  }
  return h;
}

HodgeStructure dual(const HodgeStructure& a) {
  HodgeStructure h;
  h.weight = -a.weight;
  h.over_E = a.over_E;
  for (const auto& [p, m] : a.mult) put(h, -p, m);
  h.fplus = a.fplus;
  h.fminus = a.fminus;
  return h;
}

HodgeStructure tate_twist(const HodgeStructure& a, int j) {
  HodgeStructure h;
  h.weight = a.weight - 2 * j;
  h.over_E = a.over_E;
  for (const auto& [p, m] : a.mult) put(h, p - j, m);
  bool flip = j % 2 != 0;
  h.fplus = flip ? a.fminus : a.fplus;
  h.fminus = flip ? a.fplus : a.fminus;
  return h;
}

namespace {

/// Lambda^2 (alternating) or Sym^2 of a, before any twist.
HodgeStructure square_part(const HodgeStructure& a, bool symmetric) {
  HodgeStructure h;
  h.weight = 2 * a.weight;
  h.over_E = a.over_E;
  for (auto it1 = a.mult.begin(); it1 != a.mult.end(); ++it1) {
    int m = it1->second;
    put(h, 2 * it1->first, symmetric ? m * (m + 1) / 2 : choose2(m));
    for (auto it2 = std::next(it1); it2 != a.mult.end(); ++it2) put(h, it1->first + it2->first, m * it2->second);
  }
  int w = a.weight;
  for (const auto& [p, m] : a.mult) {
    int q = w - p;
    if (p < q) {
      // H^{pq} (x) H^{qp} inside the square; F_inf acts as -swap on Lambda^2, +swap on Sym^2.
      int sym = m * (m + 1) / 2, alt = choose2(m);
      h.fplus += symmetric ? sym : alt;
      h.fminus += symmetric ? alt : sym;
    } else if (p == q) {
      int fp = a.fplus, fm = a.fminus;
      h.fplus += symmetric ? fp * (fp + 1) / 2 + fm * (fm + 1) / 2 : choose2(fp) + choose2(fm);
      h.fminus += fp * fm;
    }
  }
  return h;
}

}  // namespace

HodgeStructure adjoint(const HodgeStructure& a, Pairing pairing) {
  a.validate();
  switch (pairing) {
    case Pairing::Linear: {
      HodgeStructure h = tensor(a, dual(a));
      if (h.at(0) < 1 || h.fplus < 1) throw std::logic_error("adjoint: no trivial summand to remove");
      h.mult[0] -= 1;
      h.fplus -= 1;
      return h;
    }
    case Pairing::Orthogonal:
    case Pairing::Symplectic: {
      if (pairing == Pairing::Symplectic && a.rank() % 2 != 0)
        throw std::invalid_argument("adjoint: symplectic pairing needs even rank");
      if (pairing == Pairing::Symplectic && a.weight % 2 == 0)
        throw std::invalid_argument("adjoint: symplectic pairing needs odd weight");
      if (pairing == Pairing::Orthogonal && a.weight % 2 != 0)
        throw std::invalid_argument("adjoint: orthogonal pairing needs even weight");
      return tate_twist(square_part(a, pairing == Pairing::Symplectic), a.weight);
    }
  }
  throw std::invalid_argument("adjoint: unknown pairing");
}

HodgeStructure restrict_scalars(const HodgeStructure& a) {
  if (!a.over_E) throw std::invalid_argument("restrict_scalars: structure is not defined over E");
  HodgeStructure h;
  h.weight = a.weight;
  for (const auto& [p, m] : a.mult) put(h, p, 2 * m);
  int middle = a.weight % 2 == 0 ? a.at(a.weight / 2) : 0;
  // F_inf exchanges the sigma and sigma-bar copies.
  h.fplus = h.fminus = middle;
  return h;
}

DeligneData deligne_data(const HodgeStructure& a) {
  a.validate();
  DeligneData d;
  int off = 0;
  for (const auto& [p, m] : a.mult)
    if (2 * p < a.weight) off += m;
  if (a.fplus * a.fminus != 0) throw std::domain_error("Deligne_period violated");
  d.dplus = off + a.fplus;
  d.dminus = off + a.fminus;
  Rational base(a.weight - 1, 2);
  if (a.weight % 2 != 0) {
    d.pplus = d.pminus = base;
  } else {
    int eps = a.fminus > 0 ? -1 : 1;
    d.pplus = base - Rational(eps, 2);
    d.pminus = base + Rational(eps, 2);
  }
  return d;
}

namespace {

HodgeStructure consecutive(int weight, bool over_E) {
  HodgeStructure h;
  h.weight = weight;
  h.over_E = over_E;
  for (int p = 0; p <= weight; ++p) h.mult[p] = 1;
  return h;
}

}  // namespace

HodgeStructure standard_motive(CaseKind kind, int n, Factor factor, bool psi_twist) {
  describe(kind, n);
  if (psi_twist && kind != CaseKind::PGL_Q) throw std::invalid_argument("standard_motive: psi twist only over Q");
  bool over_E = over_imaginary_quadratic(kind);
  HodgeStructure h;
  switch (kind) {
    case CaseKind::PGL_Q:
    case CaseKind::PGL_E:
      h = consecutive(factor == Factor::M ? n - 1 : n, over_E);
      if (h.has_middle()) {
        bool minus = psi_twist;
        h.fplus = minus ? 0 : 1;
        h.fminus = minus ? 1 : 0;
      }
      break;
    case CaseKind::SO_even_E:
    case CaseKind::SO_odd_E: {
      if (factor == Factor::N) {
        h = consecutive(2 * n - 1, over_E);
        break;
      }
      int w = kind == CaseKind::SO_even_E ? 2 * n - 2 : 2 * n;
      h = consecutive(w, over_E);
      h.mult[w / 2] = 2;
      // Placeholder eigenvalue split; E-structures are only used after restriction.
      h.fplus = 1;
      h.fminus = 1;
      break;
    }
  }
  h.validate();
  return h;
}

Pairing pairing_of(CaseKind kind, Factor factor) {
  switch (kind) {
    case CaseKind::PGL_Q:
    case CaseKind::PGL_E:
      return Pairing::Linear;
    case CaseKind::SO_even_E:
    case CaseKind::SO_odd_E:
      return factor == Factor::M ? Pairing::Orthogonal : Pairing::Symplectic;
  }
  return Pairing::Linear;
}

HodgeStructure adjoint_motive(CaseKind kind, int n, Factor factor) {
  return adjoint(standard_motive(kind, n, factor), pairing_of(kind, factor));
}

std::vector<int> levels(const HodgeStructure& a, int top) {
  if (a.weight != 0) throw std::invalid_argument("levels: weight must be zero");
  std::vector<int> out;
  for (int l = top; l >= -top; --l) out.push_back(a.at(l));
  return out;
}

std::vector<int> expected_tensor_levels(CaseKind kind, int n) {
  std::vector<int> half;  // p = weight down to the middle
  switch (kind) {
    case CaseKind::PGL_Q:
    case CaseKind::PGL_E:
      for (int i = 0; i < n; ++i) half.push_back(i + 1);
      break;
    case CaseKind::SO_even_E:
      for (int i = 0; i <= n - 2; ++i) half.push_back(i + 1);
      for (int k = 0; k < n; ++k) half.push_back(n + 1 + k);
      break;
    case CaseKind::SO_odd_E:
      for (int i = 0; i < n; ++i) half.push_back(i + 1);
      for (int k = 0; k < n; ++k) half.push_back(n + 2 + k);
      break;
  }
  // All tensor weights are odd, so the list is half followed by its mirror.
  std::vector<int> full = half;
  full.insert(full.end(), half.rbegin(), half.rend());
  return full;
}

namespace {

/// The prose pattern for Ad(M) of SO_2n: 1,1,...,n-1,n-1,n,n,n,n-1,n-1,...,1,1
/// with the pair around t removed on each side.
std::vector<int> so_even_adjoint_pattern(int n) {
  if (n < 2) throw std::invalid_argument("Ad(M) multiplicity pattern is undefined for n = 1");
  std::vector<int> left;
  for (int v = 1; v <= n - 1; ++v) {
    left.push_back(v);
    left.push_back(v);
  }
  int t = n / 2;
  // Drop the first occurrence of the pair (t, t) or (t, t+1) on the ascending side.
  int first = t, second = n % 2 == 0 ? t : t + 1;
  for (std::size_t k = 0; k + 1 < left.size(); ++k)
    if (left[k] == first && left[k + 1] == second) {
      left.erase(left.begin() + static_cast<std::ptrdiff_t>(k), left.begin() + static_cast<std::ptrdiff_t>(k + 2));
      break;
    }
  std::vector<int> full = left;
  full.insert(full.end(), {n, n, n});
  full.insert(full.end(), left.rbegin(), left.rend());
  return full;
}

}  // namespace

int adjoint_top_level(CaseKind kind, int n, Factor factor) {
  switch (kind) {
    case CaseKind::PGL_Q:
    case CaseKind::PGL_E:
      return factor == Factor::M ? n - 1 : n;
    case CaseKind::SO_even_E:
      return factor == Factor::M ? 2 * n - 3 : 2 * n - 1;
    case CaseKind::SO_odd_E:
      return factor == Factor::M ? 2 * n - 1 : 2 * n - 1;
  }
  return 0;
}

std::vector<int> expected_adjoint_levels(CaseKind kind, int n, Factor factor) {
  int top = adjoint_top_level(kind, n, factor);
  std::vector<int> out;
  switch (kind) {
    case CaseKind::PGL_Q:
    case CaseKind::PGL_E: {
      int size = factor == Factor::M ? n : n + 1;
      for (int l = top; l >= -top; --l) out.push_back(l == 0 ? size - 1 : size - std::abs(l));
      return out;
    }
    case CaseKind::SO_even_E:
    case CaseKind::SO_odd_E:
      if (factor == Factor::N) {
        for (int l = top; l >= -top; --l) out.push_back(l == 0 ? n : (2 * n - std::abs(l) + 1) / 2);
        return out;
      }
      return so_even_adjoint_pattern(kind == CaseKind::SO_even_E ? n : n + 1);
  }
  return out;
}

}  // namespace artifact::hodge
