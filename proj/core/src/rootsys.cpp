#include "artifact/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace artifact::rootsys {

namespace {

void check_rank(RootType t, int r) {
  bool ok = true;
  switch (t) {
    case RootType::A:
    case RootType::B:
    case RootType::C:
    case RootType::BC:
      ok = r >= 1;
      break;
    case RootType::D:
      ok = r >= 2;
      break;
    case RootType::E:
      ok = r >= 6 && r <= 8;
      break;
    case RootType::F:
      ok = r == 4;
      break;
    case RootType::G:
      ok = r == 2;
      break;
  }
  if (!ok) throw std::invalid_argument("unsupported root system " + type_name(t, r));
}

LieType simple_type(RootType t, int r) { return LieType{{{t, r}}, 0}; }
LieType torus(int r) { return LieType{{}, r}; }

/// Complexified so(n) as a reductive type.
LieType so_type(int n) {
  if (n <= 1) return {};
  if (n == 2) return torus(1);
  if (n % 2 == 1) return simple_type(RootType::B, (n - 1) / 2);
  if (n == 4) return LieType{{{RootType::A, 1}, {RootType::A, 1}}, 0};
  return simple_type(RootType::D, n / 2);
}

LieType a_type(int n) { return n >= 2 ? simple_type(RootType::A, n - 1) : LieType{}; }

IVec unit(int dim, int i, std::int64_t c) {
  IVec v(static_cast<std::size_t>(dim), 0);
  v[static_cast<std::size_t>(i)] = c;
  return v;
}

IVec add(IVec a, const IVec& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

IVec neg(IVec a) {
  for (auto& x : a) x = -x;
  return a;
}

void pm_pairs(int dim, int offset, int count, std::int64_t c, std::vector<IVec>& out) {
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) out.push_back(add(unit(dim, offset + i, si * c), unit(dim, offset + j, sj * c)));
}

void pm_units(int dim, int offset, int count, std::int64_t c, std::vector<IVec>& out) {
  for (int i = 0; i < count; ++i) {
    out.push_back(unit(dim, offset + i, c));
    out.push_back(unit(dim, offset + i, -c));
  }
}

std::vector<IVec> e8_roots() {
  std::vector<IVec> roots;
  pm_pairs(8, 0, 8, 2, roots);
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) % 2 != 0) continue;
    IVec v(8, 1);
    for (int k = 0; k < 8; ++k)
      if (mask & (1 << k)) v[static_cast<std::size_t>(k)] = -1;
    roots.push_back(v);
  }
  return roots;
}

/// Generic functional used to split roots into positive and negative ones.
std::int64_t height(const IVec& x) {
  std::int64_t h = 0, w = 1;
  for (auto c : x) {
    h += c * w;
    w *= 3;
  }
  return h;
}

}  // namespace

std::string type_name(RootType t, int rank) {
  static const char* names[] = {"A", "B", "C", "D", "BC", "E", "F", "G"};
  return std::string(names[static_cast<int>(t)]) + std::to_string(rank);
}

int dimension(RootType t, int r) {
  check_rank(t, r);
  switch (t) {
    case RootType::A:
      return r * (r + 2);
    case RootType::B:
    case RootType::C:
    case RootType::BC:
      return r * (2 * r + 1);
    case RootType::D:
      return r * (2 * r - 1);
    case RootType::E:
      return r == 6 ? 78 : r == 7 ? 133 : 248;
    case RootType::F:
      return 52;
    case RootType::G:
      return 14;
  }
  return 0;
}

int positive_root_count(RootType t, int r) {
  check_rank(t, r);
  switch (t) {
    case RootType::A:
      return r * (r + 1) / 2;
    case RootType::B:
    case RootType::C:
      return r * r;
    case RootType::BC:
      return r * r + r;
    case RootType::D:
      return r * (r - 1);
    case RootType::E:
      return r == 6 ? 36 : r == 7 ? 63 : 120;
    case RootType::F:
      return 24;
    case RootType::G:
      return 6;
  }
  return 0;
}

std::vector<int> exponents(RootType t, int r) {
  check_rank(t, r);
  std::vector<int> e;
  switch (t) {
    case RootType::A:
      for (int i = 1; i <= r; ++i) e.push_back(i);
      break;
    case RootType::B:
    case RootType::C:
    case RootType::BC:
      for (int i = 1; i <= r; ++i) e.push_back(2 * i - 1);
      break;
    case RootType::D:
      for (int i = 1; i < r; ++i) e.push_back(2 * i - 1);
      e.push_back(r - 1);
      break;
    case RootType::E:
      if (r == 6) e = {1, 4, 5, 7, 8, 11};
      if (r == 7) e = {1, 5, 7, 9, 11, 13, 17};
      if (r == 8) e = {1, 7, 11, 13, 17, 19, 23, 29};
      break;
    case RootType::F:
      e = {1, 5, 7, 11};
      break;
    case RootType::G:
      e = {1, 5};
      break;
  }
  std::sort(e.begin(), e.end());
  return e;
}

Integer weyl_order(RootType t, int r) {
  check_rank(t, r);
  switch (t) {
    case RootType::A:
      return factorial(r + 1);
    case RootType::B:
    case RootType::C:
    case RootType::BC:
      return (Integer(1) << r) * factorial(r);
    case RootType::D:
      return (Integer(1) << (r - 1)) * factorial(r);
    case RootType::E:
      return r == 6 ? Integer(51840) : r == 7 ? Integer(2903040) : Integer(696729600);
    case RootType::F:
      return 1152;
    case RootType::G:
      return 12;
  }
  return 0;
}

int LieType::dim() const {
  int d = torus;
  for (const auto& f : simple) d += dimension(f.type, f.rank);
  return d;
}

int LieType::rank() const {
  int r = torus;
  for (const auto& f : simple) r += f.rank;
  return r;
}

int LieType::positive_roots() const {
  int n = 0;
  for (const auto& f : simple) n += positive_root_count(f.type, f.rank);
  return n;
}

std::vector<int> LieType::exponents() const {
  std::vector<int> e(static_cast<std::size_t>(torus), 0);
  for (const auto& f : simple) {
    auto fe = rootsys::exponents(f.type, f.rank);
    e.insert(e.end(), fe.begin(), fe.end());
  }
  std::sort(e.begin(), e.end());
  return e;
}

std::vector<int> LieType::degrees() const {
  auto e = exponents();
  for (auto& x : e) ++x;
  return e;
}

Integer LieType::weyl_order() const {
  Integer w = 1;
  for (const auto& f : simple) w *= rootsys::weyl_order(f.type, f.rank);
  return w;
}

std::string LieType::str() const {
  std::vector<std::string> parts;
  for (const auto& f : simple) parts.push_back(type_name(f.type, f.rank));
  if (torus > 0) parts.push_back("T" + std::to_string(torus));
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (std::size_t k = 1; k < parts.size(); ++k) s += "+" + parts[k];
  return s;
}

LieType& LieType::operator+=(const LieType& o) {
  simple.insert(simple.end(), o.simple.begin(), o.simple.end());
  torus += o.torus;
  return *this;
}

RootSystem root_system(RootType t, int r) {
  check_rank(t, r);
  RootSystem rs{t, r, r, {}, exponents(t, r)};
  switch (t) {
    case RootType::A:
      rs.ambient = r + 1;
      for (int i = 0; i <= r; ++i)
        for (int j = 0; j <= r; ++j)
          if (i != j) rs.roots.push_back(add(unit(r + 1, i, 2), unit(r + 1, j, -2)));
      break;
    case RootType::B:
      pm_units(r, 0, r, 2, rs.roots);
      pm_pairs(r, 0, r, 2, rs.roots);
      break;
    case RootType::C:
      pm_units(r, 0, r, 4, rs.roots);
      pm_pairs(r, 0, r, 2, rs.roots);
      break;
    case RootType::BC:
      pm_units(r, 0, r, 2, rs.roots);
      pm_units(r, 0, r, 4, rs.roots);
      pm_pairs(r, 0, r, 2, rs.roots);
      break;
    case RootType::D:
      pm_pairs(r, 0, r, 2, rs.roots);
      break;
    case RootType::G:
      rs.ambient = 3;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          if (i == j) continue;
          rs.roots.push_back(add(unit(3, i, 2), unit(3, j, -2)));
        }
      for (int i = 0; i < 3; ++i) {
        IVec v(3, -2);
        v[static_cast<std::size_t>(i)] = 4;
        rs.roots.push_back(v);
        rs.roots.push_back(neg(v));
      }
      break;
    case RootType::F:
      pm_units(4, 0, 4, 2, rs.roots);
      pm_pairs(4, 0, 4, 2, rs.roots);
      for (int mask = 0; mask < 16; ++mask) {
        IVec v(4, 1);
        for (int k = 0; k < 4; ++k)
          if (mask & (1 << k)) v[static_cast<std::size_t>(k)] = -1;
        rs.roots.push_back(v);
      }
      break;
    case RootType::E: {
      rs.ambient = 8;
      for (const auto& a : e8_roots()) {
        if (r <= 7 && a[6] + a[7] != 0) continue;
        if (r == 6 && a[5] - a[6] != 0) continue;
        rs.roots.push_back(a);
      }
      break;
    }
  }
  return rs;
}

std::int64_t dot(const IVec& a, const IVec& b) {
  std::int64_t s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

IVec reflect(const IVec& x, const IVec& alpha) {
  std::int64_t num = 2 * dot(x, alpha), den = dot(alpha, alpha);
  if (num % den != 0) throw std::logic_error("reflect: vector outside the weight lattice");
  std::int64_t c = num / den;
  IVec y = x;
  for (std::size_t k = 0; k < y.size(); ++k) y[k] -= c * alpha[k];
  return y;
}

std::vector<IVec> positive_roots(const std::vector<IVec>& roots) {
  std::vector<IVec> pos;
  for (const auto& a : roots) {
    std::int64_t h = height(a);
    if (h == 0) throw std::logic_error("positive_roots: functional not generic");
    if (h > 0) pos.push_back(a);
  }
  return pos;
}

std::vector<IVec> simple_roots(const std::vector<IVec>& roots) {
  auto pos = positive_roots(roots);
  std::set<IVec> pos_set(pos.begin(), pos.end());
  std::vector<IVec> simple;
  for (const auto& a : pos) {
    bool decomposable = false;
    for (const auto& b : pos) {
      IVec d = a;
      for (std::size_t k = 0; k < d.size(); ++k) d[k] -= b[k];
      if (pos_set.count(d)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(a);
  }
  return simple;
}

IVec two_rho(const std::vector<IVec>& roots) {
  if (roots.empty()) return {};
  IVec s(roots[0].size(), 0);
  for (const auto& a : positive_roots(roots)) s = add(s, a);
  return s;
}

std::vector<IVec> orbit(const IVec& x0, const std::vector<IVec>& simple) {
  std::set<IVec> seen{x0};
  std::deque<IVec> queue{x0};
  while (!queue.empty()) {
    IVec x = std::move(queue.front());
    queue.pop_front();
    for (const auto& a : simple) {
      IVec y = reflect(x, a);
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  return {seen.begin(), seen.end()};
}

Integer weyl_order_oracle(const RootSystem& rs) {
  IVec x0 = two_rho(rs.roots);
  return Integer(orbit(x0, simple_roots(rs.roots)).size());
}

// ---------------------------------------------------------------------------
// Group descriptors

bool GroupDescriptor::is_compact() const {
  if (is_product())
    return std::all_of(product.begin(), product.end(), [](const auto& f) { return f.is_compact(); });
  if (base != Base::Real) return false;
  if (family == Family::SU || family == Family::U) return true;
  return family == Family::SO && q == 0;
}

std::string GroupDescriptor::str() const {
  if (is_product()) {
    std::string s;
    for (std::size_t k = 0; k < product.size(); ++k) s += (k ? " x " : "") + product[k].str();
    return s;
  }
  std::string suffix = base == Base::ComplexAsReal ? "/C" : "/R";
  switch (family) {
    case Family::PGL:
      return "PGL(" + std::to_string(n) + ")" + suffix;
    case Family::SL:
      return "SL(" + std::to_string(n) + ")" + suffix;
    case Family::GL:
      return "GL(" + std::to_string(n) + ")" + suffix;
    case Family::SU:
      return "SU(" + std::to_string(n) + ")";
    case Family::U:
      return "U(" + std::to_string(n) + ")";
    case Family::E6:
      return std::string("E6(") + (e6 == E6Form::Split ? "split" : "IV") + ")";
    case Family::SO:
      if (base == Base::ComplexAsReal) return "SO(" + std::to_string(n) + ")/C";
      return "SO(" + std::to_string(p) + "," + std::to_string(q) + ")";
  }
  return "?";
}

GroupDescriptor make_group(Family f, int n, Base b) {
  if (n < 1) throw std::invalid_argument("unsupported group: rank parameter must be positive");
  GroupDescriptor g;
  g.family = f;
  g.n = n;
  g.base = b;
  if (f == Family::SO) {
    if (n <= 1) throw std::invalid_argument("degenerate rank: SO(" + std::to_string(n) + ")");
    g.p = (n + 1) / 2;
    g.q = n / 2;
  }
  if ((f == Family::SU || f == Family::U || f == Family::E6) && b == Base::ComplexAsReal)
    throw std::invalid_argument("unsupported group: compact or exceptional family over C");
  return g;
}

GroupDescriptor make_so(int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("unsupported group: negative signature");
  if (p + q <= 1) throw std::invalid_argument("degenerate rank: SO(" + std::to_string(p) + "," + std::to_string(q) + ")");
  GroupDescriptor g;
  g.family = Family::SO;
  g.n = p + q;
  g.p = p;
  g.q = q;
  return g;
}

GroupDescriptor make_product(std::vector<GroupDescriptor> factors) {
  if (factors.empty()) throw std::invalid_argument("unsupported group: empty product");
  if (factors.size() == 1) return factors[0];
  GroupDescriptor g;
  for (auto& f : factors) {
    if (f.is_product())
      g.product.insert(g.product.end(), f.product.begin(), f.product.end());
    else
      g.product.push_back(std::move(f));
  }
  return g;
}

namespace {

std::string strip(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

GroupDescriptor parse_factor(const std::string& raw) {
  static const std::regex underscore(R"(^([A-Za-z]+)_(\d+)(/[RC])?$)");
  static const std::regex call(R"(^([A-Za-z]+[0-9]?)\(([^()]*)\)(/([RC]))?$)");
  std::string s = std::regex_replace(raw, underscore, "$1($2)$3");
  std::smatch m;
  if (!std::regex_match(s, m, call)) throw std::invalid_argument("unsupported group: " + raw);
  std::string fam = m[1].str();
  std::transform(fam.begin(), fam.end(), fam.begin(), [](unsigned char c) { return std::toupper(c); });
  std::string args = m[2].str();
  args.erase(std::remove_if(args.begin(), args.end(), [](unsigned char c) { return std::isspace(c); }), args.end());
  Base base = m[4].matched && m[4].str() == "C" ? Base::ComplexAsReal : Base::Real;

  auto parse_int = [&](const std::string& t) {
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw std::invalid_argument("unsupported group: " + raw);
    return std::stoi(t);
  };

  if (fam == "E6") {
    if (base != Base::Real) throw std::invalid_argument("unsupported group: " + raw);
    std::string form = args;
    std::transform(form.begin(), form.end(), form.begin(), [](unsigned char c) { return std::tolower(c); });
    GroupDescriptor g;
    g.family = Family::E6;
    g.n = 6;
    if (form == "split" || form.empty())
      g.e6 = E6Form::Split;
    else if (form == "iv")
      g.e6 = E6Form::IV;
    else
      throw std::invalid_argument("unsupported group: " + raw);
    return g;
  }
  if (fam == "SO") {
    if (auto comma = args.find(','); comma != std::string::npos) {
      if (base != Base::Real) throw std::invalid_argument("unsupported group: " + raw);
      return make_so(parse_int(args.substr(0, comma)), parse_int(args.substr(comma + 1)));
    }
    return make_group(Family::SO, parse_int(args), base);
  }
  static const std::vector<std::pair<std::string, Family>> families = {
      {"PGL", Family::PGL}, {"SL", Family::SL}, {"GL", Family::GL}, {"SU", Family::SU}, {"U", Family::U}};
  for (const auto& [name, f] : families)
    if (fam == name) return make_group(f, parse_int(args), base);
  throw std::invalid_argument("unsupported group: " + raw);
}

}  // namespace

GroupDescriptor parse_group(std::string_view spec) {
  std::string text(spec);
  // Accept the multiplication sign as a product separator.
  for (std::size_t pos; (pos = text.find("\xC3\x97")) != std::string::npos;) text.replace(pos, 2, " x ");
  std::vector<std::string> factors{""};
  std::istringstream words(text);
  std::string w;
  bool any = false;
  while (words >> w) {
    any = true;
    if (w == "x" || w == "X")
      factors.emplace_back();
    else
      factors.back() += w;
  }
  if (!any) throw std::invalid_argument("unsupported group: empty specification");
  std::vector<GroupDescriptor> parsed;
  for (const auto& f : factors) {
    std::string t = strip(f);
    if (t.empty()) throw std::invalid_argument("unsupported group: product with an empty factor");
    parsed.push_back(parse_factor(t));
  }
  return make_product(std::move(parsed));
}

LieType complexified_type(const GroupDescriptor& g) {
  if (g.is_product()) {
    LieType t;
    for (const auto& f : g.product) t += complexified_type(f);
    return t;
  }
  LieType t;
  switch (g.family) {
    case Family::PGL:
    case Family::SL:
    case Family::SU:
      t = a_type(g.n);
      break;
    case Family::GL:
    case Family::U:
      t = a_type(g.n);
      t.torus += 1;
      break;
    case Family::SO:
      t = so_type(g.n);
      break;
    case Family::E6:
      t = simple_type(RootType::E, 6);
      break;
  }
  if (g.base == Base::ComplexAsReal) {
    LieType twice = t;
    twice += t;
    return twice;
  }
  return t;
}

LieType compact_type(const GroupDescriptor& g) {
  if (g.is_product()) {
    LieType t;
    for (const auto& f : g.product) t += compact_type(f);
    return t;
  }
  if (g.base == Base::ComplexAsReal) {
    GroupDescriptor real = g;
    real.base = Base::Real;
    return complexified_type(real);
  }
  switch (g.family) {
    case Family::PGL:
    case Family::SL:
    case Family::GL:
      return so_type(g.n);
    case Family::SU:
    case Family::U:
      return complexified_type(g);
    case Family::SO: {
      LieType t = so_type(g.p);
      t += so_type(g.q);
      return t;
    }
    case Family::E6:
      return g.e6 == E6Form::Split ? simple_type(RootType::C, 4) : simple_type(RootType::F, 4);
  }
  return {};
}

namespace {

/// Restricted root data (Delta(g:b), Delta(k:b), Delta(m:b)) of a simple factor.
struct Restricted {
  std::vector<IVec> g_roots, k_roots, m_roots;
  Integer w_g = 1, w_k = 1;
  bool enumerable = true;
  int rank = 0;
};

std::vector<IVec> embed(const std::vector<IVec>& roots, int dim, int offset) {
  std::vector<IVec> out;
  for (const auto& a : roots) {
    IVec v(static_cast<std::size_t>(dim), 0);
    std::copy(a.begin(), a.end(), v.begin() + offset);
    out.push_back(v);
  }
  return out;
}

int delta_of(const GroupDescriptor& g) { return complexified_type(g).rank() - compact_type(g).rank(); }

Restricted restricted_data(const GroupDescriptor& g) {
  Restricted r;
  if (delta_of(g) <= 0) throw std::invalid_argument("not tabulated: " + g.str() + " has delta = 0");
  if (g.base == Base::ComplexAsReal) {
    GroupDescriptor real = g;
    real.base = Base::Real;
    LieType t = complexified_type(real);
    int dim = 0;
    for (const auto& f : t.simple) dim += root_system(f.type, f.rank).ambient;
    int offset = 0;
    for (const auto& f : t.simple) {
      auto rs = root_system(f.type, f.rank);
      auto e = embed(rs.roots, dim, offset);
      r.g_roots.insert(r.g_roots.end(), e.begin(), e.end());
      offset += rs.ambient;
    }
    r.k_roots = r.g_roots;
    r.w_g = r.w_k = t.weyl_order();
    r.rank = t.rank();
    return r;
  }
  switch (g.family) {
    case Family::PGL:
    case Family::SL:
    case Family::GL: {
      int m = g.n / 2;
      r.rank = m;
      if (g.n % 2 == 0) {
        r.g_roots = root_system(RootType::C, m).roots;
        if (m >= 2) r.k_roots = root_system(RootType::D, m).roots;
        r.w_g = weyl_order(RootType::C, m);
        r.w_k = m >= 2 ? weyl_order(RootType::D, m) : Integer(1);
      } else {
        r.g_roots = root_system(RootType::BC, m).roots;
        r.k_roots = root_system(RootType::B, m).roots;
        r.w_g = weyl_order(RootType::BC, m);
        r.w_k = weyl_order(RootType::B, m);
      }
      pm_units(m, 0, m, 4, r.m_roots);
      return r;
    }
    case Family::SO: {
      if (g.p % 2 == 1 && g.q % 2 == 1) {
        int k = (g.p - 1) / 2, l = (g.q - 1) / 2;
        r.rank = k + l;
        r.g_roots = root_system(RootType::B, k + l).roots;
        if (k > 0) {
          auto e = embed(root_system(RootType::B, k).roots, k + l, 0);
          r.k_roots.insert(r.k_roots.end(), e.begin(), e.end());
        }
        if (l > 0) {
          auto e = embed(root_system(RootType::B, l).roots, k + l, k);
          r.k_roots.insert(r.k_roots.end(), e.begin(), e.end());
        }
        if (k + l >= 2) r.m_roots = root_system(RootType::D, k + l).roots;
        r.w_g = weyl_order(RootType::B, k + l);
        r.w_k = (k > 0 ? weyl_order(RootType::B, k) : Integer(1)) * (l > 0 ? weyl_order(RootType::B, l) : Integer(1));
        return r;
      }
      break;
    }
    case Family::E6:
      // Tabulated only: chambers are not reconstructed for E6.
      r.enumerable = false;
      r.rank = 2;
      if (g.e6 == E6Form::Split) {
        r.w_g = weyl_order(RootType::F, 4);
        r.w_k = weyl_order(RootType::C, 4);
      } else {
        r.w_g = r.w_k = weyl_order(RootType::A, 2);
      }
      return r;
    default:
      break;
  }
  throw std::invalid_argument("not tabulated: " + g.str());
}

std::vector<IVec> positive_chamber_filter(const std::vector<IVec>& pts, const std::vector<IVec>& k_pos) {
  std::vector<IVec> out;
  for (const auto& y : pts)
    if (std::all_of(k_pos.begin(), k_pos.end(), [&](const IVec& b) { return dot(y, b) > 0; })) out.push_back(y);
  return out;
}

IVec dominant(IVec y, const std::vector<IVec>& k_simple) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (const auto& a : k_simple)
      if (dot(y, a) < 0) {
        y = reflect(y, a);
        moved = true;
      }
  }
  return y;
}

}  // namespace

Integer weyl_index(const GroupDescriptor& g) {
  if (g.is_product()) {
    Integer idx = 1;
    bool any = false;
    for (const auto& f : g.product) {
      if (delta_of(f) <= 0) continue;
      idx *= weyl_index(f);
      any = true;
    }
    if (!any) throw std::invalid_argument("not tabulated: " + g.str() + " has delta = 0");
    return idx;
  }
  Restricted r = restricted_data(g);
  if (r.w_g % r.w_k != 0) throw std::logic_error("Weyl index is not an integer for " + g.str());
  return r.w_g / r.w_k;
}

ChamberReport chamber_enumeration(const GroupDescriptor& g) {
  if (g.is_product()) {
    ChamberReport total{1, 1, true};
    bool any = false;
    for (const auto& f : g.product) {
      if (delta_of(f) <= 0) continue;
      auto c = chamber_enumeration(f);
      total.chambers *= c.chambers;
      total.reached *= c.reached;
      total.surjective = total.surjective && c.surjective;
      any = true;
    }
    if (!any) throw std::invalid_argument("not tabulated: " + g.str() + " has delta = 0");
    return total;
  }
  Restricted r = restricted_data(g);
  if (!r.enumerable) throw std::invalid_argument("not tabulated: chambers of " + g.str() + " are not reconstructed");
  if (r.rank > 4) throw std::invalid_argument("chamber enumeration limited to restricted rank <= 4");
  IVec x0 = two_rho(r.g_roots);
  auto g_orbit = orbit(x0, simple_roots(r.g_roots));
  auto k_pos = r.k_roots.empty() ? std::vector<IVec>{} : positive_roots(r.k_roots);
  auto k_simple = r.k_roots.empty() ? std::vector<IVec>{} : simple_roots(r.k_roots);
  auto chambers = positive_chamber_filter(g_orbit, k_pos);
  std::set<IVec> chamber_set(chambers.begin(), chambers.end());

  std::set<IVec> reached;
  auto m_simple = r.m_roots.empty() ? std::vector<IVec>{} : simple_roots(r.m_roots);
  for (const auto& y : orbit(x0, m_simple)) {
    IVec d = dominant(y, k_simple);
    if (chamber_set.count(d)) reached.insert(d);
  }
  return {chamber_set.size(), reached.size(), reached.size() == chamber_set.size()};
}

bool chamber_check(const GroupDescriptor& g) {
  auto c = chamber_enumeration(g);
  return c.surjective && Integer(c.chambers) == weyl_index(g);
}

GroupInvariants invariants(const GroupDescriptor& g) {
  LieType gt = complexified_type(g), kt = compact_type(g);
  GroupInvariants inv;
  inv.d_G = gt.dim();
  inv.r_G = gt.rank();
  inv.d_K = kt.dim();
  inv.r_K = kt.rank();
  inv.delta = inv.r_G - inv.r_K;
  inv.q = gt.positive_roots() - kt.positive_roots();
  inv.d_symm = inv.d_G - inv.d_K;
  inv.delta_K_pi_exponent = Rational(inv.d_K + inv.r_K, 2);
  inv.g_type = gt.str();
  inv.k_type = kt.str();
  if (inv.delta > 0) {
    try {
      inv.weyl_index = weyl_index(g);
    } catch (const std::invalid_argument&) {
      inv.weyl_index.reset();
    }
  }
  return inv;
}

MacdonaldVolume macdonald_volume(const LieType& compact) {
  MacdonaldVolume v{Rational(1), Rational(0)};
  for (int m : compact.exponents()) {
    v.coefficient *= Rational(Integer(2), factorial(m));
    v.pi_exponent += m + 1;
  }
  return v;
}

MacdonaldVolume macdonald_volume(const GroupDescriptor& compact) {
  if (!compact.is_compact()) throw std::invalid_argument("macdonald_volume: " + compact.str() + " is not compact");
  return macdonald_volume(complexified_type(compact));
}

namespace {

QMat elementary(std::size_t n, std::size_t i, std::size_t j) {
  QMat m = linalg::zeros(n, n);
  m[i][j] = 1;
  return m;
}

Rational trace(const QMat& a) {
  Rational t = 0;
  for (std::size_t k = 0; k < a.size(); ++k) t += a[k][k];
  return t;
}

QMat gram(const std::vector<QMat>& xs) {
  QMat gm = linalg::zeros(xs.size(), xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < xs.size(); ++j) gm[i][j] = trace(linalg::multiply(xs[i], xs[j]));
  return gm;
}

/// Diagonal cocharacters E_ii - E_{k+i,k+i} preserving the form J.
std::vector<QMat> classical_cocharacters(std::size_t n, std::size_t k, const QMat& form) {
  std::vector<QMat> xs;
  for (std::size_t i = 0; i < k; ++i) {
    QMat x = linalg::add(elementary(n, i, i), linalg::scale(elementary(n, k + i, k + i), Rational(-1)));
    QMat lhs = linalg::add(linalg::multiply(linalg::transpose(x), form), linalg::multiply(form, x));
    for (const auto& row : lhs)
      for (const auto& e : row)
        if (e != 0) throw std::logic_error("cocharacter does not preserve the form");
    xs.push_back(std::move(x));
  }
  return xs;
}

QMat split_form(std::size_t k, bool odd, bool skew) {
  std::size_t n = 2 * k + (odd ? 1 : 0);
  QMat j = linalg::zeros(n, n);
  for (std::size_t i = 0; i < k; ++i) {
    j[i][k + i] = 1;
    j[k + i][i] = skew ? -1 : 1;
  }
  if (odd) j[2 * k][2 * k] = 1;
  return j;
}

QMat block_double(const QMat& a) {
  std::size_t n = a.size();
  QMat d = linalg::zeros(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i][j] = d[n + i][n + j] = a[i][j];
  return d;
}

}  // namespace

Rational dual_trace_form(const GroupDescriptor& g) {
  if (g.is_product()) throw std::invalid_argument("dual_trace_form: unsupported family " + g.str());
  QMat gm, dual_gm;
  if (g.family == Family::GL) {
    std::size_t n = static_cast<std::size_t>(g.n);
    std::vector<QMat> xs;
    for (std::size_t i = 0; i < n; ++i) xs.push_back(elementary(n, i, i));
    gm = gram(xs);
    dual_gm = gram(xs);  // the dual group is again GL_n
  } else if (g.family == Family::SO) {
    std::size_t n = static_cast<std::size_t>(g.n), k = n / 2;
    bool odd = n % 2 == 1;
    gm = gram(classical_cocharacters(n, k, split_form(k, odd, false)));
    // Dual group: SO_2k for even n, Sp_2k for odd n.
    dual_gm = gram(classical_cocharacters(2 * k, k, split_form(k, false, odd)));
  } else {
    throw std::invalid_argument("dual_trace_form: unsupported family " + g.str());
  }
  if (g.base == Base::ComplexAsReal) {
    gm = block_double(gm);
    dual_gm = block_double(dual_gm);
  }
  auto inv = linalg::inverse(gm);
  if (!inv) throw std::logic_error("dual_trace_form: degenerate trace form");
  Rational c = (*inv)[0][0] / dual_gm[0][0];
  if (!linalg::equal(*inv, linalg::scale(dual_gm, c)))
    throw std::logic_error("dual_trace_form: forms are not proportional for " + g.str());
  return c;
}

}  // namespace artifact::rootsys
