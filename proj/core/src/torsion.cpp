#include "artifact/torsion.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace artifact::torsion {

namespace {

const std::vector<int> kYDegrees = {0, 3, 4, 5, 6, 9};
const std::vector<int> kPiDegrees = {3, 4, 5, 6};
const std::vector<int> kTrivDegrees = {0, 3, 6, 9};
constexpr int kDimY = 9, kDimYbar = 3;

std::string H(int i, const std::string& what, bool sigma = false) {
  return std::string(sigma ? "vol^s" : "vol") + " H^" + std::to_string(i) + what;
}

int alt(int i) { return i % 2 == 0 ? 1 : -1; }

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

/// Extended gcd on big integers: returns g = a*x + b*y.
Integer ext_gcd(Integer a, Integer b, Integer& x, Integer& y) {
  Integer x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    Integer q = a / b;
    Integer t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  x = x0;
  y = y0;
  return a;
}

}  // namespace

std::size_t VolumeLedger::symbol(const std::string& name) const {
  auto it = std::find(symbols_.begin(), symbols_.end(), name);
  if (it == symbols_.end()) throw std::out_of_range("unknown volume symbol: " + name);
  return static_cast<std::size_t>(it - symbols_.begin());
}

QVec VolumeLedger::vec(const std::vector<Term>& terms) const {
  QVec v(symbols_.size(), Rational(0));
  for (const auto& [name, e] : terms) v[symbol(name)] += e;
  return v;
}

void VolumeLedger::axiom(std::string label, std::string family, std::string statement,
                         const std::vector<Term>& terms, bool conditional) {
  axioms_.push_back({std::move(label), std::move(family), std::move(statement), vec(terms), conditional});
}

VolumeLedger VolumeLedger::standard() {
  VolumeLedger L;
  auto& S = L.symbols_;
  for (bool s : {false, true}) {
    for (int i : kYDegrees) S.push_back(H(i, "(Y)", s));
    for (int i : kPiDegrees) S.push_back(H(i, "_Pi", s));
    for (int i : kTrivDegrees) S.push_back(H(i, "_triv(Y)", s));
  }
  for (int i = 0; i <= kDimYbar; ++i) S.push_back(H(i, "(Ybar)"));
  for (int i : {1, 2}) S.push_back(H(i, "_pi"));
  for (int i : {0, 3}) S.push_back(H(i, "_triv(Ybar)"));
  for (const char* s : {"RT(Y)", "RT^s(Y)", "RT(Ybar)", "vol(Ybar)", "vol(L_Pi^*)", "vol(L_pi^*)"}) S.push_back(s);

  L.axiom("rt1", "rt1", "RT(Y) = 1", {{"RT(Y)", 1}});
  L.axiom("rt2", "rt2", "RT^s(Y) = RT(Ybar)^2", {{"RT^s(Y)", 1}, {"RT(Ybar)", -2}});

  auto alt_product = [](const std::vector<int>& degrees, const std::string& what, bool sigma, Rational scale) {
    std::vector<Term> t;
    for (int i : degrees) t.emplace_back(H(i, what, sigma), scale * alt(i));
    return t;
  };
  {
    auto t = alt_product(kYDegrees, "(Y)", false, -1);
    t.emplace_back("RT(Y)", 1);
    L.axiom("RTalt Y", "RTalt", "RT(Y) ~ vol H^*(Y)", t);
    t = alt_product(kYDegrees, "(Y)", true, -1);
    t.emplace_back("RT^s(Y)", 1);
    L.axiom("RTalt^s Y", "RTalt", "RT^s(Y) ~ vol^s H^*(Y)", t);
    t = alt_product({0, 1, 2, 3}, "(Ybar)", false, -1);
    t.emplace_back("RT(Ybar)", 1);
    L.axiom("RTalt Ybar", "RTalt", "RT(Ybar) ~ vol H^*(Ybar)", t);
  }

  for (bool s : {false, true})
    for (int i : kYDegrees) {
      std::vector<Term> t = {{H(i, "(Y)", s), 1}};
      if (contains(kPiDegrees, i)) t.emplace_back(H(i, "_Pi", s), -1);
      if (contains(kTrivDegrees, i)) t.emplace_back(H(i, "_triv(Y)", s), -1);
      L.axiom("factorization " + H(i, "(Y)", s), "factorization", H(i, "(Y)", s) + " = Pi part * trivial part", t);
    }
  for (int i = 0; i <= kDimYbar; ++i) {
    std::vector<Term> t = {{H(i, "(Ybar)"), 1}};
    if (i == 1 || i == 2) t.emplace_back(H(i, "_pi"), -1);
    if (i == 0 || i == 3) t.emplace_back(H(i, "_triv(Ybar)"), -1);
    L.axiom("factorization " + H(i, "(Ybar)"), "factorization", H(i, "(Ybar)") + " = pi part * trivial part", t);
  }

  for (bool s : {false, true}) {
    for (int i : {3, 4})
      L.axiom("duality " + H(i, "_Pi", s), "duality", H(i, "_Pi", s) + " * " + H(kDimY - i, "_Pi", s) + " ~ 1",
              {{H(i, "_Pi", s), 1}, {H(kDimY - i, "_Pi", s), 1}});
    for (int i : {0, 3})
      L.axiom("duality " + H(i, "_triv(Y)", s), "duality",
              H(i, "_triv(Y)", s) + " * " + H(kDimY - i, "_triv(Y)", s) + " ~ 1",
              {{H(i, "_triv(Y)", s), 1}, {H(kDimY - i, "_triv(Y)", s), 1}});
  }
  L.axiom("duality " + H(1, "_pi"), "duality", H(1, "_pi") + " * " + H(2, "_pi") + " ~ 1",
          {{H(1, "_pi"), 1}, {H(2, "_pi"), 1}});
  L.axiom("duality " + H(0, "_triv(Ybar)"), "duality", H(0, "_triv(Ybar)") + " * " + H(3, "_triv(Ybar)") + " ~ 1",
          {{H(0, "_triv(Ybar)"), 1}, {H(3, "_triv(Ybar)"), 1}});

  L.axiom("Trivial_Volume", "Trivial_Volume", "vol H^*(Y)_triv ~ 1", alt_product(kTrivDegrees, "_triv(Y)", false, 1));
  {
    auto t = alt_product(kTrivDegrees, "_triv(Y)", true, 1);
    t.emplace_back("vol(Ybar)", -2);
    L.axiom("trivvolume", "trivvolume", "vol^s H^*(Y)_triv ~ vol(Ybar)^2", t);
    t = alt_product({0, 3}, "_triv(Ybar)", false, 1);
    t.emplace_back("vol(Ybar)", -1);
    L.axiom("trivvolume Ybar", "trivvolume", "vol H^*(Ybar)_triv ~ vol(Ybar)", t);
  }
  L.axiom("H^3_Pi sigma-fixed", "fixed", "vol^s H^3_Pi ~ vol H^3_Pi", {{H(3, "_Pi", true), 1}, {H(3, "_Pi"), -1}});
  // Square-root statements enter squared.
  L.axiom("KP1", "KP1", "vol(H^3_Pi)^2 vol(L_Pi^*) ~ sqrt(q1)", {{H(3, "_Pi"), 4}, {"vol(L_Pi^*)", 2}}, true);
  L.axiom("KP2", "KP2", "vol(H^1_pi)^2 vol(L_pi^*) ~ sqrt(q2)", {{H(1, "_pi"), 4}, {"vol(L_pi^*)", 2}}, true);
  return L;
}

std::vector<Target> VolumeLedger::targets() const {
  std::vector<Target> out;
  out.push_back({"oinkA", "vol H^4_Pi in sqrt(Q*) vol H^3_Pi", vec({{H(4, "_Pi"), 1}, {H(3, "_Pi"), -1}}),
                 period::Modulus::SqrtQ});
  std::vector<Term> t;
  for (int i : kPiDegrees) t.emplace_back(H(i, "_Pi", true), alt(i));
  for (int i : {1, 2}) t.emplace_back(H(i, "_pi"), -2 * alt(i));
  out.push_back({"oink1", "vol^s H^*_Pi ~ (vol H^*_pi)^2", vec(t), period::Modulus::Q});
  out.push_back({"buggerme", "vol^s H^4_Pi (vol H^1_pi)^2 / vol H^3_Pi = sqrt(q')",
                 vec({{H(4, "_Pi", true), 1}, {H(1, "_pi"), 2}, {H(3, "_Pi"), -1}}), period::Modulus::SqrtQ});
  return out;
}

Target VolumeLedger::target(const std::string& label) const {
  for (auto& t : targets())
    if (t.label == label) return t;
  throw std::out_of_range("unknown ledger target: " + label);
}

std::size_t VolumeLedger::remove_family(const std::string& family) {
  auto before = axioms_.size();
  axioms_.erase(std::remove_if(axioms_.begin(), axioms_.end(), [&](const Axiom& a) { return a.family == family; }),
                axioms_.end());
  return before - axioms_.size();
}

Derivation VolumeLedger::derive(const Target& t) const {
  Derivation d;
  d.target = t.label;
  d.mod = t.mod;
  const int k = t.mod == period::Modulus::Q ? 1 : 2;
  // Integer left kernel of [axioms; k * target] gives all relations sum c_a v_a + lambda k t = 0.
  QMat rows;
  for (const auto& a : axioms_) rows.push_back(a.v);
  QVec kt = t.v;
  for (auto& e : kt) e *= k;
  rows.push_back(kt);
  ZMat kernel = linalg::integer_left_kernel(linalg::to_integer(rows));
  const std::size_t last = axioms_.size();
  std::vector<Integer> acc(axioms_.size() + 1, Integer(0));
  Integer g = 0;
  for (const auto& row : kernel) {
    if (row[last] == 0) continue;
    if (g == 0) {
      acc = row;
      g = row[last];
      continue;
    }
    Integer x, y;
    Integer ng = ext_gcd(g, row[last], x, y);
    for (std::size_t c = 0; c < acc.size(); ++c) acc[c] = x * acc[c] + y * row[c];
    g = ng;
  }
  if (g != 1 && g != -1) {
    d.message = "underdetermined: " + t.label + (g == 0 ? " is not in the span of the axioms"
                                                          : " needs a root of order " + to_string(Integer(abs(g))));
    return d;
  }
  // acc . rows = 0 with acc[last] = g, so sum (-g acc_a) v_a = k t.
  std::set<std::string> fam;
  for (std::size_t a = 0; a < axioms_.size(); ++a) {
    Integer c = -g * acc[a];
    if (c == 0) continue;
    d.combination.emplace_back(axioms_[a].label, c);
    fam.insert(axioms_[a].family);
    d.uses_conditional = d.uses_conditional || axioms_[a].conditional;
  }
  d.families.assign(fam.begin(), fam.end());
  d.derived = true;
  d.replay_ok = replay(d);
  if (!d.replay_ok) {
    d.derived = false;
    d.message = "replay mismatch for " + t.label;
  }
  return d;
}

Derivation VolumeLedger::require(const Target& t) const {
  Derivation d = derive(t);
  if (!d.derived) throw std::runtime_error(d.message.empty() ? "underdetermined: " + t.label : d.message);
  return d;
}

std::vector<Derivation> VolumeLedger::derive_all() const {
  std::vector<Derivation> out;
  for (const auto& t : targets()) out.push_back(derive(t));
  return out;
}

bool VolumeLedger::replay(const Derivation& d) const {
  Target t = target(d.target);
  QVec sum(symbols_.size(), Rational(0));
  for (const auto& [label, c] : d.combination) {
    auto it = std::find_if(axioms_.begin(), axioms_.end(), [&](const Axiom& a) { return a.label == label; });
    if (it == axioms_.end()) return false;
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += Rational(c) * it->v[i];
  }
  const int k = d.mod == period::Modulus::Q ? 1 : 2;
  for (std::size_t i = 0; i < sum.size(); ++i)
    if (sum[i] != t.v[i] * k) return false;
  return true;
}

std::string format_ledger(const VolumeLedger& ledger, const std::vector<Derivation>& ds) {
  std::ostringstream out;
  out << "axioms: " << ledger.axioms().size() << ", symbols: " << ledger.symbols().size() << "\n";
  for (const auto& d : ds) {
    const Target t = ledger.target(d.target);
    out << (d.derived ? "[derived] " : "[FAILED]  ") << d.target << ": " << t.statement
        << (d.mod == period::Modulus::Q ? "  (mod Q*)" : "  (mod sqrt(Q*))") << "\n";
    if (!d.derived) {
      out << "    " << d.message << "\n";
      continue;
    }
    out << "    " << (d.mod == period::Modulus::Q ? "target" : "2 * target") << " =";
    bool first = true;
    for (const auto& [label, c] : d.combination) {
      out << (first ? " " : " + ") << to_string(c) << " * [" << label << "]";
      first = false;
    }
    out << "\n    families: ";
    for (std::size_t i = 0; i < d.families.size(); ++i) out << (i ? ", " : "") << d.families[i];
    out << (d.uses_conditional ? "  (uses conditional axioms)" : "  (unconditional)")
        << (d.replay_ok ? ", replay ok" : ", replay FAILED") << "\n";
  }
  return out.str();
}

}  // namespace artifact::torsion
