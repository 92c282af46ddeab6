#include "artifact/periodring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace artifact::period {

namespace {

std::string format_exponent(const Rational& e) {
  if (e == 1) return "";
  if (is_integer(e)) return "^" + to_string(e);
  return "^(" + to_string(e) + ")";
}

}  // namespace

Alphabet::Builder& Alphabet::Builder::indeterminate(const std::string& name) {
  gens_.push_back({name, GeneratorKind::Indeterminate, Embedding::None, name});
  return *this;
}

Alphabet::Builder& Alphabet::Builder::embedded(const std::string& base) {
  gens_.push_back({sigma_name(base), GeneratorKind::Indeterminate, Embedding::Sigma, base});
  gens_.push_back({sigma_bar_name(base), GeneratorKind::Indeterminate, Embedding::SigmaBar, base});
  return *this;
}

Alphabet::Builder& Alphabet::Builder::sqrt_disc(const std::string& name) {
  gens_.push_back({name, GeneratorKind::SqrtDisc, Embedding::None, name});
  return *this;
}

std::shared_ptr<const Alphabet> Alphabet::Builder::build() const {
  std::shared_ptr<Alphabet> a(new Alphabet());
  for (const auto& g : gens_)
    if (g.kind == GeneratorKind::Indeterminate) a->gens_.push_back(g);
  for (const auto& g : gens_)
    if (g.kind == GeneratorKind::SqrtDisc) a->gens_.push_back(g);
  a->sqrt_d_ = a->gens_.size();
  a->gens_.push_back({"sqrtD", GeneratorKind::SqrtD, Embedding::None, "sqrtD"});
  a->i_ = a->gens_.size();
  a->gens_.push_back({"i", GeneratorKind::ImagUnit, Embedding::None, "i"});
  a->pi_ = a->gens_.size();
  a->gens_.push_back({"pi", GeneratorKind::Pi, Embedding::None, "pi"});
  a->two_pi_i_ = a->gens_.size();
  a->gens_.push_back({"(2*pi*i)", GeneratorKind::TwoPiI, Embedding::None, "2pii"});

  std::size_t n = a->gens_.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k + 1; l < n; ++l)
      if (a->gens_[k].name == a->gens_[l].name)
        throw std::invalid_argument("duplicate generator: " + a->gens_[k].name);

  a->partner_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    a->partner_[k] = k;
    const auto& g = a->gens_[k];
    if (g.embedding == Embedding::None) continue;
    for (std::size_t l = 0; l < n; ++l)
      if (l != k && a->gens_[l].base == g.base && a->gens_[l].embedding != Embedding::None &&
          a->gens_[l].embedding != g.embedding)
        a->partner_[k] = l;
  }

  auto unit = [n](std::size_t k, int c) {
    QVec v(n, Rational(0));
    v[k] = c;
    return v;
  };
  a->builtin_.push_back(unit(a->i_, 2));
  QVec tie(n, Rational(0));
  tie[a->two_pi_i_] = 1;
  tie[a->pi_] = -1;
  tie[a->i_] = -1;
  a->builtin_.push_back(tie);
  a->builtin_.push_back(unit(a->sqrt_d_, 2));
  for (std::size_t k = 0; k < n; ++k)
    if (a->gens_[k].kind == GeneratorKind::SqrtDisc) a->builtin_.push_back(unit(k, 2));
  return a;
}

std::optional<std::size_t> Alphabet::find(const std::string& name) const {
  for (std::size_t k = 0; k < gens_.size(); ++k)
    if (gens_[k].name == name) return k;
  return std::nullopt;
}

std::size_t Alphabet::index(const std::string& name) const {
  if (auto k = find(name)) return *k;
  throw std::out_of_range("unknown generator: " + name);
}

PeriodScalar Alphabet::one() const { return PeriodScalar(shared_from_this(), QVec(size(), Rational(0))); }

PeriodScalar Alphabet::var(const std::string& name) const {
  QVec v(size(), Rational(0));
  v[index(name)] = 1;
  return PeriodScalar(shared_from_this(), std::move(v));
}

PeriodScalar Alphabet::sigma(const std::string& base) const { return var(sigma_name(base)); }
PeriodScalar Alphabet::sigma_bar(const std::string& base) const { return var(sigma_bar_name(base)); }

PeriodScalar Alphabet::pi() const { return var("pi"); }
PeriodScalar Alphabet::two_pi_i() const { return var("(2*pi*i)"); }
PeriodScalar Alphabet::i() const { return var("i"); }
PeriodScalar Alphabet::sqrt_d() const { return var("sqrtD"); }
PeriodScalar Alphabet::sqrt_minus_d() const { return i() * sqrt_d(); }

QVec Alphabet::conj(const QVec& x) const {
  if (x.size() != size()) throw std::invalid_argument("conj: wrong dimension");
  QVec y(size(), Rational(0));
  for (std::size_t k = 0; k < size(); ++k) y[partner_[k]] += x[k];
  // conj(i) = i^-1 and conj(2 pi i) = (2 pi i) * i^2.
  y[i_] = -x[i_] + 2 * x[two_pi_i_];
  return y;
}

PeriodScalar::PeriodScalar(AlphabetPtr alphabet, QVec exponents)
    : alphabet_(std::move(alphabet)), exps_(std::move(exponents)) {
  if (!alphabet_ || exps_.size() != alphabet_->size())
    throw std::invalid_argument("PeriodScalar: exponent vector does not match alphabet");
}

const Rational& PeriodScalar::exponent(const std::string& name) const { return exps_[alphabet_->index(name)]; }

void PeriodScalar::check_same(const PeriodScalar& o) const {
  if (alphabet_ != o.alphabet_) throw std::invalid_argument("PeriodScalar: alphabets differ");
}

PeriodScalar PeriodScalar::operator*(const PeriodScalar& o) const {
  PeriodScalar r = *this;
  r *= o;
  return r;
}

PeriodScalar PeriodScalar::operator/(const PeriodScalar& o) const {
  PeriodScalar r = *this;
  r /= o;
  return r;
}

PeriodScalar& PeriodScalar::operator*=(const PeriodScalar& o) {
  check_same(o);
  for (std::size_t k = 0; k < exps_.size(); ++k) exps_[k] += o.exps_[k];
  return *this;
}

PeriodScalar& PeriodScalar::operator/=(const PeriodScalar& o) {
  check_same(o);
  for (std::size_t k = 0; k < exps_.size(); ++k) exps_[k] -= o.exps_[k];
  return *this;
}

PeriodScalar PeriodScalar::pow(const Rational& e) const {
  PeriodScalar r = *this;
  for (auto& x : r.exps_) x *= e;
  return r;
}

PeriodScalar PeriodScalar::conj() const { return PeriodScalar(alphabet_, alphabet_->conj(exps_)); }

bool PeriodScalar::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](const Rational& x) { return x == 0; });
}

std::string PeriodScalar::str() const {
  std::ostringstream out;
  bool first = true;
  // Constants read more naturally first: (2*pi*i)^k * pi * ...
  std::vector<std::size_t> order = {alphabet_->two_pi_i_index(), alphabet_->pi_index(), alphabet_->i_index(),
                                    alphabet_->sqrt_d_index()};
  for (std::size_t k = 0; k < exps_.size(); ++k)
    if (std::find(order.begin(), order.end(), k) == order.end()) order.push_back(k);
  for (std::size_t k : order) {
    if (exps_[k] == 0) continue;
    if (!first) out << " * ";
    first = false;
    out << alphabet_->generator(k).name << format_exponent(exps_[k]);
  }
  return first ? "1" : out.str();
}

PeriodScalar pow(const PeriodScalar& x, const Rational& e) { return x.pow(e); }

RelationSet::RelationSet(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw std::invalid_argument("RelationSet: null alphabet");
}

RelationSet::RelationSet(const RelationSet& other)
    : alphabet_(other.alphabet_), vectors_(other.vectors_), labels_(other.labels_) {}

RelationSet& RelationSet::operator=(const RelationSet& other) {
  if (this == &other) return *this;
  std::lock_guard lock(mu_);
  alphabet_ = other.alphabet_;
  vectors_ = other.vectors_;
  labels_ = other.labels_;
  cache_.reset();
  return *this;
}

void RelationSet::add(const std::string& label, const PeriodScalar& lhs, const PeriodScalar& rhs) {
  if (lhs.alphabet() != alphabet_ || rhs.alphabet() != alphabet_)
    throw std::invalid_argument("RelationSet: relation over a different alphabet");
  QVec v = (lhs / rhs).exponents();
  QVec c = alphabet_->conj(v);
  std::lock_guard lock(mu_);
  vectors_.push_back(v);
  if (c != v) vectors_.push_back(std::move(c));
  labels_.push_back(label);
  cache_.reset();
}

void RelationSet::add_trivial(const std::string& label, const PeriodScalar& x) { add(label, x, alphabet_->one()); }

void RelationSet::add_sqrt(const std::string& label, const PeriodScalar& lhs, const PeriodScalar& rhs) {
  add(label, lhs.pow(2), rhs.pow(2));
}

const Lattice& RelationSet::lattice() const {
  std::lock_guard lock(mu_);
  if (!cache_) {
    QMat gens = alphabet_->builtin_relations();
    gens.insert(gens.end(), vectors_.begin(), vectors_.end());
    cache_ = std::make_shared<const Lattice>(alphabet_->size(), gens);
  }
  return *cache_;
}

PeriodScalar RelationSet::reduce(const PeriodScalar& x, Modulus mod) const {
  if (x.alphabet() != alphabet_) throw std::invalid_argument("reduce: different alphabet");
  const Lattice& lat = lattice();
  if (mod == Modulus::Q) return PeriodScalar(alphabet_, lat.reduce(x.exponents()));
  QVec doubled = x.exponents();
  for (auto& e : doubled) e *= 2;
  QVec r = lat.reduce(std::move(doubled));
  for (auto& e : r) e /= 2;
  return PeriodScalar(alphabet_, std::move(r));
}

bool RelationSet::trivial(const PeriodScalar& x, Modulus mod) const { return reduce(x, mod).is_one(); }

bool RelationSet::equivalent(const PeriodScalar& a, const PeriodScalar& b, Modulus mod) const {
  return trivial(a / b, mod);
}

void RelationSet::check_consistent() const {
  const Lattice& lat = lattice();
  Lattice builtin(alphabet_->size(), alphabet_->builtin_relations());
  for (std::size_t k = 0; k < lat.rank(); ++k) {
    std::size_t p = lat.pivots()[k];
    if (alphabet_->generator(p).kind == GeneratorKind::Indeterminate) continue;
    if (!builtin.contains(lat.basis()[k]))
      throw std::domain_error("inconsistent relation set: forces " +
                              PeriodScalar(alphabet_, lat.basis()[k]).str() + " to be rational");
  }
}

PeriodScalar beilinson_volume(const PeriodScalar& lstar, const PeriodScalar& vol_hb, const PeriodScalar& vol_f1) {
  return lstar * vol_hb / vol_f1;
}

}  // namespace artifact::period
