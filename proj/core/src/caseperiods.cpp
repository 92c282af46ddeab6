#include "artifact/caseperiods.hpp"

#include <stdexcept>

namespace artifact::period {

namespace {

std::string idx(const std::string& base, int p) { return base + "_" + std::to_string(p); }

/// Weight and rank of M and N for the case.
int weight_M(CaseKind kind, int n) {
  switch (kind) {
    case CaseKind::PGL_Q:
    case CaseKind::PGL_E: return n - 1;
    case CaseKind::SO_even_E: return 2 * n - 2;
    case CaseKind::SO_odd_E: return 2 * n;
  }
  return 0;
}

int weight_N(CaseKind kind, int n) {
  return kind == CaseKind::PGL_Q || kind == CaseKind::PGL_E ? n : 2 * n - 1;
}

bool is_pgl(CaseKind kind) { return kind == CaseKind::PGL_Q || kind == CaseKind::PGL_E; }

/// Indices p carrying a one-dimensional graded piece (the SO middle piece is two-dimensional).
bool has_q(CaseKind kind, int n, int p) {
  int w = weight_M(kind, n);
  if (p < 0 || p > w) return false;
  return is_pgl(kind) || 2 * p != w;
}

AlphabetPtr make_alphabet(CaseKind kind, int n) {
  describe(kind, n);
  const int wM = weight_M(kind, n), wN = weight_N(kind, n);
  Alphabet::Builder b;
  switch (kind) {
    case CaseKind::PGL_Q:
      for (int p = 0; p <= wM; ++p) b.indeterminate(idx("Q", p));
      for (int p = 0; p <= wN; ++p) b.indeterminate(idx("R", p));
      for (const char* s : {"delta(M)", "delta(M^psi)", "delta(N)", "c+(M)", "c-(M)", "c+(N)", "c-(N)"})
        b.indeterminate(s);
      break;
    case CaseKind::PGL_E:
      for (int p = 0; p <= wM; ++p) b.embedded(idx("Q", p));
      for (int p = 0; p <= wN; ++p) b.embedded(idx("R", p));
      b.embedded("det(A)").embedded("det(B)");
      break;
    case CaseKind::SO_even_E:
    case CaseKind::SO_odd_E:
      // Self-dual normalisation makes Q_p and R_p real, so they need no sigma label.
      for (int p = 0; p <= wM; ++p)
        if (has_q(kind, n, p)) b.indeterminate(idx("Q", p));
      for (int p = 0; p <= wN; ++p) b.indeterminate(idx("R", p));
      b.embedded("Delta").embedded("det(Xi)").embedded("det(A)").embedded("det(B)");
      break;
  }
  return b.build();
}

}  // namespace

CaseModel::CaseModel(CaseKind kind, int n)
    : kind_(kind),
      n_(n),
      alphabet_(make_alphabet(kind, n)),
      relations_(alphabet_),
      modulus_(kind == CaseKind::PGL_Q ? Modulus::Q : Modulus::SqrtQ),
      embedded_(kind == CaseKind::PGL_E) {
  const int wM = weight_M(kind, n), wN = weight_N(kind, n);
  auto& A = *alphabet_;
  auto tpi = [&](const Rational& k) { return A.two_pi_i().pow(k); };
  auto one = A.one();

  // Period invariants of dual Hodge indices: conj(Q_p) Q_{w-p} in Q*.
  for (int p = 0; 2 * p <= wM; ++p)
    if (has_q(kind, n, p)) relations_.add_trivial("rel2 Q_" + std::to_string(p), q(p).conj() * q(wM - p));
  for (int p = 0; 2 * p <= wN; ++p)
    relations_.add_trivial("rel2 R_" + std::to_string(p), r(p).conj() * r(wN - p));

  const int j = n - 1;
  switch (kind) {
    case CaseKind::PGL_Q: {
      relations_.add("delta(M)^2", get("delta(M)").pow(2), tpi(-j * (j + 1)));
      relations_.add("delta(M^psi)^2", get("delta(M^psi)").pow(2), tpi(-j * (j + 1)));
      relations_.add("delta(N)^2", get("delta(N)").pow(2), tpi(-(j + 1) * (j + 2)));
      PeriodScalar qs = one, rs = one;
      if (j % 2 == 0) {
        int t = j / 2;
        for (int p = 0; p < t; ++p) qs *= q(p);
        for (int p = 0; p <= t; ++p) rs *= r(p);
      } else {
        int t = (j - 1) / 2;
        for (int p = 0; p <= t; ++p) qs *= q(p);
        for (int p = 0; p <= t; ++p) rs *= r(p);
      }
      relations_.add("delta(M)", get("delta(M)"), qs * get("c+(M)") * get("c-(M)"));
      relations_.add("delta(N)", get("delta(N)"), rs * get("c+(N)") * get("c-(N)"));
      break;
    }
    case CaseKind::PGL_E: {
      PeriodScalar qs = one, rs = one;
      for (int p = 0; p <= wM; ++p) qs *= q(p);
      for (int p = 0; p <= wN; ++p) rs *= r(p);
      relations_.add("det(A)^2", get("det(A)").pow(2), tpi(-j * (j + 1)) * qs);
      relations_.add("det(B)^2", get("det(B)").pow(2), tpi(-(j + 1) * (j + 2)) * rs);
      break;
    }
    case CaseKind::SO_even_E:
    case CaseKind::SO_odd_E: {
      auto Ds = A.sigma("Delta"), Dsb = A.sigma_bar("Delta");
      relations_.add_trivial("Delta Delta-bar", Ds * Dsb);
      relations_.add_trivial("Xi Xi-bar = 1", A.sigma("det(Xi)") * A.sigma_bar("det(Xi)"));
      // det(Gamma) = Delta det(Xi) is real and squares to Delta Delta-bar.
      relations_.add_trivial("det(Gamma) real", Ds.pow(Rational(1, 2)) * Dsb.pow(Rational(-1, 2)) * A.sigma("det(Xi)"));
      int a = kind == CaseKind::SO_even_E ? 2 * n * (2 * n - 2) : 2 * n * (2 * n + 2);
      relations_.add("det(A)^2", get("det(A)").pow(2), Ds.inv() * tpi(-a));
      relations_.add("det(B)^2", get("det(B)").pow(2), tpi(-2 * n * (2 * n - 1)));
      break;
    }
  }
  relations_.check_consistent();
}

std::string CaseModel::sym(const std::string& base) const {
  return embedded_ || base == "Delta" || base.rfind("det(", 0) == 0 ? Alphabet::sigma_name(base) : base;
}

PeriodScalar CaseModel::get(const std::string& base) const {
  if (alphabet_->find(base)) return alphabet_->var(base);
  return alphabet_->var(sym(base));
}

PeriodScalar CaseModel::q(int p) const {
  if (!has_q(kind_, n_, p)) throw std::out_of_range("no period invariant Q_" + std::to_string(p));
  return get(idx("Q", p));
}

PeriodScalar CaseModel::r(int p) const {
  if (p < 0 || p > weight_N(kind_, n_)) throw std::out_of_range("no period invariant R_" + std::to_string(p));
  return get(idx("R", p));
}

PeriodScalar CaseModel::D(const Rational& k) const { return alphabet_->sqrt_d().pow(k * 2); }

PeriodScalar CaseModel::vol_L(Factor factor) const {
  const auto& A = *alphabet_;
  PeriodScalar v = A.one();
  const int n = n_;
  switch (kind_) {
    case CaseKind::PGL_Q:
      if (factor == Factor::M)
        for (int p = 0; p <= weight_M(kind_, n); ++p) v *= q(p).pow(p);
      else
        for (int p = 0; p <= weight_N(kind_, n); ++p) v *= r(p).pow(p);
      return v;
    case CaseKind::PGL_E:
      // |Q_p|^2 = Q_p^sigma Q_p^sigma-bar.
      if (factor == Factor::M)
        for (int p = 0; p <= weight_M(kind_, n); ++p) v *= (q(p) * q(p).conj()).pow(p);
      else
        for (int p = 0; p <= weight_N(kind_, n); ++p) v *= (r(p) * r(p).conj()).pow(p);
      return v;
    case CaseKind::SO_even_E:
      if (factor == Factor::M) {
        v = D(Rational(n * n - n, 2));
        for (int i = 0; i <= n - 2; ++i) v *= q(i).pow(-(2 * n - 2 - 2 * i));
        return v * get("Delta").pow(n - 1) * get("det(Xi)").pow(n - 1);
      }
      v = D(Rational(n * n, 2));
      for (int i = 0; i <= n - 1; ++i) v *= r(i).pow(-(2 * n - 2 * i));
      return v;
    case CaseKind::SO_odd_E:
      if (factor == Factor::M) {
        v = D(Rational(n * (n + 1), 2));
        for (int i = 0; i <= n - 1; ++i) v *= q(i).pow(-(2 * n - 2 * i));
        return v * get("Delta").pow(n) * get("det(Xi)").pow(n);
      }
      v = D(Rational(n * n, 2));
      for (int i = 0; i <= n - 1; ++i) v *= r(i).pow(-(2 * n - 2 * i));
      return v;
  }
  throw std::invalid_argument("vol_L: unsupported case");
}

PeriodScalar CaseModel::deligne_c(Sign sign, bool psi) const {
  if (psi && kind_ != CaseKind::PGL_Q) throw std::invalid_argument("deligne_c: psi twist only for the PGL case over Q");
  const auto& A = *alphabet_;
  const int n = n_, j = n - 1;
  PeriodScalar c = A.one();
  switch (kind_) {
    case CaseKind::PGL_Q: {
      // F_inf sign of the character flips the sign of the remaining period.
      Sign eff = psi ? flip(sign) : sign;
      PeriodScalar dM = get(psi ? "delta(M^psi)" : "delta(M)"), dN = get("delta(N)");
      if (j % 2 == 0) {
        int t = j / 2;
        c = dM.pow(t + 1) * dN.pow(t);
        for (int p = 0; p < t; ++p) c *= q(p).pow(p - t);
        for (int p = 0; p <= t; ++p) c *= r(p).pow(p - t);
        return c * get(eff == Sign::Plus ? "c+(N)" : "c-(N)");
      }
      int t = (j - 1) / 2;
      c = dM.pow(t + 1) * dN.pow(t + 1);
      for (int p = 0; p <= t; ++p) c *= q(p).pow(p - t);
      for (int p = 0; p <= t; ++p) c *= r(p).pow(p - t - 1);
      return c * get(eff == Sign::Plus ? "c+(M)" : "c-(M)");
    }
    case CaseKind::PGL_E: {
      c = A.sqrt_minus_d().pow(Rational(-(j + 1) * (j + 2), 2));
      for (int t = 0; t <= j; ++t) c *= q(t).pow(-(j + 1 - t));
      for (int t = 0; t <= j + 1; ++t) c *= r(t).pow(-(j + 1 - t));
      return c * get("det(A)").pow(j + 2) * get("det(B)").pow(j + 1);
    }
    case CaseKind::SO_even_E:
    case CaseKind::SO_odd_E: {
      bool even = kind_ == CaseKind::SO_even_E;
      c = A.sqrt_minus_d().pow(even ? -2 * n * n : -2 * n * (n + 1));
      int qtop = even ? n - 2 : n - 1;
      for (int i = 0; i <= qtop; ++i) c *= q(i).pow(-(2 * (qtop + 1) - 2 * i));
      for (int i = 0; i <= n - 1; ++i) c *= r(i).pow(-(2 * n - 2 * i));
      c *= get("det(Xi)").pow(-n);
      return c * get("det(A)").pow(2 * n) * get("det(B)").pow(even ? 2 * n : 2 * n + 2);
    }
  }
  throw std::invalid_argument("deligne_c: unsupported case");
}

Rational CaseModel::twist_exponent() const {
  const int n = n_;
  const int r = describe(kind_, n).r;
  int rank = 0;
  switch (kind_) {
    case CaseKind::PGL_Q: rank = n * (n + 1); break;
    case CaseKind::PGL_E: rank = 2 * n * (n + 1); break;
    case CaseKind::SO_even_E: rank = 2 * (2 * n) * (2 * n); break;
    case CaseKind::SO_odd_E: rank = 2 * (2 * n + 2) * (2 * n); break;
  }
  return Rational(r * rank, 2);
}

PeriodScalar CaseModel::twisted_c(Sign sign, bool psi, int extra_twist) const {
  const int r = describe(kind_, n_).r;
  // c^pm(X(r)) = (2 pi i)^{r rank / 2} c^{pm (-1)^r}(X).
  Sign inner = r % 2 != 0 ? flip(sign) : sign;
  return alphabet_->two_pi_i().pow(twist_exponent() + extra_twist) * deligne_c(inner, psi);
}

CondensateResult condensate(const CaseModel& model, const CondensateOptions& opts) {
  const auto cd = describe(model.kind(), model.n());
  const auto& A = *model.alphabet();
  CondensateResult out{A.one(), A.one(), "", cd.m + opts.m_shift, cd.e, false, false};
  PeriodScalar vol = model.vol_L(Factor::M) * model.vol_L(Factor::N);
  if (opts.vol_shift) vol *= model.q(0).pow(opts.vol_shift);
  auto ratio_for = [&](Sign s) {
    PeriodScalar ratio = model.twisted_c(s, false, opts.twist_shift).pow(cd.e) / vol;
    if (model.kind() == CaseKind::PGL_Q) ratio *= model.twisted_c(s, true, opts.twist_shift).pow(cd.e) / vol;
    return ratio;
  };
  const auto& rel = model.relations();
  PeriodScalar expected = A.two_pi_i().pow(out.m);
  out.ratio = ratio_for(Sign::Plus);
  out.residual = rel.reduce(out.ratio / expected, model.modulus());
  out.display = (expected * out.residual).str();
  out.pass = out.residual.is_one();
  out.minus_pass = rel.trivial(ratio_for(Sign::Minus) / expected, model.modulus());
  return out;
}

}  // namespace artifact::period
