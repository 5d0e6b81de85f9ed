#include "uhg/field.hpp"

#include <utility>

namespace uhg {

const char* err_name(Err code) {
  switch (code) {
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::MixedContexts: return "MixedContexts";
    case Err::CharacteristicTwo: return "CharacteristicTwo";
    case Err::NotPrime: return "NotPrime";
    case Err::NegativeModulus: return "NegativeModulus";
    case Err::ParseFailure: return "ParseFailure";
    case Err::ZeroTriple: return "ZeroTriple";
    case Err::IdenticalArguments: return "IdenticalArguments";
    case Err::NotCollinear: return "NotCollinear";
    case Err::NotConcurrent: return "NotConcurrent";
    case Err::NotIncident: return "NotIncident";
    case Err::DegenerateQuadruple: return "DegenerateQuadruple";
    case Err::NullArgument: return "NullArgument";
    case Err::NullMirror: return "NullMirror";
    case Err::DegenerateSide: return "DegenerateSide";
    case Err::DegenerateVertex: return "DegenerateVertex";
    case Err::NilNullSide: return "NilNullSide";
    case Err::DegenerateCouple: return "DegenerateCouple";
    case Err::DualCouple: return "DualCouple";
    case Err::NullCenter: return "NullCenter";
    case Err::MidlinesAbsent: return "MidlinesAbsent";
    case Err::NoNullPointsOnJoin: return "NoNullPointsOnJoin";
    case Err::DegenerateAux: return "DegenerateAux";
    case Err::CollinearPoints: return "CollinearPoints";
    case Err::DualTriangle: return "DualTriangle";
    case Err::HypothesisViolated: return "HypothesisViolated";
    case Err::ZeroSpread: return "ZeroSpread";
    case Err::DegenerateDenominator: return "DegenerateDenominator";
    case Err::Inconsistent: return "Inconsistent";
    case Err::MidpointsAbsent: return "MidpointsAbsent";
    case Err::DegenerateDouble: return "DegenerateDouble";
    case Err::NoIntersection: return "NoIntersection";
    case Err::ExteriorLine: return "ExteriorLine";
    case Err::DegenerateConfiguration: return "DegenerateConfiguration";
    case Err::UnknownTheorem: return "UnknownTheorem";
    case Err::UnknownGenerator: return "UnknownGenerator";
    case Err::GeneratorExhausted: return "GeneratorExhausted";
    case Err::RationalOnly: return "RationalOnly";
    case Err::PrimeOnly: return "PrimeOnly";
  }
  return "Unknown";
}

FieldCtx FieldCtx::prime(const mpz_class& p) {
  if (sgn(p) <= 0) fail(Err::NegativeModulus, "field modulus must be positive, got " + p.get_str());
  if (p == 2) fail(Err::CharacteristicTwo, "characteristic 2 is not supported");
  if (mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
    fail(Err::NotPrime, "field modulus must be prime, got " + p.get_str());
  FieldCtx ctx;
  ctx.p_ = std::make_shared<const mpz_class>(p);
  return ctx;
}

FieldCtx FieldCtx::parse(const std::string& text) {
  if (text == "rational") return rationals();
  const std::string prefix = "fp:";
  if (text.rfind(prefix, 0) == 0) {
    std::string digits = text.substr(prefix.size());
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      fail(Err::ParseFailure, "unrecognized field '" + text + "'");
    return prime(mpz_class(digits));
  }
  fail(Err::ParseFailure, "unrecognized field '" + text + "' (expected rational or fp:P)");
}

const mpz_class& FieldCtx::modulus() const {
  if (!p_) fail(Err::Inconsistent, "rational context has no modulus");
  return *p_;
}

bool FieldCtx::operator==(const FieldCtx& o) const {
  if (is_rational() != o.is_rational()) return false;
  if (is_rational()) return true;
  return *p_ == *o.p_;
}

std::string FieldCtx::str() const {
  return is_rational() ? "rational" : "fp:" + p_->get_str();
}

Fq::Fq(FieldCtx ctx, long n) : ctx_(std::move(ctx)), v_(n) { reduce(); }
Fq::Fq(FieldCtx ctx, const mpz_class& n) : ctx_(std::move(ctx)), v_(n) { reduce(); }
Fq::Fq(FieldCtx ctx, const mpq_class& q) : ctx_(std::move(ctx)), v_(q) {
  v_.canonicalize();
  reduce();
}

void Fq::reduce() {
  if (ctx_.is_rational()) return;
  const mpz_class& p = ctx_.modulus();
  mpz_class num = v_.get_num();
  mpz_class den = v_.get_den();
  mpz_fdiv_r(num.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  if (den != 1) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
      fail(Err::DivisionByZero, "denominator " + den.get_str() + " vanishes mod " + p.get_str());
    num = num * inv;
    mpz_fdiv_r(num.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  }
  v_ = mpq_class(num);
}

Fq Fq::parse(const FieldCtx& ctx, const std::string& text) {
  std::string body = text;
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body = body.substr(1);
  }
  std::string num = body, den = "1";
  if (auto slash = body.find('/'); slash != std::string::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  auto all_digits = [](const std::string& s) {
    return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
  };
  if (!all_digits(num) || !all_digits(den))
    fail(Err::ParseFailure, "bad scalar literal '" + text + "'");
  mpz_class n(num), d(den);
  if (sgn(d) == 0) fail(Err::DivisionByZero, "zero denominator in '" + text + "'");
  if (negative) n = -n;
  return Fq(ctx, mpq_class(n, d));
}

Fq Fq::operator-() const {
  Fq r = *this;
  r.v_ = -r.v_;
  r.reduce();
  return r;
}

Fq Fq::inverse() const {
  if (is_zero()) fail(Err::DivisionByZero, "inverse of zero");
  Fq r = *this;
  r.v_ = 1 / v_;
  r.reduce();
  return r;
}

const FieldCtx& common_ctx(const Fq& a, const Fq& b) {
  if (a.ctx() != b.ctx())
    fail(Err::MixedContexts, "mixed contexts " + a.ctx().str() + " and " + b.ctx().str());
  return a.ctx();
}

Fq operator+(const Fq& a, const Fq& b) {
  Fq r(common_ctx(a, b), mpq_class(a.v_ + b.v_));
  return r;
}

Fq operator-(const Fq& a, const Fq& b) {
  Fq r(common_ctx(a, b), mpq_class(a.v_ - b.v_));
  return r;
}

Fq operator*(const Fq& a, const Fq& b) {
  Fq r(common_ctx(a, b), mpq_class(a.v_ * b.v_));
  return r;
}

Fq operator/(const Fq& a, const Fq& b) {
  common_ctx(a, b);
  if (b.is_zero()) fail(Err::DivisionByZero, "division by zero");
  return a * b.inverse();
}

bool Fq::operator==(const Fq& o) const {
  common_ctx(*this, o);
  return v_ == o.v_;
}

int Fq::cmp(const Fq& a, const Fq& b) {
  common_ctx(a, b);
  return ::cmp(a.v_, b.v_);
}

std::string Fq::str() const { return v_.get_str(); }

bool is_square(const Fq& x) {
  if (x.ctx().is_rational()) {
    if (sgn(x.rep()) < 0) return false;
    return mpz_perfect_square_p(x.rep().get_num().get_mpz_t()) != 0 &&
           mpz_perfect_square_p(x.rep().get_den().get_mpz_t()) != 0;
  }
  if (x.is_zero()) return true;
  const mpz_class& p = x.ctx().modulus();
  mpz_class e = (p - 1) / 2, r;
  mpz_powm(r.get_mpz_t(), x.rep().get_num().get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  return r == 1;
}

namespace {

// Tonelli-Shanks for odd prime p and quadratic residue a (a != 0).
mpz_class prime_sqrt_large(const mpz_class& a, const mpz_class& p) {
  mpz_class q = p - 1;
  unsigned long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  mpz_class z = 2;
  while (true) {
    mpz_class e = (p - 1) / 2, t;
    mpz_powm(t.get_mpz_t(), z.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    if (t == p - 1) break;
    ++z;
  }
  mpz_class m(s), c, t, r, e = (q + 1) / 2;
  mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  while (t != 1) {
    mpz_class i(0), probe = t;
    while (probe != 1) {
      probe = probe * probe % p;
      ++i;
    }
    mpz_class b = c, steps = m - i - 1;
    for (mpz_class k = 0; k < steps; ++k) b = b * b % p;
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return r;
}

}  // namespace

std::optional<Fq> sqrt_in_field(const Fq& x) {
  if (x.ctx().is_rational()) {
    if (!is_square(x)) return std::nullopt;
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), x.rep().get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), x.rep().get_den().get_mpz_t());
    return Fq(x.ctx(), mpq_class(n, d));
  }
  if (x.is_zero()) return Fq::zero(x.ctx());
  if (!is_square(x)) return std::nullopt;
  const mpz_class& p = x.ctx().modulus();
  const mpz_class& a = x.rep().get_num();
  mpz_class root;
  if (p < 10000) {
    mpz_class half = (p - 1) / 2;
    for (mpz_class r = 1; r <= half; ++r) {
      if (r * r % p == a) {
        root = r;
        break;
      }
    }
  } else {
    root = prime_sqrt_large(a, p);
    if (p - root < root) root = p - root;
  }
  return Fq(x.ctx(), root);
}

}  // namespace uhg
