#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>

#include "uhg/error.hpp"

namespace uhg {

// A computation context: either the rationals or a prime field F_p with p an
// odd prime.  Contexts are cheap to copy and compare.
class FieldCtx {
 public:
  FieldCtx() = default;  // rationals

  static FieldCtx rationals() { return FieldCtx(); }
  static FieldCtx prime(const mpz_class& p);
  static FieldCtx prime(unsigned long p) { return prime(mpz_class(p)); }

  // Accepts "rational" or "fp:P".
  static FieldCtx parse(const std::string& text);

  bool is_rational() const { return p_ == nullptr; }
  bool is_prime() const { return p_ != nullptr; }
  const mpz_class& modulus() const;

  bool operator==(const FieldCtx& o) const;
  bool operator!=(const FieldCtx& o) const { return !(*this == o); }

  std::string str() const;

 private:
  std::shared_ptr<const mpz_class> p_;  // null for the rationals
};

// A scalar in a field context.  Rational values are kept in canonical form
// (lowest terms, positive denominator); prime-field values as residues in
// [0, p) with denominator 1.
class Fq {
 public:
  Fq() : ctx_(), v_(0) {}  // rational zero
  Fq(FieldCtx ctx, long n);
  Fq(FieldCtx ctx, const mpz_class& n);
  Fq(FieldCtx ctx, const mpq_class& q);

  static Fq zero(const FieldCtx& ctx) { return Fq(ctx, 0L); }
  static Fq one(const FieldCtx& ctx) { return Fq(ctx, 1L); }
  // Accepts an optionally signed integer or integer/integer.
  static Fq parse(const FieldCtx& ctx, const std::string& text);

  const FieldCtx& ctx() const { return ctx_; }
  const mpq_class& rep() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }

  Fq operator-() const;
  Fq inverse() const;

  friend Fq operator+(const Fq& a, const Fq& b);
  friend Fq operator-(const Fq& a, const Fq& b);
  friend Fq operator*(const Fq& a, const Fq& b);
  friend Fq operator/(const Fq& a, const Fq& b);

  Fq& operator+=(const Fq& o) { return *this = *this + o; }
  Fq& operator-=(const Fq& o) { return *this = *this - o; }
  Fq& operator*=(const Fq& o) { return *this = *this * o; }
  Fq& operator/=(const Fq& o) { return *this = *this / o; }

  bool operator==(const Fq& o) const;
  bool operator!=(const Fq& o) const { return !(*this == o); }

  // Total order used only for deterministic canonical choices (pair sorting,
  // printed output); for prime contexts it compares residues.
  static int cmp(const Fq& a, const Fq& b);

  std::string str() const;

 private:
  void reduce();

  FieldCtx ctx_;
  mpq_class v_;
};

Fq operator+(const Fq& a, const Fq& b);
Fq operator-(const Fq& a, const Fq& b);
Fq operator*(const Fq& a, const Fq& b);
Fq operator/(const Fq& a, const Fq& b);

// True when x has a square root in its own field (0 counts as a square).
bool is_square(const Fq& x);

// Canonical square root when one exists in the field: the non-negative root
// over the rationals, the smaller of the two residues over F_p.
std::optional<Fq> sqrt_in_field(const Fq& x);

// Shared context of two scalars; throws MixedContexts when they differ.
const FieldCtx& common_ctx(const Fq& a, const Fq& b);

}  // namespace uhg
