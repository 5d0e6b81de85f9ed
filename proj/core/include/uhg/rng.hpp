#pragma once

#include <cstdint>

#include "uhg/field.hpp"

namespace uhg {

// splitmix64 stream; fixed algorithm so seeds reproduce across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

  // Inclusive range.
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool chance(unsigned one_in) { return below(one_in) == 0; }

  // Per-trial child seed: hash of (seed, index).
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
    Rng r(seed ^ (0x632be59bd9b4e019ULL * (index + 1)));
    return r.next();
  }

  mpz_class residue(const mpz_class& p) {
    std::size_t words = mpz_sizeinbase(p.get_mpz_t(), 2) / 64 + 2;
    mpz_class acc = 0;
    for (std::size_t i = 0; i < words; ++i) {
      std::uint64_t w = next();
      mpz_class word;
      mpz_import(word.get_mpz_t(), 1, 1, sizeof(w), 0, 0, &w);
      acc <<= 64;
      acc += word;
    }
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), acc.get_mpz_t(), p.get_mpz_t());
    return r;
  }

  // Small rational with num in [-12,12], den in [1,8]; uniform residue mod p.
  Fq scalar(const FieldCtx& ctx) {
    if (ctx.is_rational())
      return Fq(ctx, mpq_class(mpz_class(range(-12, 12)), mpz_class(range(1, 8))));
    return Fq(ctx, residue(ctx.modulus()));
  }

  Fq nonzero_scalar(const FieldCtx& ctx) {
    for (;;) {
      Fq v = scalar(ctx);
      if (!v.is_zero()) return v;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace uhg
