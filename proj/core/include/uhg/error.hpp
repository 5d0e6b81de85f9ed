#pragma once

#include <stdexcept>
#include <string>

namespace uhg {

// Machine-readable reason attached to every kernel exception.
enum class Err {
  DivisionByZero,
  MixedContexts,
  CharacteristicTwo,
  NotPrime,
  NegativeModulus,
  ParseFailure,
  ZeroTriple,
  IdenticalArguments,
  NotCollinear,
  NotConcurrent,
  NotIncident,
  DegenerateQuadruple,
  NullArgument,
  NullMirror,
  DegenerateSide,
  DegenerateVertex,
  NilNullSide,
  DegenerateCouple,
  DualCouple,
  NullCenter,
  MidlinesAbsent,
  NoNullPointsOnJoin,
  DegenerateAux,
  CollinearPoints,
  DualTriangle,
  HypothesisViolated,
  ZeroSpread,
  DegenerateDenominator,
  Inconsistent,
  MidpointsAbsent,
  DegenerateDouble,
  NoIntersection,
  ExteriorLine,
  DegenerateConfiguration,
  UnknownTheorem,
  UnknownGenerator,
  GeneratorExhausted,
  RationalOnly,
  PrimeOnly,
};

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

const char* err_name(Err code);

}  // namespace uhg
