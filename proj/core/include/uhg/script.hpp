#ifndef UHG_SCRIPT_HPP
#define UHG_SCRIPT_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "uhg/duality.hpp"
#include "uhg/field.hpp"
#include "uhg/projective.hpp"

namespace uhg::script {

// A source location problem.  Parsing never yields a partial program: either
// the whole source parses or the caller gets diagnostics.
struct Diagnostic {
  int line = 0;
  int column = 0;
  std::string message;

  std::string str() const;
};

struct Expr {
  enum class Kind { PointLit, LineLit, Scalar, Ref, Call };

  Kind kind = Kind::Scalar;
  int line = 0;
  int column = 0;
  std::vector<std::string> coords;  // PointLit / LineLit entries, Scalar text in coords[0]
  std::string name;                 // Ref name or Call function
  int index = 0;                    // Ref tuple index, 0 when plain
  std::vector<Expr> args;

  // Structural equality; source positions are ignored.
  bool operator==(const Expr& o) const;
};

struct Stmt {
  enum class Kind { Binding, Assert };

  Kind kind = Kind::Binding;
  int line = 0;
  int column = 0;
  std::string name;  // binding target or predicate name
  std::vector<Expr> args;

  bool operator==(const Stmt& o) const;
};

struct Program {
  std::string field = "rational";  // "rational" or "fp:P"
  std::vector<Stmt> stmts;

  bool operator==(const Program& o) const;
};

struct ParseResult {
  std::optional<Program> program;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return program.has_value(); }
};

ParseResult parse(const std::string& source);

// Canonical source form; parsing it back yields an equal Program.
std::string pretty(const Program& p);

// A bound value: one element, or an indexable tuple from a multi-valued
// construction.
using Single = std::variant<Point, Line, Fq, ExtValue>;

struct Value {
  std::vector<Single> items;
  bool tuple = false;

  std::string str() const;
};

struct StmtResult {
  enum class Kind { Bound, BindingFailed, AssertPassed, AssertFailed };

  Kind kind = Kind::Bound;
  int line = 0;
  int column = 0;
  std::string name;    // binding target or predicate name
  std::string detail;  // value text, compared values, or the named kernel error

  std::string str() const;
};

struct Evaluation {
  FieldCtx ctx = FieldCtx::rationals();
  std::vector<StmtResult> results;
  std::map<std::string, Value> bindings;
  bool completed = false;     // no binding failure
  bool all_passed = false;    // completed and every assertion passed

  std::string str() const;
};

Evaluation evaluate(const Program& p);

}  // namespace uhg::script

#endif
