#include "uhg/script.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <utility>

#include "uhg/error.hpp"
#include "uhg/metric.hpp"

namespace uhg::script {

namespace {

// ------------------------------------------------------------------- lexing

enum class Tok {
  Ident,
  Number,
  LBracket,
  RBracket,
  LParen,
  RParen,
  Colon,
  Semi,
  Comma,
  Assign,
  Dot,
  DirectiveField,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
  int column = 1;
};

struct Lexer {
  const std::string& src;
  std::size_t i = 0;
  int line = 1;
  int column = 1;
  std::vector<Diagnostic>& diags;

  Lexer(const std::string& s, std::vector<Diagnostic>& d) : src(s), diags(d) {}

  void advance() {
    if (i < src.size() && src[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    ++i;
  }

  bool ident_char(char c) const {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::vector<Token> run() {
    std::vector<Token> out;
    while (i < src.size()) {
      char c = src[i];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
        continue;
      }
      if (c == '#') {
        if (src.compare(i, 6, "#field") == 0 &&
            (i + 6 >= src.size() || !ident_char(src[i + 6]))) {
          out.push_back({Tok::DirectiveField, "#field", line, column});
          for (int k = 0; k < 6; ++k) advance();
          continue;
        }
        while (i < src.size() && src[i] != '\n') advance();
        continue;
      }
      Token t{Tok::End, "", line, column};
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        t.kind = Tok::Ident;
        while (i < src.size() && ident_char(src[i])) {
          t.text += src[i];
          advance();
        }
        out.push_back(t);
        continue;
      }
      bool signed_num = (c == '+' || c == '-') && i + 1 < src.size() &&
                        std::isdigit(static_cast<unsigned char>(src[i + 1]));
      if (std::isdigit(static_cast<unsigned char>(c)) || signed_num) {
        t.kind = Tok::Number;
        if (signed_num) {
          t.text += c;
          advance();
        }
        while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
          t.text += src[i];
          advance();
        }
        if (i < src.size() && src[i] == '/' && i + 1 < src.size() &&
            std::isdigit(static_cast<unsigned char>(src[i + 1]))) {
          t.text += '/';
          advance();
          while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
            t.text += src[i];
            advance();
          }
        }
        out.push_back(t);
        continue;
      }
      switch (c) {
        case '[': t.kind = Tok::LBracket; break;
        case ']': t.kind = Tok::RBracket; break;
        case '(': t.kind = Tok::LParen; break;
        case ')': t.kind = Tok::RParen; break;
        case ':': t.kind = Tok::Colon; break;
        case ';': t.kind = Tok::Semi; break;
        case ',': t.kind = Tok::Comma; break;
        case '=': t.kind = Tok::Assign; break;
        case '.': t.kind = Tok::Dot; break;
        default:
          diags.push_back({line, column, std::string("unexpected character '") + c + "'"});
          advance();
          continue;
      }
      t.text = c;
      advance();
      out.push_back(t);
    }
    out.push_back({Tok::End, "", line, column});
    return out;
  }
};

// ------------------------------------------------------------------ parsing

const std::map<std::string, int>& function_arity() {
  static const std::map<std::string, int> table = {
      {"join", 2},          {"meet", 2},         {"dual", 1},
      {"altitude_line", 2}, {"altitude_point", 2}, {"parallel_line", 2},
      {"base_point", 2},    {"conjugates", 2},   {"reflect", 2},
      {"midpoints", 2},     {"quadrance", 2},    {"spread", 2},
      {"quadrea", 3},       {"cross_ratio", 4},  {"null_points_on", 1},
      {"null_point", 1},
  };
  return table;
}

const std::map<std::string, int>& predicate_arity() {
  static const std::map<std::string, int> table = {
      {"collinear", 3}, {"concurrent", 3}, {"incident", 2},
      {"perp", 2},      {"on_null", 1},    {"eq", 2},
  };
  return table;
}

struct SyntaxError {};

struct Parser {
  const std::vector<Token>& toks;
  std::size_t pos = 0;
  std::vector<Diagnostic>& diags;
  std::vector<std::string> defined;

  Parser(const std::vector<Token>& t, std::vector<Diagnostic>& d) : toks(t), diags(d) {}

  const Token& cur() const { return toks[pos]; }

  void error_here(const std::string& msg) {
    diags.push_back({cur().line, cur().column, msg});
    throw SyntaxError{};
  }

  Token expect(Tok k, const std::string& what) {
    if (cur().kind != k) error_here("expected " + what);
    return toks[pos++];
  }

  bool is_defined(const std::string& name) const {
    for (const std::string& d : defined)
      if (d == name) return true;
    return false;
  }

  void recover() {
    while (cur().kind != Tok::Semi && cur().kind != Tok::End) ++pos;
    if (cur().kind == Tok::Semi) ++pos;
  }

  std::string parse_directive() {
    expect(Tok::DirectiveField, "#field");
    Token kind = expect(Tok::Ident, "'rational' or 'fp'");
    if (kind.text == "rational") return "rational";
    if (kind.text != "fp") {
      diags.push_back({kind.line, kind.column, "unknown field kind '" + kind.text + "'"});
      throw SyntaxError{};
    }
    Token mod = expect(Tok::Number, "a prime modulus");
    for (char c : mod.text)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        error_here("modulus must be a positive integer");
    std::string field = "fp:" + mod.text;
    try {
      (void)FieldCtx::parse(field);
    } catch (const Error& e) {
      diags.push_back({mod.line, mod.column, e.what()});
      throw SyntaxError{};
    }
    return field;
  }

  Expr parse_triple(Expr::Kind k, Tok close, const char* closer) {
    Expr e;
    e.kind = k;
    e.line = cur().line;
    e.column = cur().column;
    ++pos;  // opening bracket
    for (int c = 0; c < 3; ++c) {
      if (c > 0) expect(Tok::Colon, "':'");
      Token num = expect(Tok::Number, "a coordinate");
      e.coords.push_back(num.text);
    }
    expect(close, closer);
    return e;
  }

  Expr parse_expr() {
    const Token& t = cur();
    switch (t.kind) {
      case Tok::LBracket:
        return parse_triple(Expr::Kind::PointLit, Tok::RBracket, "']'");
      case Tok::LParen:
        return parse_triple(Expr::Kind::LineLit, Tok::RParen, "')'");
      case Tok::Number: {
        Expr e;
        e.kind = Expr::Kind::Scalar;
        e.line = t.line;
        e.column = t.column;
        e.coords.push_back(t.text);
        ++pos;
        return e;
      }
      case Tok::Ident:
        break;
      default:
        error_here("expected an expression");
    }
    Token name = toks[pos++];
    if (cur().kind == Tok::LParen) {
      auto it = function_arity().find(name.text);
      if (it == function_arity().end()) {
        diags.push_back({name.line, name.column, "unknown function '" + name.text + "'"});
        throw SyntaxError{};
      }
      ++pos;
      Expr e;
      e.kind = Expr::Kind::Call;
      e.line = name.line;
      e.column = name.column;
      e.name = name.text;
      if (cur().kind != Tok::RParen) {
        e.args.push_back(parse_expr());
        while (cur().kind == Tok::Comma) {
          ++pos;
          e.args.push_back(parse_expr());
        }
      }
      expect(Tok::RParen, "')'");
      if (static_cast<int>(e.args.size()) != it->second)
        diags.push_back({name.line, name.column,
                         name.text + " takes " + std::to_string(it->second) + " arguments, got " +
                             std::to_string(e.args.size())});
      return e;
    }
    Expr e;
    e.kind = Expr::Kind::Ref;
    e.line = name.line;
    e.column = name.column;
    e.name = name.text;
    if (!is_defined(name.text))
      diags.push_back({name.line, name.column, "unknown name '" + name.text + "'"});
    if (cur().kind == Tok::Dot) {
      ++pos;
      Token idx = expect(Tok::Number, "a tuple index");
      int v = 0;
      for (char c : idx.text) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
          error_here("tuple index must be a positive integer");
        v = v * 10 + (c - '0');
      }
      if (v < 1) error_here("tuple index must be at least 1");
      e.index = v;
    }
    return e;
  }

  Stmt parse_stmt() {
    Token head = expect(Tok::Ident, "a statement");
    Stmt s;
    s.line = head.line;
    s.column = head.column;
    if (head.text == "assert") {
      s.kind = Stmt::Kind::Assert;
      Token pred = expect(Tok::Ident, "a predicate");
      auto it = predicate_arity().find(pred.text);
      if (it == predicate_arity().end()) {
        diags.push_back({pred.line, pred.column, "unknown predicate '" + pred.text + "'"});
        throw SyntaxError{};
      }
      s.name = pred.text;
      expect(Tok::LParen, "'('");
      if (cur().kind != Tok::RParen) {
        s.args.push_back(parse_expr());
        while (cur().kind == Tok::Comma) {
          ++pos;
          s.args.push_back(parse_expr());
        }
      }
      expect(Tok::RParen, "')'");
      if (static_cast<int>(s.args.size()) != it->second)
        diags.push_back({pred.line, pred.column,
                         pred.text + " takes " + std::to_string(it->second) + " arguments, got " +
                             std::to_string(s.args.size())});
      expect(Tok::Semi, "';'");
      return s;
    }
    s.kind = Stmt::Kind::Binding;
    s.name = head.text;
    if (is_defined(head.text))
      diags.push_back({head.line, head.column, "'" + head.text + "' is already bound"});
    expect(Tok::Assign, "'='");
    s.args.push_back(parse_expr());
    expect(Tok::Semi, "';'");
    defined.push_back(head.text);
    return s;
  }

  Program run() {
    Program p;
    if (cur().kind == Tok::DirectiveField) {
      try {
        p.field = parse_directive();
      } catch (const SyntaxError&) {
        recover();
      }
    }
    while (cur().kind != Tok::End) {
      if (cur().kind == Tok::DirectiveField) {
        diags.push_back({cur().line, cur().column, "field directive must precede statements"});
        ++pos;
        recover();
        continue;
      }
      try {
        p.stmts.push_back(parse_stmt());
      } catch (const SyntaxError&) {
        recover();
      }
    }
    return p;
  }
};

}  // namespace

std::string Diagnostic::str() const {
  std::ostringstream os;
  os << line << ':' << column << ": error: " << message;
  return os.str();
}

bool Expr::operator==(const Expr& o) const {
  return kind == o.kind && coords == o.coords && name == o.name && index == o.index &&
         args == o.args;
}

bool Stmt::operator==(const Stmt& o) const {
  return kind == o.kind && name == o.name && args == o.args;
}

bool Program::operator==(const Program& o) const {
  return field == o.field && stmts == o.stmts;
}

ParseResult parse(const std::string& source) {
  ParseResult out;
  Lexer lex(source, out.diagnostics);
  std::vector<Token> toks = lex.run();
  Parser parser(toks, out.diagnostics);
  Program p = parser.run();
  if (out.diagnostics.empty()) out.program = std::move(p);
  return out;
}

// ------------------------------------------------------------ pretty print

namespace {

void print_expr(std::ostream& os, const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::PointLit:
      os << '[' << e.coords[0] << ':' << e.coords[1] << ':' << e.coords[2] << ']';
      break;
    case Expr::Kind::LineLit:
      os << '(' << e.coords[0] << ':' << e.coords[1] << ':' << e.coords[2] << ')';
      break;
    case Expr::Kind::Scalar:
      os << e.coords[0];
      break;
    case Expr::Kind::Ref:
      os << e.name;
      if (e.index > 0) os << '.' << e.index;
      break;
    case Expr::Kind::Call:
      os << e.name << '(';
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) os << ", ";
        print_expr(os, e.args[i]);
      }
      os << ')';
      break;
  }
}

}  // namespace

std::string pretty(const Program& p) {
  std::ostringstream os;
  if (p.field == "rational") {
    os << "#field rational\n";
  } else {
    os << "#field fp " << p.field.substr(3) << '\n';
  }
  for (const Stmt& s : p.stmts) {
    if (s.kind == Stmt::Kind::Binding) {
      os << s.name << " = ";
      print_expr(os, s.args[0]);
      os << ";\n";
    } else {
      os << "assert " << s.name << '(';
      for (std::size_t i = 0; i < s.args.size(); ++i) {
        if (i) os << ", ";
        print_expr(os, s.args[i]);
      }
      os << ");\n";
    }
  }
  return os.str();
}

// --------------------------------------------------------------- evaluation

namespace {

std::string single_str(const Single& s) {
  return std::visit([](const auto& v) { return v.str(); }, s);
}

const Point& want_point(const Single& s, const std::string& who) {
  if (const Point* p = std::get_if<Point>(&s)) return *p;
  fail(Err::ParseFailure, who + " expects a point, got " + single_str(s));
}

const Line& want_line(const Single& s, const std::string& who) {
  if (const Line* l = std::get_if<Line>(&s)) return *l;
  fail(Err::ParseFailure, who + " expects a line, got " + single_str(s));
}

const Fq& want_scalar(const Single& s, const std::string& who) {
  if (const Fq* v = std::get_if<Fq>(&s)) return *v;
  fail(Err::ParseFailure, who + " expects a number, got " + single_str(s));
}

Value single(Single s) {
  Value v;
  v.items.push_back(std::move(s));
  return v;
}

Value tuple(std::vector<Single> items) {
  Value v;
  v.items = std::move(items);
  v.tuple = true;
  return v;
}

struct Evaluator {
  const FieldCtx& ctx;
  std::map<std::string, Value>& bindings;

  Single eval_single(const Expr& e) {
    Value v = eval(e);
    if (v.tuple)
      fail(Err::ParseFailure, "a tuple cannot be used directly; index it with .1 or .2");
    return v.items[0];
  }

  Value eval(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::PointLit:
        return single(Point(Fq::parse(ctx, e.coords[0]), Fq::parse(ctx, e.coords[1]),
                            Fq::parse(ctx, e.coords[2])));
      case Expr::Kind::LineLit:
        return single(Line(Fq::parse(ctx, e.coords[0]), Fq::parse(ctx, e.coords[1]),
                           Fq::parse(ctx, e.coords[2])));
      case Expr::Kind::Scalar:
        return single(Fq::parse(ctx, e.coords[0]));
      case Expr::Kind::Ref: {
        auto it = bindings.find(e.name);
        if (it == bindings.end()) fail(Err::ParseFailure, "unknown name '" + e.name + "'");
        if (e.index == 0) return it->second;
        if (static_cast<std::size_t>(e.index) > it->second.items.size())
          fail(Err::Inconsistent, "'" + e.name + "' has " +
                                      std::to_string(it->second.items.size()) +
                                      " elements, index " + std::to_string(e.index) +
                                      " is out of range");
        return single(it->second.items[static_cast<std::size_t>(e.index - 1)]);
      }
      case Expr::Kind::Call:
        return call(e);
    }
    fail(Err::Inconsistent, "unreachable expression kind");
  }

  Value call(const Expr& e) {
    std::vector<Single> a;
    a.reserve(e.args.size());
    for (const Expr& arg : e.args) a.push_back(eval_single(arg));
    const std::string& f = e.name;
    if (f == "join") return single(join(want_point(a[0], f), want_point(a[1], f)));
    if (f == "meet") return single(meet(want_line(a[0], f), want_line(a[1], f)));
    if (f == "dual") {
      if (std::holds_alternative<Point>(a[0])) return single(dual(std::get<Point>(a[0])));
      return single(dual(want_line(a[0], f)));
    }
    if (f == "altitude_line")
      return single(altitude_line(Couple(want_point(a[0], f), want_line(a[1], f))));
    if (f == "altitude_point")
      return single(altitude_point(Couple(want_point(a[0], f), want_line(a[1], f))));
    if (f == "parallel_line")
      return single(parallel_line(Couple(want_point(a[0], f), want_line(a[1], f))));
    if (f == "base_point")
      return single(base_point(Couple(want_point(a[0], f), want_line(a[1], f))));
    if (f == "conjugates") {
      auto [p, q] = conjugate_points(Side(want_point(a[0], f), want_point(a[1], f)));
      return tuple({p, q});
    }
    if (f == "reflect") {
      bool obj_point = std::holds_alternative<Point>(a[0]);
      bool mir_point = std::holds_alternative<Point>(a[1]);
      if (obj_point && mir_point)
        return single(reflect_point(std::get<Point>(a[0]), std::get<Point>(a[1])));
      if (!obj_point && mir_point)
        return single(reflect_line(want_line(a[0], f), std::get<Point>(a[1])));
      if (obj_point)
        return single(reflect_point_in_line(std::get<Point>(a[0]), want_line(a[1], f)));
      return single(reflect_line_in_line(want_line(a[0], f), want_line(a[1], f)));
    }
    if (f == "midpoints") {
      auto m = midpoints(Side(want_point(a[0], f), want_point(a[1], f)));
      if (!m) fail(Err::MidpointsAbsent, "the side admits no midpoints in this field");
      return tuple({m->first, m->second});
    }
    if (f == "quadrance") return single(quadrance(want_point(a[0], f), want_point(a[1], f)));
    if (f == "spread") return single(spread(want_line(a[0], f), want_line(a[1], f)));
    if (f == "quadrea")
      return single(quadrea(want_point(a[0], f), want_point(a[1], f), want_point(a[2], f)));
    if (f == "cross_ratio")
      return single(cross_ratio(want_point(a[0], f), want_point(a[1], f), want_point(a[2], f),
                                want_point(a[3], f)));
    if (f == "null_points_on") {
      std::vector<Single> items;
      for (const Point& p : null_points_on(want_line(a[0], f))) items.push_back(p);
      return tuple(std::move(items));
    }
    if (f == "null_point") {
      if (std::holds_alternative<ExtValue>(a[0]))
        return single(null_point(std::get<ExtValue>(a[0])));
      return single(null_point(want_scalar(a[0], f)));
    }
    fail(Err::ParseFailure, "unknown function '" + f + "'");
  }

  // Returns pass flag and the compared values.
  std::pair<bool, std::string> predicate(const Stmt& s) {
    std::vector<Single> a;
    a.reserve(s.args.size());
    for (const Expr& arg : s.args) a.push_back(eval_single(arg));
    const std::string& f = s.name;
    std::ostringstream os;
    if (f == "collinear") {
      const Point &p = want_point(a[0], f), &q = want_point(a[1], f), &r = want_point(a[2], f);
      os << p.str() << ", " << q.str() << ", " << r.str();
      return {collinear(p, q, r), os.str()};
    }
    if (f == "concurrent") {
      const Line &l = want_line(a[0], f), &m = want_line(a[1], f), &n = want_line(a[2], f);
      os << l.str() << ", " << m.str() << ", " << n.str();
      return {concurrent(l, m, n), os.str()};
    }
    if (f == "incident") {
      const Point* p = std::get_if<Point>(&a[0]);
      const Line* l = std::get_if<Line>(&a[1]);
      if (!p || !l) {
        l = &want_line(a[0], f);
        p = &want_point(a[1], f);
      }
      Fq v = incidence_form(*p, *l);
      os << "incidence form = " << v.str();
      return {v.is_zero(), os.str()};
    }
    if (f == "perp") {
      if (std::holds_alternative<Point>(a[0]) && std::holds_alternative<Point>(a[1])) {
        const Point &p = std::get<Point>(a[0]), &q = std::get<Point>(a[1]);
        Fq v = form(p, q);
        os << "form = " << v.str();
        return {v.is_zero(), os.str()};
      }
      const Line &l = want_line(a[0], f), &m = want_line(a[1], f);
      Fq v = form(l, m);
      os << "form = " << v.str();
      return {v.is_zero(), os.str()};
    }
    if (f == "on_null") {
      Fq v = std::holds_alternative<Point>(a[0])
                 ? form(std::get<Point>(a[0]), std::get<Point>(a[0]))
                 : form(want_line(a[0], f), want_line(a[0], f));
      os << "form = " << v.str();
      return {v.is_zero(), os.str()};
    }
    if (f == "eq") {
      os << "lhs = " << single_str(a[0]) << ", rhs = " << single_str(a[1]);
      if (std::holds_alternative<Fq>(a[0]) && std::holds_alternative<ExtValue>(a[1]))
        return {ExtValue::finite(std::get<Fq>(a[0])) == std::get<ExtValue>(a[1]), os.str()};
      if (std::holds_alternative<ExtValue>(a[0]) && std::holds_alternative<Fq>(a[1]))
        return {std::get<ExtValue>(a[0]) == ExtValue::finite(std::get<Fq>(a[1])), os.str()};
      if (a[0].index() != a[1].index())
        fail(Err::ParseFailure, "eq needs two values of the same kind");
      bool equal = std::visit(
          [&a](const auto& lhs) {
            using T = std::decay_t<decltype(lhs)>;
            return lhs == std::get<T>(a[1]);
          },
          a[0]);
      return {equal, os.str()};
    }
    fail(Err::ParseFailure, "unknown predicate '" + f + "'");
  }
};

}  // namespace

std::string Value::str() const {
  if (!tuple) return single_str(items[0]);
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += single_str(items[i]);
  }
  out += "}";
  return out;
}

std::string StmtResult::str() const {
  switch (kind) {
    case Kind::Bound:
      return name + " = " + detail;
    case Kind::BindingFailed:
      return name + " : binding failed: " + detail;
    case Kind::AssertPassed:
      return "assert " + name + " : pass (" + detail + ")";
    case Kind::AssertFailed:
      return "assert " + name + " : FAIL (" + detail + ")";
  }
  return {};
}

std::string Evaluation::str() const {
  std::string out;
  for (const StmtResult& r : results) {
    out += r.str();
    out += '\n';
  }
  return out;
}

Evaluation evaluate(const Program& p) {
  Evaluation ev;
  ev.ctx = FieldCtx::parse(p.field);
  Evaluator inner{ev.ctx, ev.bindings};
  bool binding_failed = false;
  bool assert_failed = false;
  for (const Stmt& s : p.stmts) {
    StmtResult r;
    r.line = s.line;
    r.column = s.column;
    r.name = s.name;
    if (s.kind == Stmt::Kind::Binding) {
      try {
        Value v = inner.eval(s.args[0]);
        r.kind = StmtResult::Kind::Bound;
        r.detail = v.str();
        ev.bindings.emplace(s.name, std::move(v));
      } catch (const Error& e) {
        r.kind = StmtResult::Kind::BindingFailed;
        r.detail = std::string(err_name(e.code())) + ": " + e.what();
        ev.results.push_back(std::move(r));
        binding_failed = true;
        break;
      }
    } else {
      try {
        auto [pass, detail] = inner.predicate(s);
        r.kind = pass ? StmtResult::Kind::AssertPassed : StmtResult::Kind::AssertFailed;
        r.detail = detail;
        if (!pass) assert_failed = true;
      } catch (const Error& e) {
        r.kind = StmtResult::Kind::AssertFailed;
        r.detail = std::string(err_name(e.code())) + ": " + e.what();
        assert_failed = true;
      }
    }
    ev.results.push_back(std::move(r));
  }
  ev.completed = !binding_failed;
  ev.all_passed = ev.completed && !assert_failed;
  return ev;
}

}  // namespace uhg::script
