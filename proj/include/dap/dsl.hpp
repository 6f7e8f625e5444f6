#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dap/construct.hpp"
#include "dap/trace.hpp"

namespace dap::dsl {

struct Diagnostic {
  enum class Severity { Error, Warning };
  Severity severity = Severity::Error;
  int line = 0, col = 0;
  std::string message;
  std::string token;  // offending token, possibly empty

  std::string str() const;
};

// -- AST -------------------------------------------------------------------
// One statement per engine operation; no nested expressions. Scalar literals
// are resolved against the script model at parse time.

struct ExprPoint {
  Scalar x, y;
  friend bool operator==(const ExprPoint&, const ExprPoint&) = default;
};
struct ExprJoin {
  std::string a, b;
  friend bool operator==(const ExprJoin&, const ExprJoin&) = default;
};
struct ExprMeet {
  std::string a, b;
  friend bool operator==(const ExprMeet&, const ExprMeet&) = default;
};
struct ExprParallel {
  std::string line, point;
  friend bool operator==(const ExprParallel&, const ExprParallel&) = default;
};
struct ExprChart {
  std::string o, i;
  friend bool operator==(const ExprChart&, const ExprChart&) = default;
};
enum class OpKind { Add, Mul, Neg, Inv, Ratio2, Ratio3 };
struct ExprOp {
  OpKind op;
  std::vector<std::string> args;
  std::string chart;
  friend bool operator==(const ExprOp&, const ExprOp&) = default;
};
struct ExprTranslate {
  std::string point;
  Scalar vx, vy;
  friend bool operator==(const ExprTranslate&, const ExprTranslate&) = default;
};
struct ExprDilate {
  std::string point, center;
  Scalar factor;
  friend bool operator==(const ExprDilate&, const ExprDilate&) = default;
};
struct ExprPproj {
  std::string point, target, direction;
  friend bool operator==(const ExprPproj&, const ExprPproj&) = default;
};
using Expr = std::variant<ExprPoint, ExprJoin, ExprMeet, ExprParallel, ExprChart, ExprOp,
                          ExprTranslate, ExprDilate, ExprPproj>;

using CheckArg = std::variant<std::string, ExprPoint>;  // identifier or point literal
enum class CheckKind { Eq, Collinear, Parallel, On };
struct Check {
  CheckKind kind;
  std::vector<CheckArg> args;
  friend bool operator==(const Check&, const Check&) = default;
};

struct LetStmt {
  std::string name;
  Expr expr;
  friend bool operator==(const LetStmt&, const LetStmt&) = default;
};
struct AssertStmt {
  Check check;
  friend bool operator==(const AssertStmt&, const AssertStmt&) = default;
};
struct EmitStmt {
  std::string name;
  friend bool operator==(const EmitStmt&, const EmitStmt&) = default;
};

struct Stmt {
  std::variant<LetStmt, AssertStmt, EmitStmt> node;
  int line = 0, col = 0;  // source position, not part of equality

  friend bool operator==(const Stmt& a, const Stmt& b) { return a.node == b.node; }
};

struct Script {
  ModelConfig model;
  std::vector<Stmt> statements;

  /// Statement count including the model header.
  std::size_t size() const { return statements.size() + 1; }

  friend bool operator==(const Script& a, const Script& b) {
    return a.model == b.model && a.statements == b.statements;
  }
};

struct ParseResult {
  std::optional<Script> script;  // set iff no error diagnostics
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return script.has_value(); }
};

/// Parses source text; diagnostics are batched (lexical, syntactic,
/// duplicate-binding, unknown-identifier). '#' starts a line comment;
/// statements are separated by newlines or ';'.
ParseResult parse(std::string_view source);

/// Canonical formatting; parse(print(s)) == s. Comments are not preserved.
std::string print(const Script& s);

// -- evaluation --------------------------------------------------------------

struct AssertionOutcome {
  int line = 0;
  std::string text;    // canonical check text
  bool passed = false;
  std::string detail;  // evaluated operands on failure
};

struct Artifact {
  std::string name;
  std::string trace_json;
  std::string svg;
};

struct RunReport {
  std::vector<AssertionOutcome> assertions;
  std::vector<Artifact> artifacts;
  std::optional<Diagnostic> error;  // first hard engine error; aborts the run

  bool all_passed() const;
  bool ok() const { return !error && all_passed(); }
  std::string str() const;
};

/// Strict sequential evaluation; engine errors become positioned diagnostics.
RunReport evaluate(const Script& s);

}  // namespace dap::dsl
