#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "chevalg/scenarios.hpp"
#include "chevalg/words.hpp"

namespace chevalg {

/// The CLI's working field: F_q, optionally extended to F_q(t).
struct GroundField {
  const GaloisField* gf = nullptr;
  bool rational_ext = true;
};

/// Parses "F4(t)", "F2", "F9(t)" style descriptions (q a prime power with
/// p in {2,3,5} and q <= 625).
GroundField parse_ground_field(const std::string& text);

/// Syntax error with 1-based location.
struct ParseError : std::runtime_error {
  ParseError(int line, int col, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(col) +
                           ": " + msg),
        line(line),
        col(col) {}
  int line, col;
};

/// Parsed statement sequence. Evaluation is deterministic; identical scripts
/// produce byte-identical reports.
class Script {
 public:
  struct Expr;
  using ExprPtr = std::shared_ptr<Expr>;
  struct Expr {
    enum class K { Mul, RootElem, Weyl, Torus, Cochar, Ident, Call, Identity };
    K k;
    std::vector<ExprPtr> args;                         // Mul factors / Call arguments
    std::string name;                                  // Ident / Call
    int root = 0;                                      // RootElem / Weyl
    std::string fexpr;                                 // RootElem param, Cochar value
    std::vector<int> ints;                             // Cochar coefficients
    std::vector<std::pair<int, std::string>> binds;    // Torus bindings
  };
  struct Stmt {
    enum class K { Let, Eval, Assert, AssertNot, VerifyPaper };
    K k;
    std::string name;  // Let target
    ExprPtr expr;
  };

  const std::vector<Stmt>& stmts() const { return stmts_; }
  std::vector<Stmt>& stmts() { return stmts_; }
  /// Canonical rendering; reparses to an equal script.
  std::string pretty() const;

 private:
  std::vector<Stmt> stmts_;
};

/// Parses a script; throws ParseError on bad input, never crashes.
Script parse_script(const std::string& src);

struct RunOptions {
  GroundField field;
  bool json = false;
  std::ostream* out = nullptr;  // defaults to std::cout
};

/// Runs a script. Exit-code semantics: 0 on success, 1 when an assertion or
/// the verification corpus fails. Evaluation errors are reported with the
/// originating statement and also yield 1.
int run_script(const Script& script, const RunOptions& opts);

/// Parses a single word expression (the --word/--by arguments of the CLI).
GroupWord parse_word(const std::string& src, const GroundField& field);
/// Parses "2,4,3,2" into a cocharacter.
Cocharacter parse_cochar_coeffs(const std::string& src, int rank);

/// Shared F4 tables for the CLI and the script evaluator.
const RootSystem& f4_root_system();
const ChevalleyData& f4_chevalley();

/// Interactive read-eval-print loop over stdin.
int run_repl(const RunOptions& opts, std::istream& in);

}  // namespace chevalg
