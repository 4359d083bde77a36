#pragma once

#include <variant>

#include "reltype/polynomial.hpp"

namespace reltype {

// Syntax or semantic input error, with 1-based source position.
class ScriptError : public std::runtime_error {
 public:
  ScriptError(const std::string& msg, int line, int col)
      : std::runtime_error(msg + " at line " + std::to_string(line) +
                           ", column " + std::to_string(col)),
        line(line),
        col(col) {}
  int line, col;
};

// Parses one polynomial expression (sums of products of coefficients,
// identifiers, ^-powers, parentheses; '/' only by constants).
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

struct ScriptArg {
  enum class Kind { Poly, Name, Int };
  Kind kind;
  Polynomial poly;    // Kind::Poly (and Kind::Int, as a constant)
  std::string name;   // Kind::Name
  long integer = 0;   // Kind::Int
  int line = 0, col = 0;
};

struct ScriptDecl {
  std::string name;
  bool is_matrix = false;
  std::vector<ScriptArg> args;
  int line = 0, col = 0;
};

struct ScriptCommand {
  std::string name;
  std::vector<ScriptArg> args;
  int line = 0, col = 0;
};

// One ring per script; declarations and commands in order.
struct Script {
  RingPtr ring;
  std::vector<ScriptDecl> decls;
  std::vector<ScriptCommand> commands;
};

struct ParseOptions {
  std::optional<FieldDesc> field_override;
  std::optional<OrderSpec> order_override;
};

Script parse_script(const std::string& text, const ParseOptions& opts = {});

}  // namespace reltype
