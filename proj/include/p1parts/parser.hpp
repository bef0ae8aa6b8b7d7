#ifndef P1PARTS_PARSER_HPP
#define P1PARTS_PARSER_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "p1parts/coeff.hpp"
#include "p1parts/poly.hpp"

namespace p1parts {

/// Syntax error with the byte offset where parsing stopped.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error("offset " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Grammar: integers (and a/b over Q), variables named in the layout, binary
/// + - * ^, unary minus, parentheses. No implicit multiplication.
Polynomial parsePolynomial(std::string_view text, const VariableLayout& layout, FieldSpec field);

enum class GeneratorForm { X, Y };

struct ProblemSpec {
  FieldSpec field;
  int n = 0;
  GeneratorForm form = GeneratorForm::X;
  /// In VariableLayout::affine(n) for x-form, VariableLayout::multiproj(n)
  /// (y slots only) for y-form.
  std::vector<Polynomial> generators;

  VariableLayout inputLayout() const;
};

/// Line-oriented problem file:
///
///   # comment
///   char 0
///   n 3
///   form x
///   ideal:
///   x_1*(x_3^2*x_2+x_3+1)
///   x_3*(x_3^2*x_2+x_3+1)
///
/// Generators may also follow `ideal:` on the same line; ';' separates
/// several generators on one line.
ProblemSpec parseProblem(std::string_view text);

}  // namespace p1parts

#endif  // P1PARTS_PARSER_HPP
