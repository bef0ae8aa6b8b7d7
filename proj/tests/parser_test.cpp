#include <gtest/gtest.h>

#include "p1parts/parser.hpp"

using namespace p1parts;

namespace {

const VariableLayout kX3 = VariableLayout::affine(3);
const VariableLayout kY3 = VariableLayout::multiproj(3);

std::size_t errorOffset(std::string_view text, const VariableLayout& layout, FieldSpec field = {}) {
  try {
    parsePolynomial(text, layout, field);
  } catch (const ParseError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "no parse error for '" << text << "'";
  return 0;
}

}  // namespace

TEST(ParsePolynomial, ExampleGenerators) {
  Polynomial g = parsePolynomial("x_1*(x_3^2*x_2+x_3+1)", kX3, {});
  EXPECT_EQ(toCanonicalText(g, kX3), "x_3^2*x_2*x_1+x_3*x_1+x_1");
  EXPECT_EQ(toCanonicalText(parsePolynomial("y_6^2+y_6", kY3, {}), kY3), "y_6^2+y_6");
  EXPECT_EQ(parsePolynomial(" y_6 ^ 2\t+ y_6 ", kY3, {}), parsePolynomial("y_6^2+y_6", kY3, {}));
}

TEST(ParsePolynomial, PrecedenceAndUnaryMinus) {
  auto P = [](std::string_view s) { return parsePolynomial(s, kY3, {}); };
  EXPECT_EQ(P("-y_1^2"), -P("y_1*y_1"));
  EXPECT_EQ(P("2*y_1^2*3"), P("6*y_1^2"));
  EXPECT_EQ(P("y_2-y_1-1"), P("y_2-(y_1+1)"));
  EXPECT_EQ(P("--y_1"), P("y_1"));
  EXPECT_EQ(P("(y_1+1)^3"), P("y_1^3+3*y_1^2+3*y_1+1"));
  EXPECT_EQ(P("1/2*y_1+3/4"), P("(2*y_1+3)*1/4"));
}

TEST(ParsePolynomial, PositionedErrors) {
  EXPECT_EQ(errorOffset("x_1*", kX3), 4u);
  EXPECT_EQ(errorOffset("x_1+(x_2", kX3), 8u);
  EXPECT_EQ(errorOffset("x_1 x_2", kX3), 4u);  // no implicit multiplication
  EXPECT_EQ(errorOffset("x_4+1", kX3), 0u);
  EXPECT_EQ(errorOffset("2*w_1", kX3), 2u);
  EXPECT_EQ(errorOffset("x_1$", kX3), 3u);
  EXPECT_EQ(errorOffset("1/2*x_1", kX3, FieldSpec(5)), 1u);
  EXPECT_EQ(errorOffset("1/0", kX3), 2u);
  EXPECT_EQ(errorOffset("", kX3), 0u);
}

TEST(ParseProblem, CubicFixture) {
  auto spec = parseProblem(
      "# comment line\n"
      "char 0\n"
      "n 3\n"
      "form x\n"
      "ideal:\n"
      "x_1*(x_3^2*x_2+x_3+1)\n"
      "x_3*(x_3^2*x_2+x_3+1)   # trailing comment\n");
  EXPECT_TRUE(spec.field.isRational());
  EXPECT_EQ(spec.n, 3);
  EXPECT_EQ(spec.form, GeneratorForm::X);
  ASSERT_EQ(spec.generators.size(), 2u);
  EXPECT_EQ(spec.generators[1], parsePolynomial("x_3^3*x_2+x_3^2+x_3", kX3, {}));
}

TEST(ParseProblem, InlineGeneratorsAndCrlf) {
  auto spec = parseProblem("char 0\r\nn 3\r\nform x\r\nideal: x_1*(x_3^2*x_2+x_3+1) ; x_3*(x_3^2*x_2+x_3+1)\r\n");
  EXPECT_EQ(spec.generators.size(), 2u);
  auto inverse = parseProblem("char 5\nn 2\nform x\nideal:\nx_2*x_1-1\n");
  EXPECT_EQ(inverse.field.characteristic(), 5u);
  ASSERT_EQ(inverse.generators.size(), 1u);
  EXPECT_EQ(toCanonicalText(inverse.generators[0], VariableLayout::affine(2)), "x_2*x_1+4");
}

TEST(ParseProblem, YForm) {
  auto spec = parseProblem("char 0\nn 3\nform y\nideal:\ny_2*(y_6^2*y_4+y_6*y_5*y_3+y_5^2*y_3)\n");
  EXPECT_EQ(spec.form, GeneratorForm::Y);
  EXPECT_EQ(spec.generators[0].nvars(), 12u);
  EXPECT_THROW(parseProblem("char 0\nn 3\nform y\nideal:\nz_1*y_2\n"), Error);
  EXPECT_THROW(parseProblem("char 0\nn 1\nform y\nideal:\ny_3\n"), Error);
}

TEST(ParseProblem, Errors) {
  auto message = [](std::string_view text) -> std::string {
    try {
      parseProblem(text);
    } catch (const Error& e) {
      return e.what();
    }
    return "";
  };
  EXPECT_NE(message("char 4\nn 1\nform x\nideal:\nx_1\n").find("not prime"), std::string::npos);
  EXPECT_NE(message("n 1\nform x\nideal:\nx_1\n").find("char"), std::string::npos);
  EXPECT_NE(message("char 0\nform x\nideal:\nx_1\n").find("'n'"), std::string::npos);
  EXPECT_NE(message("char 0\nn 1\nideal:\nx_1\n").find("form"), std::string::npos);
  EXPECT_NE(message("char 0\nn 1\nform x\nideal:\n# nothing\n").find("no generators"), std::string::npos);
  EXPECT_NE(message("char 0\nn 2\nform x\nideal:\nx_3\n").find("out of range"), std::string::npos);
  EXPECT_NE(message("char 0\nn 2\nform x\nideal:\nx_1*\n").find("line 5"), std::string::npos);
  EXPECT_NE(message("char 0\nn 2\nform q\n").find("form"), std::string::npos);
  EXPECT_NE(message("bogus 1\n").find("unknown header"), std::string::npos);
}
