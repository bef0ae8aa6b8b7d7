#include "p1parts/parser.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

namespace p1parts {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const VariableLayout& layout, FieldSpec field)
      : text_(text), layout_(layout), field_(field) {}

  Polynomial parse() {
    Polynomial p = expr();
    skipSpace();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (!accept('^')) return base;
    skipSpace();
    std::size_t start = pos_;
    mpz_class e = integer();
    if (e > 1000000) {
      pos_ = start;
      fail("exponent too large");
    }
    long k = e.get_si();
    Polynomial r = Polynomial::constant(field_, layout_.size(), 1);
    for (long i = 0; i < k; ++i) r = r * base;
    return r;
  }

  mpz_class integer() {
    skipSpace();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail(pos_ == text_.size() ? "unexpected end of input" : "expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial atom() {
    skipSpace();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer();
      if (accept('/')) {
        if (!field_.isRational()) {
          --pos_;
          fail("rational constants are only allowed in characteristic 0");
        }
        skipSpace();
        std::size_t denPos = pos_;
        mpz_class den = integer();
        if (den == 0) {
          pos_ = denPos;
          fail("zero denominator");
        }
        return Polynomial::constant(field_, layout_.size(), Coefficient(field_, num, den));
      }
      return Polynomial::constant(field_, layout_.size(), Coefficient(field_, num));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto slot = layout_.slotOf(name);
      if (!slot) {
        pos_ = start;
        auto underscore = name.find('_');
        if (underscore != std::string::npos && underscore > 0 && underscore + 1 < name.size() &&
            layout_.slotOf(name.substr(0, underscore) + "_1"))
          fail("variable " + name + " is out of range");
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(field_, layout_.size(), *slot);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const VariableLayout& layout_;
  FieldSpec field_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void lineError(std::size_t line, const std::string& what) {
  throw Error("line " + std::to_string(line) + ": " + what);
}

std::uint64_t parseCount(std::string_view value, std::size_t line, const char* key) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size())
    lineError(line, std::string("invalid value for '") + key + "': '" + std::string(value) + "'");
  return v;
}

}  // namespace

Polynomial parsePolynomial(std::string_view text, const VariableLayout& layout, FieldSpec field) {
  return PolyParser(text, layout, field).parse();
}

VariableLayout ProblemSpec::inputLayout() const {
  return form == GeneratorForm::X ? VariableLayout::affine(n) : VariableLayout::multiproj(n);
}

ProblemSpec parseProblem(std::string_view text) {
  std::optional<FieldSpec> field;
  std::optional<int> n;
  std::optional<GeneratorForm> form;
  bool inIdeal = false;
  std::vector<std::pair<std::size_t, std::string>> generatorText;

  std::size_t lineNo = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++lineNo;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);  // also strips the '\r' of CRLF endings
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }

    auto addGenerators = [&](std::string_view rest) {
      while (!rest.empty()) {
        std::size_t semi = rest.find(';');
        std::string_view piece = trim(rest.substr(0, semi));
        if (!piece.empty()) generatorText.emplace_back(lineNo, std::string(piece));
        if (semi == std::string_view::npos) break;
        rest = rest.substr(semi + 1);
      }
    };

    if (inIdeal) {
      addGenerators(line);
    } else if (line.starts_with("ideal:")) {
      inIdeal = true;
      addGenerators(line.substr(6));
    } else {
      std::size_t sp = line.find_first_of(" \t");
      std::string_view key = line.substr(0, sp);
      std::string_view value = sp == std::string_view::npos ? std::string_view{} : trim(line.substr(sp));
      if (key == "char") {
        std::uint64_t c = parseCount(value, lineNo, "char");
        try {
          field = FieldSpec(c);
        } catch (const Error& e) {
          lineError(lineNo, e.what());
        }
      } else if (key == "n") {
        std::uint64_t k = parseCount(value, lineNo, "n");
        if (k < 1 || k > 16) lineError(lineNo, "n must be between 1 and 16");
        n = static_cast<int>(k);
      } else if (key == "form") {
        if (value == "x")
          form = GeneratorForm::X;
        else if (value == "y")
          form = GeneratorForm::Y;
        else
          lineError(lineNo, "form must be 'x' or 'y'");
      } else {
        lineError(lineNo, "unknown header '" + std::string(key) + "'");
      }
    }
    if (end == text.size()) break;
  }

  if (!field) throw Error("missing 'char' header");
  if (!n) throw Error("missing 'n' header");
  if (!form) throw Error("missing 'form' header");
  if (!inIdeal) throw Error("missing 'ideal:' section");
  if (generatorText.empty()) throw Error("the ideal has no generators");

  ProblemSpec spec;
  spec.field = *field;
  spec.n = *n;
  spec.form = *form;
  VariableLayout layout = spec.inputLayout();
  for (const auto& [line, src] : generatorText) {
    Polynomial g;
    try {
      g = parsePolynomial(src, layout, spec.field);
    } catch (const ParseError& e) {
      lineError(line, e.what());
    }
    if (spec.form == GeneratorForm::Y)
      for (std::size_t s = layout.frozenStart(); s < layout.size(); ++s)
        if (g.usesSlot(s)) lineError(line, "y-form generators may not use " + layout.name(s));
    spec.generators.push_back(std::move(g));
  }
  return spec;
}

}  // namespace p1parts
