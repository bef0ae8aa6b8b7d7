#ifndef P1PARTS_POLY_HPP
#define P1PARTS_POLY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "p1parts/coeff.hpp"

namespace p1parts {

/// Ordered variable slots, slot 0 being the lex-greatest.
///
/// The multi-projective layout for n coordinates has 4n slots:
/// y_{2n} > ... > y_1 > z_{2n} > ... > z_1. Coordinate x_j = (g_j : h_j) is
/// carried by the pair (y_{2j}, y_{2j-1}); z_k is the frozen twin of y_k.
class VariableLayout {
 public:
  VariableLayout() = default;
  explicit VariableLayout(std::vector<std::string> names);

  static VariableLayout multiproj(int n);
  /// x_n > ... > x_1.
  static VariableLayout affine(int n);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t slot) const { return names_.at(slot); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> slotOf(std::string_view name) const;

  /// Number of projective coordinates for a multiproj layout, else 0.
  int coordinateCount() const { return n_; }
  bool isMultiproj() const { return n_ > 0; }
  /// Slot of y_k / z_k, 1 <= k <= 2n.
  std::size_t ySlot(int k) const;
  std::size_t zSlot(int k) const;
  /// First slot of the frozen (z) block; size() when there is none.
  std::size_t frozenStart() const { return frozenStart_; }

  /// Copy with a new lex-greatest slot prepended; used for Rabinowitsch-style
  /// elimination. Polynomials are moved across with liftTop/dropTop.
  VariableLayout withFreshTop(const std::string& name) const;

  /// Order in which factors of a monomial are printed: the frozen block
  /// first (it acts as the coefficient ring), then the rest.
  const std::vector<std::size_t>& printOrder() const { return printOrder_; }

  friend bool operator==(const VariableLayout& a, const VariableLayout& b) {
    return a.names_ == b.names_;
  }

 private:
  void finish();

  std::vector<std::string> names_;
  int n_ = 0;
  std::size_t frozenStart_ = 0;
  std::size_t shift_ = 0;  // slots prepended by withFreshTop
  std::vector<std::size_t> printOrder_;
};

using Exponent = std::int32_t;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);

  std::size_t size() const { return e_.size(); }
  Exponent operator[](std::size_t slot) const { return e_[slot]; }
  Exponent& operator[](std::size_t slot) { return e_[slot]; }
  const std::vector<Exponent>& exponents() const { return e_; }

  bool isOne() const;
  Exponent totalDegree() const;
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> e_;
};

/// Lex comparison with slot 0 most significant: negative, zero, positive.
int lexCompare(const Monomial& a, const Monomial& b);

enum class Ordering { Less, Equal, Greater };
/// Throws Error when either monomial's slot count differs from the layout.
Ordering compareMonomials(const Monomial& a, const Monomial& b, const VariableLayout& layout);

struct Term {
  Monomial mono;
  Coefficient coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial; terms strictly decreasing in lex order, no zero
/// coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(FieldSpec field, std::size_t nvars) : field_(field), nvars_(nvars) {}

  static Polynomial constant(FieldSpec field, std::size_t nvars, const Coefficient& c);
  static Polynomial constant(FieldSpec field, std::size_t nvars, long c);
  static Polynomial variable(FieldSpec field, std::size_t nvars, std::size_t slot,
                             Exponent exp = 1);
  static Polynomial monomial(FieldSpec field, const Monomial& m, const Coefficient& c);
  /// Sorts and combines arbitrary terms.
  static Polynomial fromTerms(FieldSpec field, std::size_t nvars, std::vector<Term> terms);

  FieldSpec field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t termCount() const { return terms_.size(); }

  bool isZero() const { return terms_.empty(); }
  bool isConstant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.isOne()); }
  bool isOne() const { return terms_.size() == 1 && terms_[0].mono.isOne() && terms_[0].coeff.isOne(); }

  /// Leading data; throw Error on the zero polynomial.
  const Term& leadTerm() const;
  const Monomial& leadMonomial() const { return leadTerm().mono; }
  const Coefficient& leadCoefficient() const { return leadTerm().coeff; }

  Exponent degreeIn(std::size_t slot) const;
  bool usesSlot(std::size_t slot) const { return degreeIn(slot) > 0; }
  /// Slots with positive degree, increasing.
  std::vector<std::size_t> support() const;
  Exponent totalDegree() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const Coefficient& c) const;
  Polynomial mulTerm(const Coefficient& c, const Monomial& m) const;
  /// this - c*m*g, computed by a single merge.
  Polynomial subMulTerm(const Coefficient& c, const Monomial& m, const Polynomial& g) const;
  /// Leading coefficient 1; zero stays zero.
  Polynomial monic() const;

  /// Partial derivative with respect to a slot.
  Polynomial derivative(std::size_t slot) const;
  Coefficient evaluateConstant() const;

  /// Reinterpret in a ring with extra slots prepended (lex-greatest) or
  /// removed from the top; dropTop requires the removed slots to be unused.
  Polynomial liftTop(std::size_t extra) const;
  Polynomial dropTop(std::size_t count) const;
  /// Rename slots: slot s of this polynomial becomes slot perm[s].
  Polynomial permuted(std::span<const std::size_t> perm) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.field_ == b.field_ && a.terms_ == b.terms_;
  }

 private:
  void checkCompatible(const Polynomial& o) const;

  FieldSpec field_;
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

/// Simultaneous substitution. images[s] is the image of slot s; every image
/// that is present must live in the same target ring. Throws Error when a
/// slot occurring in f has no image.
Polynomial substitute(const Polynomial& f, std::span<const std::optional<Polynomial>> images);

/// Degree of f in one slot; -1 for the zero polynomial.
Exponent degreeIn(const Polynomial& f, std::size_t slot);

/// The lex-greatest monomial in the non-frozen slots and its full coefficient,
/// a polynomial in the frozen slots (slots >= layout.frozenStart()).
struct LeadSplit {
  Monomial leadMonomial;
  Polynomial leadCoefficient;
};
/// frozenLevel j asserts that no y_k with k <= j occurs; throws Error on zero
/// input or when that does not hold.
LeadSplit leadSplit(const Polynomial& f, const VariableLayout& layout, int frozenLevel);

/// f / g when g divides f exactly; std::nullopt otherwise.
std::optional<Polynomial> divideExact(const Polynomial& f, const Polynomial& g);

/// Monic gcd; gcd(f, 0) = monic(f), gcd(0, 0) = 0.
Polynomial polyGcd(const Polynomial& f, const Polynomial& g);
Polynomial polyLcm(const Polynomial& f, const Polynomial& g);

/// Monic product of the distinct irreducible factors of f.
Polynomial squarefreePart(const Polynomial& f);

/// Terms in decreasing lex order, e.g. "z_4*y_6^2+y_6+1".
std::string toCanonicalText(const Polynomial& f, const VariableLayout& layout);

}  // namespace p1parts

#endif  // P1PARTS_POLY_HPP
