#ifndef P1PARTS_GROEBNER_HPP
#define P1PARTS_GROEBNER_HPP

#include <vector>

#include "p1parts/poly.hpp"

namespace p1parts {

/// A generating set of an ideal, optionally flagged as its reduced lex
/// Gröbner basis (monic, sorted by increasing leading monomial).
class IdealBasis {
 public:
  IdealBasis() = default;
  IdealBasis(VariableLayout layout, std::vector<Polynomial> generators, bool isReducedGB = false);

  const VariableLayout& layout() const { return layout_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool isReducedGB() const { return reduced_; }

  /// The zero ideal (no generators).
  bool isZeroIdeal() const { return gens_.empty(); }
  /// Reduced basis {1}.
  bool isUnit() const { return reduced_ && gens_.size() == 1 && gens_.front().isOne(); }

  friend bool operator==(const IdealBasis& a, const IdealBasis& b) {
    return a.layout_ == b.layout_ && a.gens_ == b.gens_ && a.reduced_ == b.reduced_;
  }

 private:
  VariableLayout layout_;
  std::vector<Polynomial> gens_;
  bool reduced_ = false;
};

/// Remainder of multivariate division of f by the generators of basis.
Polynomial normalForm(const Polynomial& f, const IdealBasis& basis);
Polynomial normalForm(const Polynomial& f, const std::vector<Polynomial>& divisors);

Polynomial sPolynomial(const Polynomial& f, const Polynomial& g);

/// The reduced lex Gröbner basis of <gens>. Zero generators are ignored;
/// <0> yields the empty basis and any unit ideal yields {1}.
IdealBasis buchberger(const std::vector<Polynomial>& gens, const VariableLayout& layout);
inline IdealBasis buchberger(const IdealBasis& ideal) {
  return buchberger(ideal.generators(), ideal.layout());
}

/// Generators of a reduced GB that only involve the lowest `level` slots of
/// the layout: a reduced GB of the elimination ideal.
IdealBasis eliminationSubbasis(const IdealBasis& basis, std::size_t level);

/// Reduced GB of (I : f^inf), via a fresh top slot t and I + <1 - t f>.
IdealBasis idealSaturate(const IdealBasis& ideal, const Polynomial& f);

/// Monic generator of <f> : <q>^inf.
Polynomial principalSaturate(const Polynomial& f, const Polynomial& q);

/// f in sqrt(I), decided by 1 in I + <1 - t f>.
bool radicalMembership(const Polynomial& f, const IdealBasis& ideal);

/// 1 in I + <q>: q vanishes nowhere on V(I).
bool vanishesNowhere(const Polynomial& q, const IdealBasis& ideal);

/// J with I <= J <= sqrt(I): adjoin squarefree parts of univariate
/// eliminants until nothing changes. Returns a reduced GB.
IdealBasis heuristicRadical(const IdealBasis& ideal);

/// Equality of ideals by mutual normal-form membership.
bool sameIdeal(const IdealBasis& a, const IdealBasis& b);

}  // namespace p1parts

#endif  // P1PARTS_GROEBNER_HPP
