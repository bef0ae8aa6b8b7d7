#include "p1parts/groebner.hpp"

#include <algorithm>

namespace p1parts {

IdealBasis::IdealBasis(VariableLayout layout, std::vector<Polynomial> generators, bool isReducedGB)
    : layout_(std::move(layout)), gens_(std::move(generators)), reduced_(isReducedGB) {
  for (const auto& g : gens_)
    if (g.nvars() != layout_.size()) throw Error("generator does not match the ideal's layout");
}

Polynomial normalForm(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  std::vector<Term> remainder;
  Polynomial p = f;
  while (!p.isZero()) {
    const Term& lt = p.leadTerm();
    const Polynomial* divisor = nullptr;
    for (const auto& g : divisors) {
      if (!g.isZero() && g.leadMonomial().divides(lt.mono)) {
        divisor = &g;
        break;
      }
    }
    if (divisor) {
      p = p.subMulTerm(lt.coeff / divisor->leadCoefficient(), lt.mono / divisor->leadMonomial(),
                       *divisor);
    } else {
      remainder.push_back(lt);
      p = p - Polynomial::monomial(p.field(), lt.mono, lt.coeff);
    }
  }
  return Polynomial::fromTerms(f.field(), f.nvars(), std::move(remainder));
}

Polynomial normalForm(const Polynomial& f, const IdealBasis& basis) {
  return normalForm(f, basis.generators());
}

Polynomial sPolynomial(const Polynomial& f, const Polynomial& g) {
  Monomial l = lcm(f.leadMonomial(), g.leadMonomial());
  Polynomial a = f.mulTerm(f.leadCoefficient().inverse(), l / f.leadMonomial());
  return a.subMulTerm(g.leadCoefficient().inverse(), l / g.leadMonomial(), g);
}

namespace {

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

/// Drops redundant leading monomials, tail-reduces, sorts increasingly.
std::vector<Polynomial> reduceBasis(std::vector<Polynomial> g) {
  std::vector<Polynomial> minimal;
  for (std::size_t a = 0; a < g.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < g.size() && !redundant; ++b) {
      if (a == b) continue;
      const auto& la = g[a].leadMonomial();
      const auto& lb = g[b].leadMonomial();
      if (lb.divides(la) && (!(la == lb) || b < a)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[a]);
  }
  std::sort(minimal.begin(), minimal.end(), [](const Polynomial& a, const Polynomial& b) {
    return lexCompare(a.leadMonomial(), b.leadMonomial()) < 0;
  });
  // each element is reduced by the final forms of the smaller ones; the
  // leading term is untouched since no other leading monomial divides it
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<Polynomial> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(minimal[b]);
    minimal[a] = normalForm(minimal[a], others).monic();
  }
  return minimal;
}

}  // namespace

IdealBasis buchberger(const std::vector<Polynomial>& gens, const VariableLayout& layout) {
  std::vector<Polynomial> basis;
  std::vector<std::vector<char>> pending;
  std::vector<CriticalPair> queue;

  auto unit = [&](FieldSpec field) {
    return IdealBasis(layout, {Polynomial::constant(field, layout.size(), 1)}, true);
  };

  auto add = [&](Polynomial h) {
    std::size_t idx = basis.size();
    basis.push_back(h.monic());
    for (auto& row : pending) row.push_back(0);
    pending.emplace_back(idx + 1, 0);
    for (std::size_t i = 0; i < idx; ++i) {
      pending[i][idx] = pending[idx][i] = 1;
      queue.push_back({i, idx, lcm(basis[i].leadMonomial(), basis[idx].leadMonomial())});
    }
  };

  for (const auto& g : gens) {
    if (g.nvars() != layout.size()) throw Error("generator does not match the layout");
    if (g.isZero()) continue;
    if (g.isConstant()) return unit(g.field());
    add(g);
  }

  while (!queue.empty()) {
    // normal strategy: smallest lcm first, ties by insertion order
    auto best = std::min_element(queue.begin(), queue.end(), [](const CriticalPair& a, const CriticalPair& b) {
      return lexCompare(a.lcm, b.lcm) < 0;
    });
    CriticalPair pair = *best;
    queue.erase(best);
    pending[pair.i][pair.j] = pending[pair.j][pair.i] = 0;

    const Polynomial& f = basis[pair.i];
    const Polynomial& g = basis[pair.j];
    if (f.leadMonomial().coprime(g.leadMonomial())) continue;

    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (pending[pair.i][k] || pending[pair.j][k]) continue;
      if (basis[k].leadMonomial().divides(pair.lcm)) chain = true;
    }
    if (chain) continue;

    Polynomial h = normalForm(sPolynomial(f, g), basis);
    if (h.isZero()) continue;
    if (h.isConstant()) return unit(h.field());
    add(std::move(h));
  }

  return IdealBasis(layout, reduceBasis(std::move(basis)), true);
}

IdealBasis eliminationSubbasis(const IdealBasis& basis, std::size_t level) {
  if (!basis.isReducedGB()) throw Error("eliminationSubbasis requires a reduced Gröbner basis");
  const std::size_t size = basis.layout().size();
  const std::size_t first = level >= size ? 0 : size - level;
  std::vector<Polynomial> kept;
  for (const auto& g : basis.generators()) {
    bool inside = true;
    for (std::size_t s = 0; s < first && inside; ++s)
      if (g.usesSlot(s)) inside = false;
    if (inside) kept.push_back(g);
  }
  return IdealBasis(basis.layout(), std::move(kept), true);
}

namespace {

/// Reduced GB of I + <1 - t f> in the layout with a fresh top slot t.
IdealBasis rabinowitsch(const IdealBasis& ideal, const Polynomial& f, VariableLayout& extended) {
  extended = ideal.layout().withFreshTop("_t");
  std::vector<Polynomial> gens;
  gens.reserve(ideal.generators().size() + 1);
  for (const auto& g : ideal.generators()) gens.push_back(g.liftTop(1));
  Polynomial t = Polynomial::variable(f.field(), extended.size(), 0);
  gens.push_back(Polynomial::constant(f.field(), extended.size(), 1) - t * f.liftTop(1));
  return buchberger(gens, extended);
}

}  // namespace

IdealBasis idealSaturate(const IdealBasis& ideal, const Polynomial& f) {
  if (f.isZero()) throw Error("saturation by the zero polynomial");
  if (f.nvars() != ideal.layout().size()) throw Error("idealSaturate: layout mismatch");
  if (ideal.isZeroIdeal()) return IdealBasis(ideal.layout(), {}, true);
  if (f.isConstant()) return ideal.isReducedGB() ? ideal : buchberger(ideal);
  VariableLayout extended;
  IdealBasis big = rabinowitsch(ideal, f, extended);
  std::vector<Polynomial> kept;
  for (const auto& g : big.generators())
    if (!g.usesSlot(0)) kept.push_back(g.dropTop(1));
  return IdealBasis(ideal.layout(), std::move(kept), true);
}

Polynomial principalSaturate(const Polynomial& f, const Polynomial& q) {
  if (f.isZero() || q.isZero()) throw Error("principalSaturate of a zero polynomial");
  Polynomial r = f.monic();
  while (true) {
    Polynomial g = polyGcd(r, q);
    if (g.isConstant()) return r;
    auto quotient = divideExact(r, g);
    if (!quotient) throw Error("internal: gcd does not divide");
    r = quotient->monic();
  }
}

bool radicalMembership(const Polynomial& f, const IdealBasis& ideal) {
  if (f.isZero()) return true;
  if (ideal.isZeroIdeal()) return false;
  if (ideal.isReducedGB() && normalForm(f, ideal).isZero()) return true;
  if (f.isConstant()) return ideal.isReducedGB() ? ideal.isUnit() : buchberger(ideal).isUnit();
  VariableLayout extended;
  return rabinowitsch(ideal, f, extended).isUnit();
}

bool vanishesNowhere(const Polynomial& q, const IdealBasis& ideal) {
  std::vector<Polynomial> gens = ideal.generators();
  gens.push_back(q);
  return buchberger(gens, ideal.layout()).isUnit();
}

namespace {

/// The univariate element in `slot` of a reduced GB, if any.
std::optional<Polynomial> univariateIn(const std::vector<Polynomial>& gb, std::size_t slot) {
  for (const auto& g : gb) {
    auto sup = g.support();
    if (sup.size() == 1 && sup.front() == slot) return g;
  }
  return std::nullopt;
}

/// Generator of I ∩ F[slot], computed under a lex order with `slot` lowest.
std::optional<Polynomial> eliminant(const IdealBasis& gb, std::size_t slot) {
  const std::size_t nv = gb.layout().size();
  bool lowest = true;
  for (const auto& g : gb.generators())
    for (std::size_t s = slot + 1; s < nv && lowest; ++s)
      if (g.usesSlot(s)) lowest = false;
  if (lowest) return univariateIn(gb.generators(), slot);

  std::vector<std::size_t> perm(nv), inverse(nv);
  for (std::size_t s = 0; s < nv; ++s) perm[s] = s < slot ? s : s == slot ? nv - 1 : s - 1;
  for (std::size_t s = 0; s < nv; ++s) inverse[perm[s]] = s;
  std::vector<Polynomial> moved;
  for (const auto& g : gb.generators()) moved.push_back(g.permuted(perm));
  IdealBasis other = buchberger(moved, gb.layout());
  auto u = univariateIn(other.generators(), nv - 1);
  if (!u) return std::nullopt;
  return u->permuted(inverse);
}

}  // namespace

IdealBasis heuristicRadical(const IdealBasis& ideal) {
  IdealBasis current = ideal.isReducedGB() ? ideal : buchberger(ideal);
  while (true) {
    if (current.isZeroIdeal() || current.isUnit()) return current;
    std::vector<std::size_t> slots;
    for (const auto& g : current.generators())
      for (std::size_t s : g.support()) slots.push_back(s);
    std::sort(slots.begin(), slots.end());
    slots.erase(std::unique(slots.begin(), slots.end()), slots.end());

    std::vector<Polynomial> extra;
    for (std::size_t slot : slots) {
      // a squarefree univariate member already bounds the eliminant
      if (auto u = univariateIn(current.generators(), slot); u && squarefreePart(*u) == *u) continue;
      auto m = eliminant(current, slot);
      if (!m) continue;
      Polynomial s = squarefreePart(*m);
      if (!(s == m->monic())) extra.push_back(std::move(s));
    }
    if (extra.empty()) return current;
    std::vector<Polynomial> gens = current.generators();
    gens.insert(gens.end(), extra.begin(), extra.end());
    current = buchberger(gens, current.layout());
  }
}

bool sameIdeal(const IdealBasis& a, const IdealBasis& b) {
  if (!(a.layout() == b.layout())) return false;
  IdealBasis ga = a.isReducedGB() ? a : buchberger(a);
  IdealBasis gb = b.isReducedGB() ? b : buchberger(b);
  for (const auto& g : a.generators())
    if (!normalForm(g, gb).isZero()) return false;
  for (const auto& g : b.generators())
    if (!normalForm(g, ga).isZero()) return false;
  return true;
}

}  // namespace p1parts
