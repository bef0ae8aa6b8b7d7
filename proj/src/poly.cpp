#include "p1parts/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace p1parts {

// ---------------------------------------------------------------------------
// VariableLayout

VariableLayout::VariableLayout(std::vector<std::string> names) : names_(std::move(names)) {
  frozenStart_ = names_.size();
  finish();
}

VariableLayout VariableLayout::multiproj(int n) {
  if (n < 0) throw Error("coordinate count must be non-negative");
  VariableLayout layout;
  for (int k = 2 * n; k >= 1; --k) layout.names_.push_back("y_" + std::to_string(k));
  for (int k = 2 * n; k >= 1; --k) layout.names_.push_back("z_" + std::to_string(k));
  layout.n_ = n;
  layout.frozenStart_ = static_cast<std::size_t>(2 * n);
  layout.finish();
  return layout;
}

VariableLayout VariableLayout::affine(int n) {
  if (n < 0) throw Error("coordinate count must be non-negative");
  std::vector<std::string> names;
  for (int k = n; k >= 1; --k) names.push_back("x_" + std::to_string(k));
  return VariableLayout(std::move(names));
}

void VariableLayout::finish() {
  printOrder_.clear();
  for (std::size_t s = frozenStart_; s < names_.size(); ++s) printOrder_.push_back(s);
  for (std::size_t s = 0; s < frozenStart_; ++s) printOrder_.push_back(s);
}

std::optional<std::size_t> VariableLayout::slotOf(std::string_view name) const {
  for (std::size_t s = 0; s < names_.size(); ++s)
    if (names_[s] == name) return s;
  return std::nullopt;
}

std::size_t VariableLayout::ySlot(int k) const {
  if (k < 1 || k > 2 * n_) throw Error("y index " + std::to_string(k) + " out of range");
  return shift_ + static_cast<std::size_t>(2 * n_ - k);
}

std::size_t VariableLayout::zSlot(int k) const {
  if (k < 1 || k > 2 * n_) throw Error("z index " + std::to_string(k) + " out of range");
  return shift_ + static_cast<std::size_t>(4 * n_ - k);
}

VariableLayout VariableLayout::withFreshTop(const std::string& name) const {
  if (slotOf(name)) throw Error("slot name '" + name + "' already in use");
  VariableLayout out = *this;
  out.names_.insert(out.names_.begin(), name);
  out.frozenStart_ += 1;
  out.shift_ += 1;
  out.finish();
  return out;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<Exponent> exps) : e_(std::move(exps)) {
  for (Exponent e : e_)
    if (e < 0) throw Error("negative exponent");
}

bool Monomial::isOne() const {
  return std::all_of(e_.begin(), e_.end(), [](Exponent e) { return e == 0; });
}

Exponent Monomial::totalDegree() const { return std::accumulate(e_.begin(), e_.end(), Exponent{0}); }

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > 0 && other.e_[i] > 0) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= divisor.e_[i];
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(r.e_[i], b.e_[i]);
  return r;
}

int lexCompare(const Monomial& a, const Monomial& b) {
  const auto& x = a.exponents();
  const auto& y = b.exponents();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != y[i]) return x[i] < y[i] ? -1 : 1;
  return 0;
}

Ordering compareMonomials(const Monomial& a, const Monomial& b, const VariableLayout& layout) {
  if (a.size() != layout.size() || b.size() != layout.size())
    throw Error("monomial slot count does not match the layout");
  int c = lexCompare(a, b);
  return c < 0 ? Ordering::Less : c > 0 ? Ordering::Greater : Ordering::Equal;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(FieldSpec field, std::size_t nvars, const Coefficient& c) {
  Polynomial p(field, nvars);
  if (!c.isZero()) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

Polynomial Polynomial::constant(FieldSpec field, std::size_t nvars, long c) {
  return constant(field, nvars, Coefficient(field, c));
}

Polynomial Polynomial::variable(FieldSpec field, std::size_t nvars, std::size_t slot, Exponent exp) {
  if (slot >= nvars) throw Error("slot out of range");
  Monomial m(nvars);
  m[slot] = exp;
  return monomial(field, m, Coefficient::one(field));
}

Polynomial Polynomial::monomial(FieldSpec field, const Monomial& m, const Coefficient& c) {
  Polynomial p(field, m.size());
  if (!c.isZero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::fromTerms(FieldSpec field, std::size_t nvars, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return lexCompare(a.mono, b.mono) > 0; });
  Polynomial p(field, nvars);
  for (auto& t : terms) {
    if (t.mono.size() != nvars) throw Error("term slot count does not match polynomial");
    if (!(t.coeff.field() == field)) throw Error("term coefficient in a different field");
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.isZero()) p.terms_.pop_back();
    } else if (!t.coeff.isZero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

const Term& Polynomial::leadTerm() const {
  if (terms_.empty()) throw Error("leading term of the zero polynomial");
  return terms_.front();
}

Exponent Polynomial::degreeIn(std::size_t slot) const {
  if (terms_.empty()) return -1;
  Exponent d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[slot]);
  return d;
}

std::vector<std::size_t> Polynomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < nvars_; ++s)
    if (degreeIn(s) > 0) out.push_back(s);
  return out;
}

Exponent Polynomial::totalDegree() const {
  Exponent d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.totalDegree());
  return d;
}

void Polynomial::checkCompatible(const Polynomial& o) const {
  if (!(field_ == o.field_)) throw Error("polynomials over different fields");
  if (nvars_ != o.nvars_) throw Error("polynomials in rings of different size");
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::subMulTerm(const Coefficient& c, const Monomial& m, const Polynomial& g) const {
  checkCompatible(g);
  Polynomial r(field_, nvars_);
  r.terms_.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  while (a != terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end()) {
      r.terms_.push_back(*a++);
      continue;
    }
    Monomial bm = b->mono * m;
    int cmp = a == terms_.end() ? -1 : lexCompare(a->mono, bm);
    if (cmp > 0) {
      r.terms_.push_back(*a++);
    } else if (cmp < 0) {
      r.terms_.push_back({std::move(bm), -(b->coeff * c)});
      ++b;
    } else {
      Coefficient v = a->coeff - b->coeff * c;
      if (!v.isZero()) r.terms_.push_back({std::move(bm), std::move(v)});
      ++a;
      ++b;
    }
  }
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  return *this = subMulTerm(-Coefficient::one(field_), Monomial(nvars_), o);
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  return *this = subMulTerm(Coefficient::one(field_), Monomial(nvars_), o);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.checkCompatible(b);
  if (a.terms_.size() < b.terms_.size()) return b * a;
  Polynomial r(a.field_, a.nvars_);
  for (const auto& t : b.terms_) r = r.subMulTerm(-t.coeff, t.mono, a);
  return r;
}

Polynomial Polynomial::scaled(const Coefficient& c) const {
  if (c.isZero()) return Polynomial(field_, nvars_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::mulTerm(const Coefficient& c, const Monomial& m) const {
  if (c.isZero()) return Polynomial(field_, nvars_);
  Polynomial r = *this;
  for (auto& t : r.terms_) {
    t.coeff *= c;
    t.mono = t.mono * m;
  }
  return r;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_.front().coeff.isOne()) return *this;
  return scaled(terms_.front().coeff.inverse());
}

Polynomial Polynomial::derivative(std::size_t slot) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Exponent e = t.mono[slot];
    if (e == 0) continue;
    Term d = t;
    d.mono[slot] = e - 1;
    d.coeff *= Coefficient(field_, static_cast<long>(e));
    if (!d.coeff.isZero()) out.push_back(std::move(d));
  }
  // differentiation keeps the lex order of the surviving terms
  Polynomial r(field_, nvars_);
  r.terms_ = std::move(out);
  return r;
}

Coefficient Polynomial::evaluateConstant() const {
  if (!isConstant()) throw Error("polynomial is not constant");
  return terms_.empty() ? Coefficient::zero(field_) : terms_.front().coeff;
}

Polynomial Polynomial::liftTop(std::size_t extra) const {
  Polynomial r(field_, nvars_ + extra);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<Exponent> e(extra, 0);
    e.insert(e.end(), t.mono.exponents().begin(), t.mono.exponents().end());
    r.terms_.push_back({Monomial(std::move(e)), t.coeff});
  }
  return r;
}

Polynomial Polynomial::dropTop(std::size_t count) const {
  if (count > nvars_) throw Error("dropTop: not enough slots");
  Polynomial r(field_, nvars_ - count);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    for (std::size_t s = 0; s < count; ++s)
      if (t.mono[s] != 0) throw Error("dropTop: polynomial uses a removed slot");
    std::vector<Exponent> e(t.mono.exponents().begin() + static_cast<std::ptrdiff_t>(count),
                            t.mono.exponents().end());
    r.terms_.push_back({Monomial(std::move(e)), t.coeff});
  }
  return r;
}

Polynomial Polynomial::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != nvars_) throw Error("permutation size mismatch");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(nvars_);
    for (std::size_t s = 0; s < nvars_; ++s) m[perm[s]] = t.mono[s];
    out.push_back({std::move(m), t.coeff});
  }
  return fromTerms(field_, nvars_, std::move(out));
}

// ---------------------------------------------------------------------------
// Free functions

Polynomial substitute(const Polynomial& f, std::span<const std::optional<Polynomial>> images) {
  if (images.size() != f.nvars()) throw Error("substitute: image count does not match slot count");
  std::optional<std::size_t> target;
  for (const auto& img : images) {
    if (!img) continue;
    if (!(img->field() == f.field())) throw Error("substitute: image over a different field");
    if (target && *target != img->nvars()) throw Error("substitute: images in different rings");
    target = img->nvars();
  }
  std::size_t nv = target.value_or(f.nvars());
  for (std::size_t s = 0; s < f.nvars(); ++s)
    if (!images[s] && f.usesSlot(s))
      throw Error("substitute: no image for slot " + std::to_string(s));

  // powers of each image, computed on demand
  std::vector<std::vector<Polynomial>> powers(f.nvars());
  auto power = [&](std::size_t s, Exponent e) -> const Polynomial& {
    auto& cache = powers[s];
    if (cache.empty()) cache.push_back(Polynomial::constant(f.field(), nv, 1));
    while (static_cast<Exponent>(cache.size()) <= e) cache.push_back(cache.back() * *images[s]);
    return cache[static_cast<std::size_t>(e)];
  };

  Polynomial result(f.field(), nv);
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(f.field(), nv, t.coeff);
    for (std::size_t s = 0; s < f.nvars() && !term.isZero(); ++s)
      if (t.mono[s] > 0) term = term * power(s, t.mono[s]);
    result += term;
  }
  return result;
}

Exponent degreeIn(const Polynomial& f, std::size_t slot) { return f.degreeIn(slot); }

LeadSplit leadSplit(const Polynomial& f, const VariableLayout& layout, int frozenLevel) {
  if (f.isZero()) throw Error("leadSplit of the zero polynomial");
  if (f.nvars() != layout.size()) throw Error("leadSplit: layout mismatch");
  if (layout.isMultiproj())
    for (int k = 1; k <= frozenLevel; ++k)
      if (f.usesSlot(layout.ySlot(k)))
        throw Error("leadSplit: " + layout.name(layout.ySlot(k)) + " should be frozen at level " +
                    std::to_string(frozenLevel));
  const std::size_t cut = layout.frozenStart();
  auto unfrozenPart = [&](const Monomial& m) {
    Monomial u = m;
    for (std::size_t s = cut; s < u.size(); ++s) u[s] = 0;
    return u;
  };
  LeadSplit out{unfrozenPart(f.leadMonomial()), Polynomial(f.field(), f.nvars())};
  // terms sharing the leading unfrozen part are contiguous at the front
  std::vector<Term> coeffTerms;
  for (const auto& t : f.terms()) {
    if (!(unfrozenPart(t.mono) == out.leadMonomial)) break;
    coeffTerms.push_back({t.mono / out.leadMonomial, t.coeff});
  }
  out.leadCoefficient = Polynomial::fromTerms(f.field(), f.nvars(), std::move(coeffTerms));
  return out;
}

std::optional<Polynomial> divideExact(const Polynomial& f, const Polynomial& g) {
  if (g.isZero()) throw Error("division by the zero polynomial");
  Polynomial q(f.field(), f.nvars());
  Polynomial r = f;
  const Term& lg = g.leadTerm();
  std::vector<Term> quotientTerms;
  while (!r.isZero()) {
    const Term& lr = r.leadTerm();
    if (!lg.mono.divides(lr.mono)) return std::nullopt;
    Monomial m = lr.mono / lg.mono;
    Coefficient c = lr.coeff / lg.coeff;
    r = r.subMulTerm(c, m, g);
    quotientTerms.push_back({std::move(m), std::move(c)});
  }
  return Polynomial::fromTerms(f.field(), f.nvars(), std::move(quotientTerms));
}

namespace {

Polynomial exactQuotient(const Polynomial& f, const Polynomial& g) {
  auto q = divideExact(f, g);
  if (!q) throw Error("internal: expected exact division");
  return *q;
}

/// Coefficients of f viewed as a univariate polynomial in `slot`, indexed by
/// degree; the slot's exponent is cleared in each coefficient.
std::vector<Polynomial> coefficientsIn(const Polynomial& f, std::size_t slot) {
  Exponent d = f.degreeIn(slot);
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(std::max<Exponent>(d, 0)) + 1);
  for (const auto& t : f.terms()) {
    Term c = t;
    c.mono[slot] = 0;
    buckets[static_cast<std::size_t>(t.mono[slot])].push_back(std::move(c));
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Polynomial::fromTerms(f.field(), f.nvars(), std::move(b)));
  return out;
}

Polynomial leadingCoefficientIn(const Polynomial& f, std::size_t slot) {
  return coefficientsIn(f, slot).back();
}

Polynomial contentIn(const Polynomial& f, std::size_t slot) {
  Polynomial c(f.field(), f.nvars());
  for (const auto& coeff : coefficientsIn(f, slot)) {
    if (coeff.isZero()) continue;
    c = polyGcd(c, coeff);
    if (c.isOne()) break;
  }
  return c;
}

Polynomial primitivePartIn(const Polynomial& f, std::size_t slot) {
  if (f.isZero()) return f;
  return exactQuotient(f, contentIn(f, slot)).monic();
}

/// lc(b)^k * a reduced modulo b as univariate polynomials in slot.
Polynomial pseudoRemainder(Polynomial a, const Polynomial& b, std::size_t slot) {
  const Exponent db = b.degreeIn(slot);
  const Polynomial lb = leadingCoefficientIn(b, slot);
  while (!a.isZero() && a.degreeIn(slot) >= db) {
    Exponent da = a.degreeIn(slot);
    Polynomial la = leadingCoefficientIn(a, slot);
    Polynomial shift = Polynomial::variable(a.field(), a.nvars(), slot, da - db);
    a = lb * a - la * shift * b;
  }
  return a;
}

Polynomial pthRoot(const Polynomial& f) {
  const std::uint32_t p = f.field().characteristic();
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    Term r = t;
    for (std::size_t s = 0; s < r.mono.size(); ++s) {
      if (r.mono[s] % static_cast<Exponent>(p) != 0) throw Error("internal: not a p-th power");
      r.mono[s] /= static_cast<Exponent>(p);
    }
    // a^p = a on F_p, so coefficients are their own p-th roots
    out.push_back(std::move(r));
  }
  return Polynomial::fromTerms(f.field(), f.nvars(), std::move(out));
}

}  // namespace

Polynomial polyGcd(const Polynomial& f, const Polynomial& g) {
  if (!(f.field() == g.field()) || f.nvars() != g.nvars())
    throw Error("gcd of polynomials from different rings");
  if (f.isZero()) return g.monic();
  if (g.isZero()) return f.monic();
  if (f.isConstant() || g.isConstant()) return Polynomial::constant(f.field(), f.nvars(), 1);

  // main variable: the lex-greatest slot occurring in either input
  std::size_t slot = f.nvars();
  for (std::size_t s = 0; s < f.nvars() && slot == f.nvars(); ++s)
    if (f.usesSlot(s) || g.usesSlot(s)) slot = s;

  if (!f.usesSlot(slot)) return polyGcd(f, contentIn(g, slot));
  if (!g.usesSlot(slot)) return polyGcd(contentIn(f, slot), g);

  Polynomial content = polyGcd(contentIn(f, slot), contentIn(g, slot));
  Polynomial a = primitivePartIn(f, slot);
  Polynomial b = primitivePartIn(g, slot);
  if (a.degreeIn(slot) < b.degreeIn(slot)) std::swap(a, b);
  while (!b.isZero() && b.degreeIn(slot) > 0) {
    Polynomial r = pseudoRemainder(a, b, slot);
    a = std::move(b);
    b = primitivePartIn(r, slot);
  }
  // b == 0: a is the primitive gcd; otherwise the sequence ended in a
  // nonzero v-free remainder and the primitive parts are coprime
  Polynomial primitive = b.isZero() ? a : Polynomial::constant(f.field(), f.nvars(), 1);
  return (content * primitive).monic();
}

Polynomial polyLcm(const Polynomial& f, const Polynomial& g) {
  if (f.isZero() || g.isZero()) return Polynomial(f.field(), f.nvars());
  return exactQuotient(f * g, polyGcd(f, g)).monic();
}

Polynomial squarefreePart(const Polynomial& f) {
  if (f.isZero()) throw Error("squarefree part of the zero polynomial");
  if (f.isConstant()) return Polynomial::constant(f.field(), f.nvars(), 1);
  for (std::size_t s : f.support()) {
    Polynomial d = f.derivative(s);
    if (d.isZero()) continue;
    // f / gcd(f, df) keeps each factor that is simple in s, once; every
    // other factor survives in gcd(f, df), which has lower degree in s
    Polynomial g = polyGcd(f, d);
    Polynomial simple = exactQuotient(f, g);
    return polyLcm(simple, squarefreePart(g)).monic();
  }
  // every partial derivative vanishes: f is a p-th power
  return squarefreePart(pthRoot(f));
}

std::string toCanonicalText(const Polynomial& f, const VariableLayout& layout) {
  if (f.nvars() != layout.size()) throw Error("toCanonicalText: layout mismatch");
  if (f.isZero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : f.terms()) {
    bool negative = f.field().isRational() && sgn(t.coeff.numerator()) < 0;
    Coefficient mag = negative ? -t.coeff : t.coeff;
    if (negative)
      out << '-';
    else if (!first)
      out << '+';
    first = false;
    bool unitCoeff = mag.isOne();
    if (!unitCoeff || t.mono.isOne()) out << mag.toString();
    bool needStar = !unitCoeff;
    for (std::size_t s : layout.printOrder()) {
      Exponent e = t.mono[s];
      if (e == 0) continue;
      if (needStar) out << '*';
      out << layout.name(s);
      if (e > 1) out << '^' << e;
      needStar = true;
    }
  }
  return out.str();
}

}  // namespace p1parts
