#include "p1parts/oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace p1parts {

std::string ProjTuple::toString() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = coords.size(); i-- > 0;) {
    out << '(' << coords[i].first << ':' << coords[i].second << ')';
    if (i > 0) out << ',';
  }
  out << ')';
  return out.str();
}

std::vector<ProjTuple> enumerateProjSpace(std::uint32_t p, int n, std::size_t cap) {
  if (!isPrime(p)) throw Error("enumerateProjSpace: " + std::to_string(p) + " is not prime");
  if (n < 0) throw Error("enumerateProjSpace: negative coordinate count");
  std::size_t total = 1;
  for (int j = 0; j < n; ++j) {
    if (total > cap / (p + 1)) throw Error("enumeration of (P^1(F_" + std::to_string(p) + "))^" +
                                           std::to_string(n) + " exceeds the cap of " +
                                           std::to_string(cap) + " tuples");
    total *= p + 1;
  }
  auto representative = [](std::uint32_t digit) -> std::pair<std::uint32_t, std::uint32_t> {
    return digit == 0 ? std::pair{1u, 0u} : std::pair{digit - 1, 1u};
  };
  std::vector<ProjTuple> out;
  out.reserve(total);
  std::vector<std::uint32_t> digits(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < total; ++i) {
    ProjTuple t;
    t.coords.resize(static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < digits.size(); ++j) t.coords[j] = representative(digits[j]);
    out.push_back(std::move(t));
    // odometer with x_1 fastest
    for (std::size_t j = 0; j < digits.size(); ++j) {
      if (++digits[j] <= p) break;
      digits[j] = 0;
    }
  }
  return out;
}

namespace {

std::uint32_t powMod(std::uint64_t base, Exponent e, std::uint32_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (e > 0) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

/// values[k-1] is bound to y_k and z_k.
std::uint32_t evaluateSlots(const Polynomial& f, const VariableLayout& layout,
                            const std::vector<std::uint32_t>& values) {
  if (f.field().isRational()) throw Error("oracle evaluation needs a prime field");
  const std::uint32_t p = f.field().characteristic();
  std::uint64_t acc = 0;
  for (const auto& t : f.terms()) {
    std::uint64_t v = t.coeff.residue();
    for (int k = 1; k <= static_cast<int>(values.size()) && v != 0; ++k) {
      Exponent e = t.mono[layout.ySlot(k)] + t.mono[layout.zSlot(k)];
      if (e > 0) v = v * powMod(values[static_cast<std::size_t>(k - 1)], e, p) % p;
    }
    acc = (acc + v) % p;
  }
  return static_cast<std::uint32_t>(acc);
}

std::vector<std::uint32_t> slotValues(const ProjTuple& point) {
  std::vector<std::uint32_t> values;
  values.reserve(point.coords.size() * 2);
  for (const auto& [g, h] : point.coords) {
    values.push_back(h);  // y_{2j-1}
    values.push_back(g);  // y_{2j}
  }
  return values;
}

void requireBihomogeneous(const Polynomial& f, const VariableLayout& layout) {
  for (int j = 1; j <= layout.coordinateCount(); ++j) {
    std::optional<Exponent> pairDegree;
    for (const auto& t : f.terms()) {
      Exponent d = t.mono[layout.ySlot(2 * j)] + t.mono[layout.ySlot(2 * j - 1)];
      if (pairDegree && *pairDegree != d)
        throw Error("generator " + toCanonicalText(f, layout) + " is not homogeneous in (y_" +
                    std::to_string(2 * j) + ", y_" + std::to_string(2 * j - 1) + ")");
      pairDegree = d;
    }
  }
}

}  // namespace

std::uint32_t evaluateAt(const Polynomial& f, const VariableLayout& layout, const ProjTuple& point) {
  if (point.coords.size() != static_cast<std::size_t>(layout.coordinateCount()))
    throw Error("evaluateAt: tuple length does not match the layout");
  return evaluateSlots(f, layout, slotValues(point));
}

std::vector<ProjTuple> varietyPoints(const std::vector<Polynomial>& gens, std::uint32_t p, int n) {
  const VariableLayout layout = VariableLayout::multiproj(n);
  for (const auto& g : gens) {
    if (g.nvars() != layout.size()) throw Error("varietyPoints: generator not in the y layout");
    if (g.field().characteristic() != p)
      throw Error("varietyPoints: generator is not over F_" + std::to_string(p));
    requireBihomogeneous(g, layout);
  }
  std::vector<ProjTuple> out;
  for (auto& t : enumerateProjSpace(p, n)) {
    auto values = slotValues(t);
    if (std::all_of(gens.begin(), gens.end(),
                    [&](const Polynomial& g) { return evaluateSlots(g, layout, values) == 0; }))
      out.push_back(std::move(t));
  }
  return out;
}

bool isPartMember(const Part& part, const VariableLayout& layout, const ProjTuple& point) {
  if (part.eq.isUnit()) return false;
  auto values = slotValues(point);
  for (const auto& g : part.eq.generators())
    if (evaluateSlots(g, layout, values) != 0) return false;
  for (const auto& q : part.neq)
    if (evaluateSlots(q, layout, values) == 0) return false;
  return true;
}

std::vector<ProjTuple> partMembers(const Part& part, std::uint32_t p, int n) {
  const VariableLayout layout = VariableLayout::multiproj(n);
  std::vector<ProjTuple> out;
  for (auto& t : enumerateProjSpace(p, n))
    if (isPartMember(part, layout, t)) out.push_back(std::move(t));
  return out;
}

PartitionReport checkPartition(const PartTree& tree, const std::vector<Polynomial>& gens,
                               std::uint32_t p, int n) {
  if (tree.field.characteristic() != p)
    throw Error("checkPartition: tree was computed in characteristic " +
                std::to_string(tree.field.characteristic()) + ", not " + std::to_string(p));
  if (tree.layout.coordinateCount() != n && !tree.nodes.empty())
    throw Error("checkPartition: coordinate count mismatch");
  const VariableLayout layout = VariableLayout::multiproj(n);
  auto variety = varietyPoints(gens, p, n);
  auto leaves = leafParts(tree);

  const std::set<ProjTuple> inside(variety.begin(), variety.end());

  PartitionReport report;
  report.varietySize = variety.size();
  for (const auto& t : enumerateProjSpace(p, n)) {
    ++report.tuplesScanned;
    bool inVariety = inside.contains(t);
    std::vector<int> owners;
    for (const auto& leaf : leaves)
      if (isPartMember(leaf.part, layout, t)) owners.push_back(leaf.part.id);
    if (owners.size() > 1) report.doubleCovered.emplace_back(t, owners);
    if (!inVariety)
      for (int id : owners) report.unsound.emplace_back(id, t);
    if (inVariety) {
      if (owners.empty())
        report.missing.push_back(t);
      else
        ++report.covered;
    }
  }
  return report;
}

namespace {

/// Univariate polynomial in y_{j+1} obtained by fixing y_1 .. y_j.
Polynomial specialize(const Polynomial& f, const VariableLayout& layout,
                      const std::vector<std::uint32_t>& low, int next) {
  const FieldSpec field = f.field();
  const std::uint32_t p = field.characteristic();
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    std::uint64_t v = t.coeff.residue();
    for (int k = 1; k <= static_cast<int>(low.size()) && v != 0; ++k) {
      Exponent e = t.mono[layout.ySlot(k)] + t.mono[layout.zSlot(k)];
      if (e > 0) v = v * powMod(low[static_cast<std::size_t>(k - 1)], e, p) % p;
    }
    if (v == 0) continue;
    Monomial m(1);
    m[0] = t.mono[layout.ySlot(next)] + t.mono[layout.zSlot(next)];
    out.push_back({std::move(m), Coefficient(field, static_cast<long>(v))});
  }
  return Polynomial::fromTerms(field, 1, std::move(out));
}

int highestIndex(const Polynomial& f, const VariableLayout& layout) {
  int top = 0;
  for (int k = 1; k <= 2 * layout.coordinateCount(); ++k)
    if (f.usesSlot(layout.ySlot(k)) || f.usesSlot(layout.zSlot(k))) top = k;
  return top;
}

struct LevelConstraints {
  std::vector<Polynomial> lowEq, lowNeq, nextEq, nextNeq;
};

LevelConstraints constraintsAt(const Part& part, const VariableLayout& layout, int j) {
  LevelConstraints c;
  for (const auto& g : part.eq.generators()) {
    int top = highestIndex(g, layout);
    if (top <= j)
      c.lowEq.push_back(g);
    else if (top == j + 1)
      c.nextEq.push_back(g);
  }
  for (const auto& q : part.neq) {
    int top = highestIndex(q, layout);
    if (top <= j)
      c.lowNeq.push_back(q);
    else if (top == j + 1)
      c.nextNeq.push_back(q);
  }
  return c;
}

/// Calls visit(values) for every F_p assignment of y_1 .. y_j meeting the
/// low constraints.
template <class Visit>
void forEachLowAssignment(const LevelConstraints& c, const VariableLayout& layout, std::uint32_t p,
                          int j, Visit&& visit) {
  std::vector<std::uint32_t> values(static_cast<std::size_t>(j), 0);
  while (true) {
    bool ok = std::all_of(c.lowEq.begin(), c.lowEq.end(),
                          [&](const Polynomial& g) { return evaluateSlots(g, layout, values) == 0; }) &&
              std::all_of(c.lowNeq.begin(), c.lowNeq.end(),
                          [&](const Polynomial& q) { return evaluateSlots(q, layout, values) != 0; });
    if (ok) visit(values);
    std::size_t k = 0;
    for (; k < values.size(); ++k) {
      if (++values[k] < p) break;
      values[k] = 0;
    }
    if (k == values.size()) return;
  }
}

std::uint32_t partCharacteristic(const Part& part) {
  if (part.eq.generators().empty()) throw Error("oracle check on a part without generators");
  std::uint32_t p = part.eq.generators().front().field().characteristic();
  if (p == 0) throw Error("oracle checks need a part computed over F_p");
  return p;
}

}  // namespace

std::vector<ExtensionFailure> checkExtension(const Part& part, const VariableLayout& layout) {
  const std::uint32_t p = partCharacteristic(part);
  const FieldSpec field(p);
  std::vector<ExtensionFailure> failures;
  for (int j = 0; j < 2 * layout.coordinateCount(); ++j) {
    LevelConstraints c = constraintsAt(part, layout, j);
    forEachLowAssignment(c, layout, p, j, [&](const std::vector<std::uint32_t>& low) {
      Polynomial common(field, 1);
      for (const auto& g : c.nextEq) common = polyGcd(common, specialize(g, layout, low, j + 1));
      Polynomial forbidden = Polynomial::constant(field, 1, 1);
      for (const auto& q : c.nextNeq) forbidden = forbidden * specialize(q, layout, low, j + 1);
      bool extends;
      if (forbidden.isZero())
        extends = false;
      else if (common.isZero())
        extends = true;  // y_{j+1} is free; the closure avoids finitely many zeros
      else
        extends = !principalSaturate(common, forbidden).isConstant();
      if (!extends) failures.push_back({j, low});
    });
  }
  return failures;
}

std::vector<ExtensionFailure> checkLeadReduction(const Part& part, const VariableLayout& layout) {
  const std::uint32_t p = partCharacteristic(part);
  std::vector<ExtensionFailure> failures;
  for (int j = 0; j < 2 * layout.coordinateCount(); ++j) {
    LevelConstraints c = constraintsAt(part, layout, j);
    if (c.nextEq.empty()) continue;
    std::vector<Polynomial> ordered;
    for (const auto& g : c.nextEq) ordered.push_back(freezeBelow(unfreezeAll(g, layout), j, layout));
    std::stable_sort(ordered.begin(), ordered.end(), [](const Polynomial& a, const Polynomial& b) {
      return lexCompare(a.leadMonomial(), b.leadMonomial()) < 0;
    });
    forEachLowAssignment(c, layout, p, j, [&](const std::vector<std::uint32_t>& low) {
      Polynomial first = specialize(ordered.front(), layout, low, j + 1);
      if (first.isZero()) return;  // no claim where the leading coefficient vanishes
      std::vector<std::uint32_t> point = low;
      point.push_back(0);
      for (std::uint32_t v = 0; v < p; ++v) {
        point.back() = v;
        if (evaluateSlots(ordered.front(), layout, point) != 0) continue;
        for (const auto& b : ordered)
          if (evaluateSlots(b, layout, point) != 0) {
            failures.push_back({j, point});
            break;
          }
      }
    });
  }
  return failures;
}

}  // namespace p1parts
