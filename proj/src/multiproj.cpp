#include "p1parts/multiproj.hpp"

#include <algorithm>
#include <deque>

namespace p1parts {

Polynomial multihomogenize(const Polynomial& b, int n) {
  if (b.isZero()) throw Error("multihomogenize of the zero polynomial");
  if (b.nvars() != static_cast<std::size_t>(n)) throw Error("multihomogenize: expected x_n .. x_1");
  const VariableLayout layout = VariableLayout::multiproj(n);
  std::vector<Exponent> degrees(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) degrees[static_cast<std::size_t>(j - 1)] = b.degreeIn(static_cast<std::size_t>(n - j));

  std::vector<Term> out;
  out.reserve(b.termCount());
  for (const auto& t : b.terms()) {
    Monomial m(layout.size());
    for (int j = 1; j <= n; ++j) {
      Exponent a = t.mono[static_cast<std::size_t>(n - j)];
      m[layout.ySlot(2 * j)] = a;
      m[layout.ySlot(2 * j - 1)] = degrees[static_cast<std::size_t>(j - 1)] - a;
    }
    out.push_back({std::move(m), t.coeff});
  }
  return Polynomial::fromTerms(b.field(), layout.size(), std::move(out));
}

std::vector<Polynomial> canonicalConstraints(const VariableLayout& layout, FieldSpec field) {
  const std::size_t nv = layout.size();
  const Polynomial one = Polynomial::constant(field, nv, 1);
  std::vector<Polynomial> out;
  for (int j = 1; j <= layout.coordinateCount(); ++j) {
    Polynomial g = Polynomial::variable(field, nv, layout.ySlot(2 * j));
    Polynomial h = Polynomial::variable(field, nv, layout.ySlot(2 * j - 1));
    out.push_back(h * (h - one));
    out.push_back((g - one) * (h - one));
  }
  return out;
}

namespace {

Polynomial moveExponents(const Polynomial& f, const VariableLayout& layout, int upTo, bool freeze) {
  if (f.nvars() != layout.size() || !layout.isMultiproj())
    throw Error("freeze/unfreeze requires the multi-projective layout");
  std::vector<Term> out = f.terms();
  for (auto& t : out) {
    for (int k = 1; k <= upTo; ++k) {
      std::size_t y = layout.ySlot(k);
      std::size_t z = layout.zSlot(k);
      if (freeze) {
        t.mono[z] += t.mono[y];
        t.mono[y] = 0;
      } else {
        t.mono[y] += t.mono[z];
        t.mono[z] = 0;
      }
    }
  }
  return Polynomial::fromTerms(f.field(), f.nvars(), std::move(out));
}

}  // namespace

Polynomial freezeBelow(const Polynomial& f, int level, const VariableLayout& layout) {
  return moveExponents(f, layout, level, true);
}

Polynomial unfreezeAll(const Polynomial& f, const VariableLayout& layout) {
  return moveExponents(f, layout, 2 * layout.coordinateCount(), false);
}

// Freezing renames y_k to z_k for the lowest slots only, so the relative lex
// order of every pair of slots in use is unchanged: a reduced GB stays one.
IdealBasis freezeBelow(const IdealBasis& ideal, int level) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators())
    gens.push_back(freezeBelow(unfreezeAll(g, ideal.layout()), level, ideal.layout()));
  return IdealBasis(ideal.layout(), std::move(gens), ideal.isReducedGB());
}

IdealBasis unfreezeAll(const IdealBasis& ideal) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(unfreezeAll(g, ideal.layout()));
  return IdealBasis(ideal.layout(), std::move(gens), ideal.isReducedGB());
}

bool PartTree::isLeaf(int id) const {
  return std::none_of(nodes.begin(), nodes.end(), [id](const Part& p) { return p.prev == id; });
}

std::vector<int> PartTree::path(int id) const {
  std::vector<int> out;
  for (int k = id; k >= 0; k = nodes.at(static_cast<std::size_t>(k)).prev) out.push_back(k);
  std::reverse(out.begin(), out.end());
  return out;
}

Polynomial reducedLeadCoefficient(const Polynomial& lc, const std::vector<Polynomial>& neq) {
  if (lc.isZero()) throw Error("reducedLeadCoefficient of zero");
  Polynomial m = lc.monic();
  for (const auto& q : neq) m = principalSaturate(m, q);
  return m;
}

std::optional<SplitFinding> splitScan(const Part& part, const VariableLayout& layout) {
  if (part.eq.isUnit()) throw Error("splitScan on an empty part");
  const int top = 2 * layout.coordinateCount();
  for (int level = 1; level < top; ++level) {
    IdealBasis frozen = freezeBelow(part.eq, level);
    const IdealBasis low = eliminationSubbasis(frozen, static_cast<std::size_t>(level));  // z_level .. z_1
    std::vector<Polynomial> gens = frozen.generators();
    std::stable_sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
      return lexCompare(a.leadMonomial(), b.leadMonomial()) < 0;
    });
    for (const auto& g : gens) {
      LeadSplit ls = leadSplit(g, layout, level);
      if (ls.leadMonomial.isOne()) continue;
      Polynomial m = reducedLeadCoefficient(ls.leadCoefficient, part.neq);
      if (m.isConstant()) continue;
      // the constraints on slots <= level can force lc != 0 on their own;
      // normalizeNEQ drops such inequalities, so splitting would loop
      if (vanishesNowhere(m, low)) continue;
      return SplitFinding{level, g, squarefreePart(m)};
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Polynomial>> normalizeNEQ(const std::vector<Polynomial>& neq,
                                                    const IdealBasis& eq) {
  const VariableLayout& layout = eq.layout();
  // membership is decided on unfrozen forms so every slot means one coordinate
  const IdealBasis plainEq = unfreezeAll(eq);
  std::vector<Polynomial> kept;
  for (const auto& q : neq) {
    if (q.isZero()) return std::nullopt;
    Polynomial s = squarefreePart(q);
    if (s.isConstant()) continue;
    Polynomial plain = unfreezeAll(s, layout);
    if (radicalMembership(plain, plainEq)) return std::nullopt;
    // redundant only if the constraints on y_1 .. y_k already exclude q = 0,
    // k the highest coordinate of q; the full eq is too strong for extension
    int k = 0;
    for (int c = 1; c <= 2 * layout.coordinateCount(); ++c)
      if (plain.usesSlot(layout.ySlot(c))) k = c;
    const IdealBasis low = eliminationSubbasis(plainEq, static_cast<std::size_t>(2 * layout.coordinateCount() + k));
    if (vanishesNowhere(plain, low)) continue;
    if (std::find(kept.begin(), kept.end(), s) == kept.end()) kept.push_back(std::move(s));
  }
  if (kept.size() > 1) {
    Polynomial product = Polynomial::constant(kept.front().field(), layout.size(), 1);
    for (const auto& q : kept) product = product * unfreezeAll(q, layout);
    if (radicalMembership(product, plainEq)) return std::nullopt;
  }
  std::sort(kept.begin(), kept.end(), [](const Polynomial& a, const Polynomial& b) {
    return lexCompare(a.leadMonomial(), b.leadMonomial()) < 0;
  });
  return kept;
}

std::vector<Polynomial> homogeneousGenerators(const ProblemSpec& spec) {
  if (spec.form == GeneratorForm::Y) return spec.generators;
  std::vector<Polynomial> out;
  for (const auto& g : spec.generators) {
    if (g.isZero()) continue;
    out.push_back(multihomogenize(g, spec.n));
  }
  return out;
}

namespace {

IdealBasis closeIdeal(const std::vector<Polynomial>& gens, const VariableLayout& layout,
                      const PartitionOptions& options) {
  IdealBasis gb = buchberger(gens, layout);
  return options.radical ? heuristicRadical(gb) : gb;
}

}  // namespace

IdealBasis rootIdeal(const ProblemSpec& spec, const PartitionOptions& options) {
  const VariableLayout layout = VariableLayout::multiproj(spec.n);
  std::vector<Polynomial> gens = homogeneousGenerators(spec);
  for (auto& c : canonicalConstraints(layout, spec.field)) gens.push_back(std::move(c));
  return closeIdeal(gens, layout, options);
}

PartTree partitionVariety(const ProblemSpec& spec, const PartitionOptions& options) {
  PartTree tree;
  tree.layout = VariableLayout::multiproj(spec.n);
  tree.field = spec.field;
  const VariableLayout& layout = tree.layout;

  IdealBasis root = rootIdeal(spec, options);
  if (root.isUnit()) {
    tree.diagnostic = "the ideal has no points in (P^1)^n: root equality constraints generate <1>";
    return tree;
  }
  tree.nodes.push_back(Part{0, -1, std::move(root), {}, 0});

  auto append = [&](int parent, IdealBasis eq, std::optional<std::vector<Polynomial>> neq, int level) {
    if (eq.isUnit()) {
      ++tree.discardedUnit;
      return;
    }
    if (!neq) {
      ++tree.discardedEmpty;
      return;
    }
    if (tree.nodes.size() >= options.maxNodes)
      throw NodeLimitError("node limit of " + std::to_string(options.maxNodes) + " reached", tree);
    int id = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back(Part{id, parent, std::move(eq), std::move(*neq), level});
  };

  for (std::size_t current = 0; current < tree.nodes.size(); ++current) {
    const Part part = tree.nodes[current];
    auto finding = splitScan(part, layout);
    if (!finding) continue;
    const int level = finding->level;
    const Polynomial& splitter = finding->splitter;
    IdealBasis frozen = freezeBelow(part.eq, level);

    // equality child: J = 0
    std::vector<Polynomial> withJ = frozen.generators();
    withJ.push_back(splitter);
    IdealBasis eqA = closeIdeal(withJ, layout, options);
    auto neqA = eqA.isUnit() ? std::nullopt : normalizeNEQ(part.neq, eqA);
    append(part.id, std::move(eqA), std::move(neqA), level);

    // inequality child: J != 0
    IdealBasis saturated = idealSaturate(frozen, splitter);
    IdealBasis eqB = options.radical ? heuristicRadical(saturated) : saturated;
    std::vector<Polynomial> neqWithJ = part.neq;
    neqWithJ.push_back(splitter);
    auto neqB = eqB.isUnit() ? std::nullopt : normalizeNEQ(neqWithJ, eqB);
    append(part.id, std::move(eqB), std::move(neqB), level);
  }
  return tree;
}

std::vector<LeafPart> leafParts(const PartTree& tree) {
  std::vector<char> hasChild(tree.nodes.size(), 0);
  for (const auto& p : tree.nodes)
    if (p.prev >= 0) hasChild[static_cast<std::size_t>(p.prev)] = 1;
  std::vector<LeafPart> out;
  for (const auto& p : tree.nodes)
    if (!hasChild[static_cast<std::size_t>(p.id)] && !p.eq.isUnit())
      out.push_back({p, tree.path(p.id)});
  return out;
}

}  // namespace p1parts
