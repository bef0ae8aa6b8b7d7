#ifndef P1PARTS_MULTIPROJ_HPP
#define P1PARTS_MULTIPROJ_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "p1parts/groebner.hpp"
#include "p1parts/parser.hpp"
#include "p1parts/poly.hpp"

namespace p1parts {

/// b* = (prod_j h_j^deg(b, x_j)) b(g_n/h_n, ..., g_1/h_1) with g_j -> y_{2j},
/// h_j -> y_{2j-1}. `b` lives in VariableLayout::affine(n), the result in
/// VariableLayout::multiproj(n).
Polynomial multihomogenize(const Polynomial& b, int n);

/// y_{2j-1}^2 - y_{2j-1} and (y_{2j} - 1)(y_{2j-1} - 1) for 1 <= j <= n: each
/// coordinate takes the representative (1:0) or (a:1).
std::vector<Polynomial> canonicalConstraints(const VariableLayout& layout, FieldSpec field);

/// y_k -> z_k for k <= level.
Polynomial freezeBelow(const Polynomial& f, int level, const VariableLayout& layout);
/// z_k -> y_k for every k.
Polynomial unfreezeAll(const Polynomial& f, const VariableLayout& layout);
IdealBasis freezeBelow(const IdealBasis& ideal, int level);
IdealBasis unfreezeAll(const IdealBasis& ideal);

/// One node of the decomposition: the points where every eq generator
/// vanishes and every neq polynomial does not.
struct Part {
  int id = 0;
  int prev = -1;
  IdealBasis eq;               // reduced GB, frozen below frozenLevel
  std::vector<Polynomial> neq;  // z-slot polynomials, monic and squarefree
  int frozenLevel = 0;
};

struct PartTree {
  VariableLayout layout;
  FieldSpec field;
  std::vector<Part> nodes;
  std::size_t discardedUnit = 0;   // children whose eq was <1>
  std::size_t discardedEmpty = 0;  // children whose neq made them empty
  std::string diagnostic;          // set when the root ideal is <1>

  bool isLeaf(int id) const;
  /// Ids from the root down to id.
  std::vector<int> path(int id) const;
};

/// The generator whose leading coefficient decides a split, and the
/// squarefree splitting polynomial J in the frozen slots.
struct SplitFinding {
  int level = 0;
  Polynomial pivot;
  Polynomial splitter;
};

/// principalSaturate of lc by every neq element, monic. A constant result
/// certifies lc nonzero on the part.
Polynomial reducedLeadCoefficient(const Polynomial& lc, const std::vector<Polynomial>& neq);

/// Scans levels 1 .. 2n-1 and, at each, the generators by increasing leading
/// monomial for a leading coefficient that is not certified nonzero.
std::optional<SplitFinding> splitScan(const Part& part, const VariableLayout& layout);

/// Squarefree, deduplicated, sorted inequalities; std::nullopt when the
/// constraints leave no point of V(eq) (the part is empty). Inequalities
/// that hold everywhere on V(eq) are dropped.
std::optional<std::vector<Polynomial>> normalizeNEQ(const std::vector<Polynomial>& neq,
                                                    const IdealBasis& eq);

struct PartitionOptions {
  std::size_t maxNodes = 10000;
  bool radical = true;
};

/// Thrown when the node limit is hit; carries the tree built so far.
class NodeLimitError : public Error {
 public:
  NodeLimitError(const std::string& what, PartTree partial)
      : Error(what), partial_(std::move(partial)) {}
  const PartTree& partial() const { return partial_; }

 private:
  PartTree partial_;
};

/// Generators of the problem in y-form (multihomogenized when given in x).
std::vector<Polynomial> homogeneousGenerators(const ProblemSpec& spec);

/// Root ideal: <b*> + canonical constraints, radical-closed unless disabled.
IdealBasis rootIdeal(const ProblemSpec& spec, const PartitionOptions& options);

PartTree partitionVariety(const ProblemSpec& spec, const PartitionOptions& options = {});

struct LeafPart {
  Part part;
  std::vector<int> path;
};
std::vector<LeafPart> leafParts(const PartTree& tree);

}  // namespace p1parts

#endif  // P1PARTS_MULTIPROJ_HPP
