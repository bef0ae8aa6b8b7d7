#ifndef P1PARTS_ORACLE_HPP
#define P1PARTS_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "p1parts/multiproj.hpp"

namespace p1parts {

/// A point of (P^1(F_p))^n with every coordinate in canonical form (1,0) or
/// (a,1). coords[j-1] is x_j = (g_j : h_j).
struct ProjTuple {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> coords;

  friend bool operator==(const ProjTuple&, const ProjTuple&) = default;
  friend auto operator<=>(const ProjTuple&, const ProjTuple&) = default;

  /// "((g_n:h_n),...,(g_1:h_1))", x_n first.
  std::string toString() const;
};

struct PartitionReport {
  std::size_t tuplesScanned = 0;
  std::size_t varietySize = 0;
  std::size_t covered = 0;
  std::vector<std::pair<ProjTuple, std::vector<int>>> doubleCovered;
  std::vector<std::pair<int, ProjTuple>> unsound;
  std::vector<ProjTuple> missing;

  bool valid() const {
    return doubleCovered.empty() && unsound.empty() && missing.empty() && covered == varietySize;
  }
};

inline constexpr std::size_t kDefaultEnumerationCap = 10'000'000;

/// All (p+1)^n canonical tuples, x_n varying slowest and (1,0) listed before
/// (0,1), (1,1), ... in each coordinate. Throws Error past `cap` tuples.
std::vector<ProjTuple> enumerateProjSpace(std::uint32_t p, int n,
                                          std::size_t cap = kDefaultEnumerationCap);

/// Value of f at the tuple with y_{2j} and z_{2j} bound to g_j, y_{2j-1} and
/// z_{2j-1} bound to h_j. f must be over F_p in the multiproj layout.
std::uint32_t evaluateAt(const Polynomial& f, const VariableLayout& layout, const ProjTuple& point);

/// Throws Error when some generator is not homogeneous in every pair
/// (y_{2j}, y_{2j-1}); its zero set would depend on the representative.
std::vector<ProjTuple> varietyPoints(const std::vector<Polynomial>& gens, std::uint32_t p, int n);

bool isPartMember(const Part& part, const VariableLayout& layout, const ProjTuple& point);
std::vector<ProjTuple> partMembers(const Part& part, std::uint32_t p, int n);

/// Cross-tabulates the variety against the leaves of the tree. The tree must
/// have been computed over F_p.
PartitionReport checkPartition(const PartTree& tree, const std::vector<Polynomial>& gens,
                               std::uint32_t p, int n);

/// A partial assignment of y_1 .. y_j that meets the part's constraints on
/// those slots but has no extension to y_{j+1} over the algebraic closure.
struct ExtensionFailure {
  int level = 0;
  std::vector<std::uint32_t> values;  // values[k-1] is y_k
};

/// For every j < 2n and every F_p assignment of y_1 .. y_j satisfying the eq
/// and neq constraints that only involve slots <= j, decides exactly whether
/// some y_{j+1} in the algebraic closure of F_p satisfies the constraints on
/// slots <= j+1: the specialized univariate generators must have a common
/// root off the zeros of the specialized inequalities.
std::vector<ExtensionFailure> checkExtension(const Part& part, const VariableLayout& layout);

/// At each level j, among the generators whose unfrozen leading monomial is
/// in y_{j+1} (increasing order b_1 < ... < b_s): every F_p root of b_1 that is
/// consistent with constraint-satisfying lower values is a root of all b_i.
std::vector<ExtensionFailure> checkLeadReduction(const Part& part, const VariableLayout& layout);

}  // namespace p1parts

#endif  // P1PARTS_ORACLE_HPP
