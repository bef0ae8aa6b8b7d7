// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when everything passes).

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "p1parts/cli.hpp"
#include "p1parts/oracle.hpp"
#include "p1parts/parser.hpp"

using namespace p1parts;

namespace {

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << "  [" << id << "] " << title << ": " << detail << '\n';
  if (!ok) ++failures;
}

std::string fixturePath(const std::string& name) { return std::string(P1PARTS_FIXTURES) + "/" + name; }

ProblemSpec loadFixture(const std::string& name) {
  std::ifstream in(fixturePath(name));
  std::stringstream ss;
  ss << in.rdbuf();
  return parseProblem(ss.str());
}

double seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since).count();
}

std::string fmt(double s) {
  std::ostringstream o;
  o.precision(3);
  o << s << " s";
  return o.str();
}

std::size_t leavesContaining(const PartTree& tree, const ProjTuple& pt) {
  std::size_t count = 0;
  for (const auto& leaf : leafParts(tree))
    if (isPartMember(leaf.part, tree.layout, pt)) ++count;
  return count;
}

struct ReferenceNode {
  int id;
  std::vector<std::string> eq, neq;
};

// reference leaves of the cubic fixture over Q
const std::vector<ReferenceNode> kReferenceNodes{
    {6, {"z_1", "z_2-1", "z_3", "y_4-1", "y_5-1", "y_6"}, {}},
    {8, {"z_1-1", "z_2", "z_3", "y_4-1", "y_5-1", "y_6"}, {}},
    {10, {"z_1-1", "z_3", "y_4-1", "y_5-1", "y_6"}, {"z_2"}},
    {11, {"z_1", "z_2-1", "z_3-1", "z_4", "y_5^2-y_5", "y_6+2*y_5-1"}, {}},
    {12, {"z_1", "z_2-1", "z_3-1", "y_5-1", "z_4*y_6^2+y_6+1"}, {"z_4"}},
    {14, {"z_1-1", "z_2", "z_3-1", "y_5-1", "z_4*y_6^3+y_6^2+y_6"}, {"z_4"}},
    {15, {"z_1-1", "z_3-1", "z_4", "y_5^2-y_5", "y_6+2*y_5-1"}, {"z_2"}},
    {16, {"z_1-1", "z_3-1", "y_5-1", "z_4*y_6^2+y_6+1"}, {"z_2", "z_4"}},
    {17, {"z_1-1", "z_2", "z_3-1", "z_4", "z_5-1", "y_6^2+y_6"}, {}},
    {18, {"z_1-1", "z_2", "z_3-1", "z_4", "z_5", "y_6-1"}, {}},
};

bool semanticallyEqual(const Part& leaf, const ReferenceNode& node, const VariableLayout& layout, FieldSpec field) {
  std::vector<Polynomial> gens;
  for (const auto& g : node.eq) gens.push_back(unfreezeAll(parsePolynomial(g, layout, field), layout));
  if (!sameIdeal(unfreezeAll(leaf.eq), buchberger(gens, layout))) return false;
  std::set<std::string> mine, theirs;
  for (const auto& q : leaf.neq) mine.insert(toCanonicalText(q.monic(), layout));
  for (const auto& q : node.neq) theirs.insert(toCanonicalText(parsePolynomial(q, layout, field).monic(), layout));
  return mine == theirs;
}

void criterion1() {
  auto start = std::chrono::steady_clock::now();
  ProblemSpec spec = loadFixture("cubic_char0.txt");
  PartTree tree = partitionVariety(spec);
  double t = seconds(start);
  auto leaves = leafParts(tree);
  std::set<int> matched;
  bool allMatch = true;
  for (const auto& leaf : leaves) {
    bool any = false;
    for (const auto& node : kReferenceNodes)
      if (semanticallyEqual(leaf.part, node, tree.layout, spec.field)) {
        matched.insert(node.id);
        any = true;
      }
    allMatch = allMatch && any;
  }
  bool ok = t < 60 && leaves.size() == 10 && allMatch && matched.size() == 10 && matched.count(17);
  report(1, "cubic over Q reproduces the reference leaves", ok,
         std::to_string(leaves.size()) + " leaves, " + std::to_string(matched.size()) +
             "/10 reference nodes matched, " + fmt(t));
}

void criterion2() {
  for (auto [name, p] : std::vector<std::pair<std::string, std::uint32_t>>{{"cubic_char5.txt", 5},
                                                                            {"cubic_char7.txt", 7}}) {
    auto start = std::chrono::steady_clock::now();
    ProblemSpec spec = loadFixture(name);
    PartTree tree = partitionVariety(spec);
    PartitionReport r = checkPartition(tree, homogeneousGenerators(spec), p, spec.n);
    double t = seconds(start);
    std::size_t violations = r.doubleCovered.size() + r.unsound.size() + r.missing.size();
    report(2, "cubic over F_" + std::to_string(p) + " partitions the variety", r.valid() && t < 10,
           std::to_string(r.tuplesScanned) + " tuples, " + std::to_string(violations) + " violations, " + fmt(t));
  }
}

void criterion3() {
  ProblemSpec spec = loadFixture("inverse_char5.txt");
  PartTree tree = partitionVariety(spec);
  PartitionReport r = checkPartition(tree, homogeneousGenerators(spec), 5, 2);
  // x_1 = 0 = (0:1), x_2 = inf = (1:0)
  ProjTuple pt{{{0, 1}, {1, 0}}};
  std::size_t hits = leavesContaining(tree, pt);
  report(3, "x_2*x_1-1 over F_5 keeps the point at infinity", r.valid() && r.varietySize == 6 && hits == 1,
         std::to_string(r.covered) + "/" + std::to_string(r.varietySize) + " points covered once, " +
             pt.toString() + " in " + std::to_string(hits) + " leaf");
}

void criterion4() {
  ProblemSpec spec = loadFixture("product_char3.txt");
  PartTree tree = partitionVariety(spec);
  auto gens = homogeneousGenerators(spec);
  // g_2 g_1 = 0 by direct count: x_2 = 0 or x_1 = 0
  std::size_t direct = 0;
  for (const auto& pt : enumerateProjSpace(3, 2))
    if (pt.coords[0].first == 0 || pt.coords[1].first == 0) ++direct;
  PartitionReport r = checkPartition(tree, gens, 3, 2);
  ProjTuple pt{{{0, 1}, {1, 0}}};  // (x_2, x_1) = (inf, 0)
  std::size_t hits = leavesContaining(tree, pt);
  report(4, "x_2*x_1 over F_3 is covered disjointly", r.valid() && r.varietySize == 7 && direct == 7 && hits == 1,
         std::to_string(r.covered) + "/" + std::to_string(r.varietySize) + " points covered once, " +
             pt.toString() + " in " + std::to_string(hits) + " leaf");
}

void criterion5() {
  ProblemSpec spec = loadFixture("whitney_char5.txt");
  PartTree tree = partitionVariety(spec);
  PartitionReport r = checkPartition(tree, homogeneousGenerators(spec), 5, 3);
  std::size_t failed = 0;
  for (const auto& leaf : leafParts(tree)) failed += checkExtension(leaf.part, tree.layout).size();
  report(5, "Whitney umbrella over F_5", r.valid() && failed == 0,
         std::to_string(r.covered) + "/" + std::to_string(r.varietySize) + " points covered once, " +
             std::to_string(failed) + " extension failures");
}

void criterion6() {
  std::mt19937 rng(2024);
  FieldSpec f5(5);
  std::uniform_int_distribution<long> coeff(1, 4);
  std::uniform_int_distribution<int> nDist(1, 3), gensDist(1, 3), termsDist(1, 4), degDist(0, 3);
  int passed = 0, checks = 0;
  for (int trial = 0; trial < 25; ++trial) {
    const int n = nDist(rng);
    const VariableLayout layout = VariableLayout::affine(n);
    std::vector<Polynomial> gens;
    for (int i = gensDist(rng); i > 0; --i) {
      std::vector<Term> ts;
      for (int k = termsDist(rng); k > 0; --k) {
        Monomial m(layout.size());
        int budget = degDist(rng);
        while (budget-- > 0) m[std::uniform_int_distribution<std::size_t>(0, layout.size() - 1)(rng)] += 1;
        ts.push_back({m, Coefficient(f5, coeff(rng))});
      }
      gens.push_back(Polynomial::fromTerms(f5, layout.size(), ts));
    }
    IdealBasis g = buchberger(gens, layout);
    bool ok = true;
    for (int level = 1; level <= n; ++level) {
      IdealBasis e = eliminationSubbasis(g, level);
      const auto& eg = e.generators();
      const std::size_t firstLow = layout.size() - level;
      for (std::size_t i = 0; i < eg.size(); ++i) {
        for (std::size_t s = 0; s < firstLow; ++s) ok = ok && !eg[i].usesSlot(s);
        ok = ok && normalForm(eg[i], g).isZero();
        for (std::size_t j = i + 1; j < eg.size(); ++j) ok = ok && normalForm(sPolynomial(eg[i], eg[j]), e).isZero();
      }
      // random low-block members of I
      for (int k = 0; k < 5 && !eg.empty(); ++k) {
        Polynomial member(f5, layout.size());
        for (const auto& b : eg) {
          Monomial m(layout.size());
          m[std::uniform_int_distribution<std::size_t>(firstLow, layout.size() - 1)(rng)] += degDist(rng);
          member = member + b.mulTerm(Coefficient(f5, coeff(rng)), m);
        }
        ok = ok && normalForm(member, g).isZero() && normalForm(member, e).isZero();
      }
    }
    ++checks;
    if (ok) ++passed;
  }
  report(6, "elimination sub-bases of random ideals over F_5", passed == checks,
         std::to_string(passed) + "/" + std::to_string(checks) + " ideals pass");
}

void criterion7() {
  std::size_t leaves = 0, failed = 0;
  for (auto name : {"cubic_char5.txt", "cubic_char7.txt", "inverse_char5.txt", "product_char3.txt",
                    "whitney_char5.txt"}) {
    PartTree tree = partitionVariety(loadFixture(name));
    for (const auto& leaf : leafParts(tree)) {
      ++leaves;
      failed += checkExtension(leaf.part, tree.layout).size();
    }
  }
  report(7, "extension property on every F_p fixture leaf", failed == 0,
         std::to_string(leaves) + " leaves, " + std::to_string(failed) + " counterexamples");
}

std::set<ProjTuple> leafPointUnion(const PartTree& tree, std::uint32_t p, int n) {
  std::set<ProjTuple> out;
  for (const auto& leaf : leafParts(tree))
    for (const auto& pt : partMembers(leaf.part, p, n)) out.insert(pt);
  return out;
}

void criterion8() {
  const ProblemSpec base = loadFixture("cubic_char5.txt");
  const VariableLayout x = VariableLayout::affine(3);
  std::set<ProjTuple> reference = leafPointUnion(partitionVariety(base), 5, 3);
  std::array<int, 3> sigma{1, 2, 3};  // coordinate j becomes sigma[j-1]
  int agree = 0, total = 0;
  do {
    ProblemSpec spec = base;
    std::vector<std::size_t> perm(x.size());
    for (int j = 1; j <= 3; ++j)
      perm[*x.slotOf("x_" + std::to_string(j))] = *x.slotOf("x_" + std::to_string(sigma[j - 1]));
    for (auto& g : spec.generators) g = g.permuted(perm);
    std::set<ProjTuple> back;
    for (const auto& pt : leafPointUnion(partitionVariety(spec), 5, 3)) {
      ProjTuple orig{std::vector<std::pair<std::uint32_t, std::uint32_t>>(3)};
      for (int j = 1; j <= 3; ++j) orig.coords[j - 1] = pt.coords[sigma[j - 1] - 1];
      back.insert(orig);
    }
    ++total;
    if (back == reference) ++agree;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  report(8, "cubic over F_5 is invariant under coordinate order", agree == total && total == 6,
         std::to_string(agree) + "/" + std::to_string(total) + " orderings give " +
             std::to_string(reference.size()) + " points");
}

void criterion9() {
  int same = 0, total = 0;
  for (auto name : {"cubic_char0.txt", "cubic_char5.txt", "cubic_char7.txt", "cubic_yform.txt",
                    "inverse_char5.txt", "product_char3.txt", "whitney_char5.txt"}) {
    RunOptions o;
    o.inputPath = fixturePath(name);
    std::ostringstream a, b, err;
    run(o, a, err);
    run(o, b, err);
    ++total;
    if (a.str() == b.str() && !a.str().empty()) ++same;
  }
  report(9, "text output is byte-identical across runs", same == total,
         std::to_string(same) + "/" + std::to_string(total) + " fixtures");
}

}  // namespace

int main() {
  for (auto* criterion : {criterion1, criterion2, criterion3, criterion4, criterion5, criterion6, criterion7,
                          criterion8, criterion9}) {
    try {
      criterion();
    } catch (const std::exception& e) {
      std::cout << "FAIL  exception: " << e.what() << '\n';
      ++failures;
    }
  }
  return failures;
}
