#include "p1parts/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "p1parts/oracle.hpp"

namespace p1parts {

namespace {

std::string joinPolys(const std::vector<Polynomial>& polys, const VariableLayout& layout,
                      const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (i > 0) out += sep;
    out += toCanonicalText(polys[i], layout);
  }
  return out;
}

std::vector<const Part*> selectNodes(const PartTree& tree, bool leavesOnly) {
  std::vector<char> hasChild(tree.nodes.size(), 0);
  for (const auto& p : tree.nodes)
    if (p.prev >= 0) hasChild[static_cast<std::size_t>(p.prev)] = 1;
  std::vector<const Part*> out;
  for (const auto& p : tree.nodes)
    if (!leavesOnly || !hasChild[static_cast<std::size_t>(p.id)]) out.push_back(&p);
  return out;
}

std::string renderText(const PartTree& tree, bool leavesOnly) {
  std::ostringstream out;
  for (const Part* part : selectNodes(tree, leavesOnly)) {
    out << '(';
    for (int id : tree.path(part->id)) out << id << ", ";
    out << "ideal(" << joinPolys(part->eq.generators(), tree.layout, ",") << "), {"
        << joinPolys(part->neq, tree.layout, ", ") << "})\n";
  }
  return out.str();
}

std::string renderJson(const PartTree& tree, bool leavesOnly) {
  nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
  for (const Part* part : selectNodes(tree, leavesOnly)) {
    nlohmann::ordered_json node;
    node["id"] = part->id;
    node["prev"] = part->prev;
    node["path"] = tree.path(part->id);
    node["frozenLevel"] = part->frozenLevel;
    nlohmann::ordered_json eq = nlohmann::ordered_json::array();
    for (const auto& g : part->eq.generators()) eq.push_back(toCanonicalText(g, tree.layout));
    node["eq"] = std::move(eq);
    nlohmann::ordered_json neq = nlohmann::ordered_json::array();
    for (const auto& q : part->neq) neq.push_back(toCanonicalText(q, tree.layout));
    node["neq"] = std::move(neq);
    node["leaf"] = tree.isLeaf(part->id);
    nodes.push_back(std::move(node));
  }
  nlohmann::ordered_json doc;
  doc["nodes"] = std::move(nodes);
  return doc.dump() + "\n";
}

std::string dotEscape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string renderDot(const PartTree& tree, bool leavesOnly) {
  auto nodes = selectNodes(tree, leavesOnly);
  std::vector<char> included(tree.nodes.size(), 0);
  for (const Part* p : nodes) included[static_cast<std::size_t>(p->id)] = 1;
  std::ostringstream out;
  out << "digraph parts {\n  node [shape=box, fontname=\"monospace\"];\n";
  for (const Part* p : nodes) {
    out << "  n" << p->id << " [label=\"" << p->id << "\\neq: "
        << dotEscape(joinPolys(p->eq.generators(), tree.layout, ", ")) << "\\nneq: {"
        << dotEscape(joinPolys(p->neq, tree.layout, ", ")) << "}\"];\n";
  }
  for (const Part* p : nodes)
    if (p->prev >= 0 && included[static_cast<std::size_t>(p->prev)])
      out << "  n" << p->prev << " -> n" << p->id << ";\n";
  out << "}\n";
  return out.str();
}

void printReport(const PartitionReport& report, std::ostream& err) {
  if (report.valid()) {
    err << "partition valid: " << report.tuplesScanned << " tuples scanned, " << report.varietySize
        << " variety points covered once\n";
    return;
  }
  err << "partition INVALID: " << report.tuplesScanned << " tuples scanned, " << report.covered
      << " of " << report.varietySize << " variety points covered\n";
  for (const auto& [t, ids] : report.doubleCovered) {
    err << "  covered more than once: " << t.toString() << " by parts";
    for (int id : ids) err << ' ' << id;
    err << '\n';
  }
  for (const auto& [id, t] : report.unsound)
    err << "  part " << id << " contains " << t.toString() << ", which is not in the variety\n";
  for (const auto& t : report.missing) err << "  not covered: " << t.toString() << '\n';
}

}  // namespace

std::string renderTree(const PartTree& tree, OutputFormat format, bool leavesOnly) {
  switch (format) {
    case OutputFormat::Text: return renderText(tree, leavesOnly);
    case OutputFormat::Json: return renderJson(tree, leavesOnly);
    case OutputFormat::Dot: return renderDot(tree, leavesOnly);
  }
  return {};
}

int run(const RunOptions& options, std::ostream& out, std::ostream& err) {
  std::ifstream in(options.inputPath, std::ios::binary);
  if (!in) {
    err << "error: cannot read '" << options.inputPath << "'\n";
    return kExitInputError;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();

  ProblemSpec spec;
  try {
    spec = parseProblem(buffer.str());
  } catch (const Error& e) {
    err << "error: " << options.inputPath << ": " << e.what() << '\n';
    return kExitInputError;
  }

  if (options.oracleCheck) {
    const std::uint32_t p = *options.oracleCheck;
    if (spec.field.isRational()) {
      err << "error: --oracle " << p << " needs a problem over F_p; this one is in characteristic 0\n";
      return kExitInputError;
    }
    if (spec.field.characteristic() != p) {
      err << "error: --oracle " << p << " does not match the problem characteristic "
          << spec.field.characteristic() << '\n';
      return kExitInputError;
    }
  }

  PartitionOptions popts;
  popts.maxNodes = options.maxNodes;
  popts.radical = options.radical;
  PartTree tree;
  try {
    tree = partitionVariety(spec, popts);
  } catch (const NodeLimitError& e) {
    out << renderTree(e.partial(), options.format, options.leavesOnly);
    err << "error: " << e.what() << " after " << e.partial().nodes.size() << " parts\n";
    return kExitLimit;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  if (!tree.diagnostic.empty()) err << "note: " << tree.diagnostic << '\n';

  out << renderTree(tree, options.format, options.leavesOnly);
  err << "parts: " << tree.nodes.size() << ", leaves: " << leafParts(tree).size()
      << ", discarded: " << tree.discardedUnit << " with eq = <1>, " << tree.discardedEmpty
      << " with unsatisfiable neq\n";

  if (options.oracleCheck) {
    try {
      auto report = checkPartition(tree, homogeneousGenerators(spec), *options.oracleCheck, spec.n);
      printReport(report, err);
      if (!report.valid()) return kExitOracleFailed;
    } catch (const Error& e) {
      err << "error: oracle: " << e.what() << '\n';
      return kExitLimit;
    }
  }
  return kExitOk;
}

}  // namespace p1parts
