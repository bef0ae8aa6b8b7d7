#ifndef P1PARTS_CLI_HPP
#define P1PARTS_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "p1parts/multiproj.hpp"

namespace p1parts {

enum class OutputFormat { Text, Json, Dot };

struct RunOptions {
  std::string inputPath;
  OutputFormat format = OutputFormat::Text;
  bool leavesOnly = false;
  std::size_t maxNodes = 10000;
  bool radical = true;
  std::optional<std::uint32_t> oracleCheck;
};

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitLimit = 2,
  kExitOracleFailed = 3,
};

/// Text: one line per node, "(0, 1, 3, ideal(g,...), {q,...})" where the
/// leading integers are the root-to-node path. JSON: {"nodes":[...]} with a
/// fixed key order. DOT: a digraph with prev -> child edges.
std::string renderTree(const PartTree& tree, OutputFormat format, bool leavesOnly);

/// parse -> partition -> render, writing the rendering to `out` and every
/// diagnostic to `err`. Returns one of ExitCode.
int run(const RunOptions& options, std::ostream& out, std::ostream& err);

}  // namespace p1parts

#endif  // P1PARTS_CLI_HPP
