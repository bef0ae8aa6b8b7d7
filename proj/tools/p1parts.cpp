// Command-line front end: decompose the variety of a problem file into parts.

#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "p1parts/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Partition a variety in (P^1)^n into parts defined by equalities and inequalities"};
  p1parts::RunOptions options;
  std::uint32_t oracle = 0;

  const std::map<std::string, p1parts::OutputFormat> formats{
      {"text", p1parts::OutputFormat::Text},
      {"json", p1parts::OutputFormat::Json},
      {"dot", p1parts::OutputFormat::Dot}};
  app.add_option("input", options.inputPath, "Problem file")->required();
  app.add_option("--format", options.format, "Output format: text, json or dot")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_flag("--leaves", options.leavesOnly, "Print leaf parts only");
  app.add_option("--max-nodes", options.maxNodes, "Abort after this many parts")->check(CLI::PositiveNumber);
  bool noRadical = false;
  app.add_flag("--no-radical", noRadical, "Skip the radical closure of equality constraints");
  auto* oracleOpt = app.add_option("--oracle", oracle,
                                   "Check the partition against brute-force enumeration over F_p");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : p1parts::kExitInputError;
  }
  options.radical = !noRadical;
  if (oracleOpt->count() > 0) options.oracleCheck = oracle;

  return p1parts::run(options, std::cout, std::cerr);
}
