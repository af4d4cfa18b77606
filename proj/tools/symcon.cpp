#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "symcon/session.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact symbolic and ordinary powers of polynomial ideals"};
  std::string path = "-";
  symcon::RunOptions options;
  unsigned seed = 0;
  app.add_option("script", path, "Script file, or - for stdin");
  app.add_flag("--json", options.json, "Emit one JSON document instead of text tables");
  app.add_flag("--timings", options.timings, "Include per-step wall-clock timings");
  app.add_flag("--parallel", options.parallel, "Run containment cells concurrently");
  app.add_option("--seed", seed, "Reserved for randomized testing; ignored by script commands");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : symcon::kExitError;
  }

  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot open '" << path << "'\n";
      return symcon::kExitError;
    }
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return symcon::run_script(text, options, std::cout, std::cerr);
}
