// Runs the full verification corpus through the command-line front end and
// prints one PASS/FAIL line per criterion.

#include <iostream>
#include <sstream>

#include "json.hpp"
#include "ringstar/cli.hpp"

namespace cli = ringstar::cli;
using nlohmann::json;

int main() {
  const std::vector<std::string> args{"corpus", "run", "--seed", "1", "--single-pass"};
  std::ostringstream first, second, err;
  const int s1 = cli::execute(args, first, err);
  const int s2 = cli::execute(args, second, err);
  if (s1 != 0 || s2 != 0) {
    std::cerr << "corpus run failed: " << err.str() << "\n";
    return 1;
  }

  bool all = true;
  const json report = json::parse(first.str());
  for (const json& c : report["result"]["criteria"]) {
    const bool passed = c["passed"].get<bool>();
    all = all && passed;
    std::cout << (passed ? "PASS" : "FAIL") << " " << c["id"].get<int>() << " " << c["name"].get<std::string>()
              << " (" << c["checked"].get<std::size_t>() << " checks";
    if (!c["detail"].get<std::string>().empty()) std::cout << "; " << c["detail"].get<std::string>();
    std::cout << ")\n";
    for (const json& f : c["failures"]) std::cout << "    " << f.get<std::string>() << "\n";
  }

  const bool same = cli::stable_section(first.str()) == cli::stable_section(second.str());
  all = all && same;
  std::cout << (same ? "PASS" : "FAIL")
            << " 15 two corpus runs with the same seed give byte-identical stable sections\n";
  return all ? 0 : 1;
}
