#include <iostream>
#include <iterator>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "nfsos/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Sums of squares in number fields: length and an explicit decomposition."};
  app.require_subcommand(0, 1);

  nfsos::RunConfig cfg;
  std::string strategy = "deterministic";
  std::uint64_t seed = 0;
  bool seed_given = false;
  app.add_option("--field", cfg.field_poly, "defining polynomial in x, monic with integer coefficients");
  app.add_option("--element", cfg.element, "element of Q[x]/(f), e.g. \"3*x+1/2\"");
  app.add_flag("--json", cfg.json, "print a JSON report");
  app.add_flag("--length-only", cfg.length_only, "only compute the length and level");
  app.add_option("--strategy", strategy, "prime search: deterministic or random")
      ->check(CLI::IsMember({"deterministic", "random"}));
  app.add_option("--seed", seed, "seed for the random strategy")->each([&](const std::string&) { seed_given = true; });
  app.add_option("--prime-ceiling", cfg.strategy.ceiling, "largest rational prime tried by the search");
  app.add_option("--height-ceiling", cfg.strategy.height_ceiling, "coordinate radius for the norm solver (0 = default)");

  auto* ver = app.add_subcommand("verify", "check a decomposition: --field F --element E --summands c1 c2 ... or a JSON report");
  std::string vfield, velement, vreport;
  std::vector<std::string> vsummands;
  ver->add_option("--field", vfield);
  ver->add_option("--element", velement);
  ver->add_option("--summands", vsummands);
  ver->add_option("report", vreport, "JSON report file, or - for stdin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : nfsos::kExitInput;
  }

  if (*ver) {
    if (!vreport.empty()) {
      std::string text;
      if (vreport == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
      } else {
        std::ifstream in(vreport);
        if (!in) {
          std::cerr << "error: cannot read " << vreport << "\n";
          return nfsos::kExitInput;
        }
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
      }
      return nfsos::verify_json(text, std::cout, std::cerr);
    }
    if (vfield.empty() || velement.empty()) {
      std::cerr << "error: verify needs --field and --element (or a report)\n";
      return nfsos::kExitInput;
    }
    return nfsos::verify(vfield, velement, vsummands, std::cout, std::cerr);
  }

  if (cfg.field_poly.empty() || cfg.element.empty()) {
    std::cerr << "error: --field and --element are required\n" << app.help();
    return nfsos::kExitInput;
  }
  if (strategy == "random") {
    cfg.strategy.mode = nfsos::PrimeSearchStrategy::Mode::random;
    cfg.strategy.seed = seed_given ? seed : 0;
  } else if (seed_given) {
    cfg.strategy.seed = seed;
  }
  return nfsos::run(cfg, std::cout, std::cerr);
}
