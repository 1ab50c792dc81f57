// Command-line calculator for free-field elements.
//
//   freefrac --letters x,y rank "x - (x^-1 + (y^-1 - x)^-1)^-1"
//   freefrac --letters x,y,z equal "x*y + z ; z + x*y"
//   freefrac --letters x,y < script.txt        (one command per line)
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "freefrac/session.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact calculator for noncommutative rational functions"};
  std::string letters = "x,y,z";
  freefrac::Settings settings;
  app.add_option("--letters", letters, "Comma-separated alphabet")->capture_default_str();
  app.add_option("--seed", settings.seed, "Seed of the evaluation oracle")->capture_default_str();
  app.add_option("--trials", settings.trials, "Sample points of the evaluation oracle")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_flag("--trace", settings.trace, "Print minimization steps");
  app.prefix_command();
  app.footer(
      "Commands: rank, equal <a> ; <b>, factor, expand <e> --deg N, eval <e> --at <file>,\n"
      "show, export [--out <file>], import <file> [as <name>], let <name> = <e>.\n"
      "Without a command, commands are read from standard input.");
  CLI11_PARSE(app, argc, argv);

  try {
    freefrac::Session session(freefrac::Alphabet::parse(letters), settings);
    const std::vector<std::string> words = app.remaining();
    if (!words.empty()) {
      std::string line;
      for (const auto& w : words) line += (line.empty() ? "" : " ") + w;
      return freefrac::run_command(session, line, std::cout, std::cerr).exit_code;
    }
    int worst = 0;
    std::string line;
    while (std::getline(std::cin, line)) {
      const int code = freefrac::run_command(session, line, std::cout, std::cerr).exit_code;
      worst = std::max(worst, code);
    }
    return worst;
  } catch (const freefrac::UserError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
}
