#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tracekit/acceptance.hpp"
#include "tracekit/session.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "tracekit: exact trace ideals, endomorphism rings and their centers "
      "over F_p[x_1..x_n]/J"};
  app.require_subcommand(1);

  std::string file;
  bool json = false;
  std::uint64_t seed = 0;
  int threads = 1;
  auto* run = app.add_subcommand("run", "Run a session script");
  run->add_option("file", file, "script file")->required();
  run->add_flag("--json", json, "emit verification reports as JSON");
  run->add_option("--seed", seed, "seed for randomized searches");
  run->add_option("--threads", threads, "worker threads for commands");

  auto* check =
      app.add_subcommand("check-catalog", "Run the built-in acceptance suite");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    std::ifstream in(file);
    if (!in) {
      std::cerr << "error: cannot open '" << file << "'\n";
      return 1;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    tracekit::SessionOptions opts;
    opts.json = json;
    opts.seed = seed;
    opts.threads = threads;
    if (const char* env = std::getenv("TRACEKIT_PRIME")) {
      char* end = nullptr;
      unsigned long v = std::strtoul(env, &end, 10);
      if (end && *end == '\0' && v > 1) {
        opts.prime_override = std::uint32_t(v);
      } else {
        std::cerr << "error: TRACEKIT_PRIME is not a number\n";
        return 1;
      }
    }
    tracekit::SessionResult res = tracekit::run_session(ss.str(), opts);
    std::cout << res.output;
    return res.exit_code;
  }
  if (check->parsed()) {
    return tracekit::run_acceptance(std::cout) ? 0 : 1;
  }
  return 0;
}
