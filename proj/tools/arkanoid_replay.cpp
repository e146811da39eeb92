// Headless replay runner.
//
//   arkanoid_replay [--config cfg.json] [--seed N] [--script ticks.txt]
//                   [--dump-final-frame frame.txt]
//
// Prints score, lives, phase and frame_hash of the final frame as key=value lines.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "arkanoid/config_json.hpp"
#include "arkanoid/replay.hpp"

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Run an Arkanoid replay script headlessly"};
  std::string config_path;
  std::uint64_t seed = 0;
  std::string script_path;
  std::string dump_path;
  app.add_option("--config", config_path, "JSON game config (defaults used when omitted)");
  app.add_option("--seed", seed, "Random generator seed");
  app.add_option("--script", script_path, "Replay script, one line of key tokens per tick");
  app.add_option("--dump-final-frame", dump_path, "Write the final frame in dump format to this file");
  CLI11_PARSE(app, argc, argv);

  try {
    arkanoid::GameConfig config;
    if (!config_path.empty()) {
      auto in = open_input(config_path);
      config = arkanoid::load_config(in);
    }
    arkanoid::ReplayScript script;
    if (!script_path.empty()) {
      auto in = open_input(script_path);
      script = arkanoid::parse_replay_script(in);
    }
    const auto result = arkanoid::run_replay(config, seed, script);
    if (!dump_path.empty()) {
      std::ofstream out(dump_path, std::ios::binary);
      out << arkanoid::dump_frame(result.final_frame);
      if (!out) throw std::runtime_error("cannot write " + dump_path);
    }
    std::cout << arkanoid::format_replay_summary(result);
  } catch (const std::exception& e) {
    std::cerr << "arkanoid_replay: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
