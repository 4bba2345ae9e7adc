#pragma once

// Helper for driving the built CLI binary from tests. The binary path comes
// from the BACKBONE_CLI_BIN environment variable (set by ctest).

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace cli {

inline std::string binary_path() {
  if (const char* env = std::getenv("BACKBONE_CLI_BIN")) return env;
  throw std::runtime_error("BACKBONE_CLI_BIN is not set; run through ctest");
}

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void spit(const std::filesystem::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  out << content;
}

inline std::filesystem::path scratch_dir(const std::string& tag) {
  auto dir = std::filesystem::temp_directory_path() /
             ("backbone-" + tag + "-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

inline RunResult run(const std::string& args, const std::filesystem::path& dir) {
  auto out_path = dir / "stdout.txt";
  auto err_path = dir / "stderr.txt";
  std::string cmd = binary_path() + " " + args + " > " + out_path.string() + " 2> " +
                    err_path.string();
  int status = std::system(cmd.c_str());
  RunResult r;
  if (status < 0) {
    r.exit_code = -1;
  } else if (WIFEXITED(status)) {
    r.exit_code = WEXITSTATUS(status);
  } else {
    r.exit_code = 128;
  }
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  return r;
}

}  // namespace cli
