#pragma once

// Spawns the installed CLI binary and captures stdout plus the exit code.
// WIGNERLAB_CLI_PATH is injected by the build so the tests find the binary
// regardless of the build directory layout.

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>

#include <sys/wait.h>

struct CliResult {
  int code;
  std::string out;
};

inline CliResult run_cli(const std::string& args,
                         const std::string& env_prefix = "") {
  const std::string cmd = env_prefix + "\"" + WIGNERLAB_CLI_PATH + "\" " +
                          args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed");
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  const int raw = pclose(pipe);
  const int code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return {code, out};
}
