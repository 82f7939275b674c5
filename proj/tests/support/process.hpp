#pragma once

// Minimal subprocess capture for CLI-level tests.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace lpr_test {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

// Runs `command` through the shell, capturing stdout (stderr unless the
// caller redirects it in the command string).
inline CliResult run_command(const std::string& command) {
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + command);
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

// Path of the CLI under test, provided by ctest via the LPR_CLI variable.
inline std::string cli_path() {
  const char* env = std::getenv("LPR_CLI");
  if (!env) throw std::runtime_error("LPR_CLI environment variable not set");
  return env;
}

}  // namespace lpr_test
