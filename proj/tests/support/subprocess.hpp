#pragma once

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace testsupport {

struct CommandResult {
  int exit_code = -1;
  std::string output;  // stdout (plus stderr when the command redirects it)
};

/// Runs a shell command and captures stdout. Append "2>&1" to capture stderr.
inline CommandResult run_command(const std::string& command) {
  CommandResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed for: " + command);
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

/// Path of the cobordia binary under test, from the COBORDIA_CLI environment
/// variable set by CTest.
inline std::string cli_path() {
  const char* env = std::getenv("COBORDIA_CLI");
  if (env == nullptr || *env == '\0')
    throw std::runtime_error("COBORDIA_CLI is not set; run through ctest");
  return env;
}

/// Shell-quotes one argument.
inline std::string quoted(const std::string& arg) {
  std::string out = "'";
  for (char c : arg) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  out += "'";
  return out;
}

}  // namespace testsupport
