// Minimal popen wrapper for driving the CLI binary from tests.
#pragma once

#include <array>
#include <cstdio>
#include <string>

#include <sys/wait.h>

namespace subprocess {

struct Result {
  int exit_code = -1;
  std::string output;  // stdout + stderr interleaved
};

inline Result run(const std::string& command) {
  Result res;
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (!pipe) return res;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    res.output.append(buf.data(), n);
  }
  const int status = pclose(pipe);
  if (WIFEXITED(status)) res.exit_code = WEXITSTATUS(status);
  return res;
}

}  // namespace subprocess
