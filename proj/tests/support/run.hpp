#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace testkit {

struct RunResult {
  int code = -1;
  std::string out;
};

/// Runs a shell command; stdout captured, stderr folded in when `merge`.
inline RunResult run(const std::string& cmd, bool merge = false) {
  RunResult r;
  FILE* f = popen((cmd + (merge ? " 2>&1" : " 2>/dev/null")).c_str(), "r");
  if (!f) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), f)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(f);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

inline std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

struct GoldenCase {
  std::string op, rhs, solution;
};

}  // namespace testkit
