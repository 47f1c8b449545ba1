#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace cantor::golden {

struct Run {
  std::string name;
  int expected_exit = 0;
  std::vector<std::string> args;
};

struct Outcome {
  int exit_code = -1;
  std::string stdout_bytes;
};

inline std::vector<Run> load_runs(const std::string& golden_dir) {
  std::ifstream in(golden_dir + "/runs.txt");
  if (!in) throw std::runtime_error("cannot read " + golden_dir + "/runs.txt");
  std::vector<Run> runs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    std::istringstream words(line);
    Run run;
    words >> run.name >> run.expected_exit;
    for (std::string w; words >> w;) run.args.push_back(w);
    runs.push_back(std::move(run));
  }
  return runs;
}

inline std::string quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

/// Runs the CLI from the inputs directory, capturing stdout; stderr is dropped.
inline Outcome execute(const std::string& cli, const std::string& golden_dir, const Run& run) {
  std::string cmd = "cd " + quote(golden_dir + "/inputs") + " && " + quote(cli);
  for (const auto& a : run.args) cmd += " " + quote(a);
  cmd += " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot start " + cli);
  Outcome out;
  char buf[4096];
  for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, pipe)) > 0;) out.stdout_bytes.append(buf, n);
  const int status = pclose(pipe);
  out.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

inline std::string expected_path(const std::string& golden_dir, const Run& run) {
  return golden_dir + "/expected/" + run.name + ".out";
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace cantor::golden
