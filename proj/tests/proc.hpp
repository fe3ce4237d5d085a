#pragma once

// Minimal subprocess runner for the executable-level tests: run a command
// line through the shell, capture stdout and the exit code.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace proc {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline RunResult run(const std::string& command, const std::string& scratch_dir) {
    const std::string out_path = scratch_dir + "/cmd_stdout.txt";
    const std::string full = command + " > '" + out_path + "' 2> '" + scratch_dir + "/cmd_stderr.txt'";
    const int status = std::system(full.c_str());
    RunResult result;
    if (status != -1 && WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    result.out = slurp(out_path);
    return result;
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

} // namespace proc
