#pragma once

#include "nilab/experiments/paper_table.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace nilab::cli {

/// Exit codes shared by every command.
enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

/// Entry point of the `nilab` tool. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CheckPaperOptions {
    std::size_t seeds = 3;
    std::uint64_t master_seed = 1;
    bool include_slow = false;
    bool json = false;
};

/// `check-paper` against an explicit golden table.
int check_paper(const CheckPaperOptions& opts, const std::vector<experiments::GoldenRow>& golden, std::ostream& out);

}  // namespace nilab::cli
