#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "twinbent/graphs.hpp"

namespace twinbent::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInconclusive = 3;

inline constexpr int kSchemaVersion = 1;

enum class OutputFormat { json, csv, text };

struct RunConfig {
    std::string subcommand;
    int m = 2;
    std::string fn = "sigma";
    OutputFormat format = OutputFormat::json;
    std::uint64_t seed = 1;
    std::uint64_t budget = kDefaultNodeBudget;
    unsigned threads = 1;
    bool exhaustive = false;
    /// Order of the B matrices for the hadamard subcommand.
    std::size_t b = 1;
    std::optional<std::string> checkpoint;
    std::optional<std::string> out;
};

const std::vector<std::string>& subcommands();

/// Runs one subcommand, writing the report to `out` (or config.out when set)
/// and diagnostics to `err`. Returns one of the kExit* codes.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace twinbent::cli
