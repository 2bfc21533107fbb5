#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cyclex/statements.hpp"

namespace cyclex::cli {

enum class Format { Json, Csv, Text };

struct RunConfig {
    std::string command;
    std::string input = "-";
    std::vector<StatementId> statements;
    int workers = 1;
    std::uint64_t budget = 0;  ///< nodes per search, 0 unlimited
    int max_n = kMaxVertices;
    Format format = Format::Json;
    bool strict = false;
    int bound_shift = 0;  ///< selftest fault injection
    std::vector<std::string> construct_args;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

int cmd_check(const RunConfig& config, std::istream& in, std::ostream& out);
int cmd_invariants(const RunConfig& config, std::istream& in, std::ostream& out);
int cmd_construct(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_selftest(const RunConfig& config, std::ostream& out);
int cmd_hunt(const RunConfig& config, std::istream& in, std::ostream& out);

/// Parses argv, opens the input and dispatches.  Returns the exit code.
int run(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cyclex::cli
