#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "currents/errors.hpp"

namespace currents::cli {

inline constexpr const char* tool_version = "0.1.0";

/// Bad flags or values. Maps to exit code 2.
class UsageError : public Error {
public:
    UsageError(std::string flag, const std::string& message)
        : Error(flag.empty() ? message : flag + ": " + message), flag_(std::move(flag)) {}
    const std::string& flag() const noexcept { return flag_; }

private:
    std::string flag_;
};

enum ExitCode : int { Ok = 0, ContractViolation = 1, Usage = 2 };

/// Every flag of every subcommand; unused fields are ignored. Rational-valued
/// flags stay strings until validation so that malformed input is reported
/// against the flag that carried it.
struct RunConfig {
    std::string command;
    std::string algebra = "sl3";
    std::string flavor = "plain";
    std::string level = "1";
    std::string e = "1,0,0";
    std::string a;
    std::string b;
    std::int64_t m = 1;
    std::int64_t n = -1;
    std::int64_t trials = 100;
    std::int64_t max_momentum = 3;
    std::uint64_t seed = 42;
    bool grid = false;
    std::int64_t e_bound = 2;
    std::int64_t grade = 2;
    std::string k = "1";  // comma-separated rationals
    std::string h = "0";
    std::int64_t max_f0 = 0;
    std::string output = "json";
};

/// Validates `config`, runs the command, writes the report to `out` and
/// diagnostics to `err`. Returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and calls run().
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace currents::cli
