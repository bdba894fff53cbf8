#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

namespace abexact::cli {

enum class Command { stirling, bell, bernoulli, apostol, verify };
enum class Format { plain, json, csv };

/// Parsed command line.  Exactly one of n / n_max is set for the table
/// commands; z and u stay textual until the command runs so parse errors
/// surface as usage errors.
struct RunConfig {
    Command command = Command::verify;
    std::optional<unsigned long> n;
    std::optional<unsigned long> n_max;
    std::optional<std::string> z;
    std::optional<std::string> u;
    std::optional<std::string> formula;
    Format format = Format::plain;
    std::optional<std::string> output_path;

    // bell only: second index and comma-separated argument list.
    std::optional<unsigned long> k;
    std::optional<std::string> x;

    // bernoulli only: polynomial family instead of numbers.
    bool poly = false;

    // verify only: suite-size overrides.
    std::optional<unsigned long> poly_n_max;
    std::optional<unsigned long> number_n_max;
    std::optional<std::size_t> random_cases;
};

/// Executes a parsed config.  Returns 0 on success, 1 when formulas that
/// must agree do not, 2 on usage or domain errors.  The emitted document
/// goes to `out` or to config.output_path; diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line entry: parses argv and dispatches to run().
int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);

}  // namespace abexact::cli
