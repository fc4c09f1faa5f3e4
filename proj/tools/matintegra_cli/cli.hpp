#pragma once

// Job parsing, dispatch and reporting for the matintegra command line tool.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "matintegra/inequalities.hpp"
#include "matintegra/matrix_integration.hpp"

namespace matintegra::cli {

enum class Command {
    Classify,
    FullIntegral,
    Integrate,
    MinNorm,
    Diagonalizable,
    Sequence,
    DualSchoenberg,
    Schoenberg,
    Gerschgorin,
    Verify,
};

std::optional<Command> command_from_name(const std::string& name);
std::string command_name(Command c);
std::vector<std::string> command_names();

enum class OutputFormat { Json, Csv };

struct JobOptions {
    double tolerance = kDefaultInequalityTolerance;
    std::uint64_t seed = 1;
    OutputFormat format = OutputFormat::Json;
    int max_degree = 64;
};

/// Invalid input document. `path` locates the offending field, e.g.
/// "factors[1][0]".
class InputError : public std::invalid_argument {
public:
    InputError(std::string path, const std::string& message);
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

struct JobSpec {
    Command command = Command::Classify;
    nlohmann::json document;
    JobOptions options;

    std::optional<ExactFactoredPoly> polynomial;  // {leading, factors}
    std::optional<ExactPoly> coefficients;        // {coeffs}, ascending
    std::optional<ExactDiagonalSpec> matrix;      // {blocks, simples} or {diagonal}
    std::optional<Vector<ExactComplex>> u;
    std::optional<Vector<ExactComplex>> v;
    std::optional<ExactMatrix> conjugator;        // X
    std::optional<ExactComplex> determinant;
    std::vector<ExactComplex> zeros;
    int depth = 10;
    int count = 40;
};

/// MATINTEGRA_MAX_DEGREE, or 64 when unset. Throws InputError when set to
/// something other than a positive integer.
int max_degree_from_environment();

/// Parses and validates the input document for `command`. Throws InputError.
JobSpec parse_input(Command command, const nlohmann::json& document, const JobOptions& options);
JobSpec parse_input(Command command, const std::string& text, const JobOptions& options);
inline JobSpec parse_input(Command command, const char* text, const JobOptions& options) {
    return parse_input(command, std::string(text), options);
}

struct RunResult {
    nlohmann::json report;
    /// 0 success, 1 negative mathematical answer, 2 operational error
    int exit_code = 0;
    std::optional<std::string> csv;
};

RunResult run_and_report(const JobSpec& job);

/// Report for a failure that happened before a job could run.
RunResult error_report(const std::string& command, const std::string& kind, const std::string& message,
                       const std::string& path = "");

/// Header "kind,re,im,radius", one row per disk and per root (empty radius),
/// numbers with 17 significant digits.
std::string format_plot_data(std::span<const Disk> disks, std::span<const ApproxComplex> roots);

/// Writes format_plot_data to `path`. Throws std::runtime_error naming the
/// path on I/O failure.
void emit_plot_data(std::span<const Disk> disks, std::span<const ApproxComplex> roots, const std::string& path);

struct VerificationSummary {
    int instances = 0;
    int checks = 0;
    std::vector<std::string> disagreements;
};

/// Oracle agreement over a seeded batch of instances from every
/// (simple, multiple) regime: characteristic polynomials against both
/// oracles, the derivative law, the diagonalizability criterion and the
/// image-membership test against constant matching.
VerificationSummary run_verification(std::uint64_t seed, int count);

}  // namespace matintegra::cli
