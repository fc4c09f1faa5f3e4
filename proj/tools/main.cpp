#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "matintegra_cli/cli.hpp"

namespace {

using namespace matintegra::cli;

bool write_text(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return static_cast<bool>(std::cout);
    }
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    os << text;
    os.flush();
    if (!os) {
        std::cerr << "matintegra: cannot write " << path << "\n";
        return false;
    }
    return true;
}

int finish(const RunResult& r, OutputFormat format, const std::string& out_path) {
    std::string text;
    int code = r.exit_code;
    if (format == OutputFormat::Csv && r.exit_code != 2) {
        if (!r.csv) {
            std::cerr << "matintegra: csv output is only available for the gerschgorin command\n";
            return 2;
        }
        text = *r.csv;
    } else {
        text = r.report.dump(2) + "\n";
    }
    if (r.exit_code == 2 && r.report.contains("error")) {
        std::cerr << "matintegra: " << r.report["error"]["message"].get<std::string>() << "\n";
    }
    if (!write_text(text, out_path)) {
        code = 2;
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Integrals of diagonalizable matrices, full integrals of polynomials and zero/critical-point inequalities"};
    std::string command;
    std::string input_path;
    bool use_stdin = false;
    double tolerance = matintegra::kDefaultInequalityTolerance;
    std::uint64_t seed = 1;
    std::string format = "json";
    std::string out_path;

    std::string names;
    for (const auto& n : command_names()) {
        names += (names.empty() ? "" : ", ") + n;
    }
    app.add_option("command", command, "One of: " + names)->required();
    auto* input_opt = app.add_option("--input", input_path, "JSON input document");
    auto* stdin_opt = app.add_flag("--stdin", use_stdin, "Read the JSON input document from standard input");
    input_opt->excludes(stdin_opt);
    app.add_option("--tolerance", tolerance, "Relative tolerance for numeric comparisons")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "Seed for the verify batch");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", out_path, "Write the output here instead of standard output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const OutputFormat fmt = format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
    const auto cmd = command_from_name(command);
    if (!cmd) {
        return finish(error_report(command, "usage", "unknown command '" + command + "'; expected one of: " + names),
                      OutputFormat::Json, out_path);
    }

    std::string text;
    if (use_stdin) {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else if (!input_path.empty()) {
        std::ifstream is(input_path, std::ios::binary);
        if (!is) {
            return finish(error_report(command, "io", "cannot read " + input_path), OutputFormat::Json, out_path);
        }
        std::ostringstream buf;
        buf << is.rdbuf();
        text = buf.str();
    } else if (*cmd != Command::Verify) {
        return finish(error_report(command, "usage", "an input document is required (--input FILE or --stdin)"),
                      OutputFormat::Json, out_path);
    }

    JobOptions options;
    options.tolerance = tolerance;
    options.seed = seed;
    options.format = fmt;
    JobSpec job;
    try {
        options.max_degree = max_degree_from_environment();
        job = parse_input(*cmd, text, options);
    } catch (const InputError& e) {
        return finish(error_report(command, "validation", e.what(), e.path()), OutputFormat::Json, out_path);
    }
    return finish(run_and_report(job), fmt, out_path);
}
