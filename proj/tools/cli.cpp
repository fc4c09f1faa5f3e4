#include "matintegra_cli/cli.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <type_traits>

#include "matintegra/oracle.hpp"
#include "matintegra_cli/scalar_literal.hpp"

namespace matintegra::cli {

using nlohmann::json;

namespace {

constexpr std::array<std::pair<Command, const char*>, 10> kCommands{{
    {Command::Classify, "classify"},
    {Command::FullIntegral, "full-integral"},
    {Command::Integrate, "integrate"},
    {Command::MinNorm, "min-norm"},
    {Command::Diagonalizable, "diagonalizable"},
    {Command::Sequence, "sequence"},
    {Command::DualSchoenberg, "dual-schoenberg"},
    {Command::Schoenberg, "schoenberg"},
    {Command::Gerschgorin, "gerschgorin"},
    {Command::Verify, "verify"},
}};

std::string indexed(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

// ---- document readers -------------------------------------------------

ExactComplex read_scalar(const json& j, const std::string& path) {
    if (j.is_string()) {
        try {
            return parse_scalar(j.get<std::string>());
        } catch (const ScalarParseError& e) {
            throw InputError(path, e.what());
        }
    }
    if (j.is_number_integer()) {
        return ExactComplex(Rational(mpz_class(j.dump())));
    }
    if (j.is_number_float()) {
        throw InputError(path, "binary floating-point numbers are not accepted; write the scalar as a string");
    }
    throw InputError(path, "expected a scalar literal string");
}

int read_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) {
        throw InputError(path, "expected an integer");
    }
    const auto v = j.get<long long>();
    if (v < -1000000 || v > 1000000) {
        throw InputError(path, "integer out of range");
    }
    return static_cast<int>(v);
}

const json& require_array(const json& j, const std::string& path) {
    if (!j.is_array()) {
        throw InputError(path, "expected an array");
    }
    return j;
}

std::vector<ExactComplex> read_scalars(const json& j, const std::string& path) {
    std::vector<ExactComplex> out;
    const auto& arr = require_array(j, path);
    for (std::size_t i = 0; i < arr.size(); ++i) {
        out.push_back(read_scalar(arr[i], indexed(path, i)));
    }
    return out;
}

std::vector<RootFactor<ExactComplex>> read_factors(const json& j, const std::string& path) {
    std::vector<RootFactor<ExactComplex>> out;
    const auto& arr = require_array(j, path);
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string at = indexed(path, i);
        if (!arr[i].is_array() || arr[i].size() != 2) {
            throw InputError(at, "expected a [root, multiplicity] pair");
        }
        RootFactor<ExactComplex> f{read_scalar(arr[i][0], indexed(at, 0)), read_int(arr[i][1], indexed(at, 1))};
        if (f.multiplicity < 1) {
            throw InputError(indexed(at, 1), "multiplicity must be >= 1");
        }
        for (std::size_t k = 0; k < out.size(); ++k) {
            if (out[k].root == f.root) {
                throw InputError(indexed(at, 0), "duplicate root (same as " + indexed(indexed(path, k), 0) +
                                                     "); roots of a factored polynomial must be pairwise distinct");
            }
        }
        out.push_back(std::move(f));
    }
    return out;
}

Vector<ExactComplex> read_vector(const json& j, const std::string& path, int n) {
    const auto v = read_scalars(j, path);
    if (static_cast<int>(v.size()) != n) {
        throw InputError(path, "expected " + std::to_string(n) + " entries");
    }
    Vector<ExactComplex> out(n);
    for (int i = 0; i < n; ++i) {
        out(i) = v[static_cast<std::size_t>(i)];
    }
    return out;
}

ExactMatrix read_matrix(const json& j, const std::string& path, int n) {
    const auto& rows = require_array(j, path);
    if (static_cast<int>(rows.size()) != n) {
        throw InputError(path, "expected " + std::to_string(n) + " rows");
    }
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        const auto row = read_vector(rows[static_cast<std::size_t>(i)], indexed(path, static_cast<std::size_t>(i)), n);
        m.row(i) = row.transpose();
    }
    return m;
}

void check_degree(int degree, int cap, const std::string& path) {
    if (degree > cap) {
        throw InputError(path, "degree " + std::to_string(degree) + " exceeds MATINTEGRA_MAX_DEGREE = " +
                                   std::to_string(cap));
    }
}

void read_polynomial(JobSpec& job) {
    const json& d = job.document;
    if (d.contains("factors")) {
        const ExactComplex leading = d.contains("leading") ? read_scalar(d["leading"], "leading") : ExactComplex(1);
        if (leading.is_zero()) {
            throw InputError("leading", "leading coefficient must be nonzero");
        }
        job.polynomial = ExactFactoredPoly(leading, read_factors(d["factors"], "factors"));
        check_degree(job.polynomial->degree(), job.options.max_degree, "factors");
    } else if (d.contains("coeffs")) {
        job.coefficients = ExactPoly(read_scalars(d["coeffs"], "coeffs"));
        check_degree(job.coefficients->degree(), job.options.max_degree, "coeffs");
    }
}

void read_diagonal(JobSpec& job) {
    const json& d = job.document;
    try {
        if (d.contains("blocks") || d.contains("simples")) {
            auto blocks = d.contains("blocks") ? read_factors(d["blocks"], "blocks")
                                               : std::vector<RootFactor<ExactComplex>>{};
            for (std::size_t i = 0; i < blocks.size(); ++i) {
                if (blocks[i].multiplicity < 2) {
                    throw InputError(indexed(indexed("blocks", i), 1), "block multiplicity must be >= 2");
                }
            }
            auto simples = d.contains("simples") ? read_scalars(d["simples"], "simples") : std::vector<ExactComplex>{};
            job.matrix = ExactDiagonalSpec(std::move(blocks), std::move(simples));
        } else if (d.contains("diagonal")) {
            const auto entries = read_scalars(d["diagonal"], "diagonal");
            job.matrix = ExactDiagonalSpec::from_diagonal(entries);
        } else if (d.contains("factors")) {
            const auto factors = read_factors(d["factors"], "factors");
            const ExactFactoredPoly f(factors);
            job.matrix = ExactDiagonalSpec(f.multiple_roots(), f.simple_roots());
        }
    } catch (const ValidationError& e) {
        throw InputError(d.contains("diagonal") ? "diagonal" : "simples", e.what());
    }
    if (job.matrix) {
        if (job.matrix->size() < 1) {
            throw InputError("blocks", "matrix must have at least one eigenvalue");
        }
        check_degree(job.matrix->size(), job.options.max_degree, "blocks");
    }
}

// ---- report writers ----------------------------------------------------

json scalar_json(const ExactComplex& z) { return format_scalar(z); }

json approx_json(const ApproxComplex& z) { return json::array({z.real(), z.imag()}); }

json poly_json(const ExactPoly& p) {
    json c = json::array();
    for (const auto& x : p.coeffs()) {
        c.push_back(scalar_json(x));
    }
    return c;
}

template <typename Scalar>
json vector_json(const Vector<Scalar>& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if constexpr (std::is_same_v<Scalar, ExactComplex>) {
            out.push_back(scalar_json(v(i)));
        } else {
            out.push_back(approx_json(v(i)));
        }
    }
    return out;
}

json matrix_json(const ExactMatrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        rows.push_back(vector_json<ExactComplex>(m.row(i).transpose()));
    }
    return rows;
}

json witness_json(const std::vector<ExactComplex>& values) {
    json w = json::array();
    for (const auto& x : values) {
        w.push_back(scalar_json(x));
    }
    return {{"P0_values", w}};
}

json type_json(const PolyType& t) { return {{"simple", t.simple}, {"multiple", t.multiple}}; }

bool inequality_holds(const InequalityReport& r) {
    return r.slack >= -r.tolerance * std::max(1.0, std::max(std::abs(r.lhs), std::abs(r.rhs)));
}

json inequality_json(const InequalityReport& r) {
    json j{{"lhs", r.lhs},           {"rhs", r.rhs},
           {"slack", r.slack},       {"equality", r.equality},
           {"condition_met", r.condition_met},
           {"tolerance", r.tolerance}, {"holds", inequality_holds(r)}};
    if (r.exact_lhs) {
        j["exact_lhs"] = r.exact_lhs->get_str();
    }
    if (r.exact_rhs) {
        j["exact_rhs"] = r.exact_rhs->get_str();
    }
    return j;
}

// ---- commands -----------------------------------------------------------

struct Outcome {
    json payload = json::object();
    int exit_code = 0;
    std::optional<std::string> csv;
};

Outcome run_classify(const JobSpec& job) {
    const auto& b = *job.matrix;
    Outcome out;
    const auto cls = classify_integrability(b);
    out.payload["class"] = to_string(cls);
    out.payload["type"] = type_json(b.type());
    if (cls == IntegrabilityClass::NonIntegrable) {
        const auto outcome = full_integral(b.characteristic_polynomial());
        out.payload["witness"] = witness_json(std::get<NoFullIntegral>(outcome).antiderivative_values);
        out.exit_code = 1;
    }
    return out;
}

Outcome run_full_integral(const JobSpec& job) {
    Outcome out;
    const FullIntegralOutcome outcome =
        job.polynomial ? full_integral(*job.polynomial) : full_integral(*job.coefficients);
    if (const auto* none = std::get_if<NoFullIntegral>(&outcome)) {
        out.payload["kind"] = "none";
        if (!none->antiderivative_values.empty()) {
            out.payload["witness"] = witness_json(none->antiderivative_values);
        }
        out.exit_code = 1;
    } else if (const auto* unique = std::get_if<UniqueFullIntegral>(&outcome)) {
        out.payload["kind"] = "unique";
        out.payload["integral"] = poly_json(unique->integral);
        out.payload["constant"] = scalar_json(unique->constant);
    } else {
        out.payload["kind"] = "free";
        out.payload["integral"] = poly_json(integral_of(outcome));
    }
    if (job.polynomial) {
        out.payload["type"] = type_json(classify_type(*job.polynomial));
    } else {
        out.payload["type"] = type_json(classify_type(*job.coefficients));
    }
    return out;
}

std::optional<Outcome> refuse_non_integrable(const ExactDiagonalSpec& b) {
    const auto outcome = full_integral(b.characteristic_polynomial());
    if (const auto* none = std::get_if<NoFullIntegral>(&outcome)) {
        Outcome out;
        out.payload["class"] = to_string(IntegrabilityClass::NonIntegrable);
        out.payload["witness"] = witness_json(none->antiderivative_values);
        out.exit_code = 1;
        return out;
    }
    return std::nullopt;
}

Outcome run_integrate(const JobSpec& job) {
    const auto& b = *job.matrix;
    if (auto refused = refuse_non_integrable(b)) {
        return *refused;
    }
    if (job.determinant && !is_non_derogatory(b)) {
        throw InputError("determinant", "the determinant can only be chosen for freely integrable matrices");
    }
    const ExactBordered a = job.determinant ? integrate_with_determinant(b, *job.determinant) : integrate(b);
    const ExactMatrix dense = a.materialize();
    Outcome out;
    out.payload["class"] = to_string(classify_integrability(b));
    out.payload["u"] = vector_json(a.u);
    out.payload["v"] = vector_json(a.v);
    out.payload["corner"] = scalar_json(a.corner);
    out.payload["characteristic_polynomial"] = poly_json(bordered_char_poly(a));
    out.payload["matrix"] = matrix_json(dense);
    if (job.conjugator) {
        try {
            out.payload["conjugated"] = matrix_json(conjugate_transport(a, *job.conjugator));
        } catch (const std::invalid_argument& e) {
            throw InputError("X", e.what());
        }
    }
    return out;
}

Outcome run_min_norm(const JobSpec& job) {
    const auto& b = *job.matrix;
    if (auto refused = refuse_non_integrable(b)) {
        return *refused;
    }
    const auto m = integrate_min_norm(b);
    Outcome out;
    out.payload["class"] = to_string(classify_integrability(b));
    out.payload["u"] = vector_json(m.integral.u);
    out.payload["v"] = vector_json(m.integral.v);
    out.payload["corner"] = approx_json(m.integral.corner);
    out.payload["frobenius_norm_sq"] = m.frobenius_norm_sq;
    if (m.exact_frobenius_norm_sq) {
        out.payload["exact_frobenius_norm_sq"] = m.exact_frobenius_norm_sq->get_str();
    }
    out.payload["schur"] = inequality_json(schur_check(m.integral.materialize(), job.options.tolerance));
    return out;
}

Outcome run_diagonalizable(const JobSpec& job) {
    const auto& b = *job.matrix;
    ExactBordered a;
    if (job.u || job.v) {
        if (!job.u || !job.v) {
            throw InputError(job.u ? "v" : "u", "u and v must be given together");
        }
        a = ExactBordered(b, *job.u, *job.v);
    } else {
        if (auto refused = refuse_non_integrable(b)) {
            return *refused;
        }
        a = integrate(b);
    }
    bool criterion = false;
    try {
        criterion = integral_is_diagonalizable(a);
    } catch (const NotAnIntegralError& e) {
        throw InputError("u", e.what());
    }
    const auto eig = known_eigenvalues(a);
    const bool oracle = is_diagonalizable_exact(a.materialize(), eig);
    Outcome out;
    out.payload["diagonalizable"] = criterion;
    out.payload["oracle_diagonalizable"] = oracle;
    out.payload["agree"] = criterion == oracle;
    out.payload["u"] = vector_json(a.u);
    out.payload["v"] = vector_json(a.v);
    if (criterion != oracle) {
        throw std::logic_error("diagonalizability criterion disagrees with the kernel-dimension oracle");
    }
    out.exit_code = criterion ? 0 : 1;
    return out;
}

Outcome run_sequence(const JobSpec& job) {
    if (!job.polynomial) {
        throw InputError("factors", "the sequence command needs a factored polynomial");
    }
    const auto seq = integral_sequence(*job.polynomial, job.depth);
    const PolyType t = classify_type(*job.polynomial);
    Outcome out;
    json integrals = json::array();
    for (const auto& f : seq) {
        integrals.push_back(poly_json(f));
    }
    out.payload["integrals"] = integrals;
    out.payload["length"] = seq.size();
    out.payload["depth"] = job.depth;
    out.payload["type"] = type_json(t);
    if (const auto bound = sequence_length_bound(t.simple, t.multiple)) {
        out.payload["bound"] = *bound;
    } else {
        out.payload["bound"] = nullptr;
    }
    return out;
}

ApproxPoly approx_input_polynomial(const JobSpec& job) {
    if (job.polynomial) {
        return to_approx(expand(*job.polynomial));
    }
    if (job.coefficients) {
        return to_approx(*job.coefficients);
    }
    throw InputError("factors", "a polynomial is required (factors or coeffs)");
}

Outcome run_dual_schoenberg(const JobSpec& job) {
    Outcome out;
    InequalityReport r;
    try {
        r = job.polynomial ? dual_schoenberg_check(*job.polynomial, job.options.tolerance)
                           : dual_schoenberg_from_p(to_approx(*job.coefficients), job.options.tolerance);
    } catch (const NoFullIntegralError& e) {
        out.payload["applicable"] = false;
        out.payload["reason"] = e.what();
        out.exit_code = 1;
        return out;
    } catch (const RepeatedCriticalPointsError& e) {
        throw InputError("coeffs", e.what());
    }
    out.payload["applicable"] = true;
    out.payload["inequality"] = inequality_json(r);
    out.exit_code = inequality_holds(r) ? 0 : 1;
    return out;
}

Outcome run_schoenberg(const JobSpec& job) {
    std::vector<ApproxComplex> zeros;
    if (!job.zeros.empty()) {
        for (const auto& z : job.zeros) {
            zeros.push_back(to_approx(z));
        }
    } else if (job.polynomial) {
        for (const auto& [root, mult] : job.polynomial->factors()) {
            zeros.insert(zeros.end(), static_cast<std::size_t>(mult), to_approx(root));
        }
    } else {
        zeros = flatten(find_roots(approx_input_polynomial(job)));
    }
    if (zeros.size() < 2) {
        throw InputError("zeros", "at least two zeros are required");
    }
    const auto r = schoenberg_check(zeros, job.options.tolerance);
    Outcome out;
    out.payload["inequality"] = inequality_json(r);
    out.exit_code = inequality_holds(r) ? 0 : 1;
    return out;
}

Outcome run_gerschgorin(const JobSpec& job) {
    ZeroLocalization loc;
    try {
        loc = gerschgorin_zero_localization(approx_input_polynomial(job), job.options.tolerance);
    } catch (const RepeatedCriticalPointsError& e) {
        throw InputError(job.polynomial ? "factors" : "coeffs", e.what());
    }
    Outcome out;
    json disks = json::array();
    for (const auto& d : loc.disks) {
        disks.push_back({{"center", approx_json(d.center)}, {"radius", d.radius}});
    }
    json roots = json::array();
    for (const auto& z : loc.zeros) {
        roots.push_back(approx_json(z));
    }
    out.payload["disks"] = disks;
    out.payload["roots"] = roots;
    out.payload["all_zeros_covered"] = loc.all_zeros_covered;
    out.csv = format_plot_data(loc.disks, loc.zeros);
    out.exit_code = loc.all_zeros_covered ? 0 : 1;
    return out;
}

Outcome run_verify(const JobSpec& job) {
    const auto summary = run_verification(job.options.seed, job.count);
    Outcome out;
    out.payload["seed"] = job.options.seed;
    out.payload["instances"] = summary.instances;
    out.payload["checks"] = summary.checks;
    out.payload["disagreements"] = summary.disagreements;
    out.payload["agreement"] = summary.disagreements.empty();
    out.exit_code = summary.disagreements.empty() ? 0 : 1;
    return out;
}

std::string number17(double x) {
    if (x == 0.0) {
        x = 0.0;  // drops the sign of -0
    }
    std::ostringstream os;
    os << std::setprecision(17) << x;
    return os.str();
}

}  // namespace

InputError::InputError(std::string path, const std::string& message)
    : std::invalid_argument(path.empty() ? message : path + ": " + message), path_(std::move(path)) {}

std::optional<Command> command_from_name(const std::string& name) {
    for (const auto& [c, n] : kCommands) {
        if (name == n) {
            return c;
        }
    }
    return std::nullopt;
}

std::string command_name(Command c) {
    for (const auto& [cmd, n] : kCommands) {
        if (cmd == c) {
            return n;
        }
    }
    return "unknown";
}

std::vector<std::string> command_names() {
    std::vector<std::string> out;
    for (const auto& entry : kCommands) {
        out.emplace_back(entry.second);
    }
    return out;
}

int max_degree_from_environment() {
    const char* raw = std::getenv("MATINTEGRA_MAX_DEGREE");
    if (raw == nullptr || *raw == '\0') {
        return 64;
    }
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (*end != '\0' || v < 1 || v > 100000) {
        throw InputError("MATINTEGRA_MAX_DEGREE", "expected a positive integer");
    }
    return static_cast<int>(v);
}

JobSpec parse_input(Command command, const json& document, const JobOptions& options) {
    JobSpec job;
    job.command = command;
    job.options = options;
    job.document = document.is_null() ? json::object() : document;
    if (!job.document.is_object()) {
        throw InputError("", "the input document must be an object");
    }
    const json& d = job.document;

    switch (command) {
        case Command::Classify:
        case Command::Integrate:
        case Command::MinNorm:
        case Command::Diagonalizable:
            read_diagonal(job);
            if (!job.matrix) {
                throw InputError("blocks", "a matrix is required ({blocks, simples}, {diagonal} or {factors})");
            }
            break;
        case Command::FullIntegral:
        case Command::Sequence:
        case Command::DualSchoenberg:
        case Command::Gerschgorin:
            read_polynomial(job);
            if (!job.polynomial && !job.coefficients) {
                throw InputError("factors", "a polynomial is required ({leading, factors} or {coeffs})");
            }
            if (job.coefficients && job.coefficients->degree() < 1) {
                throw InputError("coeffs", "polynomial must be nonconstant");
            }
            break;
        case Command::Schoenberg:
            if (d.contains("zeros")) {
                job.zeros = read_scalars(d["zeros"], "zeros");
                check_degree(static_cast<int>(job.zeros.size()), options.max_degree, "zeros");
            } else {
                read_polynomial(job);
                if (!job.polynomial && !job.coefficients) {
                    throw InputError("zeros", "zeros or a polynomial are required");
                }
            }
            break;
        case Command::Verify:
            break;
    }

    if (job.matrix) {
        const int n = job.matrix->size();
        if (d.contains("u")) {
            job.u = read_vector(d["u"], "u", n);
        }
        if (d.contains("v")) {
            job.v = read_vector(d["v"], "v", n);
        }
        if (d.contains("X")) {
            job.conjugator = read_matrix(d["X"], "X", n);
        }
    }
    if (d.contains("determinant")) {
        job.determinant = read_scalar(d["determinant"], "determinant");
    }
    if (d.contains("depth")) {
        job.depth = read_int(d["depth"], "depth");
        if (job.depth < 1 || job.depth > 1000) {
            throw InputError("depth", "depth must lie in [1, 1000]");
        }
    }
    if (d.contains("count")) {
        job.count = read_int(d["count"], "count");
        if (job.count < 1 || job.count > 100000) {
            throw InputError("count", "count must lie in [1, 100000]");
        }
    }
    return job;
}

JobSpec parse_input(Command command, const std::string& text, const JobOptions& options) {
    json doc;
    try {
        doc = text.find_first_not_of(" \t\r\n") == std::string::npos ? json(nullptr) : json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError("", std::string("malformed JSON document: ") + e.what());
    }
    return parse_input(command, doc, options);
}

RunResult error_report(const std::string& command, const std::string& kind, const std::string& message,
                       const std::string& path) {
    RunResult r;
    r.report = {{"command", command}, {"error", {{"kind", kind}, {"message", message}}}};
    if (!path.empty()) {
        r.report["error"]["path"] = path;
    }
    r.exit_code = 2;
    return r;
}

RunResult run_and_report(const JobSpec& job) {
    const std::string name = command_name(job.command);
    Outcome outcome;
    try {
        switch (job.command) {
            case Command::Classify:
                outcome = run_classify(job);
                break;
            case Command::FullIntegral:
                outcome = run_full_integral(job);
                break;
            case Command::Integrate:
                outcome = run_integrate(job);
                break;
            case Command::MinNorm:
                outcome = run_min_norm(job);
                break;
            case Command::Diagonalizable:
                outcome = run_diagonalizable(job);
                break;
            case Command::Sequence:
                outcome = run_sequence(job);
                break;
            case Command::DualSchoenberg:
                outcome = run_dual_schoenberg(job);
                break;
            case Command::Schoenberg:
                outcome = run_schoenberg(job);
                break;
            case Command::Gerschgorin:
                outcome = run_gerschgorin(job);
                break;
            case Command::Verify:
                outcome = run_verify(job);
                break;
        }
    } catch (const InputError& e) {
        return error_report(name, "validation", e.what(), e.path());
    } catch (const RootFindingError& e) {
        return error_report(name, "numeric", e.what());
    } catch (const std::exception& e) {
        return error_report(name, "engine", e.what());
    }
    RunResult r;
    r.report = {{"command", name}, {"input", job.document}};
    r.report.update(outcome.payload);
    r.exit_code = outcome.exit_code;
    r.csv = std::move(outcome.csv);
    return r;
}

std::string format_plot_data(std::span<const Disk> disks, std::span<const ApproxComplex> roots) {
    std::string out = "kind,re,im,radius\n";
    for (const auto& d : disks) {
        out += "disk," + number17(d.center.real()) + "," + number17(d.center.imag()) + "," + number17(d.radius) + "\n";
    }
    for (const auto& z : roots) {
        out += "root," + number17(z.real()) + "," + number17(z.imag()) + ",\n";
    }
    return out;
}

void emit_plot_data(std::span<const Disk> disks, std::span<const ApproxComplex> roots, const std::string& path) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    os << format_plot_data(disks, roots);
    os.flush();
    if (!os) {
        throw std::runtime_error("failed writing " + path);
    }
}

VerificationSummary run_verification(std::uint64_t seed, int count) {
    const std::vector<InstanceProfile> regimes{
        {.simple = 2, .multiple = 0},
        {.simple = 3, .multiple = 0, .gaussian = true},
        {.simple = 1, .multiple = 1, .max_degree = 4},
        {.simple = 2, .multiple = 1, .gaussian = true},
        {.simple = 0, .multiple = 2},
        {.simple = 1, .multiple = 2},
        {.simple = 1, .multiple = 2, .force_integrable = true},
        {.simple = 2, .multiple = 2, .force_integrable = true},
        {.simple = 0, .multiple = 3, .height = 9},
        {.simple = 2, .multiple = 2, .gaussian = true},
    };
    VerificationSummary s;
    auto check = [&](bool ok, const std::string& what, int instance) {
        ++s.checks;
        if (!ok) {
            s.disagreements.push_back("instance " + std::to_string(instance) + ": " + what);
        }
    };
    for (int i = 0; i < count; ++i) {
        const auto& profile = regimes[static_cast<std::size_t>(i) % regimes.size()];
        InstanceGenerator gen(seed * 1000003ULL + static_cast<std::uint64_t>(i), profile);
        const ExactDiagonalSpec b = gen.next_diagonal();
        const PolyType t = b.type();
        ++s.instances;

        const auto cls = classify_integrability(b);
        const bool integrable = cls != IntegrabilityClass::NonIntegrable;
        if (t.multiple <= 1) {
            check(integrable, "at most one repeated eigenvalue but not integrable", i);
        }
        if (t.multiple > t.simple + 1) {
            check(!integrable, "more repeated eigenvalues than simple ones plus one, yet integrable", i);
        }
        if (t.multiple >= 1 && t.simple - t.multiple + 1 >= 0) {
            const auto f = b.characteristic_polynomial();
            const auto blocks = f.multiple_roots();
            ExactPoly h = ExactPoly::constant(f.leading());
            for (const auto& a : f.simple_roots()) {
                h = h * ExactPoly::linear_factor(a);
            }
            const PhiMap phi = phi_build(t.simple - t.multiple + 1, blocks);
            check(phi_image_membership(phi, h).has_value() == integrable,
                  "image membership disagrees with constant matching", i);
        }
        if (!integrable) {
            continue;
        }

        const int n = b.size();
        ExactBordered a = integrate(b);
        std::vector<ExactBordered> variants{a};
        if (b.block_extent() > 0) {
            ExactBordered cleared = a;
            for (int j = 0; j < b.block_extent(); ++j) {
                cleared.u(j) = ExactComplex(0);
            }
            variants.push_back(std::move(cleared));
        }
        const ExactPoly pb = char_poly_exact(b.to_dense());
        for (const auto& candidate : variants) {
            const ExactMatrix dense = candidate.materialize();
            const ExactPoly pa = char_poly_exact(dense);
            check(pa == bordered_char_poly(candidate), "bordered formula disagrees with Faddeev-LeVerrier", i);
            if (n + 1 <= 5) {
                check(pa == char_poly_cofactor(dense), "cofactor expansion disagrees with Faddeev-LeVerrier", i);
            }
            check(derivative(pa) == pb * ExactComplex(n + 1), "p_A' != (n + 1) p_B", i);
            const bool criterion = integral_is_diagonalizable(candidate);
            check(criterion == is_diagonalizable_exact(dense, known_eigenvalues(candidate)),
                  "diagonalizability criterion disagrees with kernel dimensions", i);
            check(criterion == is_diagonalizable_by_minimal_polynomial(dense),
                  "diagonalizability criterion disagrees with the minimal polynomial", i);
        }
    }
    return s;
}

}  // namespace matintegra::cli
