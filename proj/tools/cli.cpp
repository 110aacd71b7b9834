#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "nroots/errors.hpp"
#include "nroots/lab.hpp"
#include "nroots/matrix_io.hpp"
#include "nroots/roots.hpp"

namespace nroots::cli {

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t state) {
    for (const char ch : bytes) {
        state ^= static_cast<unsigned char>(ch);
        state *= 0x100000001b3ULL;
    }
    return state;
}

namespace {

using Json = nlohmann::ordered_json;

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

struct Session {
    Tolerances tol;
    Json inputs = Json::array();
    std::uint64_t digest = fnv1a("");
    /// Suffix (empty for the main result) and matrix, written by --out.
    std::vector<std::pair<std::string, ComplexMatrix>> outputs;
    bool violation = false;

    ComplexMatrix load(const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            throw Error("cannot open matrix file '" + path + "'");
        }
        std::ostringstream buffer;
        buffer << in.rdbuf();
        const std::string bytes = buffer.str();
        ComplexMatrix m;
        try {
            m = parse_matrix(bytes);
        } catch (const ParseError& e) {
            throw ParseError(e.message(), e.line(), e.column(), path);
        }
        // Length prefix keeps ("ab", "c") and ("a", "bc") apart.
        digest = fnv1a(std::to_string(bytes.size()) + ":", digest);
        digest = fnv1a(bytes, digest);
        inputs.push_back({{"path", path}, {"dim", m.dim()}, {"fnv1a64", hex64(fnv1a(bytes))}});
        return m;
    }

    /// Bound for exact algebraic identities, relative to their scale.
    double identity_tol() const { return 0.1 * tol.structural; }
};

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json vector_json(std::span<const Complex> v) {
    Json out = Json::array();
    for (const Complex& z : v) {
        out.push_back(complex_json(z));
    }
    return out;
}

Json certificate_json(const RootCertificate& c, const Tolerances& tol) {
    Json j;
    j["order"] = c.order;
    j["branch"] = c.branch;
    j["power_residual"] = c.power_residual;
    j["normality_defect"] = c.normality_defect;
    j["factor_commutator"] = c.factor_commutator;
    j["sign_case"] = c.sign_case ? Json(to_string(*c.sign_case)) : Json(nullptr);
    j["certified"] = c.certified(tol);
    return j;
}

Json flags_json(const MatrixFlags& f) {
    return {{"hermitian", f.hermitian}, {"normal", f.normal}, {"psd", f.psd},
            {"nsd", f.nsd},             {"unitary", f.unitary}, {"zero", f.zero}};
}

Json check_json(const lab::SignHypothesis& h) {
    return {{"margin", h.margin}, {"status", lab::to_string(h.status)}};
}

// Commands. Each returns the "result" object of the report and sets
// session.violation when a checked statement failed.

Json cmd_decompose(Session& s, const std::string& path) {
    const ComplexMatrix t = s.load(path);
    const CartesianPair parts = cartesian_parts(t);
    const auto re = hermitian_eigenvalues(parts.re, s.tol);
    const auto im = hermitian_eigenvalues(parts.im, s.tol);
    Json j;
    j["dim"] = t.dim();
    j["flags"] = flags_json(classify(t, s.tol));
    j["re_hermitian_defect"] = hermitian_defect(parts.re);
    j["im_hermitian_defect"] = hermitian_defect(parts.im);
    j["reconstruction_error"] = distance(parts.re + parts.im * Complex(0.0, 1.0), t);
    j["re_eigenvalues"] = re;
    j["im_eigenvalues"] = im;
    j["normality_defect"] = normality_defect(t);
    j["parts_commutator"] = commutator(parts.re, parts.im).frobenius_norm();
    s.outputs.emplace_back(".re", parts.re);
    s.outputs.emplace_back(".im", parts.im);
    return j;
}

Json cmd_sqrt(Session& s, const std::string& path, unsigned levels) {
    const ComplexMatrix n = s.load(path);
    const RootCertificate c = levels == 1 ? sqrt_signdef(n, s.tol) : root_pow2n(n, levels, s.tol);
    s.outputs.emplace_back("", c.root);
    Json j = certificate_json(c, s.tol);
    j["levels"] = levels;
    return j;
}

Json cmd_root(Session& s, const std::string& path, unsigned order, std::int64_t k, bool all) {
    const ComplexMatrix n = s.load(path);
    Json list = Json::array();
    if (all) {
        for (const RootCertificate& c : nth_root_branches(n, order, s.tol)) {
            list.push_back(certificate_json(c, s.tol));
            s.outputs.emplace_back(".k" + std::to_string(c.branch), c.root);
        }
    } else {
        const RootCertificate c = nth_root(n, order, k, s.tol);
        list.push_back(certificate_json(c, s.tol));
        s.outputs.emplace_back("", c.root);
    }
    return {{"order", order}, {"certificates", list}};
}

Json cmd_spectral_sqrt(Session& s, const std::string& path) {
    const ComplexMatrix n = s.load(path);
    const RootCertificate c = spectral_sqrt(n, s.tol);
    s.outputs.emplace_back("", c.root);
    return certificate_json(c, s.tol);
}

Json cmd_sylvester(Session& s, const std::string& pa, const std::string& pb, const std::string& ps) {
    const ComplexMatrix a = s.load(pa);
    const ComplexMatrix b = s.load(pb);
    const ComplexMatrix rhs = s.load(ps);
    Json j;
    if (is_hermitian(a, s.tol) && is_hermitian(b, s.tol)) {
        const lab::SpectralGap gap = lab::spectra_disjoint(a, b, s.tol);
        j["spectral_gap"] = {{"disjoint", gap.disjoint},
                             {"indeterminate", gap.indeterminate},
                             {"gap", gap.gap},
                             {"threshold", gap.threshold}};
    }
    const ComplexMatrix x = lab::sylvester_solve({a, b, rhs}, s.tol);
    const double residual = distance(a * x - x * b, rhs);
    const double scaled = residual / (1.0 + rhs.frobenius_norm());
    j["residual"] = residual;
    j["scaled_residual"] = scaled;
    j["certified"] = scaled <= s.tol.residual;
    s.outputs.emplace_back("", x);
    return j;
}

Json cmd_classify(Session& s, const std::string& pt, const std::optional<std::string>& pc) {
    const ComplexMatrix t = s.load(pt);
    const ComplexMatrix c = pc ? s.load(*pc) : t * t;
    const lab::ClassificationVerdict v = lab::classify_root_of_selfadjoint(t, c, s.tol);
    s.violation = v.theorem_violation;
    // Only a conclusive verdict measures the residual, gap and invertibility.
    const bool decided = v.verdict != lab::Verdict::inconclusive;
    const auto measured = [decided](double x) { return decided ? Json(x) : Json(nullptr); };
    return {{"verdict", lab::to_string(v.verdict)},
            {"evidence", lab::to_string(v.evidence)},
            {"residual", measured(v.residual)},
            {"residual_bound", measured(v.residual_bound)},
            {"gap", measured(v.gap)},
            {"min_singular_value", measured(v.min_singular_value)},
            {"square_residual", v.square_residual},
            {"real_system_residual", v.real_system_residual},
            {"anticommutator", v.anticommutator},
            {"theorem_violation", v.theorem_violation},
            {"detail", v.detail}};
}

Json cmd_zero_square(Session& s, const std::string& path) {
    const ComplexMatrix t = s.load(path);
    const lab::ZeroSquareReport r = lab::check_zero_square(t, s.tol);
    s.violation = r.theorem_violation;
    return {{"norm", r.norm},
            {"square_norm", r.square_norm},
            {"square_difference", r.square_difference},
            {"anticommutator", r.anticommutator},
            {"re_eigenvalue_range", {r.re_min, r.re_max}},
            {"im_eigenvalue_range", {r.im_min, r.im_max}},
            {"re_psd", check_json(r.re_psd)},
            {"re_nsd", check_json(r.re_nsd)},
            {"im_psd", check_json(r.im_psd)},
            {"im_nsd", check_json(r.im_nsd)},
            {"zero_bound", r.zero_bound},
            {"any_hypothesis", r.any_hypothesis},
            {"is_zero", r.is_zero},
            {"both_parts_indefinite", r.both_parts_indefinite},
            {"theorem_violation", r.theorem_violation},
            {"detail", r.detail}};
}

Json cmd_range(Session& s, const std::string& path, int grid) {
    const ComplexMatrix m = s.load(path);
    lab::RangeOptions options;
    options.grid = grid;
    const lab::RangeCertificate c = lab::numerical_range_contains_zero(m, s.tol, options);
    Json j;
    j["contains_zero"] = c.contains_zero;
    j["indeterminate"] = c.indeterminate;
    j["margin"] = c.margin;
    j["angle"] = c.angle ? Json(*c.angle) : Json(nullptr);
    j["witness"] = c.witness ? vector_json(*c.witness) : Json(nullptr);
    j["witness_value"] = c.witness_value;
    return j;
}

Json cmd_commutators(Session& s, const std::string& path) {
    const ComplexMatrix t = s.load(path);
    const lab::CommutatorResiduals r = lab::commutator_identities(t);
    const lab::NormalityEquivalence e = lab::normality_equivalence(t, s.tol);
    const double bound = s.identity_tol() * r.scale;
    const bool stated = r.bc_ad <= bound;
    const bool corrected = r.bc_plus_ad <= bound;
    const bool second = r.ac_bd <= bound;
    s.violation = !stated || !corrected || !second || e.theorem_violation;

    Json j;
    j["scale"] = r.scale;
    j["bound"] = bound;
    j["bc_minus_ad"] = r.bc_ad;
    j["bc_plus_ad"] = r.bc_plus_ad;
    j["ac_minus_bd"] = r.ac_bd;
    j["ad_norm"] = r.ad_norm;
    j["identity_bc_eq_ad"] = stated;
    j["identity_bc_eq_minus_ad"] = corrected;
    j["identity_ac_eq_bd"] = second;
    j["normality"] = {{"applicable", e.applicable},
                      {"part", e.applicable ? Json(e.part) : Json(nullptr)},
                      {"normality_defect", e.normality_defect},
                      {"commutator", e.commutator},
                      {"normal", lab::to_string(e.normal)},
                      {"commutes", lab::to_string(e.commutes)},
                      {"agree", e.agree},
                      {"selfadjoint_square", e.selfadjoint_square},
                      {"theorem_violation", e.theorem_violation},
                      {"detail", e.detail}};
    return j;
}

Json cmd_volterra(Session& s, std::size_t n) {
    const lab::VolterraReport r = lab::volterra_report(n, s.tol);
    const double limit = 2.0 / std::numbers::pi;
    s.outputs.emplace_back("", lab::volterra_matrix(n));
    return {{"n", r.n},
            {"norm", r.norm},
            {"two_over_pi", limit},
            {"relative_gap", std::abs(r.norm - limit) / limit},
            {"spectral_radius", r.spectral_radius},
            {"re_min_eigenvalue", r.re_min_eigenvalue},
            {"re_max_eigenvalue", r.re_max_eigenvalue}};
}

Json cmd_nilpotent(Session& s, std::size_t trials, std::size_t dim_lo, std::size_t dim_hi, std::uint64_t seed) {
    const lab::NilpotentCampaign c = lab::nilpotent_search(trials, dim_lo, dim_hi, seed, s.tol);
    s.violation = c.violations > 0;
    Json details = Json::array();
    for (std::size_t i = 0; i < std::min<std::size_t>(c.violation_details.size(), 20); ++i) {
        details.push_back(c.violation_details[i]);
    }
    return {{"trials", c.trials},
            {"dim_range", {dim_lo, dim_hi}},
            {"seed", seed},
            {"nonzero", c.nonzero},
            {"indefinite", c.indefinite},
            {"violations", c.violations},
            {"invalid_samples", c.invalid_samples},
            {"hypothesis_held", c.hypothesis_held},
            {"min_relative_margin", c.min_relative_margin},
            {"max_relative_margin", c.max_relative_margin},
            {"max_square_ratio", c.max_square_ratio},
            {"violation_details", details}};
}

Json cmd_exp_periodicity(Session& s, const std::string& path, std::vector<std::int64_t> ks) {
    const ComplexMatrix a = s.load(path);
    if (!is_hermitian(a, s.tol)) {
        throw PreconditionError("exp-periodicity: A must be Hermitian (‖A - A*‖_F = " + sci(hermitian_defect(a)) +
                                ")");
    }
    if (ks.empty()) {
        for (std::int64_t k = -16; k <= 16; ++k) {
            ks.push_back(k);
        }
    }
    const double dim = static_cast<double>(a.dim());
    const double eps = std::numeric_limits<double>::epsilon();
    Json rows = Json::array();
    double worst = 0.0;
    for (const std::int64_t k : ks) {
        const double residual = lab::exp_periodicity_residual(a, k, s.tol);
        // Forming A + 2kπI rounds the spectrum at the scale of 2π|k|.
        const double bound = s.identity_tol() * dim + 8.0 * eps * 2.0 * std::numbers::pi * std::abs(double(k)) * dim;
        const bool holds = residual <= bound;
        s.violation = s.violation || !holds;
        worst = std::max(worst, residual);
        rows.push_back({{"k", k}, {"residual", residual}, {"bound", bound}, {"holds", holds}});
    }
    return {{"dim", a.dim()}, {"max_residual", worst}, {"shifts", rows}};
}

/// Dotted path of the first non-finite number, if any.
std::optional<std::string> find_non_finite(const Json& j, const std::string& where) {
    if (j.is_number_float() && !std::isfinite(j.get<double>())) {
        return where;
    }
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (auto bad = find_non_finite(value, where.empty() ? key : where + "." + key)) {
                return bad;
            }
        }
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (auto bad = find_non_finite(j[i], where + "[" + std::to_string(i) + "]")) {
                return bad;
            }
        }
    }
    return std::nullopt;
}

void print_flat(std::ostream& out, const Json& j, const std::string& prefix) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            print_flat(out, value, prefix.empty() ? key : prefix + "." + key);
        }
        return;
    }
    if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& e) { return e.is_object(); })) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            print_flat(out, j[i], prefix + "[" + std::to_string(i) + "]");
        }
        return;
    }
    if (j.is_string() && j.get<std::string>().empty()) {
        return;
    }
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
}

std::filesystem::path with_suffix(const std::filesystem::path& base, const std::string& suffix) {
    if (suffix.empty()) {
        return base;
    }
    std::filesystem::path p = base;
    const std::string ext = p.extension().string();
    p.replace_extension();
    p += suffix + ext;
    return p;
}

bool write_text(const std::string& path, const std::string& text, std::ostream& out, std::ostream& err) {
    if (path == "-") {
        out << text;
        return true;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    file << text;
    if (!file) {
        err << "nroots: cannot write '" << path << "'\n";
        return false;
    }
    return true;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Normal roots of complex matrices and executable checks of their structure theorems.", "nroots"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string json_path;
    std::string out_path;
    Tolerances tol;
    app.add_option("--json", json_path, "Write the JSON report here ('-' for stdout)");
    app.add_option("--out", out_path, "Write result matrices here (suffixes .re/.im, .kN for several)");
    app.add_option("--tol-structural", tol.structural, "Structural tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--tol-residual", tol.residual, "Residual tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--tol-sweep", tol.sweep_threshold, "Jacobi sweep threshold")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    std::function<Json(Session&)> command;
    bool writes_matrices = false;
    std::string p1, p2, p3;
    std::optional<std::string> p_opt;
    unsigned levels = 1;
    unsigned order = 2;
    std::int64_t branch = 0;
    bool all_branches = false;
    int grid = lab::RangeOptions{}.grid;
    std::size_t volterra_n = 512;
    std::size_t trials = 1000;
    std::optional<std::size_t> dim_lo;
    std::optional<std::size_t> dim_hi;
    std::uint64_t seed = 1;
    std::vector<std::int64_t> shifts;

    const auto positional = [](CLI::App* sub, const char* name, std::string& into, const char* what) {
        sub->add_option(name, into, what)->required();
    };

    auto* decompose = app.add_subcommand("decompose", "Cartesian parts T = A + iB and structural flags");
    positional(decompose, "T", p1, "Matrix file");
    decompose->callback([&] {
        writes_matrices = true;
        command = [&](Session& s) { return cmd_decompose(s, p1); };
    });

    auto* sqrt_cmd = app.add_subcommand("sqrt", "Normal square root (2^L-th root with --levels L)");
    positional(sqrt_cmd, "N", p1, "Normal matrix with semidefinite imaginary part");
    sqrt_cmd->add_option("--levels", levels, "Take 2^levels-th root")->check(CLI::Range(1u, 30u));
    sqrt_cmd->callback([&] {
        writes_matrices = true;
        command = [&](Session& s) { return cmd_sqrt(s, p1, levels); };
    });

    auto* root = app.add_subcommand("root", "Normal n-th root on branch k");
    positional(root, "N", p1, "Normal matrix");
    root->add_option("--n", order, "Root order")->required()->check(CLI::Range(1u, 1u << 20));
    root->add_option("--k", branch, "Branch");
    root->add_flag("--all-branches", all_branches, "Every branch k = 0..n-1");
    root->callback([&] {
        writes_matrices = true;
        command = [&](Session& s) { return cmd_root(s, p1, order, branch, all_branches); };
    });

    auto* spectral = app.add_subcommand("spectral-sqrt", "Principal square root by eigendecomposition");
    positional(spectral, "N", p1, "Normal matrix");
    spectral->callback([&] {
        writes_matrices = true;
        command = [&](Session& s) { return cmd_spectral_sqrt(s, p1); };
    });

    auto* sylvester = app.add_subcommand("sylvester", "Solve AX - XB = S");
    positional(sylvester, "A", p1, "Matrix file");
    positional(sylvester, "B", p2, "Matrix file");
    positional(sylvester, "S", p3, "Matrix file");
    sylvester->callback([&] {
        writes_matrices = true;
        command = [&](Session& s) { return cmd_sylvester(s, p1, p2, p3); };
    });

    auto* classify_cmd = app.add_subcommand("classify", "Classify a root T of a Hermitian C (default C = T^2)");
    positional(classify_cmd, "T", p1, "Matrix file");
    classify_cmd->add_option("C", p_opt, "Hermitian matrix with T^2 = C");
    classify_cmd->callback([&] { command = [&](Session& s) { return cmd_classify(s, p1, p_opt); }; });

    auto* zero_square = app.add_subcommand("zero-square", "Check a T with T^2 = 0");
    positional(zero_square, "T", p1, "Matrix file");
    zero_square->callback([&] { command = [&](Session& s) { return cmd_zero_square(s, p1); }; });

    auto* range = app.add_subcommand("range", "Does the numerical range contain 0?");
    positional(range, "M", p1, "Matrix file");
    range->add_option("--grid", grid, "Angles in the sweep")->check(CLI::Range(8, 1 << 20));
    range->callback([&] { command = [&](Session& s) { return cmd_range(s, p1, grid); }; });

    auto* commutators = app.add_subcommand("commutators", "Commutator identities and normality for T^2 = C + iD");
    positional(commutators, "T", p1, "Matrix file");
    commutators->callback([&] { command = [&](Session& s) { return cmd_commutators(s, p1); }; });

    auto* volterra = app.add_subcommand("volterra", "Norm and spectral radius of the discretized Volterra operator");
    volterra->add_option("--n", volterra_n, "Grid size")->check(CLI::Range(std::size_t{1}, std::size_t{4096}));
    volterra->callback([&] {
        writes_matrices = true;
        command = [&](Session& s) { return cmd_volterra(s, volterra_n); };
    });

    auto* nilpotent = app.add_subcommand("nilpotent-search", "Random search over T with T^2 = 0");
    nilpotent->add_option("--trials", trials, "Number of samples")->capture_default_str();
    nilpotent->add_option("--dim", dim_lo, "Smallest dimension (default 2)")->check(CLI::Range(1, 64));
    nilpotent->add_option("--dim-max", dim_hi, "Largest dimension (default --dim, or 6)")->check(CLI::Range(1, 64));
    nilpotent->add_option("--seed", seed, "Base seed")->capture_default_str();
    nilpotent->callback([&] {
        const std::size_t lo = dim_lo.value_or(2);
        const std::size_t hi = dim_hi.value_or(dim_lo ? lo : 6);
        if (hi < lo) {
            throw CLI::ValidationError("--dim-max", "must not be below --dim");
        }
        command = [&, lo, hi](Session& s) { return cmd_nilpotent(s, trials, lo, hi, seed); };
    });

    auto* periodicity = app.add_subcommand("exp-periodicity", "exp(i(A + 2k pi I)) = exp(iA) for Hermitian A");
    positional(periodicity, "A", p1, "Hermitian matrix file");
    periodicity->add_option("--k", shifts, "Shifts to test (default -16..16)");
    periodicity->callback([&] { command = [&](Session& s) { return cmd_exp_periodicity(s, p1, shifts); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "nroots: " << e.what() << "\n" << "Run with --help for usage.\n";
        return kExitUsage;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    if (!out_path.empty() && !writes_matrices) {
        err << "nroots " << name << ": --out is not supported (no matrix result)\n";
        return kExitUsage;
    }

    Session session;
    session.tol = tol;
    Json report;
    report["schema"] = 1;
    report["command"] = name;
    report["args"] = args;

    const auto start = std::chrono::steady_clock::now();
    int code = kExitOk;
    Json result;
    std::string error;
    try {
        result = command(session);
        if (auto bad = find_non_finite(result, "")) {
            throw Error("non-finite value in result field '" + *bad + "'");
        }
        code = session.violation ? kExitViolation : kExitOk;
    } catch (const TheoremViolationError& e) {
        code = kExitViolation;
        error = e.what();
    } catch (const Error& e) {
        code = kExitFailure;
        error = e.what();
    } catch (const std::bad_alloc&) {
        code = kExitFailure;
        error = "out of memory";
    }
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    report["input_digest"] = hex64(session.digest);
    report["inputs"] = session.inputs;
    report["tolerances"] = {{"structural", tol.structural},
                            {"residual", tol.residual},
                            {"sweep_threshold", tol.sweep_threshold}};
    report["status"] = code == kExitOk ? "ok" : code == kExitViolation ? "theorem_violation" : "error";
    report["exit_code"] = code;
    report["result"] = result;
    if (!error.empty()) {
        report["error"] = error;
    }
    report["wall_time_s"] = wall;

    if (!error.empty()) {
        err << "nroots " << name << ": " << error << '\n';
    }
    if (json_path != "-") {
        print_flat(out, result, "");
        out << "status: " << report["status"].get<std::string>() << '\n';
    }
    if (!json_path.empty() && !write_text(json_path, report.dump(2) + "\n", out, err)) {
        return kExitFailure;
    }
    if (!out_path.empty() && error.empty()) {
        for (const auto& [suffix, matrix] : session.outputs) {
            const auto path = with_suffix(out_path, suffix);
            try {
                save_matrix(path, matrix);
            } catch (const Error& e) {
                err << "nroots " << name << ": " << e.what() << '\n';
                return kExitFailure;
            }
        }
    }
    return code;
}

}  // namespace nroots::cli
