#include "fakemu/cli/run.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>

#include "fakemu/analysis/gap.hpp"
#include "fakemu/analysis/residues.hpp"
#include "fakemu/cli/eps_spec.hpp"
#include "fakemu/core/classify.hpp"
#include "fakemu/core/errors.hpp"
#include "fakemu/factor/factorize.hpp"
#include "fakemu/factor/json.hpp"
#include "fakemu/factor/oracle.hpp"
#include "fakemu/scan/scan.hpp"

namespace fakemu::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kVersion = "fakemu 0.1.0";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void error_line(std::ostream& err, const std::string& code, const std::string& message) {
    err << Json{{"error", code}, {"message", message}}.dump() << '\n';
}

EnvelopeConstants parse_envelope(const std::string& text) {
    EnvelopeConstants k;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("--envelope expects c=..,C=..");
        const std::string key = item.substr(0, eq);
        double value = 0;
        try {
            std::size_t used = 0;
            value = std::stod(item.substr(eq + 1), &used);
            if (used != item.size() - eq - 1) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw UsageError("--envelope: bad number in '" + item + "'");
        }
        if (key == "c") {
            k.c = value;
        } else if (key == "C") {
            k.C = value;
        } else {
            throw UsageError("--envelope: unknown constant '" + key + "'");
        }
    }
    return k;
}

EpsilonSequence eps_from_flag(const std::string& spec) {
    try {
        return parse_eps(spec);
    } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
    }
}

ZetaFactorization factorize_flag(const EpsilonSequence& eps, int j_max) {
    FactorizeOptions options;
    options.j_max = j_max;
    return factorize(eps, options);
}

Json residues_json(const MainTermModel& model) {
    Json list = Json::array();
    for (const auto& t : model.terms) list.push_back({{"j", t.j}, {"xi", t.xi}, {"poly", t.poly}});
    return list;
}

Json record_json(const ScanRecord& r, bool envelope) {
    Json j = {{"x", r.x}, {"F", r.F}, {"G", r.G}, {"E", r.E}, {"e_norm", r.e_norm}};
    if (envelope) {
        j["env_lo"] = r.env_lo;
        j["env_hi"] = r.env_hi;
    }
    return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Zeta-factorizations, main terms and error-term scans of fake mu functions", "fakemu"};
    app.require_subcommand(1);
    bool quiet = false;
    bool seedless = false;
    std::string out_path;
    app.add_flag("--quiet", quiet, "Suppress the version banner on stderr");
    app.add_flag("--seedless", seedless, "Deterministic output (all computations are seedless)");

    std::string eps_spec;
    int j_max = 0;
    auto add_eps = [&](CLI::App* sub) {
        sub->add_option("--eps", eps_spec, "Preset name or prefix=[..];period=[..]")->required();
        sub->add_option("--out", out_path, "Write the artifact to this file instead of stdout");
    };

    MainTermOptions model_options;
    auto add_model = [&](CLI::App* sub) {
        sub->add_option("--tol", model_options.tol, "Evaluator tolerance for D_f")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
        sub->add_option("--radius-scale", model_options.radius_scale, "Contour radius multiplier in (0, 1]")
            ->capture_default_str()
            ->check(CLI::Range(1e-6, 1.0));
        sub->add_option("--nodes", model_options.initial_nodes, "Initial trapezoid nodes")
            ->capture_default_str()
            ->check(CLI::Range(8, 1 << 20));
        sub->add_option("--max-nodes", model_options.max_nodes, "Trapezoid node cap")
            ->capture_default_str()
            ->check(CLI::Range(8, 1 << 24));
        sub->add_option("--agreement", model_options.agreement, "Node-doubling agreement")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
        sub->add_option("--zero-threshold", model_options.zero_threshold, "Residue zero threshold floor")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
        sub->add_flag("!--no-relax", model_options.relax_tol, "Fail instead of relaxing --tol per pole");
    };

    CLI::App* classify_cmd = app.add_subcommand("classify", "Type and index of the sequence");
    add_eps(classify_cmd);

    std::uint64_t verify_n = 0;
    CLI::App* factorize_cmd = app.add_subcommand("factorize", "Zeta-factorization exponents and residual");
    add_eps(factorize_cmd);
    factorize_cmd->add_option("--jmax", j_max, "Residual truncation (0 = default)")->check(CLI::NonNegativeNumber);
    factorize_cmd->add_option("--verify", verify_n, "Also verify coefficients up to N")->check(CLI::PositiveNumber);

    std::uint64_t n_bound = 0;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Compare Dirichlet coefficients with f up to N");
    add_eps(verify_cmd);
    verify_cmd->add_option("--N", n_bound, "Upper bound")->required()->check(CLI::PositiveNumber);
    verify_cmd->add_option("--jmax", j_max, "Residual truncation (0 = default)")->check(CLI::NonNegativeNumber);

    CLI::App* residues_cmd = app.add_subcommand("residues", "Main-term residue polynomials");
    add_eps(residues_cmd);
    add_model(residues_cmd);

    std::int64_t x_max = 0;
    std::string format = "csv";
    std::string envelope_text;
    unsigned threads = 1;
    ScanOptions scan_options;
    CLI::App* scan_cmd = app.add_subcommand("scan", "Error-term scan with sign changes");
    add_eps(scan_cmd);
    add_model(scan_cmd);
    scan_cmd->add_option("--xmax", x_max, "Scan bound")->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{4'000'000'000}));
    scan_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    scan_cmd->add_option("--envelope", envelope_text, "Add reference envelopes, e.g. c=1,C=1");
    scan_cmd->add_option("--threads", threads, "Sieve threads (0 = all cores)")
        ->envname("FAKEMU_THREADS")
        ->capture_default_str();
    scan_cmd->add_option("--grid", scan_options.grid_points, "Geometric grid points")
        ->capture_default_str()
        ->check(CLI::Range(2, 10'000'000));
    scan_cmd->add_option("--max-refined", scan_options.max_refined, "Cap on sign-change records")->capture_default_str();

    CLI::App* gap_cmd = app.add_subcommand("gapcheck", "Euler-factor margin at the lowest zeta zero");
    gap_cmd->add_option("--out", out_path, "Write the artifact to this file instead of stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        error_line(err, "usage", e.what());
        return kExitUsage;
    }
    (void)seedless;
    if (!quiet) err << kVersion << '\n';

    auto emit = [&](const std::string& text) {
        if (out_path.empty()) {
            out << text;
            return;
        }
        std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
        if (!file || !(file << text) || !file.flush()) throw Error("io_error", "cannot write " + out_path);
    };
    auto emit_json = [&](const Json& j) { emit(j.dump() + "\n"); };

    try {
        if (classify_cmd->parsed()) {
            emit_json(to_json(classify(eps_from_flag(eps_spec))));
            return kExitOk;
        }
        if (factorize_cmd->parsed()) {
            const EpsilonSequence eps = eps_from_flag(eps_spec);
            const ZetaFactorization fz = factorize_flag(eps, j_max);
            Json j = to_json(fz);
            if (verify_n == 0) {
                emit_json(j);
                return kExitOk;
            }
            const VerifyReport report = verify_factorization(eps, fz, verify_n);
            j["verified"] = report.ok;
            emit_json(j);
            if (!report.ok) {
                error_line(err, "verification_mismatch",
                           "coefficients differ at n = " + std::to_string(report.first_mismatch.value_or(0)));
                return kExitFailure;
            }
            return kExitOk;
        }
        if (verify_cmd->parsed()) {
            const EpsilonSequence eps = eps_from_flag(eps_spec);
            const VerifyReport report = verify_factorization(eps, factorize_flag(eps, j_max), n_bound);
            Json j = {{"ok", report.ok}, {"N", n_bound}, {"checked", report.checked}, {"skipped", report.skipped}};
            j["first_mismatch"] = report.first_mismatch ? Json(*report.first_mismatch) : Json(nullptr);
            if (!report.note.empty()) j["note"] = report.note;
            emit_json(j);
            if (!report.ok) {
                error_line(err, "verification_mismatch",
                           "coefficients differ at n = " + std::to_string(report.first_mismatch.value_or(0)));
                return kExitFailure;
            }
            return kExitOk;
        }
        if (residues_cmd->parsed()) {
            const EpsilonSequence eps = eps_from_flag(eps_spec);
            emit_json(residues_json(main_term_model(factorize(eps), model_options)));
            return kExitOk;
        }
        if (scan_cmd->parsed()) {
            const EpsilonSequence eps = eps_from_flag(eps_spec);
            if (!envelope_text.empty()) scan_options.envelope = parse_envelope(envelope_text);
            scan_options.sieve.threads = threads;
            const ZetaFactorization fz = factorize(eps);
            const MainTermModel model = main_term_model(fz, model_options);
            const ScanResult result = scan(eps, fz, model, x_max, scan_options);
            const bool env = scan_options.envelope.has_value();
            if (format == "csv") {
                emit(to_csv(result.records, env));
                return kExitOk;
            }
            const Extrema ext = extrema(result.records);
            Json records = Json::array();
            for (const auto& r : result.records) records.push_back(record_json(r, env));
            emit_json({{"eps", eps.to_string()},
                       {"x_max", x_max},
                       {"normalization", {{"denominator", result.norm.denominator}, {"log_power", result.norm.log_power}}},
                       {"main_term", residues_json(model)},
                       {"sign_change_count", result.sign_change_count},
                       {"truncated", result.truncated},
                       {"extrema",
                        {{"sup_norm", ext.sup_norm},
                         {"arg_sup", ext.arg_sup},
                         {"inf_norm", ext.inf_norm},
                         {"arg_inf", ext.arg_inf}}},
                       {"records", std::move(records)}});
            return kExitOk;
        }
        if (gap_cmd->parsed()) {
            const GapCheck g = gap_check();
            emit_json({{"min_margin", g.min_margin}, {"argmin", g.argmin}});
            return kExitOk;
        }
    } catch (const UsageError& e) {
        error_line(err, "usage", e.what());
        return kExitUsage;
    } catch (const Error& e) {
        error_line(err, e.code(), e.what());
        return kExitFailure;
    } catch (const std::exception& e) {
        error_line(err, "internal_error", e.what());
        return kExitFailure;
    }
    error_line(err, "usage", "no command");
    return kExitUsage;
}

}  // namespace fakemu::cli
