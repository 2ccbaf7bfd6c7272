// squeeze-kit: gauges, geometric constants, distance bounds, and certified
// squeezing-value intervals for the built-in convex domain families.

#include "squeeze/domain.hpp"
#include "squeeze/format.hpp"
#include "squeeze/gauge.hpp"
#include "squeeze/geometry.hpp"
#include "squeeze/harness.hpp"
#include "squeeze/invariants.hpp"
#include "squeeze/json_io.hpp"
#include "squeeze/squeezing.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace squeeze;

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitUsage = 64;

const char* kSchemaReference = R"(input file schemas
  domain spec:
    {"type":"ball","dim":N,"radius":RHO}
    {"type":"polydisk","radii":[RHO_1,...]}
    {"type":"gen_ellipsoid","p":[P_1,...],"m":[M_1 or "inf",...]}
    {"type":"weighted_power","c":[C_1,...],"s":[S_1,...]}
    {"type":"product","factors":[<spec>,...]}
    {"type":"sublevel","base":<spec>,"r":R,"d":[D_1,...]}
  point:
    {"coords":[[re,im],...],"block_sizes":[B_1,...] (optional)}
)";

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw ValidationError("empty entry in integer list: " + text);
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size()) throw ValidationError("bad integer list entry: " + item);
        out.push_back(v);
    }
    if (out.empty()) throw ValidationError("empty integer list");
    return out;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += "\"";
    return out;
}

std::string provenance_json(const std::vector<ProvenanceStep>& steps) {
    std::string out = "[";
    for (size_t i = 0; i < steps.size(); ++i) {
        if (i) out += ",";
        std::string inputs;
        for (char c : steps[i].inputs) {
            if (c == '"' || c == '\\') inputs += '\\';
            inputs += c;
        }
        out += std::string("{\"rule\":\"") + rule_name(steps[i].rule) + "\",\"inputs\":\"" + inputs +
               "\"}";
    }
    return out + "]";
}

std::string provenance_csv(const std::vector<ProvenanceStep>& steps) {
    std::string out;
    for (size_t i = 0; i < steps.size(); ++i) {
        if (i) out += ";";
        out += std::string(rule_name(steps[i].rule)) + "(" + steps[i].inputs + ")";
    }
    return out;
}

void print_interval(const BoundInterval& b, const std::string& format) {
    if (format == "csv") {
        std::cout << "lower,upper,provenance\n"
                  << format_double17(b.lower()) << "," << format_double17(b.upper()) << ","
                  << csv_quote(provenance_csv(b.provenance())) << "\n";
    } else {
        std::cout << "{\"lower\":" << format_double17(b.lower())
                  << ",\"upper\":" << format_double17(b.upper())
                  << ",\"provenance\":" << provenance_json(b.provenance()) << "}\n";
    }
}

DVector d_or_ones(const std::string& text, int dim) {
    if (text.empty()) return DVector::ones(dim);
    DVector d{parse_int_list(text)};
    if (d.dim() != dim) throw ValidationError("exponent tuple length must match the dimension");
    return d;
}

struct BoundsArgs {
    std::string target_path, model_path, d_text, d2_text, rules_text, point_path, transfer_text;
};

int run_bounds(const BoundsArgs& args, const std::string& format) {
    DomainSpec target = load_domain_file(args.target_path);
    DomainSpec model = load_domain_file(args.model_path);
    DVector d = d_or_ones(args.d_text, model.dim());
    DVector d2 = d_or_ones(args.d2_text, model.dim());
    GeometricConstants k1 = constants(model, d);
    GeometricConstants k2 = constants(model, d2);

    std::optional<Point> point;
    if (!args.point_path.empty()) point = load_point_file(args.point_path);

    std::optional<BoundInterval> transfer;
    if (!args.transfer_text.empty()) {
        std::stringstream ss(args.transfer_text);
        std::string lo, hi;
        if (!std::getline(ss, lo, ',') || !std::getline(ss, hi, ','))
            throw ValidationError("--transfer expects \"lower,upper\"");
        transfer = BoundInterval(std::stod(lo), std::stod(hi),
                                 {{Rule::paper_example, "transfer=" + args.transfer_text}});
    }

    BoundInterval current = BoundInterval::vacuous();
    std::stringstream ss(args.rules_text);
    std::string rule;
    while (std::getline(ss, rule, ',')) {
        if (rule == "exact_ball") {
            const auto* b = target.get_if<Ball>();
            if (!b || b->radius != 1.0)
                throw ValidationError("exact_ball needs a unit-ball target");
            if (!point) throw ValidationError("exact_ball needs --point");
            current = exact_ball_squeezing(*point);
        } else if (rule == "prop21_forward") {
            current = prop21_forward(current, k1);
        } else if (rule == "prop21_backward") {
            current = prop21_backward(current, k1);
        } else if (rule == "cor23_transfer") {
            current = cor23_transfer(current, k1, k2);
        } else if (rule == "cor23_transfer_rev") {
            current = cor23_transfer(current, k1, k2, TransferDirection::reverse);
        } else if (rule == "prop32_forward") {
            current = prop32_forward(current, k1);
        } else if (rule == "prop32_backward") {
            current = prop32_backward(current, k1);
        } else if (rule == "cor33_transfer") {
            current = cor33_transfer(current, k1, k2);
        } else if (rule == "cor33_transfer_rev") {
            current = cor33_transfer(current, k1, k2, TransferDirection::reverse);
        } else if (rule == "thm35_transfer") {
            if (!transfer) throw ValidationError("thm35_transfer needs --transfer lower,upper");
            current = thm35_transfer_checked(current, *transfer, d.max_exponent(), model, model);
        } else {
            throw ValidationError("unknown rule in --rules: " + rule);
        }
    }
    print_interval(current, format);
    return kExitOk;
}

int run_verify(const std::string& suite, bool all, long samples, std::uint64_t seed,
               std::optional<double> tol, const std::string& out_path,
               const std::string& format) {
    HarnessConfig cfg;
    cfg.samples = samples;
    cfg.seed = seed;
    cfg.tolerance = tol;

    std::vector<VerificationReport> reports;
    if (all)
        reports = run_all(cfg);
    else
        reports.push_back(run_suite(suite, cfg));

    std::ofstream out;
    if (!out_path.empty()) {
        out.open(out_path);
        if (!out) throw ValidationError("cannot open output file: " + out_path);
    }

    bool all_passed = true;
    if (format == "csv")
        std::cout << "suite,cases_run,failures,max_violation,tolerance,seed,wall_time,passed\n";
    for (const auto& r : reports) {
        all_passed = all_passed && r.passed();
        if (out.is_open()) out << report_to_json(r) << "\n";
        if (format == "csv") {
            std::cout << r.suite << "," << r.cases_run << "," << r.failures.size() << ","
                      << format_double17(r.max_violation) << "," << format_double17(r.tolerance)
                      << "," << r.seed << "," << format_double17(r.wall_time) << ","
                      << (r.passed() ? "true" : "false") << "\n";
        } else {
            std::cout << report_to_json(r) << "\n";
        }
    }
    return all_passed ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"gauge functions, geometric constants, and certified squeezing bounds "
                 "for convex balanced domain families"};
    app.require_subcommand(1);

    std::string domain_path, point_path, d_text, format = "json";
    double tol = 1e-12;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "csv"}));
    };

    auto* gauge_cmd = app.add_subcommand("gauge", "evaluate the (d-)Minkowski function");
    gauge_cmd->add_option("--domain", domain_path, "domain spec JSON file")->required();
    gauge_cmd->add_option("--point", point_path, "point JSON file")->required();
    gauge_cmd->add_option("--d", d_text, "comma-separated exponent tuple");
    gauge_cmd->add_option("--tol", tol, "bisection tolerance");
    add_format(gauge_cmd);

    int oracle_directions = 100000;
    std::uint64_t seed = 42;
    auto* constants_cmd = app.add_subcommand("constants", "inradius/half-diameter constants");
    constants_cmd->add_option("--domain", domain_path, "domain spec JSON file")->required();
    constants_cmd->add_option("--d", d_text, "comma-separated exponent tuple");
    constants_cmd->add_option("--oracle-directions", oracle_directions, "sampling directions");
    constants_cmd->add_option("--seed", seed, "oracle seed")->envname("SQUEEZE_KIT_SEED");
    add_format(constants_cmd);

    auto* distance_cmd = app.add_subcommand("distance", "Caratheodory-type bound at the origin");
    distance_cmd->add_option("--domain", domain_path, "domain spec JSON file")->required();
    distance_cmd->add_option("--point", point_path, "point JSON file")->required();
    distance_cmd->add_option("--d", d_text, "comma-separated exponent tuple");
    add_format(distance_cmd);

    BoundsArgs bounds_args;
    auto* bounds_cmd = app.add_subcommand("bounds", "apply a chain of bound-propagation rules");
    bounds_cmd->add_option("--target", bounds_args.target_path, "target domain spec")->required();
    bounds_cmd->add_option("--model", bounds_args.model_path, "model domain spec")->required();
    bounds_cmd->add_option("--d", bounds_args.d_text, "exponent tuple for the model");
    bounds_cmd->add_option("--d2", bounds_args.d2_text, "second exponent tuple");
    bounds_cmd->add_option("--rules", bounds_args.rules_text, "comma-separated rule chain")
        ->required();
    bounds_cmd->add_option("--point", bounds_args.point_path, "point JSON file");
    bounds_cmd->add_option("--transfer", bounds_args.transfer_text,
                           "certified transfer constant \"lower,upper\"");
    add_format(bounds_cmd);

    int example_n = 0;
    std::string example_p;
    auto* example_cmd =
        app.add_subcommand("example", "ball-to-product-of-balls squeezing value");
    example_cmd->add_option("--n", example_n, "ambient dimension")->required();
    example_cmd->add_option("--p", example_p, "comma-separated block partition")->required();
    add_format(example_cmd);

    std::string suite, out_path;
    bool verify_all = false;
    long samples = 1000;
    double verify_tol = -1.0;
    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    auto* suite_opt = verify_cmd->add_option("--suite", suite, "suite name");
    auto* all_opt = verify_cmd->add_flag("--all", verify_all, "run every suite");
    suite_opt->excludes(all_opt);
    all_opt->excludes(suite_opt);
    verify_cmd->add_option("--samples", samples, "sample budget per suite");
    verify_cmd->add_option("--seed", seed, "sampling seed")->envname("SQUEEZE_KIT_SEED");
    verify_cmd->add_option("--tol", verify_tol, "tolerance override");
    verify_cmd->add_option("--out", out_path, "JSON-lines report file");
    add_format(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << kSchemaReference;
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(gauge_cmd)) {
            DomainSpec spec = load_domain_file(domain_path);
            Point z = load_point_file(point_path);
            GaugeOptions opts;
            opts.tolerance = tol;
            GaugeResult r = d_text.empty()
                                ? minkowski_gauge(spec, z, opts)
                                : d_minkowski_gauge(spec, d_or_ones(d_text, spec.dim()), z, opts);
            if (format == "csv") {
                std::cout << "value,method,residual\n"
                          << format_double17(r.value) << "," << to_string(r.method) << ","
                          << format_double17(r.residual) << "\n";
            } else {
                std::cout << "{\"value\":" << format_double17(r.value) << ",\"method\":\""
                          << to_string(r.method) << "\",\"residual\":" << format_double17(r.residual)
                          << "}\n";
            }
            return kExitOk;
        }
        if (app.got_subcommand(constants_cmd)) {
            DomainSpec spec = load_domain_file(domain_path);
            OracleOptions opts;
            opts.directions = oracle_directions;
            opts.seed = seed;
            GeometricConstants k = constants(spec, d_or_ones(d_text, spec.dim()), opts);
            if (format == "csv") {
                std::cout << "alpha,R,P,L,method\n"
                          << format_double17(k.alpha) << "," << format_double17(k.R) << ","
                          << format_double17(k.P) << "," << k.L << "," << to_string(k.method)
                          << "\n";
            } else {
                std::cout << "{\"alpha\":" << format_double17(k.alpha)
                          << ",\"R\":" << format_double17(k.R)
                          << ",\"P\":" << format_double17(k.P) << ",\"L\":" << k.L
                          << ",\"method\":\"" << to_string(k.method) << "\"}\n";
            }
            return kExitOk;
        }
        if (app.got_subcommand(distance_cmd)) {
            DomainSpec spec = load_domain_file(domain_path);
            Point z = load_point_file(point_path);
            DistanceBound b = d_text.empty()
                                  ? caratheodory_star_origin(spec, z)
                                  : caratheodory_star_sandwich(spec, d_or_ones(d_text, spec.dim()), z);
            if (format == "csv") {
                std::cout << "lower,upper,exact\n"
                          << format_double17(b.lower) << "," << format_double17(b.upper) << ","
                          << (b.exact ? "true" : "false") << "\n";
            } else {
                std::cout << "{\"lower\":" << format_double17(b.lower)
                          << ",\"upper\":" << format_double17(b.upper)
                          << ",\"exact\":" << (b.exact ? "true" : "false") << "}\n";
            }
            return kExitOk;
        }
        if (app.got_subcommand(bounds_cmd)) return run_bounds(bounds_args, format);
        if (app.got_subcommand(example_cmd)) {
            print_interval(ellipsoid_example(example_n, parse_int_list(example_p)), format);
            return kExitOk;
        }
        if (app.got_subcommand(verify_cmd)) {
            if (!verify_all && suite.empty()) {
                std::cerr << "verify needs --suite <name> or --all\n\n" << kSchemaReference;
                return kExitUsage;
            }
            std::optional<double> tol_override;
            if (verify_tol >= 0.0) tol_override = verify_tol;
            return run_verify(suite, verify_all, samples, seed, tol_override, out_path, format);
        }
    } catch (const ValidationError& e) {
        std::cerr << "{\"error\":\"" << e.what() << "\"}\n";
        return kExitDomainError;
    } catch (const ConvergenceError& e) {
        std::cerr << "{\"error\":\"" << e.what() << "\"}\n";
        return kExitDomainError;
    } catch (const std::exception& e) {
        std::cerr << "{\"error\":\"" << e.what() << "\"}\n";
        return kExitDomainError;
    }
    return kExitOk;
}
