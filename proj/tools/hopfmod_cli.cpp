// Command-line driver: build named examples, run verification suites,
// compute indicator tables, export JSON/CSV reports.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "hopfmod/verify.hpp"

using namespace hopfmod;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitConstructionError = 2;
constexpr int kExitResourceCap = 3;

struct CommonOptions {
    std::string group;
    std::string table_path;
    long radford_n = 0;
    bool make_double = false;
    unsigned long field_order = 0;
    long max_m = 3;
    long max_l = 4;
    std::uint64_t seed = 0x5eed;
    unsigned jobs = 1;
    std::string out_path;
    long precision_cap = 2048;

    void attach(CLI::App* app) {
        app->add_option("--group", group, "registry group name (Z2 Z3 Z4 Z5 S3 D4 Q8)");
        app->add_option("--table", table_path, "path to a JSON multiplication table");
        app->add_option("--radford", radford_n, "Radford example on K[Z_n], odd n <= 9");
        app->add_flag("--double", make_double, "take the Drinfel'd double of the group algebra");
        app->add_option("--field-order", field_order, "cyclotomic field order override");
        app->add_option("--max-m", max_m, "sweep bound for the first lattice coordinate");
        app->add_option("--max-l", max_l, "sweep bound for the second lattice coordinate");
        app->add_option("--seed", seed, "RNG seed recorded in every report");
        app->add_option("--jobs", jobs, "parallel workers for sweeps");
        app->add_option("--out", out_path, "write the JSON report to this path");
        app->add_option("--precision-cap", precision_cap, "bit cap for numeric root localization");
    }

    ExampleSpec spec() const {
        ExampleSpec s;
        s.group = group;
        s.table_path = table_path;
        s.radford_n = radford_n;
        s.make_double = make_double;
        s.field_order = field_order;
        if (s.group.empty() && s.table_path.empty() && s.radford_n == 0)
            throw BadInput("pick an example: --group, --table, or --radford");
        return s;
    }

    RootConfig roots() const {
        RootConfig r;
        r.max_bits = precision_cap;
        return r;
    }
};

Json spec_json(const CommonOptions& opt) {
    Json j;
    j["example"] = opt.spec().describe();
    j["field_order_override"] = opt.field_order;
    j["max_m"] = opt.max_m;
    j["max_l"] = opt.max_l;
    j["seed"] = opt.seed;
    return j;
}

void write_report(const CommonOptions& opt, const Json& report) {
    if (opt.out_path.empty()) return;
    std::ofstream out(opt.out_path);
    check(static_cast<bool>(out), "cannot write report to " + opt.out_path);
    out << report.dump(2) << "\n";
}

Json checks_json(const CheckList& checks) {
    Json arr = Json::array();
    for (const auto& c : checks) {
        Json item{{"name", c.name}, {"pass", c.pass}};
        if (!c.pass) item["witness"] = c.witness;
        arr.push_back(std::move(item));
    }
    return arr;
}

int run_build(const CommonOptions& opt) {
    Example ex = build_example(opt.spec());
    Json report;
    report["schema"] = 1;
    report["command"] = "build";
    report["spec"] = spec_json(opt);

    std::cout << "example: " << ex.spec.describe() << "\n";
    std::cout << "dimension: " << ex.alg().dim() << "\n";
    std::cout << "field order: " << ex.field_order << "\n";
    report["dimension"] = ex.alg().dim();
    report["field_order"] = ex.field_order;

    if (ex.has_qt) {
        Analysis an = analyze(ex, opt.roots(), opt.seed);
        std::cout << "exponent N: " << an.md.N << "\n";
        std::cout << "simples k: " << an.sd.k << "\n";
        std::cout << "degrees:";
        for (long d : an.sd.degrees) std::cout << " " << d;
        std::cout << "\n";
        std::cout << "linear modular action: " << (an.md.linear ? "yes" : "no") << "\n";
        report["exponent"] = an.md.N;
        report["k"] = an.sd.k;
        report["degrees"] = an.sd.degrees;
        report["semisimple"] = semisimple_to_json(an.sd);
        report["modular"] = modular_to_json(an.md);
        report["hopf_symbols"] = hopf_symbol_table_json(an.sd, an.md);
        if (!opt.out_path.empty() && opt.out_path.size() > 4 &&
            opt.out_path.substr(opt.out_path.size() - 4) == ".csv") {
            std::ofstream out(opt.out_path);
            out << s_matrix_csv(an.md);
            std::cout << "wrote approximate S-matrix CSV to " << opt.out_path << "\n";
            return kExitPass;
        }
    } else {
        SemisimpleData sd = split_center(*ex.base, opt.roots(), opt.seed);
        std::cout << "simples k: " << sd.k << "\n";
        std::cout << "degrees:";
        for (long d : sd.degrees) std::cout << " " << d;
        std::cout << "\n";
        report["k"] = sd.k;
        report["degrees"] = sd.degrees;
        report["semisimple"] = semisimple_to_json(sd);
        report["algebra"] = hopf_to_json(*ex.base);
    }
    write_report(opt, report);
    return kExitPass;
}

int run_verify(const CommonOptions& opt, const std::string& suite, bool all_units) {
    Example ex = build_example(opt.spec());
    std::optional<Analysis> an;
    auto need_analysis = [&]() -> Analysis& {
        if (!an) an = analyze(ex, opt.roots(), opt.seed);
        return *an;
    };

    CheckList checks;
    auto run_suite = [&](const std::string& name) {
        CheckList c;
        if (name == "axioms")
            c = verify_axioms_suite(ex);
        else if (name == "quasitriangular")
            c = verify_quasitriangular_suite(ex);
        else if (name == "integrals")
            c = verify_integrals_suite(ex);
        else if (name == "wedderburn")
            c = verify_wedderburn_suite(ex, need_analysis());
        else if (name == "modular-identities")
            c = verify_modular_identities_suite(ex, need_analysis());
        else if (name == "congruence")
            c = verify_congruence_suite(ex, need_analysis(), all_units);
        else if (name == "equivariance")
            c = verify_equivariance_suite(ex, need_analysis(), opt.max_m, opt.max_l, opt.jobs);
        else if (name == "orbit")
            c = verify_orbit_suite(ex, need_analysis(), 10, 4, opt.seed, opt.jobs);
        else if (name == "galois")
            c = verify_galois_suite(ex, need_analysis());
        else if (name == "hopf-symbol")
            c = verify_hopf_symbol_suite(ex, need_analysis());
        else
            throw BadInput("unknown suite: " + name);
        checks.insert(checks.end(), c.begin(), c.end());
    };

    if (suite == "all") {
        run_suite("axioms");
        if (ex.has_qt) {
            for (const char* s : {"quasitriangular", "integrals", "wedderburn", "modular-identities",
                                  "congruence", "galois", "hopf-symbol"})
                run_suite(s);
            if (ex.dh) {
                run_suite("equivariance");
                run_suite("orbit");
            }
        } else {
            run_suite("integrals");
        }
    } else {
        run_suite(suite);
    }

    std::size_t failed = 0;
    for (const auto& c : checks) {
        std::cout << (c.pass ? "pass" : "FAIL") << "  " << c.name << "\n";
        if (!c.pass) {
            ++failed;
            if (!c.witness.empty()) std::cout << "      " << c.witness << "\n";
        }
    }
    std::cout << checks.size() - failed << "/" << checks.size() << " checks passed\n";

    Json report;
    report["schema"] = 1;
    report["command"] = "verify";
    report["suite"] = suite;
    report["spec"] = spec_json(opt);
    report["checks"] = checks_json(checks);
    report["passed"] = failed == 0;
    write_report(opt, report);
    return failed == 0 ? kExitPass : kExitVerificationFailure;
}

int run_indicators(const CommonOptions& opt, const std::string& module_sel) {
    Example ex = build_example(opt.spec());
    check(ex.dh != nullptr, "indicator tables need a double: pass --double");
    Analysis an = analyze(ex, opt.roots(), opt.seed);

    SemisimpleData sd_base = split_center(*ex.base, opt.roots(), opt.seed);
    std::vector<std::size_t> module_indices;
    if (module_sel == "all") {
        for (std::size_t i = 0; i < sd_base.k; ++i) module_indices.push_back(i);
    } else {
        std::size_t idx = std::stoul(module_sel);
        check(idx < sd_base.k,
              "module index out of range: the base has " + std::to_string(sd_base.k) + " simples");
        module_indices.push_back(idx);
    }

    Vec lambda_coords = indicator_integral_coords(*an.ctx);
    Json rows = Json::array();
    bool oracle_ok = true;
    for (std::size_t vi : module_indices) {
        HModule v = simple_module(ex.base, sd_base, vi, opt.roots());
        for (long m = 1; m <= opt.max_m; ++m)
            for (long l = -opt.max_l; l <= opt.max_l; ++l) {
                // the integral row carries the independent oracle column
                Cyclotomic value = indicator(*an.ctx, v, m, l, lambda_coords);
                Cyclotomic oracle = nu_oracle(*an.ctx, v, m, l);
                oracle_ok = oracle_ok && value == oracle;
                rows.push_back(Json{{"V", vi},
                                    {"m", m},
                                    {"l", l},
                                    {"z_label", "integral"},
                                    {"value", cyclotomic_to_json(value)},
                                    {"nu_oracle", cyclotomic_to_json(oracle)}});
                for (std::size_t zi = 0; zi < an.sd.k; ++zi) {
                    Vec z = zero_vec(an.sd.k, ex.field_order);
                    z[zi] = Cyclotomic::one();
                    rows.push_back(Json{{"V", vi},
                                        {"m", m},
                                        {"l", l},
                                        {"z_label", "e" + std::to_string(zi + 1)},
                                        {"value", cyclotomic_to_json(indicator(*an.ctx, v, m, l, z))}});
                }
            }
    }

    Json report;
    report["schema"] = 1;
    report["command"] = "indicators";
    report["spec"] = spec_json(opt);
    report["oracle_agrees"] = oracle_ok;
    report["rows"] = rows;
    write_report(opt, report);
    std::cout << rows.size() << " indicator rows computed; oracle column "
              << (oracle_ok ? "agrees" : "DISAGREES") << "\n";
    return oracle_ok ? kExitPass : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact modular data of Drinfel'd doubles and factorizable Hopf algebras"};
    app.require_subcommand(1);

    CommonOptions build_opt, verify_opt, ind_opt;
    std::string suite = "all";
    std::string module_sel = "all";
    bool all_units = false;

    CLI::App* build_cmd = app.add_subcommand("build", "construct an example and print its headline data");
    build_opt.attach(build_cmd);

    CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("suite", suite,
                           "axioms | quasitriangular | integrals | wedderburn | modular-identities | "
                           "congruence | equivariance | orbit | galois | hopf-symbol | all");
    verify_cmd->add_flag("--all-units", all_units, "widen the congruence q-set to every unit mod N");
    verify_opt.attach(verify_cmd);

    CLI::App* ind_cmd = app.add_subcommand("indicators", "tabulate equivariant indicators");
    ind_cmd->add_option("--module", module_sel, "simple module index of the base algebra, or 'all'");
    ind_opt.attach(ind_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        if (build_cmd->parsed()) return run_build(build_opt);
        if (verify_cmd->parsed()) return run_verify(verify_opt, suite, all_units);
        if (ind_cmd->parsed()) return run_indicators(ind_opt, module_sel);
    } catch (const DimensionOverflow& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const PrecisionExhausted& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConstructionError;
    }
    return kExitConstructionError;
}
