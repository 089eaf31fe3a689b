#include "hypconv/decision.hpp"
#include "hypconv/oracle.hpp"
#include "hypconv/term_io.hpp"
#include "hypconv/verdict_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>

using namespace hypconv;

namespace {

constexpr int kExitInput = 2;

std::string complex_text(cdouble z) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.15g%+.15gi", z.real(), z.imag());
    return buf;
}

int run_check(const std::string& file, const std::string& format) {
    ProperTerm t = read_term_file(file);
    Verdict v = decide(t);
    std::cout << (format == "json" ? verdict_to_json(v) + "\n" : verdict_to_text(v));
    return v.uniform ? 0 : 1;
}

int run_limit(const std::string& file, double tol, const std::string& format) {
    ProperTerm t = read_term_file(file);
    LimitValue l = limit_series(t, tol);
    if (format == "json") {
        nlohmann::json j{{"kind", to_string(l.kind)},
                         {"re", l.value.real()},
                         {"im", l.value.imag()},
                         {"error_bound", l.error_bound},
                         {"symbolic", l.symbolic}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "limit kind: " << to_string(l.kind) << "\nvalue: " << complex_text(l.value)
                  << "\nerror bound: " << l.error_bound << "\nform: " << l.symbolic << "\n";
    }
    return 0;
}

int run_sample(const std::string& file, double from, double to, int count) {
    ProperTerm t = read_term_file(file);
    if (count < 2) throw InvalidInput("count must be at least 2");
    std::optional<double> first_omega;
    for (const auto& f : t.factors) {
        if (f.alpha == 0) continue;
        double w = -static_cast<double>(f.beta) / static_cast<double>(f.alpha);
        if (w > 0 && (!first_omega || w < *first_omega)) first_omega = w;
    }
    std::cout << "t,g,region\n";
    for (int i = 0; i < count; ++i) {
        double x = from + (to - from) * i / (count - 1);
        const char* region = first_omega && x >= *first_omega ? "post-omega" : "pre-omega";
        std::printf("%.12g,%.15g,%s\n", x, g_eval(t, x), region);
    }
    return 0;
}

int run_oracle(const std::string& file, const OracleOptions& opt, const std::string& format) {
    ProperTerm t = read_term_file(file);
    Verdict v = decide(t);
    EmpiricalReport r = empirical_verdict(t, opt);
    bool contradiction = (v.uniform && r.classification == Empirical::Diverges) ||
                         (!v.uniform && r.classification == Empirical::Converges);
    if (format == "json") {
        nlohmann::json j{{"classification", to_string(r.classification)},
                         {"reason", r.reason},
                         {"decay_exponent", r.decay_exponent},
                         {"tail_estimate", r.tail_estimate},
                         {"k_max", r.k_max},
                         {"n_max", r.n_max},
                         {"tol", r.tol},
                         {"partial_sums", r.partial_sums},
                         {"decision_uniform", v.uniform},
                         {"contradiction", contradiction}};
        j["sup_sequence"] = nlohmann::json::array();
        for (const auto& e : r.sup_sequence) j["sup_sequence"].push_back({e.k, e.log_m, e.argmax});
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "empirical: " << to_string(r.classification) << " (" << r.reason << ")\n"
                  << "decision: " << (v.uniform ? "uniform" : "not uniform") << "\n"
                  << (contradiction ? "CONTRADICTION\n" : "consistent\n");
    }
    return contradiction ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Uniform convergence of double hypergeometric-type sums"};
    app.require_subcommand(1);
    std::string file, format = "human";
    double tol = 1e-10, from = 0, to = 4;
    int count = 101;
    OracleOptions opt;

    auto add_common = [&](CLI::App* s) {
        s->add_option("file", file, "term description")->required();
        s->add_option("--format", format, "human or json")->check(CLI::IsMember({"human", "json"}));
    };
    auto* check = app.add_subcommand("check", "decide uniform convergence");
    add_common(check);
    auto* limit = app.add_subcommand("limit", "value of the limit series");
    add_common(limit);
    limit->add_option("--tol", tol, "summation tolerance")->check(CLI::PositiveNumber);
    auto* sample = app.add_subcommand("sample-g", "sample g(t) as CSV");
    sample->add_option("file", file, "term description")->required();
    sample->add_option("--from", from);
    sample->add_option("--to", to);
    sample->add_option("--count", count);
    auto* oracle = app.add_subcommand("oracle", "empirical sup-scan check");
    add_common(oracle);
    oracle->add_option("--kmax", opt.k_max);
    oracle->add_option("--nmax", opt.n_max);
    oracle->add_option("--tol", opt.tol)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInput;
    }
    try {
        if (*check) return run_check(file, format);
        if (*limit) return run_limit(file, tol, format);
        if (*sample) return run_sample(file, from, to, count);
        if (*oracle) return run_oracle(file, opt, format);
    } catch (const ContractError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return 0;
}
