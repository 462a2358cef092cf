#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "klq/io.hpp"
#include "klq/lifting.hpp"
#include "klq/sections.hpp"
#include "klq/verify.hpp"

namespace {

void write_output(const std::string& path, const std::string& data) {
    if (path.empty()) {
        std::cout << data;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file: " + path);
    os << data;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Kazhdan-Lusztig / moment-graph toolkit for simply-laced Weyl groups"};
    app.require_subcommand(1);

    std::string group = "A3", x_word, y_word, format = "json", out_path;
    int max_ldiff = -1;
    uint64_t sample = 0, seed = 42, budget = 10'000'000, search_cap = 200'000;
    int workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    bool with_witness = false, no_dimv = false, no_search = false, dump_basis = false;

    auto add_group = [&](CLI::App* cmd) {
        cmd->add_option("--group", group, "group type: A1..A7, D4..D6, E6 (E7/E8 build-only)")
            ->required();
    };
    auto add_xy = [&](CLI::App* cmd) {
        cmd->add_option("--x", x_word, "lower endpoint, 1-based generator word or \"e\"")
            ->required();
        cmd->add_option("--y", y_word, "upper endpoint, 1-based generator word")->required();
    };

    CLI::App* compute = app.add_subcommand("compute", "full cross-checked report for one interval");
    add_group(compute);
    add_xy(compute);
    compute->add_option("--budget", budget, "subset-search budget");
    compute->add_option("--search-cap", search_cap, "skip the independent search above this size");
    compute->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    compute->add_option("--out", out_path, "output file (stdout when omitted)");
    compute->add_flag("--no-dimv", no_dimv, "skip the linear-algebra oracle");
    compute->add_flag("--no-search", no_search, "skip the independent subset search");
    compute->add_flag("--basis", dump_basis, "also dump a basis of V_{x,y} as JSON");

    CLI::App* verify = app.add_subcommand("verify", "sweep comparable pairs, check every identity");
    add_group(verify);
    verify->add_option("--max-ldiff", max_ldiff, "cap on l(y) - l(x)");
    verify->add_option("--sample", sample, "stratified sample size (0 = exhaustive)");
    verify->add_option("--seed", seed, "mt19937_64 seed for sampling");
    verify->add_option("--budget", budget, "subset-search budget");
    verify->add_option("--search-cap", search_cap, "skip the independent search above this size");
    verify->add_option("--workers", workers, "parallel workers");
    verify->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--out", out_path, "output file (stdout when omitted)");
    verify->add_flag("--no-dimv", no_dimv, "skip the linear-algebra oracle");
    verify->add_flag("--no-search", no_search, "skip the independent subset search");

    CLI::App* exportdot = app.add_subcommand("export-dot", "Graphviz moment graph of [x, y]");
    add_group(exportdot);
    add_xy(exportdot);
    exportdot->add_option("--out", out_path, "output file (stdout when omitted)");
    exportdot->add_flag("--witness", with_witness, "color a minimum generating witness");

    CLI::App* bench = app.add_subcommand("bench", "time the main computation phases");
    add_group(bench);
    bench->add_option("--max-ldiff", max_ldiff);
    bench->add_option("--sample", sample);
    bench->add_option("--seed", seed);
    bench->add_option("--workers", workers);

    CLI11_PARSE(app, argc, argv);

    klq::RunConfig cfg;
    cfg.group = group;
    if (max_ldiff >= 0) cfg.max_ldiff = max_ldiff;
    if (sample > 0) cfg.sample_count = sample;
    cfg.seed = seed;
    cfg.budget = budget;
    cfg.search_cap = search_cap;
    cfg.workers = workers;
    cfg.with_dimv = !no_dimv;
    cfg.with_search = !no_search;

    try {
        if (compute->parsed()) {
            const klq::CoxeterSystem sys = klq::CoxeterSystem::build(cfg.group);
            klq::Bruhat order(sys);
            klq::KLContext kl(sys, order);
            const klq::Element x = sys.parse_word(x_word);
            const klq::Element y = sys.parse_word(y_word);
            if (!order.leq(x, y)) {
                std::cerr << "error: x is not below y in Bruhat order\n";
                return 2;
            }
            const klq::IntervalReport rep = klq::compute_interval_report(sys, order, kl, x, y, cfg);
            if (format == "csv") {
                klq::VerifySummary one;
                one.group = cfg.group;
                one.reports.push_back(rep);
                write_output(out_path, klq::reports_csv(one));
            } else {
                write_output(out_path, klq::interval_report_json(sys, order, kl, x, y, rep) + "\n");
            }
            if (dump_basis && !(x == y)) {
                klq::IntervalGraph g = klq::build_interval_graph(sys, order, x, y);
                std::cerr << klq::basis_json(g, klq::SectionSystem(g).basis()) << "\n";
            }
            return rep.failed() ? 1 : 0;
        }

        if (verify->parsed()) {
            const klq::VerifySummary summary = klq::run_verify(cfg);
            write_output(out_path, format == "csv" ? klq::reports_csv(summary)
                                                   : klq::summary_json(summary));
            std::cerr << "group " << summary.group << ": " << summary.total << " intervals, "
                      << summary.failures << " failures, " << summary.budget_exceeded
                      << " budget-exceeded, " << summary.errors << " errors\n";
            return summary.failures == 0 ? 0 : 1;
        }

        if (exportdot->parsed()) {
            const klq::CoxeterSystem sys = klq::CoxeterSystem::build(cfg.group);
            klq::Bruhat order(sys);
            const klq::Element x = sys.parse_word(x_word);
            const klq::Element y = sys.parse_word(y_word);
            if (!order.leq(x, y)) {
                std::cerr << "error: x is not below y in Bruhat order\n";
                return 2;
            }
            klq::IntervalGraph g = klq::build_interval_graph(sys, order, x, y);
            std::ostringstream os;
            if (with_witness && !(x == y)) {
                klq::KLContext kl(sys, order);
                const klq::EdgeSet w = klq::reported_min_witness(sys, order, kl, g, cfg);
                klq::write_dot(os, g, &w);
            } else {
                klq::write_dot(os, g);
            }
            write_output(out_path, os.str());
            return 0;
        }

        if (bench->parsed()) {
            using clock = std::chrono::steady_clock;
            auto ms = [](clock::duration d) {
                return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
            };
            auto t0 = clock::now();
            const klq::CoxeterSystem sys = klq::CoxeterSystem::build(cfg.group);
            auto t1 = clock::now();
            klq::Bruhat order(sys);
            auto t2 = clock::now();
            const klq::VerifySummary summary = klq::run_verify(cfg);
            auto t3 = clock::now();
            std::cout << "build_system_ms=" << ms(t1 - t0) << "\n"
                      << "bruhat_order_ms=" << ms(t2 - t1) << "\n"
                      << "verify_sweep_ms=" << ms(t3 - t2) << "\n"
                      << "intervals=" << summary.total << "\n"
                      << "failures=" << summary.failures << "\n";
            if (summary.total > 0)
                std::cout << "ms_per_interval="
                          << static_cast<double>(ms(t3 - t2)) / static_cast<double>(summary.total)
                          << "\n";
            return summary.failures == 0 ? 0 : 1;
        }
    } catch (const klq::TheoremViolation& e) {
        std::cerr << "THEOREM VIOLATION: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
