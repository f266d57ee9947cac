#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "pl/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"dynamic lower envelopes of pseudo-lines"};
    app.require_subcommand(1);

    std::string script, out_svg, left_path, right_path, out_tsv, trace_svg;
    pl::cli::FuzzOptions fopt;
    std::vector<std::size_t> sizes{256, 1024, 4096, 16384};
    std::size_t trials = 1000;

    CLI::App* run = app.add_subcommand("run", "execute an ops script");
    run->add_option("file", script, "ops script")->required();

    CLI::App* fuzz = app.add_subcommand("fuzz", "randomized oracle checking");
    fuzz->add_option("--seed", fopt.seed, "RNG seed");
    fuzz->add_option("--cases", fopt.cases, "number of cases");
    fuzz->add_option("--max-n", fopt.max_n, "max structure size");

    CLI::App* bench = app.add_subcommand("bench", "operation-count benchmark (CSV)");
    bench->add_option("--sizes", sizes, "structure sizes")->delimiter(',');
    bench->add_option("--trials", trials, "operations per size");

    CLI::App* plot = app.add_subcommand("plot", "render a script's envelope as SVG");
    plot->add_option("file", script, "ops script")->required();
    plot->add_option("out", out_svg, "output SVG path")->required();

    CLI::App* trace = app.add_subcommand("trace", "envelope intersection trace (TSV)");
    trace->add_option("leftfile", left_path, "left pseudo-line set")->required();
    trace->add_option("rightfile", right_path, "right pseudo-line set")->required();
    trace->add_option("out", out_tsv, "output TSV path")->required();
    trace->add_option("--svg", trace_svg, "also render both envelopes as SVG");

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) return pl::cli::run_file(script, std::cout, std::cerr);
    if (fuzz->parsed()) return pl::cli::fuzz_main(fopt, std::cout, std::cerr);
    if (bench->parsed()) {
        std::cout << pl::cli::bench_csv(pl::cli::bench(sizes, trials));
        return 0;
    }
    if (plot->parsed()) return pl::cli::plot_file(script, out_svg, std::cerr);
    if (trace->parsed())
        return pl::cli::trace_files(left_path, right_path, out_tsv, trace_svg, std::cerr);
    return 1;
}
