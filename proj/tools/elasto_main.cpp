#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "elasto/harness.hpp"

using namespace elasto;

namespace {

struct Overrides {
    std::string out, format;
    bool no_time = false;
};

// foo.csv -> foo_pivot.csv
std::string pivot_path(const std::string& out) {
    const auto dot = out.find_last_of('.');
    const auto slash = out.find_last_of('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return out + "_pivot";
    return out.substr(0, dot) + "_pivot" + out.substr(dot);
}

int run(ExperimentConfig cfg, const Overrides& o) {
    if (!o.out.empty()) cfg.output = o.out;
    if (!o.format.empty()) cfg.format = o.format;
    if (o.no_time) cfg.record_time = false;
    const TableFormat tf = cfg.format == "text" ? TableFormat::text : TableFormat::csv;
    RunLog log;
    const auto rows = run_experiment(cfg, &log);
    for (const auto& s : log.skipped) std::cerr << "skipped " << s << '\n';
    const std::string table = format_table(rows, tf);
    const std::string pivot = cfg.pivot != "none" ? format_pivot(rows, cfg.pivot, tf) : std::string();
    if (cfg.output.empty()) {
        std::cout << table;
        if (!pivot.empty()) std::cout << '\n' << pivot;
    } else {
        emit_table(table, cfg.output);
        std::cerr << "wrote " << cfg.output << '\n';
        if (!pivot.empty()) {
            emit_table(pivot, pivot_path(cfg.output));
            std::cerr << "wrote " << pivot_path(cfg.output) << '\n';
        }
    }
    for (const auto& r : rows)
        if (!r.converged) return 2;
    return 0;
}

void add_output_flags(CLI::App* a, Overrides& o) {
    a->add_option("--out", o.out, "Output table path (stdout when empty); the pivot goes to <out>_pivot");
    a->add_option("--format", o.format, "csv or text")->check(CLI::IsMember({"csv", "text"}));
    a->add_flag("--no-time", o.no_time, "Leave the seconds column empty (bit-identical output)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Time-harmonic elastic scattering solvers in 2D"};
    app.require_subcommand(0, 1);
    int threads = 0;
    Overrides o;
    std::string config, preset;
    app.add_option("--threads", threads, "OpenMP threads (ELASTO_THREADS overrides)");
    app.add_option("--config", config, "Run this config file")->check(CLI::ExistingFile);
    app.add_option("--preset", preset, "Run this built-in experiment");
    add_output_flags(&app, o);

    auto* run_cmd = app.add_subcommand("run", "Run an experiment from a config file");
    run_cmd->add_option("config", config, "JSON config (// comments allowed)")->required()->check(CLI::ExistingFile);
    add_output_flags(run_cmd, o);

    auto* preset_cmd = app.add_subcommand("preset", "Run, list or print a built-in experiment");
    bool list = false, dump = false;
    preset_cmd->add_option("name", preset, "Preset name (see --list)");
    preset_cmd->add_flag("--list", list, "List preset names");
    preset_cmd->add_flag("--dump", dump, "Print the preset config instead of running it");
    add_output_flags(preset_cmd, o);

    auto* self_cmd = app.add_subcommand("selftest", "Quick consistency checks");

    CLI11_PARSE(app, argc, argv);
    if (const char* env = std::getenv("ELASTO_THREADS")) threads = std::atoi(env);
    set_thread_count(threads);

    try {
        if (*self_cmd) return run_selftest(std::cout) ? 0 : 1;
        if (list) {
            for (const auto& n : preset_names()) std::cout << n << '\n';
            return 0;
        }
        if (!config.empty()) return run(load_config(config), o);
        if (preset.empty()) {
            std::cerr << app.help();
            return 1;
        }
        if (dump) {
            std::cout << preset_text(preset);
            return 0;
        }
        return run(parse_config(preset_text(preset)), o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
