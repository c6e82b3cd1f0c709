#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "hart/acceptance.hpp"
#include "hart/commands.hpp"

using namespace hart;

namespace {

int emit(const CommandResult& r, OutputFormat fmt, const std::string& output) {
    std::string text;
    switch (fmt) {
        case OutputFormat::Json: text = dump(r.report); break;
        case OutputFormat::Text: text = r.text; break;
        case OutputFormat::Dot:
            if (r.dot.empty()) throw Error("ConfigError", "this command has no DOT output");
            text = r.dot;
            break;
    }
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output, std::ios::binary);
        if (!out) throw Error("IOError", "cannot write " + output);
        out << text;
    }
    return r.exit_code;
}

Presentation load(const std::string& path, RunConfig& cfg) {
    Json j = read_json_file(path);
    // A cone report carries its algebra under "algebra".
    if (j.is_object() && !j.contains("vertices") && j.contains("algebra")) j = Json(j["algebra"]);
    cfg.length_cap = length_cap_of(j, cfg.length_cap);
    return presentation_from_json(j);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Checks n-completeness, tau_n-closures, cones and derived windows of bound quiver algebras"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand

    std::uint64_t seed = kDefaultSeed;
    std::string format = "text", output, window = "-2:2";
    app.add_option("--seed", seed, "random seed, recorded in every report");
    app.add_option("--format", format, "json, dot or text")->check(CLI::IsMember({"json", "dot", "text"}));
    app.add_option("-o,--output", output, "write to a file instead of stdout");

    std::string file;
    std::size_t n = 1;
    auto with_file = [&](CLI::App* sub) {
        sub->add_option("file", file, "algebra JSON")->required()->check(CLI::ExistingFile);
        sub->add_option("-n", n, "n >= 1")->check(CLI::PositiveNumber);
    };

    auto* check = app.add_subcommand("check", "verify n-completeness; exit 0 iff n-complete");
    with_file(check);
    auto* closure = app.add_subcommand("closure", "tau_n-closure of D(Lambda)");
    with_file(closure);
    bool modules = false;
    closure->add_flag("--modules", modules, "include module matrices in the JSON report");
    auto* cone = app.add_subcommand("cone", "the cone End(M) as an algebra file");
    with_file(cone);
    auto* quiver = app.add_subcommand("quiver", "DOT of the AR quiver of the tau_n-closure");
    with_file(quiver);
    auto* derived = app.add_subcommand("derived", "U_n on a window of S_n powers; exit 0 iff it verifies");
    with_file(derived);
    derived->add_option("--window", window, "lo:hi");

    int m = 4;
    std::size_t n_max = 3;
    auto* tower_cmd = app.add_subcommand("tower", "iterate cones from linear A_m; exit 0 iff every level passes");
    tower_cmd->add_option("-m", m, "m >= 1")->check(CLI::PositiveNumber);
    tower_cmd->add_option("--n-max", n_max, "last level")->check(CLI::PositiveNumber);

    std::string cylinder;
    auto* family = app.add_subcommand("family", "the translation quiver Q^(n) of a Dynkin quiver");
    with_file(family);
    family->add_option("--cylinder", cylinder, "lo:hi window of the cylinder instead of the cone");

    std::string out_dir, data_dir = HART_DATA_DIR;
    std::size_t random_modules = 200;
    auto* paper = app.add_subcommand("paper", "run every acceptance criterion; exit 0 iff all pass");
    paper->add_option("--out", out_dir, "directory for reports and DOT files");
    paper->add_option("--data", data_dir, "golden data directory");
    paper->add_option("--random-modules", random_modules, "size of the property suite");

    CLI11_PARSE(app, argc, argv);

    try {
        RunConfig cfg = apply_env({});
        cfg.seed = seed;
        cfg.format = parse_format(format);
        cfg.window = parse_window(window);
        if (*check) return emit(cmd_check(load(file, cfg), n, cfg), cfg.format, output);
        if (*closure) return emit(cmd_closure(load(file, cfg), n, cfg, modules), cfg.format, output);
        if (*cone) return emit(cmd_cone(load(file, cfg), n, cfg), cfg.format, output);
        if (*quiver) {
            if (app.get_option("--format")->count() == 0) cfg.format = OutputFormat::Dot;
            return emit(cmd_quiver(load(file, cfg), n, cfg), cfg.format, output);
        }
        if (*derived) return emit(cmd_derived(load(file, cfg), n, cfg), cfg.format, output);
        if (*tower_cmd) return emit(cmd_tower(m, n_max, cfg), cfg.format, output);
        if (*family) {
            auto p = load(file, cfg);
            if (cylinder.empty()) return emit(cmd_family(p.quiver, n, FamilyKind::Cone, 0, 0, cfg), cfg.format, output);
            Window w = parse_window(cylinder);
            return emit(cmd_family(p.quiver, n, FamilyKind::Cylinder, w.lo, w.hi, cfg), cfg.format, output);
        }
        if (*paper) {
            AcceptanceConfig ac;
            ac.data_dir = data_dir;
            ac.run = cfg;
            ac.random_modules = random_modules;
            auto run = run_acceptance(ac);
            std::cout << format_table(run) << std::flush;
            if (!out_dir.empty()) write_artifacts(run, out_dir);
            return run.pass() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
