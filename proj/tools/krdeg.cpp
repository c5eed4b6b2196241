#include <CLI11.hpp>
#include <iostream>

#include "krdeg/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Kirillov-Reshetikhin dual equivalence graphs"};
    app.require_subcommand(1);

    krdeg::RunConfig cfg;
    std::string command;

    auto add_common = [&](CLI::App* sub, bool needs_shapes) {
        auto* opt = sub->add_option("--shapes", cfg.shapes, "rectangles as RxS,RxS,... (R rows, S columns)");
        if (needs_shapes) opt->required();
        sub->add_option("--format", cfg.format, "dot|json|text");
        sub->add_option("--out", cfg.out, "output path (default stdout)");
        sub->add_option("--cache-dir", cfg.cache_dir, "graph cache directory (or KRDEG_CACHE_DIR)");
        sub->add_option("--guard", cfg.guard, "vertex-count guard limit");
        sub->add_flag("--force", cfg.force, "build past the guard limit");
        sub->add_option("--jobs", cfg.jobs, "worker threads");
    };

    auto* graph = app.add_subcommand("graph", "build the graph and emit it");
    add_common(graph, true);
    graph->callback([&] { command = "graph"; });

    auto* components = app.add_subcommand("components", "component sizes and charge residues");
    add_common(components, true);
    components->callback([&] { command = "components"; });

    auto* chargecmd = app.add_subcommand("charge", "statistics of one element");
    chargecmd->add_option("--element", cfg.element_path, "tensor element JSON file")->required();
    chargecmd->add_option("--out", cfg.out, "output path (default stdout)");
    chargecmd->callback([&] { command = "charge"; });

    auto* character = app.add_subcommand("character", "schur expansions of component characters");
    add_common(character, true);
    character->add_option("--component", cfg.component, "restrict to one component");
    character->callback([&] { command = "character"; });

    auto* verify = app.add_subcommand("verify", "run a named property suite");
    add_common(verify, true);
    verify->add_option("--suite", cfg.suite,
                       "thm-components|thm-commutator|thm-characters|conj-plethysm|props-charge")
        ->required();
    verify->callback([&] { command = "verify"; });

    CLI11_PARSE(app, argc, argv);

    try {
        if (command == "graph") return krdeg::cmd_graph(cfg, std::cout, std::cerr);
        if (command == "components") return krdeg::cmd_components(cfg, std::cout, std::cerr);
        if (command == "charge") return krdeg::cmd_charge(cfg, std::cout, std::cerr);
        if (command == "character") return krdeg::cmd_character(cfg, std::cout, std::cerr);
        if (command == "verify") return krdeg::cmd_verify(cfg, std::cout, std::cerr);
    } catch (const krdeg::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
