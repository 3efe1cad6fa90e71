#include "ordss/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ordss/edmatrix.hpp"
#include "ordss/json_io.hpp"
#include "ordss/random.hpp"

namespace ordss {

namespace {

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("malformed file " + path + ": " + e.what());
    }
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
}

struct CliConfig {
    Index n = 0;
    Index alpha = 0;
    Index m_size = 0;
    std::string construction = "ed";
    std::string scheme_path;
    std::string matrix_path;
    std::string events_path;
    std::string out_path;
    Index user = 0;
    Index node = 0;
    std::uint64_t seed = 1;
};

int cmd_build(const CliConfig& cfg, std::ostream& out) {
    const Scheme scheme = cfg.construction == "mds"
                              ? build_mds_scheme(cfg.n, cfg.alpha, cfg.m_size)
                              : build_ed_scheme(cfg.n, cfg.alpha, cfg.m_size);
    write_file(cfg.out_path, dump_json(scheme_to_json(scheme)));
    out << "wrote " << cfg.out_path << " (q=" << scheme.params().q.value() << ", generator "
        << scheme.generator().rows() << "x" << scheme.generator().cols() << ")\n";
    return 0;
}

int cmd_validate(const CliConfig& cfg, std::ostream& out) {
    const Scheme scheme = scheme_from_json(read_json_file(cfg.scheme_path));
    const OrdssReport report = validate_ordss(scheme);
    out << "ORDSS: " << (report.ok() ? "yes" : "no") << "\n";
    out << "condition (i): " << (report.condition_i_ok ? "ok" : "violated") << "\n";
    out << "condition (ii): " << (report.condition_ii_ok ? "ok" : "violated") << "\n";
    if (report.failing_window) {
        out << "first failing window starts at node " << *report.failing_window << "\n";
    }
    return report.ok() ? 0 : 1;
}

int cmd_bounds(const CliConfig& cfg, std::ostream& out) {
    const RingParams params(cfg.n, cfg.alpha, cfg.m_size, FieldOrder(2));
    out << "reconstruct: " << reconstruct_bound(params) << ", repair: " << repair_bound(params)
        << "\n";
    return 0;
}

int cmd_reconstruct(const CliConfig& cfg, std::ostream& out) {
    const Scheme scheme = scheme_from_json(read_json_file(cfg.scheme_path));
    const ReconstructionPlan plan = plan_reconstruction(scheme, cfg.user);
    if (!cfg.out_path.empty()) write_file(cfg.out_path, dump_json(plan_to_json(plan)));
    const FpRowVector data = random_data_vector(scheme.params().q, scheme.params().m_size, cfg.seed);
    const SimulationResult result = simulate(scheme, data, {Event::request(cfg.user)});
    out << result.trace.render_text();
    out << result.trace.render_summary_json() << "\n";
    return 0;
}

int cmd_repair(const CliConfig& cfg, std::ostream& out) {
    const Scheme scheme = scheme_from_json(read_json_file(cfg.scheme_path));
    const RepairPlan plan = plan_repair(scheme, cfg.node);
    if (!cfg.out_path.empty()) write_file(cfg.out_path, dump_json(plan_to_json(plan)));
    const FpRowVector data = random_data_vector(scheme.params().q, scheme.params().m_size, cfg.seed);
    const SimulationResult result =
        simulate(scheme, data, {Event::fail(cfg.node), Event::repair(cfg.node)});
    out << result.trace.render_text();
    out << result.trace.render_summary_json() << "\n";
    return 0;
}

int cmd_simulate(const CliConfig& cfg, std::ostream& out) {
    const Scheme scheme = scheme_from_json(read_json_file(cfg.scheme_path));
    const std::vector<Event> events = events_from_json(read_json_file(cfg.events_path));
    const FpRowVector data = random_data_vector(scheme.params().q, scheme.params().m_size, cfg.seed);
    const SimulationResult result = simulate(scheme, data, events);
    out << result.trace.render_text();
    out << result.trace.render_summary_json() << "\n";
    return 0;
}

int cmd_weakly_mds(const CliConfig& cfg, std::ostream& out) {
    const FpMatrix m = matrix_from_json(read_json_file(cfg.matrix_path));
    const WeaklyMdsReport report = is_weakly_mds(m);
    if (report.ok) {
        out << "weakly-mds: yes\n";
        return 0;
    }
    out << "weakly-mds: no (window start " << report.failing_start << ")\n";
    return 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Distributed storage schemes over unidirectional ring networks"};
    app.name("ordss");
    app.require_subcommand(1);

    CliConfig cfg;

    CLI::App* build = app.add_subcommand("build", "Construct a scheme and write it as JSON");
    build->add_option("--n", cfg.n, "storage node count")->required();
    build->add_option("--alpha", cfg.alpha, "symbols per node")->required();
    build->add_option("--m", cfg.m_size, "original data size")->required();
    build->add_option("--construction", cfg.construction, "generator construction")
        ->check(CLI::IsMember({"ed", "mds"}))
        ->capture_default_str();
    build->add_option("--out", cfg.out_path, "output scheme file")->required();

    CLI::App* validate = app.add_subcommand("validate", "Check the adjacency rank conditions");
    validate->add_option("--scheme", cfg.scheme_path, "scheme file")->required();

    CLI::App* bounds =
        app.add_subcommand("bounds", "Print the reconstructing and repair bandwidth bounds");
    bounds->add_option("--n", cfg.n, "storage node count")->required();
    bounds->add_option("--alpha", cfg.alpha, "symbols per node")->required();
    bounds->add_option("--m", cfg.m_size, "original data size")->required();

    CLI::App* reconstruct =
        app.add_subcommand("reconstruct", "Plan and trace one user's optimal download");
    reconstruct->add_option("--scheme", cfg.scheme_path, "scheme file")->required();
    reconstruct->add_option("--user", cfg.user, "user node index (1-based)")->required();
    reconstruct->add_option("--out", cfg.out_path, "plan JSON output file");
    reconstruct->add_option("--seed", cfg.seed, "seed for the simulated data")
        ->capture_default_str();

    CLI::App* repair = app.add_subcommand("repair", "Plan and trace an exact node repair");
    repair->add_option("--scheme", cfg.scheme_path, "scheme file")->required();
    repair->add_option("--node", cfg.node, "failed node index (1-based)")->required();
    repair->add_option("--out", cfg.out_path, "plan JSON output file");
    repair->add_option("--seed", cfg.seed, "seed for the simulated data")->capture_default_str();

    CLI::App* sim = app.add_subcommand("simulate", "Run an event sequence on the ring");
    sim->add_option("--scheme", cfg.scheme_path, "scheme file")->required();
    sim->add_option("--events", cfg.events_path, "event file")->required();
    sim->add_option("--seed", cfg.seed, "seed for the simulated data")->capture_default_str();

    CLI::App* wmds = app.add_subcommand("weakly-mds", "Check the cyclic window independence");
    wmds->add_option("--matrix", cfg.matrix_path, "matrix file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (build->parsed()) return cmd_build(cfg, out);
        if (validate->parsed()) return cmd_validate(cfg, out);
        if (bounds->parsed()) return cmd_bounds(cfg, out);
        if (reconstruct->parsed()) return cmd_reconstruct(cfg, out);
        if (repair->parsed()) return cmd_repair(cfg, out);
        if (sim->parsed()) return cmd_simulate(cfg, out);
        if (wmds->parsed()) return cmd_weakly_mds(cfg, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "usage error: no subcommand given\n";
    return 2;
}

}  // namespace ordss
