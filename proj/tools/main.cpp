#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "forestcol/constructions.hpp"
#include "forestcol/engine.hpp"
#include "forestcol/io.hpp"
#include "forestcol/solver.hpp"
#include "forestcol/verifier.hpp"

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitHypothesis = 2;
constexpr int kExitRegime = 3;
constexpr int kExitUsage = 64;
constexpr int kExitSizeGuard = 65;
constexpr int kExitInternal = 70;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

forestcol::ParsedGraph load_graph(const std::string& path, bool warn = true) {
    forestcol::ParsedGraph parsed = forestcol::parse_graph(read_file(path));
    if (warn)
        for (const std::string& note : parsed.report.notes)
            std::cerr << "warning: " << note << "\n";
    return parsed;
}

std::vector<forestcol::VertexId> parse_id_list(const std::string& text) {
    std::vector<forestcol::VertexId> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

std::string potential_line(const forestcol::ScaledPotential& p, const forestcol::Params& params) {
    return p.as_rational(params).str() + " (scaled " + std::to_string(p.value) + ")";
}

forestcol::Constraint constraint_from_name(const std::string& name) {
    if (name == "any") return forestcol::Constraint::any();
    if (name == "nonempty") return forestcol::Constraint::nonempty();
    if (name == "nonempty-nonspanning") return forestcol::Constraint::nonempty_nonspanning();
    throw UsageError("unknown constraint: " + name);
}

nlohmann::ordered_json subset_json(const forestcol::SubsetResult& r,
                                   const forestcol::Params& params) {
    nlohmann::ordered_json out;
    out["subset"] = r.subset;
    out["potential"] = r.potential.as_rational(params).str();
    out["scaled"] = r.potential.value;
    return out;
}

int cmd_color(const std::string& path) {
    auto parsed = load_graph(path);
    forestcol::ColorResult res = forestcol::color(parsed.graph);
    if (res.status == forestcol::ColorStatus::regime_violation) {
        nlohmann::ordered_json out;
        out["error"] = "regime_violation";
        out["d1"] = parsed.graph.params().d1();
        out["d2"] = parsed.graph.params().d2();
        std::cout << out.dump(2) << "\n";
        return kExitRegime;
    }
    if (res.status == forestcol::ColorStatus::hypothesis_violation) {
        nlohmann::ordered_json out;
        out["error"] = "hypothesis_violation";
        out["witness"] = subset_json(*res.witness, parsed.graph.params());
        std::cout << out.dump(2) << "\n";
        return kExitHypothesis;
    }
    std::cout << forestcol::serialize_coloring(res.coloring, &res.trace);
    return 0;
}

int cmd_potential(const std::string& path, const std::string& subset_arg) {
    auto parsed = load_graph(path);
    std::vector<forestcol::VertexId> subset;
    if (subset_arg.empty())
        subset = parsed.graph.vertices();
    else
        subset = parse_id_list(subset_arg);
    auto p = forestcol::subset_potential(parsed.graph, subset);
    std::cout << potential_line(p, parsed.graph.params()) << "\n";
    return 0;
}

int cmd_min_potential(const std::string& path, const std::string& constraint, bool oracle) {
    auto parsed = load_graph(path);
    forestcol::Constraint c = constraint_from_name(constraint);
    forestcol::SubsetResult r = oracle ? forestcol::min_potential_bruteforce(parsed.graph, c)
                                       : forestcol::min_potential(parsed.graph, c);
    std::cout << subset_json(r, parsed.graph.params()).dump(2) << "\n";
    return 0;
}

int cmd_verify(const std::string& path, const std::string& coloring_path) {
    auto parsed = load_graph(path);
    forestcol::Coloring c = forestcol::parse_coloring(read_file(coloring_path));
    forestcol::Verdict verdict = forestcol::verify_coloring(parsed.graph, c);
    nlohmann::ordered_json out;
    out["ok"] = verdict.ok;
    out["violations"] = nlohmann::ordered_json::array();
    for (const auto& v : verdict.violations) {
        nlohmann::ordered_json item;
        item["kind"] = v.kind == forestcol::Violation::Kind::cycle ? "cycle" : "degree_budget";
        item["class"] = v.color_class;
        item["vertices"] = v.vertices;
        out["violations"].push_back(item);
    }
    std::cout << out.dump(2) << "\n";
    return verdict.ok ? 0 : kExitViolation;
}

int cmd_check_sparse(const std::string& path, const std::string& a_text,
                     const std::string& b_text) {
    auto parsed = load_graph(path);
    forestcol::Rational a = forestcol::parse_rational(a_text);
    forestcol::Rational b = forestcol::parse_rational(b_text);
    auto res = forestcol::check_strict_sparsity(parsed.graph, a, b);
    nlohmann::ordered_json out;
    out["ok"] = res.ok;
    if (!res.ok) out["witness"] = res.witness;
    std::cout << out.dump(2) << "\n";
    return res.ok ? 0 : kExitViolation;
}

int cmd_girth(const std::string& path) {
    auto parsed = load_graph(path);
    auto g = forestcol::girth(parsed.graph);
    if (g)
        std::cout << *g << "\n";
    else
        std::cout << "inf\n";
    return 0;
}

int cmd_oracle_color(const std::string& path) {
    auto parsed = load_graph(path);
    auto col = forestcol::brute_force_color(parsed.graph);
    if (!col) {
        nlohmann::ordered_json out;
        out["error"] = "no_coloring";
        std::cout << out.dump(2) << "\n";
        return kExitViolation;
    }
    std::cout << forestcol::serialize_coloring(*col);
    return 0;
}

int cmd_oracle_critical(const std::string& path) {
    auto parsed = load_graph(path);
    nlohmann::ordered_json out;
    out["critical"] = forestcol::is_critical(parsed.graph);
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"(F_d1, F_d2) forest-partition toolkit"};
    app.require_subcommand(1);

    std::string file, coloring_file, subset_arg, constraint = "nonempty-nonspanning";
    std::string a_text, b_text;

    auto* color_cmd = app.add_subcommand("color", "compute a two-forest coloring");
    color_cmd->add_option("file", file)->required();

    auto* pot_cmd = app.add_subcommand("potential", "exact potential of a vertex subset");
    pot_cmd->add_option("file", file)->required();
    pot_cmd->add_option("--subset", subset_arg, "comma-separated vertex ids (default: all)");

    auto* minpot_cmd = app.add_subcommand("min-potential", "minimize potential over a family");
    minpot_cmd->add_option("file", file)->required();
    minpot_cmd->add_option("--constraint", constraint)
        ->check(CLI::IsMember({"any", "nonempty", "nonempty-nonspanning"}));

    auto* verify_cmd = app.add_subcommand("verify", "check a coloring document");
    verify_cmd->add_option("file", file)->required();
    verify_cmd->add_option("--coloring", coloring_file)->required();

    auto* sparse_cmd = app.add_subcommand("check-sparse", "(a,b)-strict sparsity check");
    sparse_cmd->add_option("file", file)->required();
    sparse_cmd->add_option("--a", a_text)->required();
    sparse_cmd->add_option("--b", b_text)->required();

    auto* girth_cmd = app.add_subcommand("girth", "shortest cycle length or inf");
    girth_cmd->add_option("file", file)->required();

    // construct subcommands
    auto* construct = app.add_subcommand("construct", "emit generated graphs");
    construct->require_subcommand(1);
    int d1 = 0, d2 = 2, n = 3, rows = 2, cols = 2, sub = 0, color_idx = 1;
    forestcol::VertexId at = 0;
    std::vector<std::string> part_args;
    std::string assignment_arg;

    auto* c_cycle = construct->add_subcommand("cycle");
    c_cycle->add_option("--n", n)->required();
    c_cycle->add_option("--d1", d1)->required();
    c_cycle->add_option("--d2", d2)->required();

    auto* c_dodeca = construct->add_subcommand("dodecahedron");
    c_dodeca->add_option("--d1", d1)->required();
    c_dodeca->add_option("--d2", d2)->required();

    auto* c_grid = construct->add_subcommand("grid");
    c_grid->add_option("--rows", rows)->required();
    c_grid->add_option("--cols", cols)->required();
    c_grid->add_option("--sub", sub);
    c_grid->add_option("--d1", d1)->required();
    c_grid->add_option("--d2", d2)->required();

    auto* c_pennon = construct->add_subcommand("pennon");
    c_pennon->add_option("file", file)->required();
    c_pennon->add_option("--at", at)->required();

    auto* c_pendant = construct->add_subcommand("pendant-host");
    c_pendant->add_option("file", file)->required();
    c_pendant->add_option("--at", at)->required();

    auto* c_nullleaf = construct->add_subcommand("null-leaf");
    c_nullleaf->add_option("file", file)->required();
    c_nullleaf->add_option("--at", at)->required();
    c_nullleaf->add_option("--color", color_idx)->check(CLI::IsMember({1, 2}));

    auto* c_flag = construct->add_subcommand("flag");
    c_flag->add_option("--part", part_args, "graph file and host id as FILE:ID")->required();
    c_flag->add_option("--assignment", assignment_arg, "comma-separated part indices")
        ->required();

    // oracle subcommands
    auto* oracle = app.add_subcommand("oracle", "brute-force counterparts (size-guarded)");
    oracle->require_subcommand(1);
    auto* o_color = oracle->add_subcommand("color");
    o_color->add_option("file", file)->required();
    auto* o_minpot = oracle->add_subcommand("min-potential");
    o_minpot->add_option("file", file)->required();
    o_minpot->add_option("--constraint", constraint)
        ->check(CLI::IsMember({"any", "nonempty", "nonempty-nonspanning"}));
    auto* o_critical = oracle->add_subcommand("critical");
    o_critical->add_option("file", file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*color_cmd) return cmd_color(file);
        if (*pot_cmd) return cmd_potential(file, subset_arg);
        if (*minpot_cmd) return cmd_min_potential(file, constraint, false);
        if (*verify_cmd) return cmd_verify(file, coloring_file);
        if (*sparse_cmd) return cmd_check_sparse(file, a_text, b_text);
        if (*girth_cmd) return cmd_girth(file);
        if (*construct) {
            forestcol::Params params(d1, d2);
            if (*c_cycle) {
                std::cout << forestcol::serialize_graph(forestcol::cycle(params, n));
            } else if (*c_dodeca) {
                std::cout << forestcol::serialize_graph(forestcol::dodecahedron(params));
            } else if (*c_grid) {
                std::cout << forestcol::serialize_graph(
                    forestcol::grid_subdivided(params, rows, cols, sub));
            } else if (*c_pennon) {
                auto parsed = load_graph(file);
                std::cout << forestcol::serialize_graph(
                    forestcol::attach_double_pennon(parsed.graph, at));
            } else if (*c_pendant) {
                auto parsed = load_graph(file);
                std::cout << forestcol::serialize_graph(
                    forestcol::attach_pendant_host(parsed.graph, at));
            } else if (*c_nullleaf) {
                auto parsed = load_graph(file);
                std::cout << forestcol::serialize_graph(
                    forestcol::attach_null_leaf(parsed.graph, at, color_idx));
            } else if (*c_flag) {
                std::vector<forestcol::FlagPart> parts;
                for (const std::string& arg : part_args) {
                    size_t colon = arg.rfind(':');
                    if (colon == std::string::npos)
                        throw UsageError("--part expects FILE:HOSTID");
                    auto parsed = load_graph(arg.substr(0, colon));
                    parts.push_back({parsed.graph, std::stoi(arg.substr(colon + 1))});
                }
                std::vector<int> assignment;
                for (forestcol::VertexId v : parse_id_list(assignment_arg))
                    assignment.push_back(v);
                std::cout << forestcol::serialize_graph(
                    forestcol::attach_flag(parts, assignment));
            }
            return 0;
        }
        if (*oracle) {
            if (*o_color) return cmd_oracle_color(file);
            if (*o_minpot) return cmd_min_potential(file, constraint, true);
            if (*o_critical) return cmd_oracle_critical(file);
        }
        return kExitUsage;
    } catch (const forestcol::SizeGuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSizeGuard;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const forestcol::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
