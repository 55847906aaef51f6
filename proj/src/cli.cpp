#include "cnsf/cli.hpp"

#include <cstdlib>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cnsf/chromatic.hpp"
#include "cnsf/digraph.hpp"
#include "cnsf/json_io.hpp"
#include "cnsf/nsym.hpp"
#include "cnsf/sym.hpp"

namespace cnsf::cli {

namespace {

long long env_override(const char* name, long long fallback) {
    const char* value = std::getenv(name);
    if (value == nullptr || *value == '\0') {
        return fallback;
    }
    std::size_t used = 0;
    long long parsed = 0;
    try {
        parsed = std::stoll(value, &used);
    } catch (const std::exception&) {
        throw InputError(std::string(name) + " is not an integer: " + value);
    }
    if (used != std::string(value).size() || parsed < 1) {
        throw InputError(std::string(name) + " must be a positive integer: " + value);
    }
    return parsed;
}

struct Caps {
    int subset_cap;
    int solve_cap;
    long long coloring_budget;
};

Caps caps_from_env() {
    return Caps{
        static_cast<int>(env_override("CNSF_SUBSET_CAP", kDefaultArcSubsetCap)),
        static_cast<int>(env_override("CNSF_SOLVE_CAP", kDefaultSolveCap)),
        env_override("CNSF_COLORING_BUDGET", kDefaultColoringBudget),
    };
}

NSymBasis parse_nsym_basis(const std::string& name) {
    if (name == "psi") {
        return NSymBasis::Psi;
    }
    if (name == "h") {
        return NSymBasis::H;
    }
    if (name == "r") {
        return NSymBasis::R;
    }
    throw InputError("unknown basis: " + name);
}

Composition parse_psi_target(const std::string& spec) {
    const std::string prefix = "psi:";
    if (spec.rfind(prefix, 0) != 0) {
        throw InputError("target must look like psi:2,1 (got " + spec + ")");
    }
    std::vector<int> parts;
    std::string body = spec.substr(prefix.size());
    if (!body.empty()) {
        std::istringstream fields(body);
        std::string item;
        while (std::getline(fields, item, ',')) {
            try {
                std::size_t used = 0;
                parts.push_back(std::stoi(item, &used));
                if (used != item.size()) {
                    throw std::invalid_argument(item);
                }
            } catch (const std::exception&) {
                throw InputError("bad part in target: " + item);
            }
        }
    }
    return Composition(std::move(parts));
}

std::vector<Arc> parse_arc_subset(const Digraph& d, const std::string& spec) {
    std::vector<Arc> subset;
    if (spec.empty()) {
        return subset;
    }
    std::istringstream fields(spec);
    std::string item;
    std::vector<char> used(d.arcs().size(), 0);
    while (std::getline(fields, item, ',')) {
        int index = -1;
        try {
            std::size_t chars = 0;
            index = std::stoi(item, &chars);
            if (chars != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception&) {
            throw InputError("bad arc index: " + item);
        }
        if (index < 0 || index >= static_cast<int>(d.arcs().size())) {
            throw InputError("arc index out of range: " + item);
        }
        if (used[index]) {
            throw InputError("repeated arc index: " + item);
        }
        used[index] = 1;
        subset.push_back(d.arcs()[index]);
    }
    return subset;
}

void print_element(const NSymElement& e, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << to_json(e).dump() << "\n";
    } else if (format == "latex") {
        out << to_latex(e) << "\n";
    } else {
        out << to_text(e) << "\n";
    }
}

void print_element(const SymElement& e, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << to_json(e).dump() << "\n";
    } else if (format == "latex") {
        out << to_latex(e) << "\n";
    } else {
        out << to_text(e) << "\n";
    }
}

// Uniform arc sample: candidate ordered pairs are shuffled with a
// Fisher-Yates walk driven by mt19937_64(seed) and modulo reduction (both
// fully specified, so output depends only on the seed), then scanned,
// skipping any arc whose reverse was already taken.
Digraph random_digraph(int vertices, int arcs, std::uint64_t seed) {
    if (vertices < 1) {
        throw InputError("vertex count must be positive");
    }
    const long long max_arcs = static_cast<long long>(vertices) * (vertices - 1) / 2;
    if (arcs < 0 || arcs > max_arcs) {
        throw InputError("arc count must be between 0 and n(n-1)/2 = " +
                         std::to_string(max_arcs));
    }
    std::vector<Arc> candidates;
    candidates.reserve(static_cast<std::size_t>(vertices) * (vertices - 1));
    for (int u = 0; u < vertices; ++u) {
        for (int v = 0; v < vertices; ++v) {
            if (u != v) {
                candidates.emplace_back(u, v);
            }
        }
    }
    std::mt19937_64 rng(seed);
    for (std::size_t i = candidates.size(); i > 1; --i) {
        std::swap(candidates[i - 1], candidates[rng() % i]);
    }
    std::vector<Arc> chosen;
    std::vector<char> taken(static_cast<std::size_t>(vertices) * vertices, 0);
    for (const Arc& a : candidates) {
        if (static_cast<int>(chosen.size()) == arcs) {
            break;
        }
        if (taken[static_cast<std::size_t>(a.second) * vertices + a.first]) {
            continue; // reverse already chosen
        }
        taken[static_cast<std::size_t>(a.first) * vertices + a.second] = 1;
        chosen.push_back(a);
    }
    return Digraph(vertices, std::move(chosen));
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Chromatic noncommutative symmetric functions of directed graphs"};
    app.name("cnsf");

    int jobs = 1;
    app.add_option("--jobs", jobs, "worker threads for subset sweeps")
        ->check(CLI::PositiveNumber);

    std::string digraph_path;
    std::string format = "text";
    std::string basis = "psi";
    std::string subset_spec;
    std::string family_dir;
    std::string target_spec;
    int star_n = 0;
    bool star_check = false;
    int oracle_colors = 0;
    int rand_vertices = 1;
    int rand_arcs = 0;
    std::uint64_t rand_seed = 0;

    const std::vector<std::string> formats = {"text", "json", "latex"};

    auto* expand = app.add_subcommand("expand", "print X_D in the chosen basis");
    expand->add_option("--digraph", digraph_path, "digraph file (JSON or arc list)")->required();
    expand->add_option("--basis", basis, "psi, h, or r")->check(CLI::IsMember({"psi", "h", "r"}));
    expand->add_option("--format", format, "text, json, or latex")->check(CLI::IsMember(formats));

    auto* project = app.add_subcommand("project", "print chi(X_D) in the p basis");
    project->add_option("--digraph", digraph_path, "digraph file")->required();
    project->add_option("--format", format, "text, json, or latex")->check(CLI::IsMember(formats));

    auto* verify = app.add_subcommand("verify", "check chi(X_D) = X_G");
    verify->add_option("--digraph", digraph_path, "digraph file")->required();
    verify->add_option("--oracle-colors", oracle_colors,
                       "also compare against the proper-coloring polynomial in this many colors")
        ->check(CLI::PositiveNumber);
    verify->add_option("--format", format, "text, json, or latex")->check(CLI::IsMember(formats));

    auto* alpha_cmd = app.add_subcommand("alpha", "print alpha(S) for an arc subset");
    alpha_cmd->add_option("--digraph", digraph_path, "digraph file")->required();
    alpha_cmd->add_option("--subset", subset_spec,
                          "comma-separated indices into the sorted arc list (empty = no arcs)");
    alpha_cmd->add_option("--format", format, "text, json, or latex")->check(CLI::IsMember(formats));

    auto* star = app.add_subcommand("star", "closed form of the inwardly directed star");
    star->add_option("--n", star_n, "exponent; the star has n+1 vertices")
        ->required()
        ->check(CLI::NonNegativeNumber);
    star->add_flag("--check", star_check, "verify against the arc-subset expansion");
    star->add_option("--format", format, "text, json, or latex")->check(CLI::IsMember(formats));

    auto* rewrite = app.add_subcommand("rewrite", "express a Psi element in chromatic generators");
    rewrite->add_option("--family", family_dir, "directory of D1.json, D2.json, ...")->required();
    rewrite->add_option("--target", target_spec, "e.g. psi:2,1")->required();
    rewrite->add_option("--format", format, "text, json, or latex")->check(CLI::IsMember(formats));

    auto* random = app.add_subcommand("random", "emit a random valid digraph as JSON");
    random->add_option("--vertices", rand_vertices, "vertex count")->required()
        ->check(CLI::PositiveNumber);
    random->add_option("--arcs", rand_arcs, "arc count")->required()
        ->check(CLI::NonNegativeNumber);
    random->add_option("--seed", rand_seed, "random seed (default 0)");

    app.require_subcommand(1);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e, out, err);
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        const Caps caps = caps_from_env();

        if (expand->parsed()) {
            const Digraph d = load_digraph(digraph_path);
            NSymElement element = chromatic_nsym(d, caps.subset_cap, jobs);
            element = convert(element, parse_nsym_basis(basis), caps.solve_cap);
            print_element(element, format, out);
            return 0;
        }

        if (project->parsed()) {
            const Digraph d = load_digraph(digraph_path);
            print_element(chi(chromatic_nsym(d, caps.subset_cap, jobs)), format, out);
            return 0;
        }

        if (verify->parsed()) {
            const Digraph d = load_digraph(digraph_path);
            const ProjectionReport report = verify_projection(d, caps.subset_cap, jobs);
            bool oracle_match = true;
            if (oracle_colors > 0) {
                const UndirectedGraph g = underlying_graph(d);
                oracle_match = evaluate_p_truncated(report.xg, oracle_colors) ==
                               coloring_oracle(g, oracle_colors, caps.coloring_budget);
            }
            if (format == "json") {
                nlohmann::json j{{"chi_xd", to_json(report.chi_xd)},
                                 {"x_g", to_json(report.xg)},
                                 {"equal", report.equal}};
                if (oracle_colors > 0) {
                    j["oracle_colors"] = oracle_colors;
                    j["oracle_match"] = oracle_match;
                }
                out << j.dump() << "\n";
            } else {
                const bool latex = format == "latex";
                out << "chi(X_D): " << (latex ? to_latex(report.chi_xd) : to_text(report.chi_xd))
                    << "\n";
                out << "X_G: " << (latex ? to_latex(report.xg) : to_text(report.xg)) << "\n";
                out << "equal: " << (report.equal ? "yes" : "no") << "\n";
                if (oracle_colors > 0) {
                    out << "oracle(m=" << oracle_colors
                        << "): " << (oracle_match ? "match" : "MISMATCH") << "\n";
                }
            }
            return report.equal && oracle_match ? 0 : 1;
        }

        if (alpha_cmd->parsed()) {
            const Digraph d = load_digraph(digraph_path);
            const Composition a = alpha(d, parse_arc_subset(d, subset_spec));
            if (format == "json") {
                out << nlohmann::json{{"alpha", a.parts()}}.dump() << "\n";
            } else if (format == "latex") {
                std::string body;
                for (std::size_t i = 0; i < a.parts().size(); ++i) {
                    if (i > 0) {
                        body += ",";
                    }
                    body += std::to_string(a.parts()[i]);
                }
                out << "(" << body << ")\n";
            } else {
                out << to_text(a) << "\n";
            }
            return 0;
        }

        if (star->parsed()) {
            const NSymElement closed = star_closed_form(star_n, caps.subset_cap);
            bool matched = true;
            if (star_check) {
                matched = closed == chromatic_nsym(inward_star(star_n + 1), caps.subset_cap, jobs);
            }
            if (format == "json") {
                nlohmann::json j{{"element", to_json(closed)}};
                if (star_check) {
                    j["check"] = matched;
                }
                out << j.dump() << "\n";
            } else {
                print_element(closed, format, out);
                if (star_check) {
                    out << "check: " << (matched ? "equal" : "UNEQUAL") << "\n";
                }
            }
            return matched ? 0 : 1;
        }

        if (rewrite->parsed()) {
            const GeneratorFamily family = load_family(family_dir);
            const NSymElement target =
                NSymElement::basis_element(NSymBasis::Psi, parse_psi_target(target_spec));
            const GeneratorPolynomial result =
                rewrite_in_generators(family, target, caps.subset_cap);
            if (format == "json") {
                out << to_json(result).dump() << "\n";
            } else if (format == "latex") {
                out << to_latex(result) << "\n";
            } else {
                out << to_text(result) << "\n";
            }
            return 0;
        }

        if (random->parsed()) {
            out << to_json(random_digraph(rand_vertices, rand_arcs, rand_seed)).dump() << "\n";
            return 0;
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2; // unreachable: a subcommand is required
}

} // namespace cnsf::cli
