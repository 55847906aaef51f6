// Acceptance suite: every check is an exact identity in exact arithmetic,
// with a wall-clock budget per criterion.  One line per criterion.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cnsf/chromatic.hpp"
#include "cnsf/cli.hpp"
#include "cnsf/digraph.hpp"
#include "cnsf/nsym.hpp"
#include "cnsf/sym.hpp"
#include "testutil.hpp"

using namespace cnsf;

namespace {

struct Failure {
    std::string reason;
};

void require(bool ok, const std::string& reason) {
    if (!ok) {
        throw Failure{reason};
    }
}

NSymElement psi_elem(std::vector<std::pair<std::vector<int>, Rational>> terms) {
    NSymElement e(NSymBasis::Psi);
    for (auto& [parts, c] : terms) {
        e.add_term(Composition(parts), c);
    }
    return e;
}

SymElement p_elem(std::vector<std::pair<std::vector<int>, Rational>> terms) {
    SymElement e(SymBasis::P);
    for (auto& [parts, c] : terms) {
        e.add_term(Partition(parts), c);
    }
    return e;
}

Digraph cycle_orientation() {
    return Digraph(4, {{0, 1}, {2, 0}, {1, 3}, {2, 3}});
}

Digraph directed_path(int n) {
    std::vector<Arc> arcs;
    for (int v = 0; v + 1 < n; ++v) {
        arcs.emplace_back(v, v + 1);
    }
    return Digraph(n, std::move(arcs));
}

std::string run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    require(code == 0, "cli exited with " + std::to_string(code) + ": " + err.str());
    return out.str();
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    const std::filesystem::path path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path;
}

void criterion_c4_orientation() {
    const Digraph d = cycle_orientation();
    const NSymElement expected = psi_elem({{{1, 1, 1, 1}, 1},
                                           {{2, 1, 1}, -2},
                                           {{1, 2, 1}, -1},
                                           {{1, 1, 2}, -1},
                                           {{3, 1}, 3},
                                           {{1, 3}, 1},
                                           {{2, 2}, 2},
                                           {{4}, -3}});
    const NSymElement observed = chromatic_nsym(d);
    require(observed == expected, "Psi expansion mismatch");
    require(observed.terms().size() == 8, "expected 8 terms");
    for (const auto& [index, c] : observed.terms()) {
        require(is_integer(c), "non-integer coefficient");
    }
    require(chi(observed) == p_elem({{{1, 1, 1, 1}, 1},
                                     {{2, 1, 1}, -4},
                                     {{2, 2}, 2},
                                     {{3, 1}, 4},
                                     {{4}, -3}}),
            "p projection mismatch");

    const auto file = write_temp("cnsf-acc-c4.json", R"({"n":4,"arcs":[[0,1],[2,0],[1,3],[2,3]]})");
    require(run_cli({"expand", "--digraph", file.string(), "--basis", "psi", "--format",
                     "text"}) ==
                "+1*Psi[1,1,1,1] -1*Psi[1,1,2] -1*Psi[1,2,1] +1*Psi[1,3] -2*Psi[2,1,1] "
                "+2*Psi[2,2] +3*Psi[3,1] -3*Psi[4]\n",
            "expand text output mismatch");
    require(run_cli({"project", "--digraph", file.string()}) ==
                "+1*p[1,1,1,1] -4*p[2,1,1] +2*p[2,2] +4*p[3,1] -3*p[4]\n",
            "project text output mismatch");
}

void criterion_directed_path() {
    const Digraph d(4, {{0, 1}, {2, 1}, {2, 3}});
    require(chromatic_nsym(d) == psi_elem({{{1, 1, 1, 1}, 1},
                                           {{1, 2, 1}, -2},
                                           {{2, 1, 1}, -1},
                                           {{3, 1}, 1},
                                           {{2, 2}, 1},
                                           {{1, 3}, 1},
                                           {{4}, -1}}),
            "Psi expansion mismatch");
    const SymElement expected_p = p_elem({{{1, 1, 1, 1}, 1},
                                          {{2, 1, 1}, -3},
                                          {{2, 2}, 1},
                                          {{3, 1}, 2},
                                          {{4}, -1}});
    require(chi(chromatic_nsym(d)) == expected_p, "p projection mismatch");
    require(stanley_power_sum(underlying_graph(d)) == expected_p,
            "Stanley expansion of the underlying path mismatch");

    const auto file = write_temp("cnsf-acc-path4.json", R"({"n":4,"arcs":[[0,1],[2,1],[2,3]]})");
    const std::string report = run_cli({"verify", "--digraph", file.string()});
    require(report.find("equal: yes") != std::string::npos, "verify did not report equality");
}

void criterion_alpha_examples() {
    const Digraph first = cycle_orientation();
    require(alpha(first, {{0, 1}, {1, 3}}) == Composition({1, 3}), "alpha(S) != (1,3)");
    require(total_degree(first, {0, 1, 3}) == -2, "total degree != -2");
    require(total_degree(first, {2}) == 2, "total degree != 2");

    const Digraph second(4, {{0, 1}, {0, 2}, {1, 3}, {3, 2}});
    require(alpha(second, {{0, 2}}) == Composition({2, 1, 1}), "alpha(S) != (2,1,1)");
    require(component_tuple(second, {{0, 2}}) == ComponentTuple({{0, 2}, {3}, {1}}),
            "component tuple mismatch");
}

void criterion_projection_sweep() {
    int verified = 0;
    for (int n = 1; n <= 4; ++n) {
        for (const UndirectedGraph& g : testutil::all_graphs(n)) {
            if (!testutil::is_connected(g)) {
                continue;
            }
            for (const Digraph& d : testutil::all_orientations(g)) {
                require(verify_projection(d).equal,
                        "projection failed on an orientation with n=" + std::to_string(n));
                ++verified;
            }
        }
    }
    require(verified >= 600, "exhaustive sweep unexpectedly small");

    std::mt19937_64 rng(20250901);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const int max_arcs = n * (n - 1) / 2;
        const Digraph d = testutil::random_digraph(n, static_cast<int>(rng() % (max_arcs + 1)), rng);
        require(verify_projection(d).equal, "projection failed on a random digraph");
    }
}

void criterion_oracle_equivalence() {
    for (int n = 1; n <= 5; ++n) {
        for (const UndirectedGraph& g : testutil::all_graphs(n)) {
            require(evaluate_p_truncated(stanley_power_sum(g), n) == coloring_oracle(g, n),
                    "oracle mismatch at n=" + std::to_string(n));
            for (int m = 1; m <= 4; ++m) {
                require(coloring_oracle(g, m).value_at_ones() ==
                            testutil::count_proper_colorings(g, m),
                        "coloring count mismatch at n=" + std::to_string(n) +
                            ", m=" + std::to_string(m));
            }
        }
    }
    const UndirectedGraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    require(coloring_oracle(c4, 3).value_at_ones() == 18, "C4 should have 18 proper 3-colorings");
}

void criterion_labeling_independence() {
    std::mt19937_64 rng(20250902);
    for (int pair = 0; pair < 50; ++pair) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const int max_arcs = n * (n - 1) / 2;
        const Digraph d = testutil::random_digraph(n, static_cast<int>(rng() % (max_arcs + 1)), rng);
        const std::vector<int> sigma = testutil::random_permutation(n, rng);
        const Digraph relabeled = relabel(d, sigma);
        for (const auto& subset : testutil::all_arc_subsets(d)) {
            require(alpha(relabeled, relabel_arcs(subset, sigma)) == alpha(d, subset),
                    "alpha changed under relabeling");
        }
        require(chromatic_nsym(relabeled) == chromatic_nsym(d), "X_D changed under relabeling");
    }
}

void criterion_star_closed_form() {
    for (int n = 0; n <= 6; ++n) {
        require(star_closed_form(n) == chromatic_nsym(inward_star(n + 1)),
                "closed form mismatch at n=" + std::to_string(n));
    }
}

void criterion_generating_set() {
    const GeneratorFamily fam({Digraph(1, {}), Digraph(2, {{1, 0}}), directed_path(3),
                               inward_star(4), directed_path(5)});
    for (int degree = 0; degree <= 6; ++degree) {
        for (const Composition& c : compositions_of(degree)) {
            bool fits = true;
            for (int part : c.parts()) {
                if (part > 5) {
                    fits = false;
                }
            }
            if (!fits) {
                continue;
            }
            const NSymElement target = NSymElement::basis_element(NSymBasis::Psi, c);
            require(substitute_generators(fam, rewrite_in_generators(fam, target)) == target,
                    "rewrite round trip failed at " + to_text(c));
        }
    }

    std::vector<Digraph> leading = {Digraph(1, {}), Digraph(2, {{1, 0}}), directed_path(3),
                                    inward_star(4), directed_path(5), directed_path(6)};
    for (int n = 1; n <= 6; ++n) {
        require(chromatic_nsym(leading[n - 1]).coefficient(Composition({n})) != 0,
                "vanishing leading coefficient at n=" + std::to_string(n));
    }
}

void criterion_basis_round_trips() {
    require(psi_generator_in_h(2) ==
                combine(NSymElement::basis_element(NSymBasis::H, Composition({2}), 2), -1,
                        NSymElement::basis_element(NSymBasis::H, Composition({1, 1}))),
            "Psi_2 != 2H_2 - H_11");
    NSymElement psi3(NSymBasis::H);
    psi3.add_term(Composition({1, 1, 1}), 1);
    psi3.add_term(Composition({2, 1}), -1);
    psi3.add_term(Composition({1, 2}), -2);
    psi3.add_term(Composition({3}), 3);
    require(psi_generator_in_h(3) == psi3, "Psi_3 != H_111 - H_21 - 2H_12 + 3H_3");

    for (int n = 0; n <= 7; ++n) {
        for (const Composition& c : compositions_of(n)) {
            const NSymElement h = NSymElement::basis_element(NSymBasis::H, c);
            const NSymElement r = NSymElement::basis_element(NSymBasis::R, c);
            const NSymElement psi = NSymElement::basis_element(NSymBasis::Psi, c);
            require(convert(convert(h, NSymBasis::R), NSymBasis::H) == h, "H->R->H failed");
            require(convert(convert(r, NSymBasis::H), NSymBasis::R) == r, "R->H->R failed");
            require(convert(convert(psi, NSymBasis::H), NSymBasis::Psi) == psi,
                    "Psi->H->Psi failed");
            require(convert(convert(h, NSymBasis::Psi), NSymBasis::H) == h, "H->Psi->H failed");
        }
    }
}

struct Criterion {
    std::string name;
    double budget_seconds; // 0 = no stated budget
    std::function<void()> body;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"paper-regression-c4-orientation", 1.0, criterion_c4_orientation},
        {"paper-regression-directed-path", 1.0, criterion_directed_path},
        {"paper-regression-alpha-examples", 0.0, criterion_alpha_examples},
        {"projection-theorem-sweep", 60.0, criterion_projection_sweep},
        {"oracle-equivalence", 60.0, criterion_oracle_equivalence},
        {"labeling-independence", 0.0, criterion_labeling_independence},
        {"star-closed-form", 5.0, criterion_star_closed_form},
        {"generating-set-round-trip", 30.0, criterion_generating_set},
        {"basis-change-round-trips", 10.0, criterion_basis_round_trips},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string reason;
        try {
            criterion.body();
        } catch (const Failure& f) {
            reason = f.reason;
        } catch (const std::exception& e) {
            reason = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (reason.empty() && criterion.budget_seconds > 0 &&
            elapsed > criterion.budget_seconds) {
            reason = "exceeded time budget";
        }
        std::ostringstream timing;
        timing.setf(std::ios::fixed);
        timing.precision(2);
        timing << elapsed << "s";
        if (criterion.budget_seconds > 0) {
            timing << " / " << criterion.budget_seconds << "s";
        }
        if (reason.empty()) {
            std::cout << "[PASS] " << criterion.name << " (" << timing.str() << ")\n";
        } else {
            std::cout << "[FAIL] " << criterion.name << " (" << timing.str() << "): " << reason
                      << "\n";
            ++failures;
        }
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size()
              << " acceptance criteria passed\n";
    return failures == 0 ? 0 : 1;
}
