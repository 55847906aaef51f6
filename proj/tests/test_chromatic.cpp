#include <doctest.h>

#include <algorithm>
#include <random>

#include "cnsf/chromatic.hpp"
#include "testutil.hpp"

using namespace cnsf;

namespace {

NSymElement psi_elem(std::vector<std::pair<std::vector<int>, Rational>> terms) {
    NSymElement e(NSymBasis::Psi);
    for (auto& [parts, c] : terms) {
        e.add_term(Composition(parts), c);
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

GeneratorFamily reference_family() {
    return GeneratorFamily({Digraph(1, {}), Digraph(2, {{1, 0}}), directed_path(3),
                            inward_star(4), directed_path(5)});
}

} // namespace

TEST_CASE("chromatic expansion of the worked digraphs") {
    CHECK(chromatic_nsym(cycle_orientation()) == psi_elem({{{1, 1, 1, 1}, 1},
                                                           {{2, 1, 1}, -2},
                                                           {{1, 2, 1}, -1},
                                                           {{1, 1, 2}, -1},
                                                           {{3, 1}, 3},
                                                           {{1, 3}, 1},
                                                           {{2, 2}, 2},
                                                           {{4}, -3}}));
    CHECK(chromatic_nsym(Digraph(1, {})) == psi_elem({{{1}, 1}}));
    CHECK(chromatic_nsym(Digraph(4, {{0, 1}, {2, 1}, {2, 3}})) == psi_elem({{{1, 1, 1, 1}, 1},
                                                                            {{1, 2, 1}, -2},
                                                                            {{2, 1, 1}, -1},
                                                                            {{3, 1}, 1},
                                                                            {{2, 2}, 1},
                                                                            {{1, 3}, 1},
                                                                            {{4}, -1}}));
}

TEST_CASE("chromatic expansion honors the arc cap") {
    CHECK_THROWS_AS(chromatic_nsym(cycle_orientation(), 3), InputError);
}

TEST_CASE("chromatic expansion is identical across job counts") {
    const Digraph d = cycle_orientation();
    CHECK(chromatic_nsym(d, kDefaultArcSubsetCap, 4) == chromatic_nsym(d));
}

TEST_CASE("projection reports") {
    const ProjectionReport r1 = verify_projection(cycle_orientation());
    CHECK(r1.equal);
    CHECK(r1.chi_xd == r1.xg);
    CHECK(r1.xg.coefficient(Partition({2, 1, 1})) == -4);

    const ProjectionReport r2 = verify_projection(Digraph(4, {{0, 1}, {2, 1}, {2, 3}}));
    CHECK(r2.equal);
    CHECK(r2.xg.coefficient(Partition({2, 1, 1})) == -3);

    const ProjectionReport r3 = verify_projection(Digraph(3, {}));
    CHECK(r3.equal);
    CHECK(r3.chi_xd == SymElement::basis_element(SymBasis::P, Partition({1, 1, 1})));
}

TEST_CASE("projection holds for orientations of small connected graphs") {
    for (int n = 1; n <= 3; ++n) {
        for (const UndirectedGraph& g : testutil::all_graphs(n)) {
            if (!testutil::is_connected(g)) {
                continue;
            }
            for (const Digraph& d : testutil::all_orientations(g)) {
                CHECK(verify_projection(d).equal);
            }
        }
    }
}

TEST_CASE("projection holds for random digraphs") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const Digraph d = testutil::random_digraph(n, static_cast<int>(rng() % (2 * n)), rng);
        CHECK(verify_projection(d).equal);
    }
}

TEST_CASE("inward stars") {
    CHECK(inward_star(1) == Digraph(1, {}));
    CHECK(inward_star(3) == Digraph(3, {{1, 0}, {2, 0}}));
    CHECK(inward_star(4) == Digraph(4, {{1, 0}, {2, 0}, {3, 0}}));
    CHECK_THROWS_AS(inward_star(0), InputError);
}

TEST_CASE("star closed form at small orders") {
    CHECK(star_closed_form(0) == psi_elem({{{1}, 1}}));
    CHECK(star_closed_form(2) == psi_elem({{{1, 1, 1}, 1}, {{1, 2}, -2}, {{3}, 1}}));
    CHECK(star_closed_form(3) ==
          psi_elem({{{1, 1, 1, 1}, 1}, {{1, 1, 2}, -3}, {{1, 3}, 3}, {{4}, -1}}));
    CHECK_THROWS_AS(star_closed_form(-1), InputError);
    CHECK_THROWS_AS(star_closed_form(25), InputError);
}

TEST_CASE("star closed form matches the subset expansion") {
    for (int n = 0; n <= 6; ++n) {
        CHECK(star_closed_form(n) == chromatic_nsym(inward_star(n + 1)));
    }
}

TEST_CASE("generator family validation") {
    CHECK_THROWS_AS(GeneratorFamily({Digraph(2, {{1, 0}})}), InputError);
    CHECK_THROWS_AS(GeneratorFamily({Digraph(1, {}), Digraph(2, {})}), InputError);
    const GeneratorFamily fam = reference_family();
    CHECK(fam.size() == 5);
    CHECK_THROWS_AS(fam.member(0), InputError);
    CHECK_THROWS_AS(fam.member(6), InputError);
}

TEST_CASE("rewriting worked targets") {
    const GeneratorFamily vertex_only({Digraph(1, {})});
    CHECK(rewrite_in_generators(vertex_only,
                                NSymElement::basis_element(NSymBasis::Psi, Composition({1}))) ==
          GeneratorPolynomial::single({1}));

    const GeneratorFamily two({Digraph(1, {}), Digraph(2, {{1, 0}})});
    GeneratorPolynomial expected;
    expected.add_term({1, 1}, 1);
    expected.add_term({2}, -1);
    CHECK(rewrite_in_generators(two,
                                NSymElement::basis_element(NSymBasis::Psi, Composition({2}))) ==
          expected);
    CHECK(rewrite_in_generators(two, NSymElement::basis_element(NSymBasis::Psi,
                                                                Composition({1, 1}))) ==
          GeneratorPolynomial::single({1, 1}));

    CHECK_THROWS_AS(rewrite_in_generators(
                        two, NSymElement::basis_element(NSymBasis::Psi, Composition({3}))),
                    InputError);
    CHECK_THROWS_AS(rewrite_in_generators(
                        two, NSymElement::basis_element(NSymBasis::H, Composition({1}))),
                    InputError);
}

TEST_CASE("substituting worked polynomials") {
    const GeneratorFamily two({Digraph(1, {}), Digraph(2, {{1, 0}})});
    CHECK(substitute_generators(two, GeneratorPolynomial::unit()) ==
          NSymElement::unit(NSymBasis::Psi));
    CHECK(substitute_generators(two, GeneratorPolynomial::single({2})) ==
          psi_elem({{{1, 1}, 1}, {{2}, -1}}));

    GeneratorPolynomial p;
    p.add_term({1, 1}, 1);
    p.add_term({2}, -1);
    CHECK(substitute_generators(two, p) == psi_elem({{{2}, 1}}));

    CHECK_THROWS_AS(substitute_generators(two, GeneratorPolynomial::single({3})), InputError);
}

TEST_CASE("rewrite round trips through substitution") {
    const GeneratorFamily fam = reference_family();
    for (int degree = 0; degree <= 5; ++degree) {
        for (const Composition& c : compositions_of(degree)) {
            if (!c.parts().empty() && *std::max_element(c.parts().begin(), c.parts().end()) > 5) {
                continue;
            }
            const NSymElement target = NSymElement::basis_element(NSymBasis::Psi, c);
            CHECK(substitute_generators(fam, rewrite_in_generators(fam, target)) == target);
        }
    }
}

TEST_CASE("rewrite round trips for random families") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 3; ++trial) {
        std::vector<Digraph> members;
        for (int i = 1; i <= 4; ++i) {
            members.push_back(testutil::random_connected_digraph(i, rng));
        }
        const GeneratorFamily fam(std::move(members));
        for (int degree = 0; degree <= 5; ++degree) {
            for (const Composition& c : compositions_of(degree)) {
                if (!c.parts().empty() &&
                    *std::max_element(c.parts().begin(), c.parts().end()) > 4) {
                    continue;
                }
                const NSymElement target = NSymElement::basis_element(NSymBasis::Psi, c);
                CHECK(substitute_generators(fam, rewrite_in_generators(fam, target)) == target);
            }
        }
    }
}

TEST_CASE("leading Psi coefficient is nonzero for connected digraphs") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const Digraph d = testutil::random_connected_digraph(n, rng);
        CHECK(chromatic_nsym(d).coefficient(Composition({n})) != 0);
    }
}

TEST_CASE("chromatic expansion is label invariant") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const Digraph d = testutil::random_digraph(n, static_cast<int>(rng() % (n + 2)), rng);
        const std::vector<int> sigma = testutil::random_permutation(n, rng);
        CHECK(chromatic_nsym(relabel(d, sigma)) == chromatic_nsym(d));
    }
}

TEST_CASE("chromatic expansion is homogeneous with unit leading term") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const Digraph d = testutil::random_digraph(n, static_cast<int>(rng() % (n + 2)), rng);
        const NSymElement x = chromatic_nsym(d);
        CHECK(x.coefficient(Composition(std::vector<int>(n, 1))) == 1);
        for (const auto& [index, c] : x.terms()) {
            CHECK(index.degree() == n);
            CHECK(is_integer(c));
        }
    }
}

TEST_CASE("generator polynomial rendering") {
    GeneratorPolynomial p;
    p.add_term({1, 1}, 1);
    p.add_term({2}, -1);
    CHECK(to_text(p) == "+1*g1*g1 -1*g2");
    CHECK(to_latex(p) == "g_{1}g_{1} - g_{2}");
    CHECK(to_text(GeneratorPolynomial::zero()) == "0");
    CHECK(to_text(GeneratorPolynomial::unit()) == "+1*1");
    CHECK_THROWS_AS(GeneratorPolynomial::single({0}), InputError);
}
