#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sgbal/edgelist.hpp"
#include "sgbal/generators.hpp"
#include "sgbal/signed_graph.hpp"

using namespace sgbal;

namespace {

FamilySpec spec_of(Family f) {
    FamilySpec s;
    s.family = f;
    return s;
}

} // namespace

TEST_CASE("family names round-trip") {
    for (const Family f : {Family::gnm, Family::gnp, Family::barabasi_albert,
                           Family::random_regular, Family::complete_single_negative,
                           Family::complete_all_negative, Family::ising_lattice,
                           Family::hypercube}) {
        CHECK(family_from_string(to_string(f)) == f);
    }
    CHECK(family_from_string("gnm") == Family::gnm);
    CHECK(family_from_string("barabasi-albert") == Family::barabasi_albert);
    CHECK(family_from_string("ising-lattice") == Family::ising_lattice);
    CHECK_THROWS_AS(family_from_string("erdos"), std::invalid_argument);
}

TEST_CASE("gnm: exact node, edge and sign counts") {
    FamilySpec s = spec_of(Family::gnm);
    s.n = 20;
    s.m = 57;
    s.signs = {SignAssignment::Mode::exact_fraction, 0.3};
    s.seed = 5;
    const SignedGraph g = generate(s);
    CHECK(g.n() == 20);
    CHECK(g.m() == 57);
    CHECK(g.m_minus() == static_cast<long long>(std::floor(0.3 * 57))); // 17
    CHECK(g.m_minus() == 17);

    s.m = 190; // the complete graph on 20 nodes
    CHECK(generate(s).m() == 190);
    s.m = 191;
    CHECK_THROWS_AS(generate(s), std::invalid_argument);
    s.m = 0;
    CHECK(generate(s).m() == 0);
}

TEST_CASE("gnm determinism and seed sensitivity") {
    FamilySpec s = spec_of(Family::gnm);
    s.n = 15;
    s.m = 40;
    s.signs = {SignAssignment::Mode::exact_fraction, 0.5};
    s.seed = 99;
    const SignedGraph a = generate(s);
    const SignedGraph b = generate(s);
    CHECK(write_graph(a) == write_graph(b));
    s.seed = 100;
    const SignedGraph c = generate(s);
    CHECK(write_graph(a) != write_graph(c));
}

TEST_CASE("gnp: mean edge count within three standard errors") {
    FamilySpec s = spec_of(Family::gnp);
    s.n = 40;
    s.p = 0.25;
    s.signs = {SignAssignment::Mode::independent, 0.5};
    const double pairs = 40.0 * 39.0 / 2.0;
    double total = 0.0;
    const int runs = 200;
    for (int t = 0; t < runs; ++t) {
        s.seed = static_cast<std::uint64_t>(t);
        total += static_cast<double>(generate(s).m());
    }
    const double mean = total / runs;
    const double se = std::sqrt(pairs * 0.25 * 0.75 / runs);
    CHECK(std::abs(mean - pairs * 0.25) <= 3.0 * se);

    s.p = 1.0;
    s.seed = 0;
    CHECK(generate(s).m() == static_cast<long long>(pairs));
    s.p = 0.0;
    CHECK(generate(s).m() == 0);
    s.p = 1.5;
    CHECK_THROWS_AS(generate(s), std::invalid_argument);
    s.p = -0.1;
    CHECK_THROWS_AS(generate(s), std::invalid_argument);
}

TEST_CASE("independent signs hit the expected negative count") {
    FamilySpec s = spec_of(Family::gnm);
    s.n = 30;
    s.m = 200;
    s.signs = {SignAssignment::Mode::independent, 0.4};
    double total = 0.0;
    const int runs = 200;
    for (int t = 0; t < runs; ++t) {
        s.seed = 400 + static_cast<std::uint64_t>(t);
        total += static_cast<double>(generate(s).m_minus());
    }
    const double mean = total / runs;
    const double se = std::sqrt(200 * 0.4 * 0.6 / runs);
    CHECK(std::abs(mean - 80.0) <= 3.0 * se);

    s.signs.value = 1.1;
    CHECK_THROWS_AS(generate(s), std::invalid_argument);
}

TEST_CASE("barabasi-albert: size and hub growth") {
    FamilySpec s = spec_of(Family::barabasi_albert);
    s.n = 60;
    s.attachment = 3;
    s.signs = {SignAssignment::Mode::exact_fraction, 0.5};
    s.seed = 7;
    const SignedGraph g = generate(s);
    CHECK(g.n() == 60);
    // star seed over attachment+1 nodes, then attachment edges per new node
    CHECK(g.m() == 3 + 56 * 3);
    CHECK(g.connected());

    // preferential attachment grows heavier hubs than a uniform graph with the
    // same size; compare the max degree averaged over seeds
    FamilySpec u = spec_of(Family::gnm);
    u.n = 60;
    u.m = g.m();
    double ba_max = 0.0, gnm_max = 0.0;
    for (int t = 0; t < 25; ++t) {
        s.seed = 1000 + static_cast<std::uint64_t>(t);
        u.seed = 1000 + static_cast<std::uint64_t>(t);
        const SignedGraph bg = generate(s);
        const SignedGraph ug = generate(u);
        ba_max += bg.degree(bg.max_degree_node());
        gnm_max += ug.degree(ug.max_degree_node());
    }
    CHECK(ba_max > gnm_max);

    s.attachment = 0;
    CHECK_THROWS_AS(generate(s), std::invalid_argument);
    s.attachment = 60;
    CHECK_THROWS_AS(generate(s), std::invalid_argument);
}

TEST_CASE("random-regular: exact degrees and the parity rule") {
    FamilySpec s = spec_of(Family::random_regular);
    s.n = 10;
    s.degree = 4;
    s.signs = {SignAssignment::Mode::exact_fraction, 0.5};
    s.seed = 11;
    const SignedGraph g = generate(s);
    CHECK(g.n() == 10);
    CHECK(g.m() == 10 * 4 / 2);
    for (int v = 0; v < g.n(); ++v) CHECK(g.incident(v).size() == 4);

    // odd n * degree has no realisation
    s.n = 5;
    s.degree = 3;
    CHECK_THROWS_AS(generate(s), std::invalid_argument);

    // even n * degree with odd factors is fine, 51 * 4 included
    s.n = 51;
    s.degree = 4;
    const SignedGraph big = generate(s);
    CHECK(big.m() == 51 * 4 / 2);
    for (int v = 0; v < big.n(); ++v) CHECK(big.incident(v).size() == 4);

    s.n = 6;
    s.degree = 6; // degree must stay below n
    CHECK_THROWS_AS(generate(s), std::invalid_argument);
}

TEST_CASE("complete families") {
    FamilySpec s = spec_of(Family::complete_single_negative);
    s.n = 8;
    const SignedGraph a = generate(s);
    CHECK(a.n() == 8);
    CHECK(a.m() == 28);
    CHECK(a.m_minus() == 1);

    s.family = Family::complete_all_negative;
    s.n = 6;
    const SignedGraph c = generate(s);
    CHECK(c.m() == 15);
    CHECK(c.m_minus() == 15);

    s.family = Family::complete_single_negative;
    s.n = 1;
    CHECK_THROWS_AS(generate(s), std::invalid_argument);
}

TEST_CASE("ising lattice: open-boundary grids") {
    FamilySpec s = spec_of(Family::ising_lattice);
    s.dims = {50, 50};
    s.signs = {SignAssignment::Mode::independent, 0.5};
    s.seed = 3;
    const SignedGraph g = generate(s);
    CHECK(g.n() == 2500);
    CHECK(g.m() == 2 * 50 * 49); // 4900 interior bonds

    s.dims = {4, 5};
    const SignedGraph small = generate(s);
    CHECK(small.n() == 20);
    CHECK(small.m() == 4 * 4 + 5 * 3); // 3*5 + 4*4 horizontal/vertical

    s.dims = {3, 3, 3};
    const SignedGraph cube = generate(s);
    CHECK(cube.n() == 27);
    CHECK(cube.m() == 3 * (2 * 3 * 3));

    s.dims = {7};
    const SignedGraph path = generate(s);
    CHECK(path.n() == 7);
    CHECK(path.m() == 6);

    s.dims = {};
    CHECK_THROWS_AS(generate(s), std::invalid_argument);
    s.dims = {0, 4};
    CHECK_THROWS_AS(generate(s), std::invalid_argument);
}

TEST_CASE("hypercube") {
    FamilySpec s = spec_of(Family::hypercube);
    s.dimension = 4;
    s.signs = {SignAssignment::Mode::exact_fraction, 0.5};
    s.seed = 1;
    const SignedGraph g = generate(s);
    CHECK(g.n() == 16);
    CHECK(g.m() == 32);
    CHECK(g.m_minus() == 16);
    for (int v = 0; v < g.n(); ++v) CHECK(g.incident(v).size() == 4);
    CHECK(g.connected());

    s.dimension = 0; // a single point is a legal (empty) cube
    const SignedGraph point = generate(s);
    CHECK(point.n() == 1);
    CHECK(point.m() == 0);

    s.dimension = -1;
    CHECK_THROWS_AS(generate(s), std::invalid_argument);
    s.dimension = 40; // 2^40 nodes is not a graph we hand out
    CHECK_THROWS_AS(generate(s), std::invalid_argument);
}

TEST_CASE("generated graphs carry their family name") {
    FamilySpec s = spec_of(Family::hypercube);
    s.dimension = 3;
    CHECK(generate(s).name().find("hypercube") != std::string::npos);
    FamilySpec r = spec_of(Family::gnm);
    r.n = 5;
    r.m = 4;
    CHECK(generate(r).name().find("gnm") != std::string::npos);
}

TEST_CASE("exact fraction counts negatives by flooring") {
    FamilySpec s = spec_of(Family::gnm);
    s.n = 10;
    s.m = 10;
    s.seed = 8;
    for (const double q : {0.0, 0.05, 0.15, 0.5, 0.95, 1.0}) {
        s.signs = {SignAssignment::Mode::exact_fraction, q};
        CHECK(generate(s).m_minus() == static_cast<long long>(std::floor(q * 10.0)));
    }
    s.signs = {SignAssignment::Mode::exact_fraction, -0.2};
    CHECK_THROWS_AS(generate(s), std::invalid_argument);
}
