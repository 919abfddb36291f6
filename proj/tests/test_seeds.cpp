#include <algorithm>
#include <set>

#include "doctest.h"
#include "seeds.hpp"

using namespace cwb;

namespace {

ExchangeMatrix cyclic_a3() {
    ExchangeMatrix B(3);
    B.set(0, 1, 1);
    B.set(1, 2, 1);
    B.set(2, 0, 1);
    return B;
}

ExchangeMatrix a2tilde_gamma() {
    ExchangeMatrix B(3);
    B.set(1, 0, 1);
    B.set(0, 2, 2);
    B.set(2, 1, 1);
    return B;
}

ExchangeMatrix linear_a(int n) {
    ExchangeMatrix B(n);
    for (int i = 0; i + 1 < n; ++i) B.set(i, i + 1, 1);
    return B;
}

// Independent count of clusters in type A_n: triangulations of a convex
// (n+3)-gon, counted by brute-force recursion on the base edge.
long long triangulation_count(int gon) {
    if (gon <= 3) return 1;
    long long total = 0;
    // Fix the base edge; the apex splits the polygon into a (k)-gon and an
    // (gon+1-k)-gon.
    for (int k = 2; k <= gon - 1; ++k)
        total += triangulation_count(k) * triangulation_count(gon + 1 - k);
    return total;
}

std::set<std::string> variable_strings(const Enumeration& e, int system = 0) {
    std::set<std::string> out;
    for (const auto& v : e.variables) out.insert(fraction_string(v.expr[system]));
    return out;
}

}  // namespace

TEST_CASE("seed mutation reproduces the known cyclic A3 variables") {
    Seed root = make_root_seed(cyclic_a3());
    Seed s2 = mutate_seed(root, 1);
    CHECK(fraction_string(s2.systems[0][1]) == "(y1 + y3) / y2");
    Seed s21 = mutate_seed(s2, 0);
    CHECK(fraction_string(s21.systems[0][0]) == "(y1 + y2 + y3) / (y1*y2)");

    // Mutating twice restores the cluster; the word differs.
    Seed back = mutate_seed(s2, 1);
    CHECK(back.systems[0] == root.systems[0]);
    CHECK(back.matrix == root.matrix);
    CHECK(back.word == std::vector<int>{1, 1});
}

TEST_CASE("seed mutation on the double-arrow quiver") {
    Seed root = make_root_seed(a2tilde_gamma());
    Seed s3 = mutate_seed(root, 2);
    CHECK(fraction_string(s3.systems[0][2]) == "(y1^2 + y2) / y3");
}

TEST_CASE("exchange data") {
    Seed root = make_root_seed(cyclic_a3());
    ExchangePairRecord rec = exchange_data(root, 1);
    CHECK(rec.bplus == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(rec.bminus == std::vector<std::pair<int, int>>{{2, 1}});
    CHECK(fraction_string(rec.xmstar[0]) == "(y1 + y3) / y2");
    assert_exchange_equation(root, rec);

    Seed groot = make_root_seed(a2tilde_gamma());
    ExchangePairRecord grec = exchange_data(groot, 2);
    CHECK(grec.bplus == std::vector<std::pair<int, int>>{{0, 2}});
    CHECK(grec.bminus == std::vector<std::pair<int, int>>{{1, 1}});
    assert_exchange_equation(groot, grec);

    // Isolated vertex: both products empty, exchange gives (1+1)/x_k.
    Seed a1 = make_root_seed(ExchangeMatrix(1));
    ExchangePairRecord arec = exchange_data(a1, 0);
    CHECK(arec.bplus.empty());
    CHECK(arec.bminus.empty());
    CHECK(fraction_string(arec.xmstar[0]) == "2 / y1");
    assert_exchange_equation(a1, arec);
}

TEST_CASE("closure enumeration of the cyclic A3 seed") {
    Seed root = make_root_seed(cyclic_a3());
    Enumeration e = enumerate_seeds(root, Budget::closure());
    CHECK(e.closed);
    CHECK(e.variables.size() == 9);
    CHECK(e.seeds.size() == 14);
    CHECK(static_cast<long long>(e.seeds.size()) == triangulation_count(6));

    std::set<std::string> expected{
        "y1",
        "y2",
        "y3",
        "(y1 + y2) / y3",
        "(y2 + y3) / y1",
        "(y1 + y3) / y2",
        "(y1 + y2 + y3) / (y1*y2)",
        "(y1 + y2 + y3) / (y1*y3)",
        "(y1 + y2 + y3) / (y2*y3)",
    };
    CHECK(variable_strings(e) == expected);

    // Laurent phenomenon held implicitly (no throw); positivity explicitly.
    for (const auto& v : e.variables) CHECK(positivity_check(reduced_numerator(v.expr[0])));
}

TEST_CASE("closure counts in small Dynkin types") {
    Enumeration a2 = enumerate_seeds(make_root_seed(linear_a(2)), Budget::closure());
    CHECK(a2.variables.size() == 5);
    CHECK(a2.seeds.size() == 5);
    CHECK(static_cast<long long>(a2.seeds.size()) == triangulation_count(5));

    Enumeration a1 = enumerate_seeds(make_root_seed(ExchangeMatrix(1)), Budget::closure());
    CHECK(a1.variables.size() == 2);
    CHECK(a1.seeds.size() == 2);
}

TEST_CASE("depth zero returns just the root") {
    Enumeration e = enumerate_seeds(make_root_seed(cyclic_a3()), Budget::depth(0));
    CHECK(e.seeds.size() == 1);
    CHECK(e.variables.size() == 3);
    CHECK_FALSE(e.closed);
}

TEST_CASE("closure refused off Dynkin type") {
    CHECK_THROWS_AS((void)enumerate_seeds(make_root_seed(a2tilde_gamma()), Budget::closure()),
                    UnsupportedQuiver);
    ExchangeMatrix kron(2);
    kron.set(0, 1, 2);
    CHECK_THROWS_AS((void)enumerate_seeds(make_root_seed(kron), Budget::closure()), UnsupportedQuiver);
}

TEST_CASE("distinct denominator vectors on a Dynkin acyclic root") {
    Enumeration e = enumerate_seeds(make_root_seed(linear_a(3)), Budget::closure());
    std::set<DenomVector> dvecs;
    for (const auto& v : e.variables) dvecs.insert(denominator_vector(v.expr[0]));
    CHECK(dvecs.size() == e.variables.size());
}

TEST_CASE("exchange edges carry the pair equation") {
    Enumeration e = enumerate_seeds(make_root_seed(cyclic_a3()), Budget::closure());
    // 14 clusters * 3 positions = 42 traversals over 21 associahedron edges;
    // they collapse to 15 distinct exchange pairs (a flip pair can occur on
    // two different edges, with the same middle terms).
    int traversals = 0;
    for (const auto& edge : e.edges) traversals += edge.count;
    CHECK(traversals == 42);
    CHECK(e.edges.size() == 15);
    for (const auto& edge : e.edges) {
        LaurentPoly lhs = mul(e.expr(edge.m), e.expr(edge.mstar));
        LaurentPoly plus = LaurentPoly::constant(e.n, 1), minus = LaurentPoly::constant(e.n, 1);
        for (auto [v, m] : edge.bplus)
            for (int c = 0; c < m; ++c) plus = mul(plus, e.expr(v));
        for (auto [v, m] : edge.bminus)
            for (int c = 0; c < m; ++c) minus = mul(minus, e.expr(v));
        CHECK(lhs == add(plus, minus));
    }
}

TEST_CASE("planted coordinate systems") {
    // Planting at the root itself is the identity.
    std::vector<LaurentPoly> self = cluster_planted_at(cyclic_a3(), {});
    for (int i = 0; i < 3; ++i) CHECK(self[i] == LaurentPoly::variable(3, i));

    // Two-system enumeration from the Gamma seed with a system planted at
    // mu_2: the planted expressions are cluster variables of that basis.
    ExchangeMatrix G = a2tilde_gamma();
    Seed root = make_root_seed(G, 2);
    root.systems[1] = cluster_planted_at(G, {1});
    Enumeration e = enumerate_seeds(root, Budget::depth(4));

    // The system-0 variable ((y1+y3)^2+y2)/(y1y2y3) appears within depth 4.
    bool found = false;
    for (const auto& v : e.variables)
        if (fraction_string(v.expr[0]) == "(y1^2 + 2*y1*y3 + y3^2 + y2) / (y1*y2*y3)") {
            found = true;
            CHECK(v.witness.size() <= 4);
            // In the basis planted at mu_2 (the acyclic seed) its denominator
            // vector is the dimension vector (1,0,1).
            CHECK(denominator_vector(v.expr[1]) == DenomVector{1, 0, 1});
        }
    CHECK(found);
}

TEST_CASE("parallel enumeration is deterministic") {
    Seed root = make_root_seed(a2tilde_gamma());
    Enumeration serial = enumerate_seeds(root, Budget::depth(4), 1);
    Enumeration parallel = enumerate_seeds(root, Budget::depth(4), 4);
    REQUIRE(serial.variables.size() == parallel.variables.size());
    for (size_t i = 0; i < serial.variables.size(); ++i) {
        CHECK(serial.variables[i].expr[0] == parallel.variables[i].expr[0]);
        CHECK(serial.variables[i].witness == parallel.variables[i].witness);
    }
    REQUIRE(serial.seeds.size() == parallel.seeds.size());
    for (size_t i = 0; i < serial.seeds.size(); ++i) CHECK(serial.seeds[i].word == parallel.seeds[i].word);
    CHECK(enumeration_json(serial) == enumeration_json(parallel));
}

TEST_CASE("word parsing") {
    CHECK(parse_word("2,1", 3) == std::vector<int>{1, 0});
    CHECK(parse_word("", 3).empty());
    CHECK(word_string(std::vector<int>{1, 0}) == "2,1");
    CHECK_THROWS_AS((void)parse_word("0", 3), InputError);
    CHECK_THROWS_AS((void)parse_word("4", 3), InputError);
    CHECK_THROWS_AS((void)parse_word("x", 3), InputError);
}
