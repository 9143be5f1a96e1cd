#include <jumpnum/enriques.hpp>

#include <jumpnum/jumping.hpp>
#include <jumpnum/oracle.hpp>

#include <doctest.h>

#include <random>

using namespace jumpnum;

namespace {

std::vector<Int> ints(std::initializer_list<long long> values) {
    return {values.begin(), values.end()};
}

std::vector<EdgeKind> kinds(std::initializer_list<char> letters) {
    std::vector<EdgeKind> out;
    for (char c : letters) {
        out.push_back(c == 's' ? EdgeKind::Slant
                               : (c == 'h' ? EdgeKind::Horizontal : EdgeKind::Vertical));
    }
    return out;
}

// Weights of T_{p,q}: the Euclidean remainders r_1..r_m, each repeated a_j
// times.
std::vector<Int> repeated_remainders(const Int& p, const Int& q) {
    const EuclidData euclid = euclid_expand(p, q);
    std::vector<Int> weights;
    for (int j = 1; j <= euclid.length(); ++j) {
        for (Int i = 0; i < euclid.a(j); ++i) {
            weights.push_back(euclid.r(j));
        }
    }
    return weights;
}

}  // namespace

TEST_SUITE("enriques") {

TEST_CASE("T_{5,7}") {
    const EnriquesTree tree = build_tpq(5, 7);
    CHECK(tree.vertex_count == 5);
    CHECK(tree.edge_kinds == kinds({'s', 'h', 'h', 'v'}));
    CHECK(branch_divisor(tree).w == ints({5, 2, 2, 1, 1}));
}

TEST_CASE("T_{2,3}") {
    const EnriquesTree tree = build_tpq(2, 3);
    CHECK(tree.vertex_count == 3);
    CHECK(tree.edge_kinds == kinds({'s', 'h'}));
    CHECK(branch_divisor(tree).w == ints({2, 1, 1}));
}

TEST_CASE("T_{2,5}") {
    const EnriquesTree tree = build_tpq(2, 5);
    CHECK(tree.vertex_count == 4);
    CHECK(tree.edge_kinds == kinds({'s', 's', 'h'}));
}

TEST_CASE("connected sums") {
    const EnriquesTree t23 = build_tpq(2, 3);
    CHECK(connected_sum(t23, t23).vertex_count == 5);
    CHECK(connected_sum(t23, build_tpq(5, 11)).vertex_count == 9);

    const EnriquesTree same = connected_sum(t23, single_vertex_tree());
    CHECK(same.vertex_count == t23.vertex_count);
    CHECK(same.edge_kinds == t23.edge_kinds);
    CHECK(connected_sum(single_vertex_tree(), t23).vertex_count == 3);

    CHECK_THROWS_AS(connected_sum(t23, EnriquesTree{}), ValidationError);
}

TEST_CASE("from_pairs") {
    CHECK(from_pairs({{2, 3}, {5, 11}}).vertex_count == 9);
    CHECK(from_pairs({}).trivial());

    const EnriquesTree single = from_pairs({{2, 3}});
    CHECK(single.vertex_count == build_tpq(2, 3).vertex_count);
    CHECK(single.edge_kinds == build_tpq(2, 3).edge_kinds);

    CHECK_THROWS_WITH_AS(from_pairs({{2, 3}, {6, 4}}), doctest::Contains("pair 2"),
                         ValidationError);
}

TEST_CASE("proximity tables") {
    using Sets = std::vector<std::vector<VertexIndex>>;
    CHECK(proximity(build_tpq(5, 7)).sets ==
          Sets{{}, {1}, {1, 2}, {1, 3}, {3, 4}});
    CHECK(proximity(build_tpq(2, 3)).sets == Sets{{}, {1}, {1, 2}});
    CHECK(proximity(from_pairs({{2, 3}, {2, 3}})).sets ==
          Sets{{}, {1}, {1, 2}, {3}, {3, 4}});
}

TEST_CASE("proximity equality of the weights") {
    // w_alpha = sum of w_beta over the points proximate to P_alpha, for
    // every alpha below the top.
    for (const PairList& pairs :
         {PairList{{5, 7}}, PairList{{2, 3}, {2, 3}}, PairList{{2, 3}, {5, 11}}}) {
        const EnriquesTree tree = from_pairs(pairs);
        const auto inverse = proximity(tree).inverse();
        const std::vector<Int> w = branch_divisor(tree).w;
        for (VertexIndex alpha = 1; alpha < tree.vertex_count; ++alpha) {
            Int sum = 0;
            for (VertexIndex beta : inverse[static_cast<std::size_t>(alpha - 1)]) {
                sum += w[static_cast<std::size_t>(beta - 1)];
            }
            REQUIRE(w[static_cast<std::size_t>(alpha - 1)] == sum);
        }
        REQUIRE(w.back() == 1);
    }
}

TEST_CASE("intersection matrix of T_{5,7}") {
    const IntMatrix matrix = intersection_matrix(build_tpq(5, 7));
    CHECK(matrix[3][4] == 1);  // E_4 . E_5
    CHECK(matrix[2][4] == 1);  // E_3 . E_5
    CHECK(matrix[0][3] == 1);  // E_1 . E_4
    CHECK(matrix[0][1] == 0);  // E_1 . E_2
    CHECK(matrix[4][4] == -1);
    CHECK(matrix[2][3] == 0);  // [P_3 P_4] extends to a longer L-shape
}

TEST_CASE("intersection matrix of T_{2,3}") {
    const IntMatrix matrix = intersection_matrix(build_tpq(2, 3));
    CHECK(matrix[0][2] == 1);
    CHECK(matrix[1][2] == 1);
    CHECK(matrix[0][1] == 0);
}

TEST_CASE("intersection matrix is symmetric with the expected diagonal") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 25; ++i) {
        const EnriquesTree tree = from_pairs(random_pair_list(rng, 3, 6, 17));
        const IntMatrix matrix = intersection_matrix(tree);
        const auto inverse = proximity(tree).inverse();
        for (std::size_t a = 0; a < matrix.size(); ++a) {
            REQUIRE(matrix[a][a] == -1 - static_cast<int>(inverse[a].size()));
            for (std::size_t b = 0; b < matrix.size(); ++b) {
                REQUIRE(matrix[a][b] == matrix[b][a]);
            }
        }
    }
}

TEST_CASE("branch divisors") {
    CHECK(branch_divisor(build_tpq(5, 7)).e == ints({5, 7, 14, 20, 35}));
    CHECK(branch_divisor(build_tpq(2, 3)).e == ints({2, 3, 6}));

    const LatticeDivisor divisor = branch_divisor(from_pairs({{2, 3}, {5, 11}}));
    CHECK(divisor.e[2] == 30);
    CHECK(divisor.e[8] == 180);
    CHECK(divisor.b == ints({0, 0, 0, 0, 0, 0, 0, 0, 1}));
}

TEST_CASE("weights of T_{p,q} are the repeated remainders") {
    for (const auto& [p, q] : {std::pair<int, int>{5, 7}, {2, 3}, {2, 5}, {8, 11}, {13, 30}}) {
        CHECK(branch_divisor(build_tpq(p, q)).w == repeated_remainders(p, q));
    }
}

TEST_CASE("satellite sum rule") {
    // e_beta = e_alpha' + e_alpha'' + w_beta for every satellite, on
    // random trees and random divisors.
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int i = 0; i < 50; ++i) {
        const EnriquesTree tree = from_pairs(random_pair_list(rng, 3, 6, 17));
        const ProximityTable prox = proximity(tree);

        std::vector<Int> w(static_cast<std::size_t>(tree.vertex_count));
        for (Int& value : w) {
            value = coeff(rng);
        }
        const LatticeDivisor divisor = divisor_from_w(prox, w);
        for (VertexIndex beta = 2; beta <= tree.vertex_count; ++beta) {
            if (!prox.is_satellite(beta)) continue;
            const auto& parents = prox.prox(beta);
            REQUIRE(divisor.e[static_cast<std::size_t>(beta - 1)] ==
                    divisor.e[static_cast<std::size_t>(parents[0] - 1)] +
                        divisor.e[static_cast<std::size_t>(parents[1] - 1)] +
                        divisor.w[static_cast<std::size_t>(beta - 1)]);
        }
    }
}

TEST_CASE("satellite sum rule with remainders on T_{p,q}") {
    // For the branch divisor of T_{p,q} the satellite increment is the
    // matching Euclidean remainder.
    for (const auto& [p, q] : {std::pair<int, int>{5, 7}, {4, 9}, {8, 11}, {13, 30}}) {
        const EnriquesTree tree = build_tpq(p, q);
        const ProximityTable prox = proximity(tree);
        const LatticeDivisor divisor = branch_divisor(tree);
        const std::vector<Int> weights = repeated_remainders(p, q);
        for (VertexIndex beta = 2; beta <= tree.vertex_count; ++beta) {
            if (!prox.is_satellite(beta)) continue;
            const auto& parents = prox.prox(beta);
            REQUIRE(divisor.e[static_cast<std::size_t>(beta - 1)] ==
                    divisor.e[static_cast<std::size_t>(parents[0] - 1)] +
                        divisor.e[static_cast<std::size_t>(parents[1] - 1)] +
                        weights[static_cast<std::size_t>(beta - 1)]);
        }
    }
}

TEST_CASE("canonical coefficients") {
    CHECK(canonical_coeffs(build_tpq(5, 7)) == ints({1, 2, 4, 6, 11}));
    CHECK(canonical_coeffs(build_tpq(2, 3)) == ints({1, 2, 4}));
    std::mt19937_64 rng(13);
    for (int i = 0; i < 10; ++i) {
        CHECK(canonical_coeffs(from_pairs(random_pair_list(rng, 3, 6, 17))).front() == 1);
    }
}

TEST_CASE("relevant positions") {
    CHECK(relevant_positions(from_pairs({{2, 3}, {5, 11}})) ==
          std::vector<VertexIndex>{3, 9});
    CHECK(relevant_positions(build_tpq(5, 7)) == std::vector<VertexIndex>{5});
    CHECK(relevant_positions(from_pairs({{2, 3}, {2, 3}})) == std::vector<VertexIndex>{3, 5});
    CHECK(relevant_positions(EnriquesTree{}).empty());
}

TEST_CASE("relevant positions equal the junction vertices") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 60; ++i) {
        const PairList pairs = random_pair_list(rng, 4, 8, 30);
        const EnriquesTree tree = from_pairs(pairs);
        REQUIRE(relevant_positions(tree) == tree.junction_vertices());
        REQUIRE(tree.junction_vertices() == junction_vertices_of(pairs));
    }
}

TEST_CASE("basis round trip") {
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<int> coeff(-50, 50);
    for (int i = 0; i < 40; ++i) {
        const EnriquesTree tree = from_pairs(random_pair_list(rng, 3, 6, 17));
        const ProximityTable prox = proximity(tree);
        std::vector<Int> e(static_cast<std::size_t>(tree.vertex_count));
        for (Int& value : e) {
            value = coeff(rng);
        }
        const LatticeDivisor via_w = divisor_from_w(prox, divisor_from_e(prox, e).w);
        REQUIRE(via_w.e == e);
        const LatticeDivisor via_b = divisor_from_b(prox, divisor_from_e(prox, e).b);
        REQUIRE(via_b.e == e);
    }
}

TEST_CASE("quotient sum equals the vertex count") {
    for (const auto& [p, q] : {std::pair<int, int>{5, 7}, {2, 3}, {9, 20}, {12, 343}}) {
        CHECK(Int(build_tpq(p, q).vertex_count) == euclid_expand(p, q).quotient_sum());
    }
}

}  // TEST_SUITE
