#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "krdeg/deg.hpp"

using namespace krdeg;

namespace {

TensorElement elem(int n, std::vector<std::vector<std::vector<int>>> factors) {
    std::vector<Tableau> fs;
    for (auto& f : factors) fs.emplace_back(f);
    return TensorElement(n, std::move(fs));
}

// single-column factor from a value list
std::vector<std::vector<int>> col(std::vector<int> values) {
    std::vector<std::vector<int>> rows;
    for (int v : values) rows.push_back({v});
    return rows;
}

const KRDegGraph& square_dot_graph() {
    static KRDegGraph g = build_graph(RectSeq{{2, 2}, {1, 1}});
    return g;
}

std::optional<KRDegGraph::Edge> find_edge(const KRDegGraph& g, const TensorElement& a,
                                          const TensorElement& b) {
    int u = g.index_of(a), v = g.index_of(b);
    if (u > v) std::swap(u, v);
    for (const auto& e : g.edges)
        if (e.u == u && e.v == v) return e;
    return std::nullopt;
}

} // namespace

TEST_CASE("descent sets") {
    CHECK(descent_set(elem(5, {{{1, 2}, {3, 5}}, {{4}}})) == DescentSet{2, 4, 5});
    CHECK(descent_set(elem(8, {{{1, 2}, {3, 5}}, {{4, 7}, {6, 8}}})) == DescentSet{2, 4, 7, 8});
    SECTION("row superstandard pair of rows carries only the affine descent") {
        TensorElement t = superstandard(RectSeq{{1, 2}, {1, 2}}, 1).element;
        CHECK(t == elem(4, {{{1, 2}}, {{3, 4}}}));
        CHECK(descent_set(t) == DescentSet{4});
    }
    SECTION("non-standard content is rejected") {
        CHECK_THROWS_AS(descent_set(elem(3, {{{1, 1}, {2, 2}}})), DomainError);
    }
}

TEST_CASE("commutator edges") {
    SECTION("single type-A factor, reading word 45123") {
        TensorElement t = elem(5, {{{1, 2, 3}, {4, 5}}});
        auto moved = commutator_edge(t, 3);
        REQUIRE(moved.has_value());
        CHECK(*moved == elem(5, {{{1, 2, 4}, {3, 5}}}));
    }
    SECTION("two-factor vertex") {
        TensorElement t = elem(5, {{{1, 2}, {3, 5}}, {{4}}});
        auto moved = commutator_edge(t, 2);
        REQUIRE(moved.has_value());
        CHECK(*moved == elem(5, {{{1, 2}, {4, 5}}, {{3}}}));
    }
    SECTION("composite returning to the start yields no edge") {
        CHECK_FALSE(commutator_edge(elem(5, {{{1, 2, 3}, {4, 5}}}), 1).has_value());
    }
    SECTION("undefined step yields no edge") {
        CHECK_FALSE(commutator_edge(elem(5, {{{1, 2, 3}, {4, 5}}}), 4).has_value());
    }
}

TEST_CASE("definitional moves") {
    TensorElement t = elem(8, {{{1, 2}, {3, 5}}, {{4, 7}, {6, 8}}});
    SECTION("letter swap with incomparable descents") {
        auto moved = definitional_edge(t, EdgeLabel::Swap(3));
        REQUIRE(moved.has_value());
        CHECK(*moved == elem(8, {{{1, 2}, {4, 5}}, {{3, 7}, {6, 8}}}));
    }
    SECTION("letter swap with nested descents is rejected") {
        CHECK_FALSE(definitional_edge(t, EdgeLabel::Swap(5)).has_value());
    }
    SECTION("affine swap across factors") {
        auto moved = definitional_edge(t, EdgeLabel::AffineSwap());
        REQUIRE(moved.has_value());
        CHECK(*moved == elem(8, {{{2, 5}, {3, 8}}, {{1, 4}, {6, 7}}}));
    }
    SECTION("bar moves on the 13-cell example") {
        TensorElement u = elem(13, {{{1, 2, 8}, {5, 10, 12}, {7, 11, 13}}, {{3, 6}, {4, 9}}});
        auto first = definitional_edge(u, EdgeLabel::Bar1());
        REQUIRE(first.has_value());
        CHECK(*first == elem(13, {{{1, 5, 8}, {2, 10, 12}, {7, 11, 13}}, {{3, 6}, {4, 9}}}));

        auto second = definitional_edge(*first, EdgeLabel::BarNminus1());
        REQUIRE(second.has_value());
        CHECK(*second == elem(13, {{{1, 5, 8}, {2, 7, 10}, {11, 12, 13}}, {{3, 6}, {4, 9}}}));
    }
}

TEST_CASE("the ten-vertex graph") {
    const KRDegGraph& g = square_dot_graph();
    REQUIRE(g.vertices.size() == 10);
    CHECK(g.edges.size() == 10);
    CHECK(g.components.size() == 1);

    auto n1 = elem(5, {{{1, 2}, {3, 5}}, {{4}}});
    auto n3 = elem(5, {{{1, 3}, {2, 5}}, {{4}}});
    auto n4 = elem(5, {{{1, 2}, {3, 4}}, {{5}}});
    auto n5 = elem(5, {{{1, 2}, {4, 5}}, {{3}}});
    auto n9 = elem(5, {{{2, 4}, {3, 5}}, {{1}}});
    auto n10 = elem(5, {{{1, 4}, {2, 5}}, {{3}}});

    SECTION("edge labels match the worked diagram") {
        auto e13 = find_edge(g, n1, n3);
        REQUIRE(e13.has_value());
        CHECK(e13->labels == std::vector<std::string>{"t2", "bt1", "C1", "C5"});

        auto e49 = find_edge(g, n4, n9);
        REQUIRE(e49.has_value());
        CHECK(e49->labels == std::vector<std::string>{"t5", "C4", "C5"});

        auto e510 = find_edge(g, n5, n10);
        REQUIRE(e510.has_value());
        CHECK(e510->labels == std::vector<std::string>{"bt1", "bt4", "C4", "C5"});
    }
    SECTION("descents and charges are cached") {
        CHECK(g.descents[static_cast<std::size_t>(g.index_of(n1))] == DescentSet{2, 4, 5});
        for (std::size_t vi = 0; vi < g.vertices.size(); ++vi)
            CHECK(g.charges[vi] == charge(g.vertices[vi]));
    }
}

TEST_CASE("the six-vertex graph") {
    KRDegGraph g = build_graph(RectSeq{{1, 2}, {2, 1}});
    REQUIRE(g.vertices.size() == 6);
    CHECK(g.components.size() == 1);
    CHECK(g.edges.size() == 8);

    auto hub_top = elem(4, {{{1, 3}}, col({2, 4})});
    auto hub_bottom = elem(4, {{{2, 4}}, col({1, 3})});
    int degree_top = 0, degree_bottom = 0;
    for (const auto& e : g.edges) {
        if (e.u == g.index_of(hub_top) || e.v == g.index_of(hub_top)) ++degree_top;
        if (e.u == g.index_of(hub_bottom) || e.v == g.index_of(hub_bottom)) ++degree_bottom;
    }
    CHECK(degree_top == 4);
    CHECK(degree_bottom == 4);
}

TEST_CASE("two columns of height three split into two components") {
    KRDegGraph g = build_graph(RectSeq{{3, 1}, {3, 1}});
    REQUIRE(g.vertices.size() == 20);
    REQUIRE(g.components.size() == 2);

    std::vector<std::vector<int>> even_side{
        {1, 3, 5}, {1, 2, 5}, {1, 3, 4}, {3, 5, 6}, {1, 2, 4},
        {3, 4, 6}, {2, 5, 6}, {1, 2, 3}, {3, 4, 5}, {1, 5, 6}};
    std::vector<std::vector<int>> even_other{
        {2, 4, 6}, {3, 4, 6}, {2, 5, 6}, {1, 2, 4}, {3, 5, 6},
        {1, 2, 5}, {1, 3, 4}, {4, 5, 6}, {1, 2, 6}, {2, 3, 4}};
    std::vector<std::vector<int>> odd_side{
        {2, 4, 6}, {2, 3, 6}, {2, 4, 5}, {1, 4, 6}, {2, 3, 5},
        {1, 4, 5}, {1, 3, 6}, {2, 3, 4}, {4, 5, 6}, {1, 2, 6}};
    std::vector<std::vector<int>> odd_other{
        {1, 3, 5}, {1, 4, 5}, {1, 3, 6}, {2, 3, 5}, {1, 4, 6},
        {2, 3, 6}, {2, 4, 5}, {1, 5, 6}, {1, 2, 3}, {3, 4, 5}};

    std::set<int> even_ids, odd_ids;
    for (std::size_t i = 0; i < even_side.size(); ++i)
        even_ids.insert(g.index_of(elem(6, {col(even_side[i]), col(even_other[i])})));
    for (std::size_t i = 0; i < odd_side.size(); ++i)
        odd_ids.insert(g.index_of(elem(6, {col(odd_side[i]), col(odd_other[i])})));
    REQUIRE(even_ids.size() == 10);
    REQUIRE(odd_ids.size() == 10);

    std::set<int> comp0(g.components[0].begin(), g.components[0].end());
    std::set<int> comp1(g.components[1].begin(), g.components[1].end());
    bool zero_is_even = comp0.count(*even_ids.begin()) > 0;
    CHECK((zero_is_even ? comp0 : comp1) == even_ids);
    CHECK((zero_is_even ? comp1 : comp0) == odd_ids);

    for (int v : even_ids) CHECK(g.charges[static_cast<std::size_t>(v)] % 2 == 0);
    for (int v : odd_ids) CHECK(g.charges[static_cast<std::size_t>(v)] % 2 == 1);

    auto residues = components_by_charge(g);
    CHECK(residues.size() == 2);
}

TEST_CASE("components refuse to certify a broken theorem") {
    KRDegGraph g = build_graph(RectSeq{{3, 1}, {3, 1}});
    g.charges[0] += 1; // sabotage
    CHECK_THROWS_AS(components_by_charge(g), VerificationError);
}

TEST_CASE("commutator and definitional edge sets coincide") {
    for (const RectSeq& shapes :
         {RectSeq{{2, 2}, {1, 1}}, RectSeq{{1, 2}, {2, 1}}, RectSeq{{3, 1}, {3, 1}}}) {
        KRDegGraph g = build_graph(shapes);
        CHECK(commutator_edge_set(g) == definitional_edge_set(g));
    }
}

TEST_CASE("promotion is a graph automorphism") {
    for (const RectSeq& shapes :
         {RectSeq{{2, 2}, {1, 1}}, RectSeq{{1, 2}, {2, 1}}, RectSeq{{3, 1}, {3, 1}}}) {
        KRDegGraph g = build_graph(shapes);
        int n = g.n();
        std::vector<int> image;
        for (const auto& t : g.vertices) image.push_back(g.index_of(promote_tensor(t)));
        SECTION("descents rotate cyclically: " + shapes.to_string()) {
            for (std::size_t vi = 0; vi < g.vertices.size(); ++vi) {
                DescentSet expect;
                for (int d : g.descents[vi]) expect.push_back(d % n + 1);
                std::sort(expect.begin(), expect.end());
                CHECK(g.descents[static_cast<std::size_t>(image[vi])] == expect);
            }
        }
        SECTION("edges map to edges: " + shapes.to_string()) {
            std::set<std::pair<int, int>> edges;
            for (const auto& e : g.edges) edges.insert({e.u, e.v});
            for (const auto& e : g.edges) {
                int u = image[static_cast<std::size_t>(e.u)], v = image[static_cast<std::size_t>(e.v)];
                if (u > v) std::swap(u, v);
                CHECK(edges.count({u, v}) == 1);
            }
        }
    }
}

TEST_CASE("superstandard fillings") {
    RectSeq shapes{{2, 2}, {3, 3}, {3, 3}};
    SECTION("column superstandard") {
        auto ss = superstandard(shapes, 0);
        CHECK(ss.element == elem(22, {{{7, 15}, {8, 16}},
                                      {{4, 12, 20}, {5, 13, 21}, {6, 14, 22}},
                                      {{1, 9, 17}, {2, 10, 18}, {3, 11, 19}}}));
        CHECK(ss.col_max == std::vector<int>{8, 16, 22});
    }
    SECTION("row superstandard") {
        auto ss = superstandard(shapes, 3);
        CHECK(ss.element == elem(22, {{{1, 2}, {9, 10}},
                                      {{3, 4, 5}, {11, 12, 13}, {17, 18, 19}},
                                      {{6, 7, 8}, {14, 15, 16}, {20, 21, 22}}}));
        CHECK(ss.row_max == std::vector<int>{8, 16, 22});
    }
    SECTION("two rows then columns") {
        auto ss = superstandard(shapes, 2);
        CHECK(ss.element == elem(22, {{{1, 2}, {9, 10}},
                                      {{3, 4, 5}, {11, 12, 13}, {18, 20, 22}},
                                      {{6, 7, 8}, {14, 15, 16}, {17, 19, 21}}}));
        CHECK(ss.col_max == std::vector<int>{18, 20, 22});
        CHECK(ss.row_max[1] == 16);
    }
    SECTION("row count out of range") {
        CHECK_THROWS_AS(superstandard(shapes, 4), DomainError);
    }
    SECTION("boundary gcd reaches d_R") {
        // union over m of the column maxima and a_{m,m}
        for (const RectSeq& r : {RectSeq{{3, 1}, {3, 1}}, RectSeq{{2, 2}, {2, 2}, {2, 2}},
                                 RectSeq{{2, 1}, {2, 1}, {1, 2}, {1, 2}}, RectSeq{{2, 2}, {1, 1}}}) {
            int rmax = 0;
            for (const auto& rect : r.rects) rmax = std::max(rmax, rect.rows);
            int g = 0;
            for (int m = 0; m <= rmax; ++m) {
                auto ss = superstandard(r, m);
                for (int c : ss.col_max)
                    if (c > 0) g = std::gcd(g, c);
                if (m >= 1) g = std::gcd(g, ss.row_max[static_cast<std::size_t>(m - 1)]);
            }
            CHECK(g == r.d_R());
        }
    }
}

TEST_CASE("swap sequences realize powers of promotion") {
    RectSeq shapes{{2, 2}, {3, 3}, {3, 3}};
    SECTION("from the column superstandard filling, d = 8") {
        auto walk = s_sequence_path(shapes, 0, 8);
        REQUIRE(walk.milestones.size() == 14);
        CHECK(walk.milestones[2] == elem(22, {{{10, 15}, {11, 16}},
                                              {{7, 12, 20}, {8, 13, 21}, {9, 14, 22}},
                                              {{1, 4, 17}, {2, 5, 18}, {3, 6, 19}}}));
        CHECK(walk.milestones[5] == elem(22, {{{13, 15}, {14, 16}},
                                              {{4, 10, 20}, {5, 11, 21}, {6, 12, 22}},
                                              {{1, 7, 17}, {2, 8, 18}, {3, 9, 19}}}));
        CHECK(walk.milestones[7] == elem(22, {{{7, 15}, {8, 16}},
                                              {{4, 12, 20}, {5, 13, 21}, {6, 14, 22}},
                                              {{1, 9, 17}, {2, 10, 18}, {3, 11, 19}}}));
        CHECK(walk.milestones[10] == elem(22, {{{7, 18}, {8, 19}},
                                               {{4, 15, 20}, {5, 16, 21}, {6, 17, 22}},
                                               {{1, 9, 12}, {2, 10, 13}, {3, 11, 14}}}));
        TensorElement endpoint = superstandard(shapes, 0).element;
        for (int step = 0; step < 14; ++step) endpoint = promote_tensor(endpoint);
        CHECK(walk.milestones[13] == endpoint);
        CHECK(walk.milestones[13] == elem(22, {{{7, 21}, {8, 22}},
                                               {{4, 12, 18}, {5, 13, 19}, {6, 14, 20}},
                                               {{1, 9, 15}, {2, 10, 16}, {3, 11, 17}}}));
    }
    SECTION("from row_2, d = 16") {
        auto walk = s_sequence_path(shapes, 2, 16);
        REQUIRE(walk.milestones.size() == 6);
        std::vector<TensorElement> expect{
            elem(22, {{{2, 3}, {10, 11}},
                      {{4, 5, 6}, {12, 13, 14}, {18, 20, 22}},
                      {{1, 8, 9}, {7, 16, 17}, {15, 19, 21}}}),
            elem(22, {{{3, 4}, {11, 12}},
                      {{2, 6, 7}, {5, 14, 15}, {13, 20, 22}},
                      {{1, 9, 10}, {8, 17, 18}, {16, 19, 21}}}),
            elem(22, {{{4, 5}, {12, 13}},
                      {{2, 7, 8}, {6, 15, 16}, {14, 20, 22}},
                      {{1, 3, 11}, {9, 10, 19}, {17, 18, 21}}}),
            elem(22, {{{5, 6}, {13, 14}},
                      {{2, 4, 9}, {7, 8, 17}, {15, 16, 22}},
                      {{1, 3, 12}, {10, 11, 20}, {18, 19, 21}}}),
            elem(22, {{{6, 7}, {14, 15}},
                      {{2, 4, 10}, {8, 9, 18}, {16, 17, 22}},
                      {{1, 3, 5}, {11, 12, 13}, {19, 20, 21}}}),
            elem(22, {{{7, 8}, {15, 16}},
                      {{2, 4, 6}, {9, 10, 11}, {17, 18, 19}},
                      {{1, 3, 5}, {12, 13, 14}, {20, 21, 22}}})};
        for (std::size_t i = 0; i < expect.size(); ++i) CHECK(walk.milestones[i] == expect[i]);
    }
    SECTION("d = n gives the empty walk") {
        auto walk = s_sequence_path(RectSeq{{2, 2}, {1, 1}}, 2, 5);
        CHECK(walk.path.size() == 1);
        CHECK(walk.milestones.empty());
    }
}

TEST_CASE("partial combs") {
    TensorElement t = elem(22, {{{1, 2, 3}, {9, 10, 15}, {11, 16, 20}},
                                {{4, 5, 6}, {13, 18, 21}, {14, 19, 22}},
                                {{7, 8}, {12, 17}}});
    TensorElement after_first = pcomb(t, 9, 10);
    CHECK(after_first == elem(22, {{{1, 2, 3}, {9, 11, 15}, {10, 16, 20}},
                                   {{4, 5, 6}, {13, 18, 21}, {14, 19, 22}},
                                   {{7, 8}, {12, 17}}}));
    TensorElement after_second = pcomb(after_first, 1, 8);
    CHECK(after_second == elem(22, {{{1, 3, 4}, {2, 11, 15}, {10, 16, 20}},
                                    {{5, 6, 7}, {13, 18, 21}, {14, 19, 22}},
                                    {{8, 9}, {12, 17}}}));
    SECTION("i = j is the identity") {
        CHECK(pcomb(t, 10, 10) == t);
    }
    SECTION("precondition violations are rejected") {
        CHECK_THROWS_AS(pcomb(t, 8, 10), DomainError);
    }
    SECTION("one full rcomb iteration lands on the displayed tensor") {
        RectSeq shapes{{3, 3}, {3, 3}, {2, 2}};
        auto next = rcomb(t, shapes);
        REQUIRE(next.has_value());
        CHECK(*next == elem(22, {{{1, 2, 3}, {9, 10, 14}, {15, 19, 22}},
                                 {{4, 5, 6}, {12, 17, 20}, {13, 18, 21}},
                                 {{7, 8}, {11, 16}}}));
    }
}

TEST_CASE("row combing") {
    RectSeq shapes{{2, 2}, {2, 2}};
    TensorElement start = elem(8, {{{1, 2}, {3, 6}}, {{4, 5}, {7, 8}}});
    auto mid = rcomb(start, shapes);
    REQUIRE(mid.has_value());
    CHECK(*mid == elem(8, {{{1, 2}, {5, 8}}, {{3, 4}, {6, 7}}}));
    auto done = rcomb(*mid, shapes);
    REQUIRE(done.has_value());
    CHECK(*done == elem(8, {{{1, 2}, {5, 6}}, {{3, 4}, {7, 8}}}));
    CHECK(*done == superstandard(shapes, 2).element);
    CHECK_FALSE(rcomb(*done, shapes).has_value());

    SECTION("comb_to_row records the two iterations") {
        auto result = comb_to_row(start, shapes);
        CHECK(result.trail.size() == 3);
        CHECK(result.net_promotions == 2);
        CHECK(result.trail.back() == superstandard(shapes, 2).element);
    }
    SECTION("row(R) combs to itself immediately") {
        auto result = comb_to_row(superstandard(shapes, 2).element, shapes);
        CHECK(result.trail.size() == 1);
        CHECK(result.net_promotions == 0);
    }
    SECTION("termination across a whole graph") {
        RectSeq two_columns{{3, 1}, {3, 1}};
        TensorElement target = superstandard(two_columns, 3).element;
        for (const auto& t : enumerate_zero_weight(two_columns)) {
            auto result = comb_to_row(t, two_columns);
            CHECK(result.trail.back() == target);
        }
    }
}
