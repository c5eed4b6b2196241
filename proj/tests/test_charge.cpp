#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "generators.hpp"
#include "krdeg/charge.hpp"

using namespace krdeg;

namespace {

TensorElement elem(int n, std::vector<std::vector<std::vector<int>>> factors) {
    std::vector<Tableau> fs;
    for (auto& f : factors) fs.emplace_back(f);
    return TensorElement(n, std::move(fs));
}

const Tableau big3x3({{4, 5, 6}, {9, 13, 14}, {10, 16, 17}});
const Tableau mid2x2({{2, 8}, {3, 11}});
const Tableau low2x2({{1, 7}, {12, 15}});

// Random pair of standard-content rectangles on disjoint value sets.
std::pair<Tableau, Tableau> random_pair(std::mt19937& rng, Rectangle r1, Rectangle r2) {
    int m = r1.size() + r2.size();
    std::vector<int> values(static_cast<std::size_t>(m));
    std::iota(values.begin(), values.end(), 1);
    std::shuffle(values.begin(), values.end(), rng);
    std::vector<int> v1(values.begin(), values.begin() + r1.size());
    std::vector<int> v2(values.begin() + r1.size(), values.end());
    std::sort(v1.begin(), v1.end());
    std::sort(v2.begin(), v2.end());
    return {gen::random_standard_rectangle(rng, r1, v1),
            gen::random_standard_rectangle(rng, r2, v2)};
}

} // namespace

TEST_CASE("r-matrix worked example") {
    auto [a, b] = r_matrix(big3x3, mid2x2);
    CHECK(a == Tableau({{4, 9}, {10, 16}}));
    CHECK(b == Tableau({{2, 6, 8}, {3, 11, 14}, {5, 13, 17}}));
}

TEST_CASE("r-matrix on equal shapes is the identity") {
    auto [a, b] = r_matrix(mid2x2, low2x2);
    CHECK(a == mid2x2);
    CHECK(b == low2x2);
}

TEST_CASE("r-matrix involution and insertion invariance") {
    std::mt19937 rng(29);
    std::vector<std::pair<Rectangle, Rectangle>> shapes{
        {{1, 1}, {2, 2}}, {{2, 1}, {1, 2}}, {{2, 2}, {3, 1}}, {{1, 3}, {2, 2}}, {{2, 2}, {2, 3}}};
    for (int trial = 0; trial < 200; ++trial) {
        auto [r1, r2] = shapes[static_cast<std::size_t>(trial) % shapes.size()];
        auto [t1, t2] = random_pair(rng, r1, r2);
        auto [a, b] = r_matrix(t1, t2);

        Word w1 = row_word(TensorElement(0, {t1, t2}));
        Word w2 = row_word(TensorElement(0, {a, b}));
        CHECK(insertion_tableau(w1) == insertion_tableau(w2));

        auto [t1back, t2back] = r_matrix(a, b);
        CHECK(t1back == t1);
        CHECK(t2back == t2);
    }
}

TEST_CASE("yang-baxter relation") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        // three distinct small shapes on disjoint standard values
        std::vector<Rectangle> rects{{1, 1}, {2, 1}, {1, 2}};
        int m = 5;
        std::vector<int> values(static_cast<std::size_t>(m));
        std::iota(values.begin(), values.end(), 1);
        std::shuffle(values.begin(), values.end(), rng);
        std::size_t off = 0;
        std::vector<Tableau> fs;
        for (const auto& r : rects) {
            std::vector<int> vals(values.begin() + static_cast<long>(off),
                                  values.begin() + static_cast<long>(off + static_cast<std::size_t>(r.size())));
            std::sort(vals.begin(), vals.end());
            fs.push_back(gen::random_standard_rectangle(rng, r, vals));
            off += static_cast<std::size_t>(r.size());
        }
        TensorElement t(m, fs);
        auto lhs = apply_sigma(apply_sigma(apply_sigma(t, 1), 2), 1);
        auto rhs = apply_sigma(apply_sigma(apply_sigma(t, 2), 1), 2);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("r-matrix commutes with the crystal operators") {
    // exhaustively over B^{(1,1)} x B^{(2)} at n = 3
    auto left = enumerate_ssyt({1}, 3);
    auto right = enumerate_ssyt({2}, 3);
    for (const auto& t1 : left) {
        for (const auto& t2 : right) {
            TensorElement t(3, {t1, t2});
            auto [a, b] = r_matrix(t1, t2);
            TensorElement s(3, {a, b});
            for (int i = 1; i <= 3; ++i) {
                auto ft = tensor_f(t, i);
                auto fs = tensor_f(s, i);
                if (!ft) {
                    CHECK_FALSE(fs.has_value());
                    continue;
                }
                REQUIRE(fs.has_value());
                auto [fa, fb] = r_matrix(ft->factors[0], ft->factors[1]);
                CHECK(fa == fs->factors[0]);
                CHECK(fb == fs->factors[1]);
            }
        }
    }
}

TEST_CASE("local charge") {
    CHECK(local_charge(big3x3, mid2x2) == 3);
    CHECK(local_charge(mid2x2, low2x2) == 2);
    SECTION("highest-weight pair has local charge zero") {
        Tableau hw({{1, 1}, {2, 2}});
        CHECK(local_charge(hw, hw) == 0);
    }
}

TEST_CASE("charge") {
    SECTION("three-factor worked example") {
        TensorElement t(17, {big3x3, mid2x2, low2x2});
        CHECK(charge(t) == 7);
    }
    SECTION("single factor") {
        CHECK(charge(elem(4, {{{1, 2}, {3, 4}}})) == 0);
    }
    SECTION("affine lowering drops the charge by one") {
        TensorElement t = elem(8, {{{2, 3}, {7, 8}}, {{1, 5}, {4, 6}}});
        CHECK(charge(t) == 2);
        auto down = tensor_f(t, 8);
        REQUIRE(down.has_value());
        CHECK(*down == elem(8, {{{1, 3}, {2, 7}}, {{1, 5}, {4, 6}}}));
        CHECK(charge(*down) == 1);
    }
}

TEST_CASE("semicharge") {
    SECTION("three-factor worked example") {
        TensorElement t(17, {big3x3, mid2x2, low2x2});
        CHECK(semicharge(t) == 4);
    }
    SECTION("pairwise distinct shapes vanish") {
        std::mt19937 rng(37);
        auto [t1, t2] = random_pair(rng, Rectangle{1, 1}, Rectangle{2, 2});
        CHECK(semicharge(TensorElement(5, {t1, t2})) == 0);
    }
    SECTION("charge and semicharge agree modulo d_R on grouped sequences") {
        for (const auto& t : enumerate_zero_weight(RectSeq{{3, 1}, {3, 1}})) {
            long long diff = charge(t) - semicharge(t);
            CHECK(((diff % 2) + 2) % 2 == 0);
        }
        for (const auto& t : enumerate_zero_weight(RectSeq{{2, 1}, {2, 1}, {1, 2}, {1, 2}})) {
            long long diff = charge(t) - semicharge(t);
            CHECK(((diff % 2) + 2) % 2 == 0);
        }
    }
}

TEST_CASE("charge change laws on two equal factors") {
    // exhaustive over the zero-weight spaces of R (x) R with at most 8 cells
    std::vector<Rectangle> rects{{1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 2}, {1, 4}, {4, 1}};
    for (const auto& r : rects) {
        auto vertices = enumerate_zero_weight(RectSeq{r, r});
        int d = 2;
        for (const auto& t : vertices) {
            long long c = charge(t);
            if (auto up = tensor_e(t, t.n)) {
                bool left_changed = up->factors[0] != t.factors[0];
                CHECK(charge(*up) == c + (left_changed ? +1 : -1));
                long long sdiff = semicharge(*up) - semicharge(t) - 1;
                CHECK(((sdiff % d) + d) % d == 0);
            }
            if (auto down = tensor_f(t, t.n)) {
                bool left_changed = down->factors[0] != t.factors[0];
                CHECK(charge(*down) == c + (left_changed ? -1 : +1));
                long long sdiff = semicharge(*down) - semicharge(t) + 1;
                CHECK(((sdiff % d) + d) % d == 0);
            }
            // classical operators leave charge alone
            for (int i = 1; i < t.n; ++i) {
                if (auto down = tensor_f(t, i)) CHECK(charge(*down) == c);
            }
            // promotion drops semicharge by one mod d_R
            long long pdiff = semicharge(promote_tensor(t)) - semicharge(t) + 1;
            CHECK(((pdiff % d) + d) % d == 0);
        }
    }
}

TEST_CASE("promotion changes semicharge by the factor holding n") {
    // Pairs of increasing tableaux on distinct values where the top letter n
    // appears at most once between the two factors.
    std::mt19937 rng(41);
    Rectangle r{2, 2};
    int n = 9;
    int cases = 0;
    while (cases < 300) {
        std::vector<int> values(static_cast<std::size_t>(n));
        std::iota(values.begin(), values.end(), 1);
        std::shuffle(values.begin(), values.end(), rng);
        std::vector<int> v1(values.begin(), values.begin() + 4);
        std::vector<int> v2(values.begin() + 4, values.begin() + 8);
        std::sort(v1.begin(), v1.end());
        std::sort(v2.begin(), v2.end());
        Tableau t1 = gen::random_standard_rectangle(rng, r, v1);
        Tableau t2 = gen::random_standard_rectangle(rng, r, v2);
        TensorElement t(n, {t1, t2});
        int expected = 0;
        if (t1.find(n)) expected = -1;
        if (t2.find(n)) expected = +1;
        CHECK(semicharge(promote_tensor(t)) - semicharge(t) == expected);
        ++cases;
    }
}
