#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "qtsym/lifts.hpp"
#include "test_support.hpp"

using namespace qtsym;

TEST_CASE("basement_lift reverses the positions of one letter") {
    CHECK(basement_lift(2, Word{2, 2, 3, 4, 2, 3, 3, 1, 3, 2}) ==
          Word{2, 3, 4, 3, 3, 2, 1, 3, 2, 2});
    CHECK(basement_lift(1, Word{5, 1, 3, 2, 4}) == Word{5, 3, 2, 1, 4});
    CHECK(basement_lift(7, Word{5, 1, 3, 2, 4}) == Word{5, 1, 3, 2, 4});
    CHECK(basement_lift(3, Word{}) == Word{});
}

TEST_CASE("lift_range") {
    const Word sigma{5, 1, 3, 2, 4};
    CHECK(lift_range(0, 5, sigma) == Word{4, 2, 1, 5, 3});
    CHECK(lift_range(3, 3, sigma) == sigma);
    CHECK(lift_range(5, 0, Word{4, 2, 1, 5, 3}) == sigma);
    // Composition order: ascending applies B_{from+1} first.
    CHECK(lift_range(0, 2, sigma) == basement_lift(2, basement_lift(1, sigma)));
    CHECK(lift_range(2, 0, sigma) == basement_lift(1, basement_lift(2, sigma)));
}

TEST_CASE("basement lifts are involutions and transfer relative inversions") {
    for (std::size_t n = 0; n <= 7; ++n) {
        test::for_each_word(n, 4, [&](const Word& w) {
            for (Letter i = 1; i <= 5; ++i) CHECK(basement_lift(i, basement_lift(i, w)) == w);
            for (Letter k = 0; k <= 4; ++k) CHECK(inv_k(k, w) == inv_k(k + 1, basement_lift(k + 1, w)));
            const Letter m = w.max_letter();
            CHECK(inv(lift_range(0, m, w)) == inv(w));
            for (Letter k = m; k <= m + 2; ++k) CHECK(inv_k(k, w) == inv(w));
        });
    }
}

TEST_CASE("elevator examples") {
    CHECK(elevator(Word{2, 1, 2, 2, 3, 2, 1}, Word{3, 2, 1, 3, 3, 2}) == Word{2, 3, 3, 1, 2, 3});
    CHECK(elevator(Word{2, 3, 2}, Word{3, 3, 1}) == Word{1, 3, 3});
    // The definition gives 232 here; the worked example's text reads 322
    // while its diagram shows 2,3,2.
    CHECK(elevator(Word{1, 2, 1}, Word{2, 2, 3}) == Word{2, 3, 2});
    CHECK(elevator(Word{1, 4, 3, 2}, Word{4, 3, 1, 4}) == Word{4, 4, 1, 3});
}

TEST_CASE("elevator_trace") {
    const auto trace = elevator_trace(Word{2, 1, 2, 2, 3, 2, 1}, Word{3, 2, 1, 3, 3, 2});
    const std::vector<Word> expected{{3, 2, 1, 3, 3, 2}, {2, 3, 3, 1, 2, 3}, {2, 3, 2, 3, 1, 3},
                                     {2, 3, 3, 1, 3, 2}, {2, 3, 3, 1, 3, 2}, {2, 3, 3, 1, 2, 3},
                                     {2, 3, 3, 1, 2, 3}};
    CHECK(trace.steps == expected);
    CHECK(trace.result() == elevator(Word{2, 1, 2, 2, 3, 2, 1}, Word{3, 2, 1, 3, 3, 2}));

    CHECK(elevator_trace(Word{1, 2}, Word{}).steps == std::vector<Word>{Word{}});
    const std::vector<Word> small{{2, 2, 3}, {2, 2, 3}, {2, 3, 2}, {2, 3, 2}};
    CHECK(elevator_trace(Word{1, 2, 1}, Word{2, 2, 3}).steps == small);
}

TEST_CASE("elevator trace steps freeze their prefixes") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 300; ++round) {
        const Word w = test::random_word(rng, 7, 4);
        std::vector<Letter> basement(w.size() + round % 3);
        std::uniform_int_distribution<Letter> letter(1, 5);
        for (auto& x : basement) x = letter(rng);
        const Word a(basement);
        const auto trace = elevator_trace(a, w);
        REQUIRE(trace.steps.size() == w.size() + 1);
        for (std::size_t i = 1; i < trace.steps.size(); ++i) {
            CHECK(trace.steps[i].factor(1, i - 1) == trace.steps[i - 1].factor(1, i - 1));
        }
    }
}

TEST_CASE("elevator_inverse") {
    CHECK(elevator_inverse(Word{2, 1, 2, 2, 3, 2, 1}, Word{2, 3, 3, 1, 2, 3}) ==
          Word{3, 2, 1, 3, 3, 2});
    CHECK(elevator_inverse(Word{1, 2, 1}, Word{2, 3, 2}) == Word{2, 2, 3});
}

TEST_CASE("elevator is a content-preserving bijection for every basement") {
    for (std::size_t n = 0; n <= 6; ++n) {
        test::for_each_word(n, 3, [&](const Word& a) {
            std::set<Word> images;
            test::for_each_word(n, 3, [&](const Word& w) {
                const Word v = elevator(a, w);
                CHECK(v.content(3) == w.content(3));
                CHECK(elevator_inverse(a, v) == w);
                images.insert(v);
            });
            CHECK(images.size() == static_cast<std::size_t>(std::pow(3, n)));
        });
    }
}

TEST_CASE("constant basement reduces to a single range lift") {
    for (std::size_t n = 0; n <= 6; ++n) {
        test::for_each_word(n, 3, [&](const Word& w) {
            for (Letter k = 1; k <= 4; ++k) {
                const Word a(std::vector<Letter>(n + 1, k));
                CHECK(elevator(a, w) == lift_range(0, k, w));
            }
        });
    }
}

TEST_CASE("basement handling") {
    CHECK_THROWS_AS((void)elevator(Word{1, 2}, Word{1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS((void)elevator_inverse(Word{1}, Word{1, 2}), std::invalid_argument);
    CHECK(elevator(Word{}, Word{}) == Word{});
    // Letters past position n of the basement are never read.
    CHECK(elevator(Word{2, 1, 2, 2, 3, 2, 9, 9}, Word{3, 2, 1, 3, 3, 2}) == Word{2, 3, 3, 1, 2, 3});
}
