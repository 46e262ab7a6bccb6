#include <sstream>

#include "qtsym/bijections.hpp"
#include "qtsym/cli.hpp"
#include "qtsym/explore.hpp"
#include "qtsym/filling.hpp"
#include "qtsym/lifts.hpp"
#include "qtsym/word.hpp"

namespace qtsym::cli {

namespace {

template <class T>
std::string show(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}
std::string show(const Word& w) { return format_word(w); }
std::string show(const Filling& f) { return format_filling(f); }

class Collector {
public:
    template <class T, class U>
    void expect_eq(const std::string& name, const T& got, const U& want) {
        SelfTestItem item{name, got == want, {}};
        if (!item.passed) item.detail = "got " + show(got) + ", expected " + show(want);
        items_.push_back(std::move(item));
    }

    std::vector<SelfTestItem> take() { return std::move(items_); }

private:
    std::vector<SelfTestItem> items_;
};

// The column-reading example: rows bottom-to-top 313 / 122 / 413 / 3.
Filling column_example() { return Filling({{3, 1, 3}, {1, 2, 2}, {4, 1, 3}, {3}}); }

}  // namespace

std::vector<SelfTestItem> run_selftest() {
    Collector c;

    c.expect_eq("inv(51324) = 5", inv(Word{5, 1, 3, 2, 4}), std::size_t{5});
    c.expect_eq("inv(42153) = 5", inv(Word{4, 2, 1, 5, 3}), std::size_t{5});
    c.expect_eq("inv^2(25132) = 5", inv_k(2, Word{2, 5, 1, 3, 2}), std::size_t{5});
    c.expect_eq("B_2(2234233132) = 2343321322", basement_lift(2, Word{2, 2, 3, 4, 2, 3, 3, 1, 3, 2}),
                Word{2, 3, 4, 3, 3, 2, 1, 3, 2, 2});

    const Word chain[] = {{5, 1, 3, 2, 4}, {5, 3, 2, 1, 4}, {5, 3, 2, 1, 4},
                          {5, 2, 1, 3, 4}, {4, 5, 2, 1, 3}, {4, 2, 1, 5, 3}};
    for (Letter i = 1; i <= 5; ++i) {
        c.expect_eq("B_" + std::to_string(i) + "(" + format_word(chain[i - 1]) + ")",
                    basement_lift(i, chain[i - 1]), chain[i]);
    }
    c.expect_eq("B_{0->5}(51324) = 42153", lift_range(0, 5, chain[0]), chain[5]);

    const Word a{2, 1, 2, 2, 3, 2, 1};
    const Word w{3, 2, 1, 3, 3, 2};
    c.expect_eq("psi_2122321(321332) = 233123", elevator(a, w), Word{2, 3, 3, 1, 2, 3});
    const std::vector<Word> steps{{3, 2, 1, 3, 3, 2}, {2, 3, 3, 1, 2, 3}, {2, 3, 2, 3, 1, 3},
                                  {2, 3, 3, 1, 3, 2}, {2, 3, 3, 1, 3, 2}, {2, 3, 3, 1, 2, 3},
                                  {2, 3, 3, 1, 2, 3}};
    const auto trace = elevator_trace(a, w);
    c.expect_eq("elevator trace has n+1 steps", trace.steps.size(), steps.size());
    for (std::size_t i = 0; i < steps.size() && i < trace.steps.size(); ++i) {
        c.expect_eq("elevator trace w^(" + std::to_string(i) + ")", trace.steps[i], steps[i]);
    }
    c.expect_eq("psi_232(331) = 133", elevator(Word{2, 3, 2}, Word{3, 3, 1}), Word{1, 3, 3});

    const Filling f = column_example();
    c.expect_eq("column 1 reads 3413", column_word(f, 1), Word{3, 4, 1, 3});
    c.expect_eq("maj of column 3413 = 2", maj(Word{3, 4, 1, 3}), std::size_t{2});
    c.expect_eq("maj(F) = 5", maj_filling(f), std::size_t{5});
    c.expect_eq("inv(F) = 3", inv_filling(f), std::size_t{3});
    c.expect_eq("one inversion pair in the bottom row", triples_in_row(f, 1).size(), std::size_t{1});

    // Two-row stages over basement 1432 for the row 4314.
    const Word basement{1, 4, 3, 2};
    const auto stages = elevator_trace(basement, Word{4, 3, 1, 4});
    const std::vector<Word> tops{{4, 3, 1, 4}, {4, 1, 3, 4}, {4, 4, 1, 3}, {4, 4, 1, 3}, {4, 4, 1, 3}};
    for (std::size_t i = 0; i <= 4; ++i) {
        const auto below = stage_basement(basement, i, 4);
        c.expect_eq("stage F^(" + std::to_string(i) + ") top row", stages.steps[i], tops[i]);
        c.expect_eq("stage F^(" + std::to_string(i) + ") has 3 triples",
                    count_row_triples(stages.steps[i].letters(), below), std::size_t{3});
    }

    // The middle row is 2,3,2 as drawn and as the definition gives; the
    // printed value 322 next to it is a misprint.
    const Filling g({{1, 2, 1}, {2, 2, 3}, {3, 3, 1}});
    c.expect_eq("psi on fillings (121/223/331)", elevator_filling(g),
                Filling({{1, 2, 1}, {2, 3, 2}, {1, 3, 3}}));

    const auto orbit = orbit_of(chain[0]);
    c.expect_eq("orbit of 51324 continues with 42153", orbit.size() > 1 ? orbit[1] : Word{},
                chain[5]);

    const auto stats = run({"stats", "--inv", "5 1 3 2 4"});
    c.expect_eq("cli: stats --inv \"5 1 3 2 4\"", stats.out, std::string("5\n"));

    return c.take();
}

}  // namespace qtsym::cli
