// Acceptance suite: one line per criterion, nonzero exit if any fails.
// All checks are exact; there are no tolerances.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qtsym/bijections.hpp"
#include "qtsym/cli.hpp"
#include "qtsym/explore.hpp"
#include "qtsym/filling.hpp"
#include "qtsym/genfunc.hpp"
#include "qtsym/lifts.hpp"
#include "qtsym/word.hpp"
#include "test_support.hpp"

using namespace qtsym;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;

    void fail(std::string why) {
        if (passed) detail = std::move(why);
        passed = false;
    }
    void expect(bool ok, const std::string& why) {
        if (!ok) fail(why);
    }
};

struct Criterion {
    std::string id;
    std::string title;
    std::function<Outcome()> check;
};

// ---- 1. paper-value pins -------------------------------------------------

Outcome pin_inv_k() {
    Outcome o;
    o.expect(inv_k(2, Word{2, 5, 1, 3, 2}) == 5, "inv^2(25132) != 5");
    return o;
}

Outcome pin_basement_lift() {
    Outcome o;
    o.expect(basement_lift(2, Word{2, 2, 3, 4, 2, 3, 3, 1, 3, 2}) == Word{2, 3, 4, 3, 3, 2, 1, 3, 2, 2},
             "B_2(2234233132) != 2343321322");
    return o;
}

Outcome pin_lift_chain() {
    Outcome o;
    const std::vector<Word> chain{{5, 1, 3, 2, 4}, {5, 3, 2, 1, 4}, {5, 3, 2, 1, 4},
                                  {5, 2, 1, 3, 4}, {4, 5, 2, 1, 3}, {4, 2, 1, 5, 3}};
    for (Letter i = 1; i <= 5; ++i) {
        o.expect(basement_lift(i, chain[i - 1]) == chain[i], "chain step B_" + std::to_string(i));
    }
    o.expect(lift_range(0, 5, chain[0]) == chain[5], "B_{0->5}(51324) != 42153");
    o.expect(inv(chain[0]) == 5 && inv(chain[5]) == 5, "inv(51324) or inv(42153) != 5");
    return o;
}

Outcome pin_elevator() {
    Outcome o;
    const Word a{2, 1, 2, 2, 3, 2, 1};
    const Word w{3, 2, 1, 3, 3, 2};
    o.expect(elevator(a, w) == Word{2, 3, 3, 1, 2, 3}, "psi_2122321(321332) != 233123");
    const std::vector<Word> expected{{3, 2, 1, 3, 3, 2}, {2, 3, 3, 1, 2, 3}, {2, 3, 2, 3, 1, 3},
                                     {2, 3, 3, 1, 3, 2}, {2, 3, 3, 1, 3, 2}, {2, 3, 3, 1, 2, 3},
                                     {2, 3, 3, 1, 2, 3}};
    o.expect(elevator_trace(a, w).steps == expected, "intermediate trace differs");
    return o;
}

Outcome pin_filling_stats() {
    Outcome o;
    const Filling f({{3, 1, 3}, {1, 2, 2}, {4, 1, 3}, {3}});
    o.expect(maj_filling(f) == 5, "maj(F) != 5");
    o.expect(inv_filling(f) == 3, "inv(F) != 3");
    return o;
}

Outcome pin_two_row_stages() {
    Outcome o;
    const Word a{1, 4, 3, 2};
    const auto trace = elevator_trace(a, Word{4, 3, 1, 4});
    const std::vector<std::vector<Letter>> bottoms{
        {0, 0, 0, 0}, {1, 1, 1, 1}, {1, 4, 4, 4}, {1, 4, 3, 3}, {1, 4, 3, 2}};
    const std::vector<Word> tops{{4, 3, 1, 4}, {4, 1, 3, 4}, {4, 4, 1, 3}, {4, 4, 1, 3}, {4, 4, 1, 3}};
    for (std::size_t i = 0; i <= 4; ++i) {
        const std::string tag = "F^(" + std::to_string(i) + ")";
        o.expect(stage_basement(a, i, 4) == bottoms[i], tag + " bottom row");
        o.expect(trace.steps[i] == tops[i], tag + " top row");
        o.expect(count_row_triples(trace.steps[i].letters(), bottoms[i]) == 3, tag + " triple count");
    }
    return o;
}

Outcome pin_elevator_filling() {
    Outcome o;
    // Middle row 2,3,2 as in the diagrams; the "322" printed beside it is a misprint.
    const Filling g({{1, 2, 1}, {2, 2, 3}, {3, 3, 1}});
    o.expect(elevator_filling(g) == Filling({{1, 2, 1}, {2, 3, 2}, {1, 3, 3}}),
             "psi(121/223/331) != (121/232/133)");
    return o;
}

// ---- 2. property suites --------------------------------------------------

Outcome prop_lift_transfer() {
    Outcome o;
    for (std::size_t n = 0; n <= 7; ++n) {
        test::for_each_word(n, 4, [&](const Word& w) {
            for (Letter k = 0; k <= 4; ++k) {
                if (inv_k(k, w) != inv_k(k + 1, basement_lift(k + 1, w))) {
                    o.fail("k=" + std::to_string(k) + " w=" + format_word(w));
                }
            }
        });
    }
    return o;
}

Outcome prop_involution() {
    Outcome o;
    for (std::size_t n = 0; n <= 7; ++n) {
        test::for_each_word(n, 4, [&](const Word& w) {
            for (Letter i = 1; i <= 5; ++i) {
                if (basement_lift(i, basement_lift(i, w)) != w) {
                    o.fail("i=" + std::to_string(i) + " w=" + format_word(w));
                }
            }
        });
    }
    return o;
}

Outcome prop_inv_preserved() {
    Outcome o;
    for (std::size_t n = 0; n <= 7; ++n) {
        test::for_each_word(n, 4, [&](const Word& w) {
            if (inv(lift_range(0, w.max_letter(), w)) != inv(w)) o.fail("w=" + format_word(w));
        });
    }
    return o;
}

Outcome prop_elevator_theorem() {
    Outcome o;
    test::for_each_small_filling(0, 7, 3, [&](const Filling& f) {
        if (row_inv_sum(f) != inv_filling(elevator_filling(f))) o.fail(format_filling(f));
    });
    return o;
}

Outcome prop_foata() {
    Outcome o;
    for (std::size_t n = 0; n <= 8; ++n) {
        std::map<std::vector<std::uint32_t>, std::set<Word>> images;
        std::map<std::vector<std::uint32_t>, std::size_t> sizes;
        test::for_each_word(n, 3, [&](const Word& w) {
            const Word v = foata(w);
            if (inv(v) != maj(w)) o.fail("inv(foata(w)) != maj(w) for " + format_word(w));
            if (foata_inverse(v) != w) o.fail("foata_inverse fails on " + format_word(w));
            images[w.content(3)].insert(v);
            ++sizes[w.content(3)];
        });
        for (const auto& [content, seen] : images) {
            if (seen.size() != sizes[content]) o.fail("not injective at length " + std::to_string(n));
        }
    }
    for (std::size_t n = 1; n <= 6; ++n) {
        std::set<Word> seen;
        std::size_t count = 0;
        test::for_each_permutation(n, [&](const Word& w) {
            const Word v = foata(w);
            if (inv(v) != maj(w)) o.fail("permutation " + format_word(w));
            if (foata_inverse(v) != w) o.fail("foata_inverse fails on " + format_word(w));
            seen.insert(v);
            ++count;
        });
        if (seen.size() != count) o.fail("not injective on S_" + std::to_string(n));
    }
    return o;
}

Outcome prop_symmetry_bijection() {
    Outcome o;
    for (std::size_t n = 0; n <= 6; ++n) {
        for (const Partition& mu : partitions_of(n)) {
            std::set<std::vector<Letter>> images;
            FillingStream stream(mu, 3);
            Filling f;
            std::size_t count = 0;
            while (stream.next(f)) {
                const auto w = symmetry_map(f);
                ++count;
                if (w.output.shape() != conjugate(mu)) o.fail("shape " + format_filling(f));
                if (w.output.content(3) != f.content(3)) o.fail("content " + format_filling(f));
                if (inv_filling(w.output) != maj_filling(f)) o.fail("maj/inv " + format_filling(f));
                if (symmetry_inverse(w.output) != f) o.fail("inverse " + format_filling(f));
                images.insert(w.output.reading_word());
            }
            if (images.size() != count) o.fail("not injective on shape " + format_partition(mu));
        }
    }
    return o;
}

// ---- 3. generating-function identity -------------------------------------

Outcome gf_identity() {
    Outcome o;
    for (std::size_t n = 0; n <= 6; ++n) {
        for (const Partition& mu : partitions_of(n)) {
            for (Letter m : {2u, 3u}) {
                const bool gf = verify_q1_symmetry(mu, m).equal;
                const bool bij = verify_bijective_q1_symmetry(mu, m).ok;
                const std::string tag = format_partition(mu) + " m=" + std::to_string(m);
                o.expect(gf, "generating functions differ at " + tag);
                o.expect(gf == bij, "verdicts disagree at " + tag);
            }
        }
    }
    return o;
}

// ---- 4. orbit sanity -----------------------------------------------------

Outcome orbit_sanity() {
    Outcome o;
    std::uint64_t fact = 1;
    for (std::uint32_t n = 1; n <= 7; ++n) {
        fact *= n;
        const auto report = basement_action_orbits(n);
        std::uint64_t total = 0;
        for (auto len : report.cycle_lengths) total += len;
        o.expect(total == fact, "cycle lengths do not sum to n! at n=" + std::to_string(n));
        for (std::uint64_t r = 0; r < fact; ++r) {
            const Word w = permutation_unrank(n, r);
            if (inv(lift_range(0, n, w)) != inv(w)) o.fail("inv changes along orbit of " + format_word(w));
        }
    }
    o.expect(basement_action_orbits(2).fixed_points == 2, "n=2 does not have two fixed points");
    return o;
}

// ---- 5. CLI --------------------------------------------------------------

Outcome cli_selftest() {
    Outcome o;
    const auto r = cli::run({"selftest"});
    o.expect(r.exit_code == 0, "selftest failed:\n" + r.out);
    return o;
}

std::string strip_newline(std::string s) {
    while (!s.empty() && s.back() == '\n') s.pop_back();
    return s;
}

Outcome cli_round_trips() {
    Outcome o;
    std::mt19937_64 rng(20261016);
    std::uniform_int_distribution<Letter> small(0, 5);
    auto word_arg = [&](std::size_t max_len, Letter alphabet) {
        Word w = test::random_word(rng, max_len, alphabet);
        if (w.empty()) w = Word{1};
        return format_word(w);
    };
    auto random_filling = [&](Letter alphabet) {
        const auto shapes = partitions_of(1 + rng() % 6);
        const Partition mu = shapes[rng() % shapes.size()];
        std::vector<Letter> reading(mu.size());
        std::uniform_int_distribution<Letter> letter(1, alphabet);
        for (auto& x : reading) x = letter(rng);
        return format_filling(filling_from_reading_word(mu, reading));
    };
    auto check_word = [&](const std::vector<std::string>& fwd, std::vector<std::string> inv_args,
                          const std::string& w) {
        auto args = fwd;
        args.push_back(w);
        const auto a = cli::run(args);
        inv_args.push_back(strip_newline(a.out));
        const auto b = cli::run(inv_args);
        if (a.exit_code != 0 || b.exit_code != 0 || strip_newline(b.out) != w) {
            o.fail(fwd.front() + " round trip failed on '" + w + "'");
        }
        if (cli::run(args).out != a.out) o.fail(fwd.front() + " is not deterministic");
    };
    auto check_filling = [&](const std::string& verb, const std::string& f) {
        const auto a = cli::run({verb}, f);
        const auto b = cli::run({verb, "--invert"}, a.out);
        if (a.exit_code != 0 || b.exit_code != 0 || b.out != f) o.fail(verb + " round trip failed on\n" + f);
        if (cli::run({verb}, f).out != a.out) o.fail(verb + " is not deterministic");
    };

    for (int i = 0; i < 1000; ++i) {
        const std::string w = word_arg(9, 5);
        const std::string letter = std::to_string(1 + small(rng));
        check_word({"lift", "--i", letter}, {"lift", "--i", letter, "--invert"}, w);
        const std::string from = std::to_string(small(rng));
        const std::string to = std::to_string(small(rng));
        check_word({"lift-range", "--from", from, "--to", to},
                   {"lift-range", "--from", from, "--to", to, "--invert"}, w);
        const std::string basement = word_arg(0, 5) + " " + w;  // at least as long as w
        check_word({"elevate", "--basement", basement}, {"elevate", "--basement", basement, "--invert"}, w);
        check_word({"foata"}, {"foata", "--invert"}, w);
        check_filling("elevate-filling", random_filling(4));
        check_filling("symmetry", random_filling(4));
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"1.a", "pin: inv^2(25132) = 5", pin_inv_k},
        {"1.b", "pin: B_2(2234233132) = 2343321322", pin_basement_lift},
        {"1.c", "pin: B_1..B_5 chain on 51324 and inv(51324) = inv(42153) = 5", pin_lift_chain},
        {"1.d", "pin: psi_2122321(321332) = 233123 with full trace", pin_elevator},
        {"1.e", "pin: maj(F) = 5 and inv(F) = 3 on the column-reading example", pin_filling_stats},
        {"1.f", "pin: two-row stages F^(0)..F^(4) each have 3 triples", pin_two_row_stages},
        {"1.g", "pin: psi(121/223/331) = (121/232/133)", pin_elevator_filling},
        {"2.a", "inv^k(w) = inv^{k+1}(B_{k+1}(w)), |w| <= 7, alphabet 4, k <= 4", prop_lift_transfer},
        {"2.b", "B_i o B_i = id at the same scale", prop_involution},
        {"2.c", "inv(B_{0->m}(w)) = inv(w), |w| <= 7, alphabet 4", prop_inv_preserved},
        {"2.d", "sum inv(R_i) = inv(psi(F)), |mu| <= 7, entries <= 3", prop_elevator_theorem},
        {"2.e", "Foata: inv o foata = maj, bijective per class, inverse round-trips", prop_foata},
        {"2.f", "symmetry map: injective, conjugates shape, keeps content, maj -> inv", prop_symmetry_bijection},
        {"3", "H(mu; 1, t) = H(mu'; t, 1) on x_1..x_m, |mu| <= 6, m in {2,3}", gf_identity},
        {"4", "orbits: cycle lengths sum to n!, inv constant, n = 2 has two fixed points", orbit_sanity},
        {"5.a", "cli: selftest passes", cli_selftest},
        {"5.b", "cli: --invert round-trips on 1000 seeded inputs per verb", cli_round_trips},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        const Outcome outcome = c.check();
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %-4s %s (%.2fs)\n", outcome.passed ? "PASS" : "FAIL", c.id.c_str(),
                    c.title.c_str(), secs);
        if (!outcome.passed) {
            std::printf("       %s\n", outcome.detail.c_str());
            ++failures;
        }
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failures),
                criteria.size());
    return failures == 0 ? 0 : 1;
}
