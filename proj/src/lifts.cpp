#include "qtsym/lifts.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtsym {

namespace {

void check_basement(const Word& basement, const Word& w) {
    if (basement.size() < w.size()) {
        throw std::invalid_argument("basement word is shorter than the lifted word");
    }
}

// Applies the step w^(i-1) -> w^(i) in place; step 1 lifts from the
// virtual letter a_0 = 0.
void elevator_step(const Word& basement, std::size_t i, std::vector<Letter>& letters,
                   bool reverse) {
    const Letter prev = i == 1 ? 0 : basement.at(i - 1);
    const Letter cur = basement.at(i);
    std::span<Letter> suffix(letters.data() + (i - 1), letters.size() - (i - 1));
    if (reverse) {
        lift_range_inplace(cur, prev, suffix);
    } else {
        lift_range_inplace(prev, cur, suffix);
    }
}

}  // namespace

void basement_lift_inplace(Letter i, std::span<Letter> letters) {
    const std::size_t n = letters.size();
    std::vector<Letter> others;
    others.reserve(n);
    std::vector<bool> is_i(n, false);
    for (std::size_t p = 0; p < n; ++p) {
        if (letters[p] == i) {
            is_i[n - 1 - p] = true;
        } else {
            others.push_back(letters[p]);
        }
    }
    if (others.size() == n) return;
    auto next = others.begin();
    for (std::size_t p = 0; p < n; ++p) {
        letters[p] = is_i[p] ? i : *next++;
    }
}

void lift_range_inplace(Letter from, Letter to, std::span<Letter> letters) {
    if (to > from) {
        for (Letter i = from + 1; i <= to; ++i) basement_lift_inplace(i, letters);
    } else {
        for (Letter i = from; i > to; --i) basement_lift_inplace(i, letters);
    }
}

Word basement_lift(Letter i, const Word& w) {
    std::vector<Letter> letters = w.vec();
    basement_lift_inplace(i, letters);
    return Word(std::move(letters));
}

Word lift_range(Letter from, Letter to, const Word& w) {
    std::vector<Letter> letters = w.vec();
    lift_range_inplace(from, to, letters);
    return Word(std::move(letters));
}

LiftTrace elevator_trace(const Word& basement, const Word& w) {
    check_basement(basement, w);
    LiftTrace trace;
    trace.steps.reserve(w.size() + 1);
    trace.steps.push_back(w);
    std::vector<Letter> letters = w.vec();
    for (std::size_t i = 1; i <= w.size(); ++i) {
        elevator_step(basement, i, letters, false);
        trace.steps.emplace_back(letters);
    }
    return trace;
}

Word elevator(const Word& basement, const Word& w) {
    check_basement(basement, w);
    std::vector<Letter> letters = w.vec();
    for (std::size_t i = 1; i <= w.size(); ++i) elevator_step(basement, i, letters, false);
    return Word(std::move(letters));
}

Word elevator_inverse(const Word& basement, const Word& v) {
    check_basement(basement, v);
    std::vector<Letter> letters = v.vec();
    for (std::size_t i = v.size(); i >= 1; --i) elevator_step(basement, i, letters, true);
    return Word(std::move(letters));
}

}  // namespace qtsym
