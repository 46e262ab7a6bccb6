#pragma once

// Basement lift maps B_i, their range compositions, and the elevator map
// driven by a basement word.

#include <span>
#include <vector>

#include "qtsym/word.hpp"

namespace qtsym {

/// B_i: reverses the positions occupied by letter i, keeping every other
/// letter in its relative order. An involution.
[[nodiscard]] Word basement_lift(Letter i, const Word& w);

/// B_{from->to}. Ascending ranges apply B_{from+1} first and B_to last;
/// descending ranges apply B_from first and B_{to+1} last, which is the
/// inverse of the ascending composition.
[[nodiscard]] Word lift_range(Letter from, Letter to, const Word& w);

// In-place forms over raw letter storage, used on word suffixes.
void basement_lift_inplace(Letter i, std::span<Letter> letters);
void lift_range_inplace(Letter from, Letter to, std::span<Letter> letters);

/// Words w^(0), ..., w^(n) visited by one elevator application.
struct LiftTrace {
    std::vector<Word> steps;

    [[nodiscard]] const Word& result() const { return steps.back(); }
};

/// psi_a(w). Only a_1..a_n of the basement are read; a must be at least as
/// long as w.
[[nodiscard]] Word elevator(const Word& basement, const Word& w);
[[nodiscard]] LiftTrace elevator_trace(const Word& basement, const Word& w);

/// The unique w with elevator(basement, w) == v.
[[nodiscard]] Word elevator_inverse(const Word& basement, const Word& v);

}  // namespace qtsym
