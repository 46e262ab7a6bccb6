#pragma once

// The Foata bijection on words and the maj -> inv symmetry bijection from
// fillings of a shape to fillings of its conjugate.

#include <cstddef>

#include "qtsym/filling.hpp"
#include "qtsym/word.hpp"

namespace qtsym {

/// Rearrangement v of w with inv(v) == maj(w).
[[nodiscard]] Word foata(const Word& w);
[[nodiscard]] Word foata_inverse(const Word& v);

/// A content-preserving word bijection carrying maj to inv. The symmetry
/// map is parameterized over this so another such bijection can be used.
struct MajToInv {
    Word (*forward)(const Word&);
    Word (*inverse)(const Word&);
};

inline constexpr MajToInv kFoata{&foata, &foata_inverse};

struct SymmetryWitness {
    Filling input;         // shape mu
    Filling intermediate;  // shape mu', row j = image of column j
    Filling output;        // elevator_filling(intermediate)
    std::size_t maj_in = 0;
    std::size_t inv_out = 0;
};

[[nodiscard]] SymmetryWitness symmetry_map(const Filling& f, const MajToInv& word_map = kFoata);

/// The unique F with symmetry_map(F).output == g.
[[nodiscard]] Filling symmetry_inverse(const Filling& g, const MajToInv& word_map = kFoata);

/// foata_inverse o lift_range(0, max letter) o foata; preserves maj.
[[nodiscard]] Word maj_preserving_map(const Word& w);
[[nodiscard]] Word maj_preserving_map_inverse(const Word& w);

}  // namespace qtsym
