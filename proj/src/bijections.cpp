#include "qtsym/bijections.hpp"

#include <algorithm>
#include <stdexcept>

#include "qtsym/lifts.hpp"

namespace qtsym {

namespace {

// Splits `v` into blocks each ending with a letter satisfying `ends`, then
// moves the last letter of every block to its front.
template <class Pred>
void rotate_blocks_right(std::vector<Letter>& v, Pred ends) {
    std::size_t start = 0;
    for (std::size_t p = 0; p < v.size(); ++p) {
        if (ends(v[p])) {
            std::rotate(v.begin() + static_cast<std::ptrdiff_t>(start),
                        v.begin() + static_cast<std::ptrdiff_t>(p),
                        v.begin() + static_cast<std::ptrdiff_t>(p + 1));
            start = p + 1;
        }
    }
}

// Splits `u` into blocks each starting with a letter satisfying `starts`,
// then moves the first letter of every block to its end.
template <class Pred>
void rotate_blocks_left(std::vector<Letter>& u, Pred starts) {
    std::size_t start = 0;
    for (std::size_t p = 1; p <= u.size(); ++p) {
        if (p == u.size() || starts(u[p])) {
            std::rotate(u.begin() + static_cast<std::ptrdiff_t>(start),
                        u.begin() + static_cast<std::ptrdiff_t>(start + 1),
                        u.begin() + static_cast<std::ptrdiff_t>(p));
            start = p;
        }
    }
}

}  // namespace

Word foata(const Word& w) {
    std::vector<Letter> v;
    v.reserve(w.size());
    for (Letter x : w.letters()) {
        if (!v.empty()) {
            if (v.back() <= x) {
                rotate_blocks_right(v, [x](Letter y) { return y <= x; });
            } else {
                rotate_blocks_right(v, [x](Letter y) { return y > x; });
            }
        }
        v.push_back(x);
    }
    return Word(std::move(v));
}

Word foata_inverse(const Word& v) {
    std::vector<Letter> u = v.vec();
    std::vector<Letter> tail;
    tail.reserve(u.size());
    while (!u.empty()) {
        const Letter x = u.back();
        u.pop_back();
        tail.push_back(x);
        if (u.empty()) break;
        // Rotated blocks start with a letter <= x exactly when the cut was
        // made after letters <= x.
        if (u.front() <= x) {
            rotate_blocks_left(u, [x](Letter y) { return y <= x; });
        } else {
            rotate_blocks_left(u, [x](Letter y) { return y > x; });
        }
    }
    std::reverse(tail.begin(), tail.end());
    return Word(std::move(tail));
}

SymmetryWitness symmetry_map(const Filling& f, const MajToInv& word_map) {
    SymmetryWitness out;
    out.input = f;
    const std::size_t width = f.num_rows() == 0 ? 0 : f.shape().part(1);
    std::vector<Word> rows;
    rows.reserve(width);
    for (std::size_t j = 1; j <= width; ++j) rows.push_back(word_map.forward(column_word(f, j)));
    out.intermediate = Filling(conjugate(f.shape()), std::move(rows));
    out.output = elevator_filling(out.intermediate);
    out.maj_in = maj_filling(f);
    out.inv_out = inv_filling(out.output);
    return out;
}

Filling symmetry_inverse(const Filling& g, const MajToInv& word_map) {
    const Filling intermediate = elevator_filling_inverse(g);
    const Partition shape = conjugate(g.shape());
    // Row j of the intermediate filling is column j of the result, top to
    // bottom; scatter it back into bottom-to-top rows.
    std::vector<std::vector<Letter>> rows(shape.length());
    for (std::size_t r = 0; r < shape.length(); ++r) rows[r].resize(shape.parts()[r]);
    for (std::size_t j = 1; j <= intermediate.num_rows(); ++j) {
        const Word column = word_map.inverse(intermediate.row(j));
        const std::size_t height = column.size();
        for (std::size_t p = 1; p <= height; ++p) rows[height - p][j - 1] = column.at(p);
    }
    std::vector<Word> words;
    words.reserve(rows.size());
    for (auto& r : rows) words.emplace_back(std::move(r));
    return Filling(shape, std::move(words));
}

Word maj_preserving_map(const Word& w) {
    const Word v = foata(w);
    return foata_inverse(lift_range(0, v.max_letter(), v));
}

Word maj_preserving_map_inverse(const Word& w) {
    const Word v = foata(w);
    return foata_inverse(lift_range(v.max_letter(), 0, v));
}

}  // namespace qtsym
