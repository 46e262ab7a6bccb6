#pragma once

// Fillings of Young diagrams and the Macdonald statistics on them.
//
// Rows are indexed bottom-to-top: row 1 is the bottom (longest) row.
// Text serialization lists the top row first, as diagrams are drawn.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qtsym/word.hpp"

namespace qtsym {

class Filling {
public:
    Filling() = default;
    /// Rows bottom-to-top; the shape is inferred and must be a partition.
    explicit Filling(std::vector<Word> rows);
    Filling(std::initializer_list<Word> rows) : Filling(std::vector<Word>(rows)) {}
    Filling(const Partition& shape, std::vector<Word> rows);

    [[nodiscard]] const Partition& shape() const noexcept { return shape_; }
    [[nodiscard]] std::size_t num_rows() const noexcept { return rows_.size(); }
    [[nodiscard]] std::span<const Word> rows() const noexcept { return rows_; }
    [[nodiscard]] const Word& row(std::size_t r) const;
    [[nodiscard]] Letter at(std::size_t r, std::size_t c) const;

    /// Bottom-to-top, row-major.
    [[nodiscard]] std::vector<Letter> reading_word() const;
    [[nodiscard]] std::vector<std::uint32_t> content(Letter bound) const;
    [[nodiscard]] Letter max_letter() const noexcept;

    auto operator<=>(const Filling&) const = default;
    bool operator==(const Filling&) const = default;

private:
    Partition shape_;
    std::vector<Word> rows_;
};

/// Cells x = (row, left_col), y = (row, right_col), z = (row - 1, left_col).
/// In row 1, z is the virtual basement letter 0.
struct TripleSite {
    std::size_t row = 0;
    std::size_t left_col = 0;
    std::size_t right_col = 0;

    auto operator<=>(const TripleSite&) const = default;
};

/// Column j read from the top cell down.
[[nodiscard]] Word column_word(const Filling& f, std::size_t j);

[[nodiscard]] std::size_t maj_filling(const Filling& f);

/// y strictly precedes x in the order that starts the alphabet at z + 1.
/// z == 0 reduces to x > y, the inversion-pair condition.
[[nodiscard]] constexpr bool is_inversion_triple(Letter x, Letter y, Letter z) noexcept {
    return k_less(z, y, x);
}

/// The same predicate phrased as: x != y, y != z, and some cyclic shift of
/// (x, y, z) is nonincreasing.
[[nodiscard]] constexpr bool is_inversion_triple_cyclic(Letter x, Letter y, Letter z) noexcept {
    if (x == y || y == z) return false;
    return (x >= y && y >= z) || (y >= z && z >= x) || (z >= x && x >= y);
}

[[nodiscard]] std::size_t inv_filling(const Filling& f);
[[nodiscard]] std::vector<TripleSite> triples_in_row(const Filling& f, std::size_t r);

/// Triples in a row sitting on an explicit row of basement letters (which
/// may contain 0). `below` must be at least as long as `row`.
[[nodiscard]] std::size_t count_row_triples(std::span<const Letter> row,
                                            std::span<const Letter> below);

/// Bottom row of the two-row configuration at stage `stage` of an
/// elevator run over basement a: all zeros at stage 0, otherwise
/// a_1..a_stage followed by copies of a_stage, to length n.
[[nodiscard]] std::vector<Letter> stage_basement(const Word& a, std::size_t stage,
                                                 std::size_t n);

/// Sum of the plain word inversions of every row.
[[nodiscard]] std::size_t row_inv_sum(const Filling& f);

/// Row 1 unchanged, row i replaced by elevator(row i-1 of the result, row i).
[[nodiscard]] Filling elevator_filling(const Filling& f);
[[nodiscard]] Filling elevator_filling_inverse(const Filling& g);

/// max_letter^|mu|; throws std::overflow_error when it does not fit.
[[nodiscard]] std::uint64_t filling_count(const Partition& mu, Letter max_letter);

/// Builds the filling whose bottom-to-top row-major reading word is `reading`.
[[nodiscard]] Filling filling_from_reading_word(const Partition& mu,
                                                std::span<const Letter> reading);

/// Lazy enumeration of the fillings of mu with entries in 1..max_letter, in
/// lexicographic order of the reading word. A stream covers the index range
/// [first, last) so that independent workers can take disjoint slices.
class FillingStream {
public:
    FillingStream(Partition mu, Letter max_letter);
    FillingStream(Partition mu, Letter max_letter, std::uint64_t first, std::uint64_t last);

    /// Writes the next filling into `out`; false once the range is exhausted.
    bool next(Filling& out);

    [[nodiscard]] std::uint64_t remaining() const noexcept { return last_ - position_; }

private:
    Partition shape_;
    Letter max_letter_;
    std::uint64_t position_;
    std::uint64_t last_;
    std::vector<Letter> digits_;
};

[[nodiscard]] std::vector<Filling> enumerate_fillings(const Partition& mu, Letter max_letter);

/// One line per row, top row first, entries comma-separated. Blank lines
/// are ignored.
[[nodiscard]] Filling parse_filling(std::string_view text);
[[nodiscard]] std::string format_filling(const Filling& f);

}  // namespace qtsym
