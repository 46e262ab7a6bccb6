#pragma once

// Words over the positive integers, partitions, and the classical word
// statistics (inv, maj) together with the relative k-inversion count.
//
// Positions are 1-based at every public entry point.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qtsym {

/// A letter value. Inside a Word it is always >= 1; the value 0 only
/// appears as a virtual basement letter or as the k of an order.
using Letter = std::uint32_t;

class Word {
public:
    Word() = default;
    Word(std::initializer_list<Letter> letters);
    explicit Word(std::vector<Letter> letters);

    [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
    [[nodiscard]] bool empty() const noexcept { return letters_.empty(); }

    /// Letter at 1-based position `pos`.
    [[nodiscard]] Letter at(std::size_t pos) const;

    [[nodiscard]] std::span<const Letter> letters() const noexcept { return letters_; }
    [[nodiscard]] const std::vector<Letter>& vec() const noexcept { return letters_; }

    /// The factor w_[i,j] (1-based, inclusive). Empty when i > j.
    [[nodiscard]] Word factor(std::size_t i, std::size_t j) const;

    /// Largest letter, 0 for the empty word.
    [[nodiscard]] Letter max_letter() const noexcept;

    /// Multiplicity vector of letters 1..bound (index 0 counts letter 1).
    [[nodiscard]] std::vector<std::uint32_t> content(Letter bound) const;

    Word& append(const Word& tail);

    auto operator<=>(const Word&) const = default;
    bool operator==(const Word&) const = default;

private:
    std::vector<Letter> letters_;
};

/// Weakly decreasing sequence of positive parts.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<std::uint32_t> parts);
    explicit Partition(std::vector<std::uint32_t> parts);

    [[nodiscard]] std::span<const std::uint32_t> parts() const noexcept { return parts_; }
    [[nodiscard]] std::size_t length() const noexcept { return parts_.size(); }
    /// Part i, 1-based.
    [[nodiscard]] std::uint32_t part(std::size_t i) const;
    /// Number of cells.
    [[nodiscard]] std::size_t size() const noexcept;
    [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

private:
    std::vector<std::uint32_t> parts_;
};

[[nodiscard]] Partition conjugate(const Partition& mu);

/// All partitions of n, in reverse lexicographic order ((n) first).
[[nodiscard]] std::vector<Partition> partitions_of(std::size_t n);

[[nodiscard]] std::size_t inv(const Word& w) noexcept;
[[nodiscard]] std::size_t maj(const Word& w) noexcept;

/// a strictly precedes b in the cyclic order k+1 < k+2 < ... < 1 < ... < k.
[[nodiscard]] constexpr bool k_less(Letter k, Letter a, Letter b) noexcept {
    if (a == b) return false;
    const bool a_high = a > k;
    const bool b_high = b > k;
    if (a_high != b_high) return a_high;
    return a < b;
}

/// Number of pairs i < j with w_j strictly k-less than w_i.
[[nodiscard]] std::size_t inv_k(Letter k, std::span<const Letter> w) noexcept;
[[nodiscard]] inline std::size_t inv_k(Letter k, const Word& w) noexcept {
    return inv_k(k, w.letters());
}

/// Parses "2 5 1 3 2" or, when there is no whitespace, the compact "25132".
[[nodiscard]] Word parse_word(std::string_view text);
[[nodiscard]] std::string format_word(const Word& w);

/// Parses "3,3,1".
[[nodiscard]] Partition parse_partition(std::string_view text);
[[nodiscard]] std::string format_partition(const Partition& mu);

}  // namespace qtsym
