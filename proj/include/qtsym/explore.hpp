#pragma once

// Cycle structure of the inv-preserving action B_{0->n} on permutations.
// Reports are descriptive data only.

#include <cstdint>
#include <map>
#include <vector>

#include "qtsym/word.hpp"

namespace qtsym {

inline constexpr std::uint32_t kDefaultOrbitCap = 8;

struct OrbitReport {
    std::uint32_t n = 0;
    std::vector<std::uint64_t> cycle_lengths;  // ascending
    std::uint64_t fixed_points = 0;
    std::uint64_t num_orbits = 0;

    [[nodiscard]] std::map<std::uint64_t, std::uint64_t> histogram() const;
};

/// Image of every permutation of 1..n (indexed by lexicographic rank) under
/// lift_range(0, n, .).
[[nodiscard]] std::vector<std::uint32_t> basement_action_table_serial(std::uint32_t n);
[[nodiscard]] std::vector<std::uint32_t> basement_action_table_parallel(std::uint32_t n,
                                                                        int threads);

[[nodiscard]] OrbitReport basement_action_orbits(std::uint32_t n,
                                                 std::uint32_t cap = kDefaultOrbitCap,
                                                 int threads = 1);

/// The cycle through w, starting at w. w must be a permutation of 1..n.
[[nodiscard]] std::vector<Word> orbit_of(const Word& w);

[[nodiscard]] bool is_permutation_word(const Word& w);

// Lexicographic rank of a permutation of 1..n among all n! of them.
[[nodiscard]] std::uint64_t permutation_rank(const Word& w);
[[nodiscard]] Word permutation_unrank(std::uint32_t n, std::uint64_t rank);

[[nodiscard]] std::string orbit_report_json(const OrbitReport& r, bool include_histogram = true);

}  // namespace qtsym
