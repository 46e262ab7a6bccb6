#include "qtsym/explore.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qtsym/lifts.hpp"

namespace qtsym {

namespace {

std::uint64_t factorial(std::uint32_t n) {
    std::uint64_t f = 1;
    for (std::uint32_t i = 2; i <= n; ++i) f *= i;
    return f;
}

void check_n(std::uint32_t n) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    if (n > 20) throw std::invalid_argument("n too large to index permutations");
}

OrbitReport report_from_table(std::uint32_t n, const std::vector<std::uint32_t>& image) {
    OrbitReport r;
    r.n = n;
    std::vector<bool> seen(image.size(), false);
    for (std::size_t start = 0; start < image.size(); ++start) {
        if (seen[start]) continue;
        std::uint64_t len = 0;
        for (std::size_t p = start; !seen[p]; p = image[p]) {
            seen[p] = true;
            ++len;
        }
        r.cycle_lengths.push_back(len);
        if (len == 1) ++r.fixed_points;
    }
    std::sort(r.cycle_lengths.begin(), r.cycle_lengths.end());
    r.num_orbits = r.cycle_lengths.size();
    return r;
}

}  // namespace

std::map<std::uint64_t, std::uint64_t> OrbitReport::histogram() const {
    std::map<std::uint64_t, std::uint64_t> h;
    for (auto len : cycle_lengths) ++h[len];
    return h;
}

bool is_permutation_word(const Word& w) {
    std::vector<bool> seen(w.size() + 1, false);
    for (Letter x : w.letters()) {
        if (x > w.size() || seen[x]) return false;
        seen[x] = true;
    }
    return !w.empty();
}

std::uint64_t permutation_rank(const Word& w) {
    if (!is_permutation_word(w)) throw std::invalid_argument("not a permutation word");
    const auto n = static_cast<std::uint32_t>(w.size());
    check_n(n);
    std::vector<bool> used(n + 1, false);
    std::uint64_t rank = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
        const Letter x = w.letters()[i];
        std::uint64_t smaller = 0;
        for (Letter y = 1; y < x; ++y) {
            if (!used[y]) ++smaller;
        }
        rank += smaller * factorial(n - 1 - i);
        used[x] = true;
    }
    return rank;
}

Word permutation_unrank(std::uint32_t n, std::uint64_t rank) {
    check_n(n);
    if (rank >= factorial(n)) throw std::out_of_range("permutation rank out of range");
    std::vector<Letter> pool(n);
    for (std::uint32_t i = 0; i < n; ++i) pool[i] = i + 1;
    std::vector<Letter> out;
    out.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        const std::uint64_t f = factorial(n - 1 - i);
        const auto idx = static_cast<std::size_t>(rank / f);
        rank %= f;
        out.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return Word(std::move(out));
}

std::vector<std::uint32_t> basement_action_table_serial(std::uint32_t n) {
    check_n(n);
    std::vector<std::uint32_t> image;
    image.reserve(factorial(n));
    std::vector<Letter> perm(n);
    for (std::uint32_t i = 0; i < n; ++i) perm[i] = i + 1;
    do {
        image.push_back(static_cast<std::uint32_t>(permutation_rank(lift_range(0, n, Word(perm)))));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return image;
}

std::vector<std::uint32_t> basement_action_table_parallel(std::uint32_t n, int threads) {
    check_n(n);
    const auto total = static_cast<std::int64_t>(factorial(n));
    std::vector<std::uint32_t> image(static_cast<std::size_t>(total));
#pragma omp parallel for num_threads(std::max(1, threads)) schedule(static)
    for (std::int64_t r = 0; r < total; ++r) {
        const Word w = permutation_unrank(n, static_cast<std::uint64_t>(r));
        image[static_cast<std::size_t>(r)] =
            static_cast<std::uint32_t>(permutation_rank(lift_range(0, n, w)));
    }
    return image;
}

OrbitReport basement_action_orbits(std::uint32_t n, std::uint32_t cap, int threads) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    if (n > cap) {
        throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the orbit cap " +
                                    std::to_string(cap));
    }
    const auto table = threads > 1 ? basement_action_table_parallel(n, threads)
                                   : basement_action_table_serial(n);
    return report_from_table(n, table);
}

std::vector<Word> orbit_of(const Word& w) {
    if (!is_permutation_word(w)) throw std::invalid_argument("orbit_of needs a permutation of 1..n");
    const auto n = static_cast<Letter>(w.size());
    std::vector<Word> cycle{w};
    for (Word next = lift_range(0, n, w); next != w; next = lift_range(0, n, next)) {
        cycle.push_back(next);
    }
    return cycle;
}

std::string orbit_report_json(const OrbitReport& r, bool include_histogram) {
    nlohmann::ordered_json doc;
    doc["n"] = r.n;
    doc["num_orbits"] = r.num_orbits;
    doc["fixed_points"] = r.fixed_points;
    if (include_histogram) {
        auto hist = nlohmann::ordered_json::object();
        for (const auto& [len, count] : r.histogram()) hist[std::to_string(len)] = count;
        doc["cycle_length_histogram"] = std::move(hist);
    }
    return doc.dump();
}

}  // namespace qtsym
