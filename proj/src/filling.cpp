#include "qtsym/filling.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <stdexcept>

#include "qtsym/lifts.hpp"

namespace qtsym {

namespace {

Partition shape_of_rows(const std::vector<Word>& rows) {
    std::vector<std::uint32_t> parts;
    parts.reserve(rows.size());
    for (const Word& r : rows) {
        if (r.empty()) throw std::invalid_argument("filling rows must be nonempty");
        parts.push_back(static_cast<std::uint32_t>(r.size()));
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("filling rows do not form a partition shape (bottom-to-top)");
    }
}

}  // namespace

Filling::Filling(std::vector<Word> rows) : shape_(shape_of_rows(rows)), rows_(std::move(rows)) {}

Filling::Filling(const Partition& shape, std::vector<Word> rows)
    : shape_(shape), rows_(std::move(rows)) {
    if (rows_.size() != shape_.length()) {
        throw std::invalid_argument("filling row count does not match shape");
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].size() != shape_.parts()[r]) {
            throw std::invalid_argument("filling row length does not match shape");
        }
    }
}

const Word& Filling::row(std::size_t r) const {
    if (r == 0 || r > rows_.size()) throw std::out_of_range("filling row out of range");
    return rows_[r - 1];
}

Letter Filling::at(std::size_t r, std::size_t c) const { return row(r).at(c); }

std::vector<Letter> Filling::reading_word() const {
    std::vector<Letter> out;
    out.reserve(shape_.size());
    for (const Word& r : rows_) out.insert(out.end(), r.vec().begin(), r.vec().end());
    return out;
}

std::vector<std::uint32_t> Filling::content(Letter bound) const {
    std::vector<std::uint32_t> counts(bound, 0);
    for (const Word& r : rows_) {
        for (Letter x : r.letters()) {
            if (x > bound) throw std::invalid_argument("entry exceeds content bound");
            ++counts[x - 1];
        }
    }
    return counts;
}

Letter Filling::max_letter() const noexcept {
    Letter m = 0;
    for (const Word& r : rows_) m = std::max(m, r.max_letter());
    return m;
}

Word column_word(const Filling& f, std::size_t j) {
    if (f.num_rows() == 0 || j == 0 || j > f.shape().part(1)) {
        throw std::out_of_range("filling column out of range");
    }
    std::vector<Letter> letters;
    for (std::size_t r = f.num_rows(); r >= 1; --r) {
        if (f.row(r).size() >= j) letters.push_back(f.at(r, j));
    }
    return Word(std::move(letters));
}

std::size_t maj_filling(const Filling& f) {
    std::size_t total = 0;
    const std::size_t width = f.num_rows() == 0 ? 0 : f.shape().part(1);
    for (std::size_t j = 1; j <= width; ++j) total += maj(column_word(f, j));
    return total;
}

std::size_t count_row_triples(std::span<const Letter> row, std::span<const Letter> below) {
    if (below.size() < row.size()) throw std::invalid_argument("basement row is too short");
    std::size_t count = 0;
    for (std::size_t a = 0; a < row.size(); ++a) {
        for (std::size_t b = a + 1; b < row.size(); ++b) {
            if (is_inversion_triple(row[a], row[b], below[a])) ++count;
        }
    }
    return count;
}

std::size_t inv_filling(const Filling& f) {
    std::size_t total = 0;
    std::vector<Letter> zeros(f.num_rows() == 0 ? 0 : f.shape().part(1), 0);
    for (std::size_t r = 1; r <= f.num_rows(); ++r) {
        std::span<const Letter> below = r == 1 ? std::span<const Letter>(zeros)
                                               : f.row(r - 1).letters();
        total += count_row_triples(f.row(r).letters(), below);
    }
    return total;
}

std::vector<TripleSite> triples_in_row(const Filling& f, std::size_t r) {
    const Word& row = f.row(r);
    std::vector<TripleSite> sites;
    for (std::size_t a = 1; a <= row.size(); ++a) {
        const Letter z = r == 1 ? 0 : f.at(r - 1, a);
        for (std::size_t b = a + 1; b <= row.size(); ++b) {
            if (is_inversion_triple(row.at(a), row.at(b), z)) sites.push_back({r, a, b});
        }
    }
    return sites;
}

std::vector<Letter> stage_basement(const Word& a, std::size_t stage, std::size_t n) {
    if (stage > n || stage > a.size()) throw std::out_of_range("elevator stage out of range");
    std::vector<Letter> out(n, 0);
    if (stage == 0) return out;
    for (std::size_t p = 1; p <= n; ++p) out[p - 1] = a.at(std::min(p, stage));
    return out;
}

std::size_t row_inv_sum(const Filling& f) {
    std::size_t total = 0;
    for (const Word& r : f.rows()) total += inv(r);
    return total;
}

Filling elevator_filling(const Filling& f) {
    std::vector<Word> rows;
    rows.reserve(f.num_rows());
    for (std::size_t r = 1; r <= f.num_rows(); ++r) {
        rows.push_back(r == 1 ? f.row(1) : elevator(rows.back(), f.row(r)));
    }
    return Filling(f.shape(), std::move(rows));
}

Filling elevator_filling_inverse(const Filling& g) {
    std::vector<Word> rows;
    rows.reserve(g.num_rows());
    for (std::size_t r = 1; r <= g.num_rows(); ++r) {
        rows.push_back(r == 1 ? g.row(1) : elevator_inverse(g.row(r - 1), g.row(r)));
    }
    return Filling(g.shape(), std::move(rows));
}

std::uint64_t filling_count(const Partition& mu, Letter max_letter) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (count > std::numeric_limits<std::uint64_t>::max() / max_letter) {
            throw std::overflow_error("too many fillings to enumerate");
        }
        count *= max_letter;
    }
    return count;
}

Filling filling_from_reading_word(const Partition& mu, std::span<const Letter> reading) {
    if (reading.size() != mu.size()) throw std::invalid_argument("reading word length mismatch");
    std::vector<Word> rows;
    rows.reserve(mu.length());
    std::size_t offset = 0;
    for (std::uint32_t len : mu.parts()) {
        rows.emplace_back(std::vector<Letter>(reading.begin() + static_cast<std::ptrdiff_t>(offset),
                                              reading.begin() +
                                                  static_cast<std::ptrdiff_t>(offset + len)));
        offset += len;
    }
    return Filling(mu, std::move(rows));
}

FillingStream::FillingStream(Partition mu, Letter max_letter)
    : FillingStream(mu, max_letter, 0, filling_count(mu, max_letter)) {}

FillingStream::FillingStream(Partition mu, Letter max_letter, std::uint64_t first,
                             std::uint64_t last)
    : shape_(std::move(mu)), max_letter_(max_letter), position_(first), last_(last) {
    if (max_letter_ == 0) throw std::invalid_argument("max_letter must be positive");
    const std::uint64_t total = filling_count(shape_, max_letter_);
    if (first > last || last > total) throw std::out_of_range("filling index range out of bounds");
    digits_.assign(shape_.size(), 1);
    std::uint64_t rest = first;
    for (std::size_t p = digits_.size(); p-- > 0;) {
        digits_[p] = static_cast<Letter>(rest % max_letter_) + 1;
        rest /= max_letter_;
    }
}

bool FillingStream::next(Filling& out) {
    if (position_ >= last_) return false;
    out = filling_from_reading_word(shape_, digits_);
    ++position_;
    for (std::size_t p = digits_.size(); p-- > 0;) {
        if (digits_[p] < max_letter_) {
            ++digits_[p];
            break;
        }
        digits_[p] = 1;
    }
    return true;
}

std::vector<Filling> enumerate_fillings(const Partition& mu, Letter max_letter) {
    std::vector<Filling> out;
    FillingStream stream(mu, max_letter);
    out.reserve(stream.remaining());
    Filling f;
    while (stream.next(f)) out.push_back(f);
    return out;
}

Filling parse_filling(std::string_view text) {
    std::vector<Word> top_down;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
            line.remove_suffix(1);
        }
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
        if (line.empty()) continue;
        std::vector<Letter> entries;
        while (true) {
            const auto comma = line.find(',');
            std::string_view token = line.substr(0, comma);
            while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
            while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
            Letter x = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), x);
            if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || x == 0) {
                throw std::invalid_argument("malformed filling entry '" + std::string(token) + "'");
            }
            entries.push_back(x);
            if (comma == std::string_view::npos) break;
            line = line.substr(comma + 1);
        }
        top_down.emplace_back(std::move(entries));
    }
    std::reverse(top_down.begin(), top_down.end());
    return Filling(std::move(top_down));
}

std::string format_filling(const Filling& f) {
    std::string out;
    for (std::size_t r = f.num_rows(); r >= 1; --r) {
        const Word& row = f.row(r);
        for (std::size_t c = 1; c <= row.size(); ++c) {
            if (c > 1) out += ',';
            out += std::to_string(row.at(c));
        }
        out += '\n';
    }
    return out;
}

}  // namespace qtsym
