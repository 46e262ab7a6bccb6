#include "qtsym/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace qtsym {

namespace {

void check_letters(const std::vector<Letter>& letters) {
    for (Letter x : letters) {
        if (x == 0) throw std::invalid_argument("word letters must be positive");
    }
}

std::uint32_t parse_uint(std::string_view token, const char* what) {
    std::uint32_t value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc{} || ptr != last) {
        throw std::invalid_argument(std::string("malformed ") + what + " '" +
                                    std::string(token) + "'");
    }
    return value;
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

}  // namespace

Word::Word(std::initializer_list<Letter> letters) : letters_(letters) {
    check_letters(letters_);
}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    check_letters(letters_);
}

Letter Word::at(std::size_t pos) const {
    if (pos == 0 || pos > letters_.size()) throw std::out_of_range("word position out of range");
    return letters_[pos - 1];
}

Word Word::factor(std::size_t i, std::size_t j) const {
    if (i == 0) throw std::out_of_range("word positions are 1-based");
    if (i > j) return {};
    if (j > letters_.size()) throw std::out_of_range("word factor out of range");
    Word out;
    out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(i - 1),
                        letters_.begin() + static_cast<std::ptrdiff_t>(j));
    return out;
}

Letter Word::max_letter() const noexcept {
    return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

std::vector<std::uint32_t> Word::content(Letter bound) const {
    std::vector<std::uint32_t> counts(bound, 0);
    for (Letter x : letters_) {
        if (x > bound) throw std::invalid_argument("letter exceeds content bound");
        ++counts[x - 1];
    }
    return counts;
}

Word& Word::append(const Word& tail) {
    letters_.insert(letters_.end(), tail.letters_.begin(), tail.letters_.end());
    return *this;
}

Partition::Partition(std::initializer_list<std::uint32_t> parts)
    : Partition(std::vector<std::uint32_t>(parts)) {}

Partition::Partition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
}

std::uint32_t Partition::part(std::size_t i) const {
    if (i == 0 || i > parts_.size()) throw std::out_of_range("partition part out of range");
    return parts_[i - 1];
}

std::size_t Partition::size() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0});
}

Partition conjugate(const Partition& mu) {
    std::vector<std::uint32_t> out;
    if (mu.empty()) return {};
    out.reserve(mu.part(1));
    for (std::uint32_t j = 1; j <= mu.part(1); ++j) {
        auto count = std::count_if(mu.parts().begin(), mu.parts().end(),
                                   [j](std::uint32_t p) { return p >= j; });
        out.push_back(static_cast<std::uint32_t>(count));
    }
    return Partition(std::move(out));
}

namespace {

void partitions_rec(std::size_t remaining, std::uint32_t max_part,
                    std::vector<std::uint32_t>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    const auto top = static_cast<std::uint32_t>(std::min<std::size_t>(remaining, max_part));
    for (std::uint32_t p = top; p >= 1; --p) {
        prefix.push_back(p);
        partitions_rec(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(std::size_t n) {
    std::vector<Partition> out;
    std::vector<std::uint32_t> prefix;
    partitions_rec(n, static_cast<std::uint32_t>(n), prefix, out);
    return out;
}

std::size_t inv(const Word& w) noexcept {
    const auto xs = w.letters();
    std::size_t count = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            if (xs[i] > xs[j]) ++count;
        }
    }
    return count;
}

std::size_t maj(const Word& w) noexcept {
    const auto xs = w.letters();
    std::size_t total = 0;
    for (std::size_t d = 1; d < xs.size(); ++d) {
        if (xs[d - 1] > xs[d]) total += d;
    }
    return total;
}

std::size_t inv_k(Letter k, std::span<const Letter> w) noexcept {
    std::size_t count = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            if (k_less(k, w[j], w[i])) ++count;
        }
    }
    return count;
}

Word parse_word(std::string_view text) {
    text = trim(text);
    std::vector<Letter> letters;
    const bool spaced = std::any_of(text.begin(), text.end(), is_space);
    if (!spaced) {
        for (char c : text) {
            if (c < '1' || c > '9') {
                throw std::invalid_argument("malformed compact word '" + std::string(text) + "'");
            }
            letters.push_back(static_cast<Letter>(c - '0'));
        }
        return Word(std::move(letters));
    }
    while (!text.empty()) {
        std::size_t end = 0;
        while (end < text.size() && !is_space(text[end])) ++end;
        const Letter x = parse_uint(text.substr(0, end), "letter");
        if (x == 0) throw std::invalid_argument("word letters must be positive");
        letters.push_back(x);
        text = trim(text.substr(end));
    }
    return Word(std::move(letters));
}

std::string format_word(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) out += ' ';
        out += std::to_string(w.letters()[i]);
    }
    return out;
}

Partition parse_partition(std::string_view text) {
    text = trim(text);
    std::vector<std::uint32_t> parts;
    if (text.empty()) return {};
    while (true) {
        const auto comma = text.find(',');
        parts.push_back(parse_uint(trim(text.substr(0, comma)), "partition part"));
        if (comma == std::string_view::npos) break;
        text = text.substr(comma + 1);
    }
    return Partition(std::move(parts));
}

std::string format_partition(const Partition& mu) {
    std::string out;
    for (std::size_t i = 0; i < mu.length(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(mu.parts()[i]);
    }
    return out;
}

}  // namespace qtsym
