#include "qtsym/genfunc.hpp"

#include <omp.h>

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "qtsym/bijections.hpp"

namespace qtsym {

namespace {

using LocalTerms = std::map<Monomial, std::uint64_t>;

struct IndexRange {
    std::uint64_t first;
    std::uint64_t last;
};

std::vector<IndexRange> split_range(std::uint64_t total, std::uint64_t chunks) {
    chunks = std::max<std::uint64_t>(1, std::min(chunks, total));
    std::vector<IndexRange> out;
    out.reserve(chunks);
    const std::uint64_t base = total / chunks;
    const std::uint64_t extra = total % chunks;
    std::uint64_t start = 0;
    for (std::uint64_t i = 0; i < chunks; ++i) {
        const std::uint64_t len = base + (i < extra ? 1 : 0);
        out.push_back({start, start + len});
        start += len;
    }
    return out;
}

void fold_range(const Partition& mu, Letter max_letter, IndexRange range,
                FillingStatistic q_stat, FillingStatistic t_stat, LocalTerms& acc) {
    FillingStream stream(mu, max_letter, range.first, range.last);
    Filling f;
    while (stream.next(f)) {
        Monomial m{static_cast<std::uint32_t>(q_stat(f)), static_cast<std::uint32_t>(t_stat(f)),
                   f.content(max_letter)};
        ++acc[std::move(m)];
    }
}

void check_alphabet(Letter max_letter) {
    if (max_letter == 0) throw std::invalid_argument("max_letter must be positive");
}

}  // namespace

SparsePolynomial::SparsePolynomial(Partition shape, Letter max_letter)
    : shape_(std::move(shape)), max_letter_(max_letter) {}

void SparsePolynomial::add(const Monomial& m, const Coefficient& c) {
    if (m.x.size() != max_letter_) throw std::invalid_argument("content length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void SparsePolynomial::merge(const SparsePolynomial& other) {
    for (const auto& [m, c] : other.terms_) add(m, c);
}

Coefficient SparsePolynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coefficient{0} : it->second;
}

Coefficient SparsePolynomial::total_mass() const {
    Coefficient sum = 0;
    for (const auto& [m, c] : terms_) sum += c;
    return sum;
}

SparsePolynomial specialize(const SparsePolynomial& p, Specialization s) {
    SparsePolynomial out(p.shape(), p.max_letter());
    for (const auto& [m, c] : p.terms()) {
        Monomial n = m;
        switch (s) {
            case Specialization::None:
                break;
            case Specialization::QOne:
                n.q = 0;
                break;
            case Specialization::TOne:
                n.t = 0;
                break;
            case Specialization::QZero:
                if (m.q != 0) continue;
                break;
            case Specialization::TZero:
                if (m.t != 0) continue;
                break;
        }
        out.add(n, c);
    }
    return out;
}

SparsePolynomial swap_qt(const SparsePolynomial& p) {
    SparsePolynomial out(p.shape(), p.max_letter());
    for (const auto& [m, c] : p.terms()) {
        Monomial n = m;
        std::swap(n.q, n.t);
        out.add(n, c);
    }
    return out;
}

SparsePolynomial filling_generating_function_serial(const Partition& mu, Letter max_letter,
                                                    FillingStatistic q_stat,
                                                    FillingStatistic t_stat) {
    check_alphabet(max_letter);
    SparsePolynomial out(mu, max_letter);
    FillingStream stream(mu, max_letter);
    Filling f;
    while (stream.next(f)) {
        Monomial m{static_cast<std::uint32_t>(q_stat(f)), static_cast<std::uint32_t>(t_stat(f)),
                   f.content(max_letter)};
        out.add(m, 1);
    }
    return out;
}

SparsePolynomial filling_generating_function_parallel(const Partition& mu, Letter max_letter,
                                                      FillingStatistic q_stat,
                                                      FillingStatistic t_stat, int threads) {
    check_alphabet(max_letter);
    threads = std::max(1, threads);
    const auto ranges =
        split_range(filling_count(mu, max_letter), static_cast<std::uint64_t>(threads) * 8);
    std::vector<LocalTerms> partial(ranges.size());
    const auto n = static_cast<std::int64_t>(ranges.size());
#pragma omp parallel for num_threads(threads) schedule(dynamic, 1)
    for (std::int64_t i = 0; i < n; ++i) {
        fold_range(mu, max_letter, ranges[static_cast<std::size_t>(i)], q_stat, t_stat,
                   partial[static_cast<std::size_t>(i)]);
    }
    SparsePolynomial out(mu, max_letter);
    for (const auto& local : partial) {
        for (const auto& [m, c] : local) out.add(m, Coefficient(c));
    }
    return out;
}

SparsePolynomial filling_generating_function(const Partition& mu, Letter max_letter,
                                             FillingStatistic q_stat, FillingStatistic t_stat,
                                             int threads) {
    if (threads > 1) {
        return filling_generating_function_parallel(mu, max_letter, q_stat, t_stat, threads);
    }
    return filling_generating_function_serial(mu, max_letter, q_stat, t_stat);
}

SparsePolynomial macdonald_poly(const Partition& mu, Letter max_letter, int threads) {
    return filling_generating_function(mu, max_letter, &inv_filling, &maj_filling, threads);
}

SymmetryCheck verify_q1_symmetry(const Partition& mu, Letter max_letter, int threads) {
    const SparsePolynomial lhs = specialize(macdonald_poly(mu, max_letter, threads),
                                            Specialization::QOne);
    const SparsePolynomial rhs =
        specialize(swap_qt(macdonald_poly(conjugate(mu), max_letter, threads)),
                   Specialization::QOne);
    SymmetryCheck out;
    // Walk the union of both supports in canonical order.
    auto a = lhs.terms().begin();
    auto b = rhs.terms().begin();
    while (a != lhs.terms().end() || b != rhs.terms().end()) {
        const Monomial* m = nullptr;
        if (b == rhs.terms().end() || (a != lhs.terms().end() && a->first < b->first)) {
            m = &a->first;
        } else {
            m = &b->first;
        }
        const Coefficient cl = lhs.coefficient(*m);
        const Coefficient cr = rhs.coefficient(*m);
        if (cl != cr) {
            out.equal = false;
            out.witness = *m;
            out.lhs = cl;
            out.rhs = cr;
            return out;
        }
        if (a != lhs.terms().end() && a->first == *m) ++a;
        if (b != rhs.terms().end() && b->first == *m) ++b;
    }
    return out;
}

namespace {

struct ChunkVerdict {
    std::optional<std::uint64_t> first_bad;
    std::string reason;
    std::vector<std::pair<std::vector<Letter>, std::uint64_t>> images;
};

void check_range(const Partition& mu, Letter max_letter, IndexRange range, ChunkVerdict& v) {
    const Partition target = conjugate(mu);
    FillingStream stream(mu, max_letter, range.first, range.last);
    Filling f;
    std::uint64_t index = range.first;
    v.images.reserve(range.last - range.first);
    for (; stream.next(f); ++index) {
        const SymmetryWitness w = symmetry_map(f);
        const char* reason = nullptr;
        if (w.output.shape() != target) {
            reason = "output shape is not the conjugate shape";
        } else if (w.output.max_letter() > max_letter ||
                   w.output.content(max_letter) != f.content(max_letter)) {
            reason = "content not preserved";
        } else if (w.maj_in != w.inv_out) {
            reason = "maj of input differs from inv of output";
        }
        if (reason != nullptr) {
            v.first_bad = index;
            v.reason = reason;
            return;
        }
        v.images.emplace_back(w.output.reading_word(), index);
    }
}

}  // namespace

BijectiveCheck verify_bijective_q1_symmetry(const Partition& mu, Letter max_letter, int threads) {
    check_alphabet(max_letter);
    threads = std::max(1, threads);
    const std::uint64_t total = filling_count(mu, max_letter);
    const auto ranges = split_range(total, threads > 1 ? static_cast<std::uint64_t>(threads) * 8 : 1);
    std::vector<ChunkVerdict> verdicts(ranges.size());
    const auto n = static_cast<std::int64_t>(ranges.size());
#pragma omp parallel for num_threads(threads) schedule(dynamic, 1) if (threads > 1)
    for (std::int64_t i = 0; i < n; ++i) {
        check_range(mu, max_letter, ranges[static_cast<std::size_t>(i)],
                    verdicts[static_cast<std::size_t>(i)]);
    }

    BijectiveCheck out;
    out.checked = total;
    for (const auto& v : verdicts) {
        if (v.first_bad) {
            out.ok = false;
            out.reason = v.reason;
            FillingStream stream(mu, max_letter, *v.first_bad, *v.first_bad + 1);
            Filling f;
            stream.next(f);
            out.witness = f;
            return out;
        }
    }

    std::vector<std::pair<std::vector<Letter>, std::uint64_t>> images;
    images.reserve(total);
    for (auto& v : verdicts) {
        images.insert(images.end(), std::make_move_iterator(v.images.begin()),
                      std::make_move_iterator(v.images.end()));
    }
    std::sort(images.begin(), images.end());
    std::optional<std::uint64_t> collision;
    for (std::size_t i = 1; i < images.size(); ++i) {
        if (images[i].first == images[i - 1].first) {
            collision = std::min(collision.value_or(images[i].second), images[i].second);
        }
    }
    if (collision) {
        out.ok = false;
        out.reason = "two fillings share an image";
        FillingStream stream(mu, max_letter, *collision, *collision + 1);
        Filling f;
        stream.next(f);
        out.witness = f;
    }
    return out;
}

std::string to_json(const SparsePolynomial& p) {
    nlohmann::ordered_json doc;
    doc["shape"] = std::vector<std::uint32_t>(p.shape().parts().begin(), p.shape().parts().end());
    doc["max_letter"] = p.max_letter();
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::ordered_json term;
        term["q"] = m.q;
        term["t"] = m.t;
        term["x"] = m.x;
        if (c <= std::numeric_limits<std::uint64_t>::max()) {
            term["coeff"] = c.convert_to<std::uint64_t>();
        } else {
            term["coeff"] = c.str();
        }
        terms.push_back(std::move(term));
    }
    doc["terms"] = std::move(terms);
    return doc.dump();
}

SparsePolynomial polynomial_from_json(const std::string& text) {
    const auto doc = nlohmann::json::parse(text);
    const auto parts = doc.at("shape").get<std::vector<std::uint32_t>>();
    SparsePolynomial out(Partition(parts), doc.at("max_letter").get<Letter>());
    for (const auto& term : doc.at("terms")) {
        Monomial m{term.at("q").get<std::uint32_t>(), term.at("t").get<std::uint32_t>(),
                   term.at("x").get<std::vector<std::uint32_t>>()};
        const auto& c = term.at("coeff");
        out.add(m, c.is_string() ? Coefficient(c.get<std::string>()) : Coefficient(c.get<std::uint64_t>()));
    }
    return out;
}

std::string format_polynomial(const SparsePolynomial& p) {
    std::ostringstream os;
    for (const auto& [m, c] : p.terms()) {
        os << c << " q^" << m.q << " t^" << m.t << " x=[";
        for (std::size_t i = 0; i < m.x.size(); ++i) os << (i ? "," : "") << m.x[i];
        os << "]\n";
    }
    return os.str();
}

}  // namespace qtsym
