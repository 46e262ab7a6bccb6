#pragma once

// Exact generating functions over fillings: sum of q^a t^b X^F restricted
// to the variables x_1..x_m, with arbitrary-precision coefficients.
//
// Each enumeration kernel has a serial reference form and an OpenMP form
// (selected with threads > 1). Both must produce identical term maps.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtsym/filling.hpp"
#include "qtsym/word.hpp"

namespace qtsym {

using Coefficient = boost::multiprecision::cpp_int;

struct Monomial {
    std::uint32_t q = 0;
    std::uint32_t t = 0;
    std::vector<std::uint32_t> x;  // exponent of x_1..x_m

    // Ascending q, then t, then lexicographic content.
    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;
};

class SparsePolynomial {
public:
    SparsePolynomial() = default;
    SparsePolynomial(Partition shape, Letter max_letter);

    [[nodiscard]] const Partition& shape() const noexcept { return shape_; }
    [[nodiscard]] Letter max_letter() const noexcept { return max_letter_; }
    [[nodiscard]] const std::map<Monomial, Coefficient>& terms() const noexcept { return terms_; }

    /// Adds c to the coefficient of m; a resulting zero is erased.
    void add(const Monomial& m, const Coefficient& c);
    void merge(const SparsePolynomial& other);

    [[nodiscard]] Coefficient coefficient(const Monomial& m) const;
    [[nodiscard]] Coefficient total_mass() const;

    /// Equal term maps; the shape label is not compared.
    bool operator==(const SparsePolynomial& other) const {
        return max_letter_ == other.max_letter_ && terms_ == other.terms_;
    }

private:
    Partition shape_;
    Letter max_letter_ = 0;
    std::map<Monomial, Coefficient> terms_;
};

enum class Specialization { None, QOne, TOne, QZero, TZero };

[[nodiscard]] SparsePolynomial specialize(const SparsePolynomial& p, Specialization s);
[[nodiscard]] SparsePolynomial swap_qt(const SparsePolynomial& p);

using FillingStatistic = std::size_t (*)(const Filling&);

/// Sum over fillings of mu with entries <= max_letter of
/// q^{q_stat(F)} t^{t_stat(F)} X^F.
[[nodiscard]] SparsePolynomial filling_generating_function_serial(const Partition& mu,
                                                                  Letter max_letter,
                                                                  FillingStatistic q_stat,
                                                                  FillingStatistic t_stat);
[[nodiscard]] SparsePolynomial filling_generating_function_parallel(const Partition& mu,
                                                                    Letter max_letter,
                                                                    FillingStatistic q_stat,
                                                                    FillingStatistic t_stat,
                                                                    int threads);
[[nodiscard]] SparsePolynomial filling_generating_function(const Partition& mu, Letter max_letter,
                                                           FillingStatistic q_stat,
                                                           FillingStatistic t_stat,
                                                           int threads = 1);

/// H~_mu(x_1..x_m; q, t) by Haglund's formula (q counts inv, t counts maj).
[[nodiscard]] SparsePolynomial macdonald_poly(const Partition& mu, Letter max_letter,
                                              int threads = 1);

struct SymmetryCheck {
    bool equal = true;
    std::optional<Monomial> witness;
    Coefficient lhs;
    Coefficient rhs;
};

/// Compares H~_mu(X;1,t) with H~_mu'(X;t,1) on x_1..x_m.
[[nodiscard]] SymmetryCheck verify_q1_symmetry(const Partition& mu, Letter max_letter,
                                               int threads = 1);

struct BijectiveCheck {
    bool ok = true;
    std::uint64_t checked = 0;
    std::optional<Filling> witness;
    std::string reason;
};

/// Checks the symmetry bijection filling by filling: lands in shape mu',
/// preserves content, sends maj to inv, and is injective.
[[nodiscard]] BijectiveCheck verify_bijective_q1_symmetry(const Partition& mu, Letter max_letter,
                                                          int threads = 1);

[[nodiscard]] std::string to_json(const SparsePolynomial& p);
[[nodiscard]] SparsePolynomial polynomial_from_json(const std::string& text);

/// One term per line: "<coeff> q^a t^b x=[e1,...,em]".
[[nodiscard]] std::string format_polynomial(const SparsePolynomial& p);

}  // namespace qtsym
