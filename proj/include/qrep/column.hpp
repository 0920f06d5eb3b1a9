#pragma once

#include "qrep/rational.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qrep {

using Digit = std::uint64_t;

/// One column q_{0,n}, q_{1,n}, ... of the system matrix (unsigned entries).
///
/// Three shapes are supported:
///  - uniform(s): s equal entries 1/s (alphabet 0..s-1);
///  - finite(list): explicit entries, alphabet 0..list.size()-1;
///  - geometric(c, r): infinite alphabet with q_i = c * r^i and exact tail
///    sum T(k) = c r^k / (1 - r).
///
/// Construction does not enforce positivity or the unit column sum, so that
/// `validate` can report those defects by position. Use `check()` to obtain
/// them directly.
class Column {
public:
    enum class Shape { uniform, finite, geometric };

    static Column uniform(std::uint64_t s);
    static Column finite(std::vector<Rational> entries);
    static Column geometric(Rational c, Rational r);

    [[nodiscard]] Shape shape() const { return shape_; }
    [[nodiscard]] bool is_finite() const { return shape_ != Shape::geometric; }
    /// m_n + 1, or nullopt when the alphabet is infinite.
    [[nodiscard]] std::optional<std::uint64_t> alphabet_size() const;
    /// m_n for finite columns.
    [[nodiscard]] std::optional<Digit> max_digit() const;
    [[nodiscard]] bool valid_digit(Digit i) const;

    /// q_{i,n}. Throws DomainError outside the alphabet.
    [[nodiscard]] Rational q(Digit i) const;
    /// a_{i,n} = q_0 + ... + q_{i-1}. Throws DomainError outside the alphabet.
    [[nodiscard]] Rational a(Digit i) const;
    /// Sum of q_j for j >= k (geometric columns, and finite ones for k <= m+1).
    [[nodiscard]] Rational tail_sum(Digit k) const;

    /// (a_{m_n}, q_{m_n}); the limit (1, 0) for infinite alphabets.
    [[nodiscard]] std::pair<Rational, Rational> last_pair() const;
    [[nodiscard]] std::pair<Rational, Rational> first_pair() const { return {Rational(0), q(0)}; }
    /// sup_i q_{i,n}.
    [[nodiscard]] Rational sup_q() const;

    struct Defect {
        std::optional<Digit> digit; // set for positivity failures
        int condition = 0;          // 1 or 2
        std::string message;
    };
    /// Exact checks of positivity and unit sum.
    [[nodiscard]] std::vector<Defect> check() const;

    [[nodiscard]] const Rational& geometric_c() const { return c_; }
    [[nodiscard]] const Rational& geometric_r() const { return r_; }
    [[nodiscard]] const std::vector<Rational>& entries() const;

    [[nodiscard]] std::string describe() const;

    friend bool operator==(const Column& a, const Column& b);

private:
    Column() = default;

    Shape shape_ = Shape::uniform;
    std::uint64_t s_ = 1;
    Rational c_;
    Rational r_;
    // finite: entries and prefix sums (prefix_[i] = a_i, size m+2)
    std::shared_ptr<const std::vector<Rational>> entries_;
    std::shared_ptr<const std::vector<Rational>> prefix_;
};

} // namespace qrep
