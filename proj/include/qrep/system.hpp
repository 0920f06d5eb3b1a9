#pragma once

#include "qrep/column.hpp"
#include "qrep/nb_set.hpp"
#include "qrep/rational.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qrep {

using Position = std::uint64_t;

/// How columns beyond the explicitly listed ones are obtained.
enum class Extension { cycle, repeat_last };

/// A numeral system: the sign set N_B together with the column family
/// q_{i,n}. Immutable after construction; all accessors are pure.
class QSystem {
public:
    using ColumnRule = std::function<Column(Position)>;

    /// Columns 1..L listed explicitly, extended past L by `ext`.
    QSystem(NbSet nb, std::vector<Column> columns, Extension ext, std::string name = "explicit");
    /// Columns given by a deterministic rule n -> column (n >= 1).
    QSystem(NbSet nb, ColumnRule rule, std::string name);

    [[nodiscard]] const NbSet& nb() const { return nb_; }
    [[nodiscard]] const std::string& name() const { return name_; }

    /// Column n (n >= 1).
    [[nodiscard]] Column column(Position n) const;

    /// 1 if n is in N_B, 2 otherwise (n >= 1).
    [[nodiscard]] int rho(Position n) const;
    /// (-1)^{rho_n}: -1 iff n is in N_B.
    [[nodiscard]] int term_sign(Position n) const { return in_nb(n) ? -1 : 1; }
    /// (-1)^{rho_{n-1} + rho_n} with rho_0 = 0.
    [[nodiscard]] int column_sign(Position n) const;
    [[nodiscard]] bool in_nb(Position n) const { return n != 0 && nb_.contains(n); }

    /// a_{i,n}; throws DomainError outside the alphabet.
    [[nodiscard]] Rational digit_weight(Digit i, Position n) const { return column(n).a(i); }

    /// Joint periodicity of columns and signs, when the column provider
    /// is itself eventually periodic (explicit lists, never rules).
    [[nodiscard]] std::optional<Periodicity> periodicity() const;

    [[nodiscard]] bool is_explicit() const { return !rule_; }
    [[nodiscard]] const std::vector<Column>& explicit_columns() const { return columns_; }
    [[nodiscard]] Extension extension() const { return ext_; }

private:
    NbSet nb_;
    std::vector<Column> columns_;
    Extension ext_ = Extension::repeat_last;
    std::shared_ptr<const ColumnRule> rule_;
    std::string name_;
};

/// An (a, q) pair taken from one end of a column.
struct ExtremalPair {
    Rational a;
    Rational q;
};

/// Pair realising the smallest contribution at position n:
/// (a_{m_n,n}, q_{m_n,n}) when n is in N_B, (a_{0,n}, q_{0,n}) otherwise.
/// Infinite alphabets use the limit pair (1, 0) for the m_n end.
ExtremalPair extremal_low(const QSystem& sys, Position n);
/// Mirror of extremal_low with the case split swapped.
ExtremalPair extremal_high(const QSystem& sys, Position n);

enum class Condition3 { certified, inconclusive };

struct ValidationFailure {
    Position n = 0;
    std::optional<Digit> i;
    int condition = 0; // 1 or 2
    std::string message;
};

struct ValidationReport {
    Position depth = 0;
    std::vector<ValidationFailure> failures;
    Condition3 condition3 = Condition3::inconclusive;
    /// prod_{n <= depth} sup_i q_{i,n}
    Rational sup_product;

    [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// 2^-64: condition 3 is reported certified once the running product of
/// column maxima falls to or below this.
Rational condition3_threshold();

/// Exact checks of conditions 1 and 2 for columns 1..depth, plus the
/// running-product certificate for condition 3.
ValidationReport validate(const QSystem& sys, Position depth);

std::string to_string(Condition3 c);

} // namespace qrep
