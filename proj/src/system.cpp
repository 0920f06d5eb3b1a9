#include "qrep/system.hpp"

#include "qrep/errors.hpp"

#include <numeric>

namespace qrep {

QSystem::QSystem(NbSet nb, std::vector<Column> columns, Extension ext, std::string name)
    : nb_(std::move(nb)), columns_(std::move(columns)), ext_(ext), name_(std::move(name))
{
    if (columns_.empty()) {
        throw ConstructionError("system needs at least one explicit column");
    }
}

QSystem::QSystem(NbSet nb, ColumnRule rule, std::string name)
    : nb_(std::move(nb)), rule_(std::make_shared<const ColumnRule>(std::move(rule))), name_(std::move(name))
{
    if (!*rule_) {
        throw ConstructionError("system column rule is empty");
    }
}

Column QSystem::column(Position n) const
{
    if (n == 0) {
        throw DomainError("column index must be >= 1");
    }
    if (rule_) {
        return (*rule_)(n);
    }
    const std::size_t len = columns_.size();
    if (n <= len) {
        return columns_[n - 1];
    }
    if (ext_ == Extension::repeat_last) {
        return columns_.back();
    }
    return columns_[(n - 1) % len];
}

int QSystem::rho(Position n) const
{
    if (n == 0) {
        throw DomainError("rho is defined through this accessor for n >= 1 only");
    }
    return in_nb(n) ? 1 : 2;
}

int QSystem::column_sign(Position n) const
{
    if (n == 0) {
        throw DomainError("column index must be >= 1");
    }
    const int prev = n == 1 ? 0 : rho(n - 1);
    return (prev + rho(n)) % 2 == 0 ? 1 : -1;
}

std::optional<Periodicity> QSystem::periodicity() const
{
    if (rule_) {
        return std::nullopt;
    }
    const Periodicity signs = nb_.periodicity();
    const std::uint64_t len = columns_.size();
    const Periodicity cols = ext_ == Extension::repeat_last ? Periodicity{len, 1} : Periodicity{1, len};
    return Periodicity{std::max(signs.start, cols.start), std::lcm(signs.period, cols.period)};
}

ExtremalPair extremal_low(const QSystem& sys, Position n)
{
    const Column col = sys.column(n);
    if (sys.in_nb(n)) {
        auto [a, q] = col.last_pair();
        return {std::move(a), std::move(q)};
    }
    auto [a, q] = col.first_pair();
    return {std::move(a), std::move(q)};
}

ExtremalPair extremal_high(const QSystem& sys, Position n)
{
    const Column col = sys.column(n);
    if (sys.in_nb(n)) {
        auto [a, q] = col.first_pair();
        return {std::move(a), std::move(q)};
    }
    auto [a, q] = col.last_pair();
    return {std::move(a), std::move(q)};
}

Rational condition3_threshold()
{
    return Rational(mpz_class(1), mpz_class(1) << 64);
}

ValidationReport validate(const QSystem& sys, Position depth)
{
    if (depth == 0) {
        throw ParameterError("validation depth must be >= 1");
    }
    ValidationReport report;
    report.depth = depth;
    report.sup_product = Rational(1);
    for (Position n = 1; n <= depth; ++n) {
        const Column col = sys.column(n);
        for (auto& defect : col.check()) {
            report.failures.push_back({n, defect.digit, defect.condition,
                                       "column " + std::to_string(n) + ": " + defect.message});
        }
        report.sup_product *= col.sup_q();
    }
    report.condition3 = report.sup_product <= condition3_threshold() ? Condition3::certified
                                                                     : Condition3::inconclusive;
    return report;
}

std::string to_string(Condition3 c)
{
    return c == Condition3::certified ? "certified" : "inconclusive";
}

} // namespace qrep
