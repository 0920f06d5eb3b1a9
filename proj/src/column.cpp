#include "qrep/column.hpp"

#include "qrep/errors.hpp"

#include <algorithm>
#include <sstream>

namespace qrep {

Column Column::uniform(std::uint64_t s)
{
    if (s == 0) {
        throw ConstructionError("uniform column needs s >= 1");
    }
    Column col;
    col.shape_ = Shape::uniform;
    col.s_ = s;
    return col;
}

Column Column::finite(std::vector<Rational> entries)
{
    if (entries.empty()) {
        throw ConstructionError("finite column needs at least one entry");
    }
    std::vector<Rational> prefix;
    prefix.reserve(entries.size() + 1);
    prefix.emplace_back(0);
    for (const auto& e : entries) {
        prefix.push_back(prefix.back() + e);
    }
    Column col;
    col.shape_ = Shape::finite;
    col.entries_ = std::make_shared<const std::vector<Rational>>(std::move(entries));
    col.prefix_ = std::make_shared<const std::vector<Rational>>(std::move(prefix));
    return col;
}

Column Column::geometric(Rational c, Rational r)
{
    if (!(Rational(0) < r && r < Rational(1))) {
        throw ConstructionError("geometric column ratio must satisfy 0 < r < 1, got " + r.str());
    }
    Column col;
    col.shape_ = Shape::geometric;
    col.c_ = std::move(c);
    col.r_ = std::move(r);
    return col;
}

std::optional<std::uint64_t> Column::alphabet_size() const
{
    switch (shape_) {
    case Shape::uniform:
        return s_;
    case Shape::finite:
        return entries_->size();
    case Shape::geometric:
        return std::nullopt;
    }
    return std::nullopt;
}

std::optional<Digit> Column::max_digit() const
{
    const auto size = alphabet_size();
    if (!size) {
        return std::nullopt;
    }
    return *size - 1;
}

bool Column::valid_digit(Digit i) const
{
    const auto size = alphabet_size();
    return !size || i < *size;
}

namespace {

[[noreturn]] void bad_digit(Digit i, const Column& col)
{
    throw DomainError("digit " + std::to_string(i) + " outside alphabet of column " + col.describe());
}

} // namespace

Rational Column::q(Digit i) const
{
    if (!valid_digit(i)) {
        bad_digit(i, *this);
    }
    switch (shape_) {
    case Shape::uniform:
        return Rational(mpz_class(1), mpz_class(static_cast<unsigned long>(s_)));
    case Shape::finite:
        return (*entries_)[i];
    case Shape::geometric:
        return c_ * pow(r_, i);
    }
    return {};
}

Rational Column::a(Digit i) const
{
    if (!valid_digit(i)) {
        bad_digit(i, *this);
    }
    switch (shape_) {
    case Shape::uniform:
        return Rational(mpz_class(static_cast<unsigned long>(i)), mpz_class(static_cast<unsigned long>(s_)));
    case Shape::finite:
        return (*prefix_)[i];
    case Shape::geometric:
        // a_i = sum_{j<i} c r^j, written with the closed-form tail
        return c_ / (Rational(1) - r_) - tail_sum(i);
    }
    return {};
}

Rational Column::tail_sum(Digit k) const
{
    switch (shape_) {
    case Shape::uniform:
        if (k > s_) {
            return Rational(0);
        }
        return Rational(mpz_class(static_cast<unsigned long>(s_ - k)), mpz_class(static_cast<unsigned long>(s_)));
    case Shape::finite:
        if (k >= prefix_->size()) {
            return Rational(0);
        }
        return prefix_->back() - (*prefix_)[k];
    case Shape::geometric:
        return c_ * pow(r_, k) / (Rational(1) - r_);
    }
    return {};
}

std::pair<Rational, Rational> Column::last_pair() const
{
    if (const auto m = max_digit()) {
        return {a(*m), q(*m)};
    }
    return {Rational(1), Rational(0)};
}

Rational Column::sup_q() const
{
    switch (shape_) {
    case Shape::uniform:
        return q(0);
    case Shape::finite:
        return *std::max_element(entries_->begin(), entries_->end());
    case Shape::geometric:
        return c_;
    }
    return {};
}

std::vector<Column::Defect> Column::check() const
{
    std::vector<Defect> out;
    switch (shape_) {
    case Shape::uniform:
        break;
    case Shape::finite: {
        for (Digit i = 0; i < entries_->size(); ++i) {
            if ((*entries_)[i].sign() <= 0) {
                out.push_back({i, 1, "q_{" + std::to_string(i) + "} = " + (*entries_)[i].str() + " is not positive"});
            }
        }
        const Rational& sum = prefix_->back();
        if (sum != Rational(1)) {
            out.push_back({std::nullopt, 2, "column sum " + sum.str() + " != 1"});
        }
        break;
    }
    case Shape::geometric: {
        if (c_.sign() <= 0) {
            out.push_back({Digit{0}, 1, "geometric c = " + c_.str() + " is not positive"});
        }
        const Rational sum = c_ / (Rational(1) - r_);
        if (sum != Rational(1)) {
            out.push_back({std::nullopt, 2, "geometric sum c/(1-r) = " + sum.str() + " != 1"});
        }
        break;
    }
    }
    return out;
}

const std::vector<Rational>& Column::entries() const
{
    static const std::vector<Rational> none;
    return entries_ ? *entries_ : none;
}

std::string Column::describe() const
{
    std::ostringstream os;
    switch (shape_) {
    case Shape::uniform:
        os << "uniform(" << s_ << ")";
        break;
    case Shape::finite:
        os << "(";
        for (std::size_t i = 0; i < entries_->size(); ++i) {
            os << (i != 0 ? ", " : "") << (*entries_)[i];
        }
        os << ")";
        break;
    case Shape::geometric:
        os << "geometric(c=" << c_ << ", r=" << r_ << ")";
        break;
    }
    return os.str();
}

bool operator==(const Column& a, const Column& b)
{
    if (a.shape_ != b.shape_) {
        return false;
    }
    switch (a.shape_) {
    case Column::Shape::uniform:
        return a.s_ == b.s_;
    case Column::Shape::finite:
        return *a.entries_ == *b.entries_;
    case Column::Shape::geometric:
        return a.c_ == b.c_ && a.r_ == b.r_;
    }
    return false;
}

} // namespace qrep
