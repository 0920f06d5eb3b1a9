#include "qrep/nb_set.hpp"

#include "qrep/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qrep {

NbSet NbSet::all()
{
    NbSet s;
    s.kind_ = Kind::all;
    return s;
}

NbSet NbSet::odd()
{
    NbSet s;
    s.kind_ = Kind::odd;
    return s;
}

NbSet NbSet::even()
{
    NbSet s;
    s.kind_ = Kind::even;
    return s;
}

NbSet NbSet::list(std::vector<std::uint64_t> members)
{
    for (auto m : members) {
        if (m == 0) {
            throw ConstructionError("N_B list members must be positive integers");
        }
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    NbSet s;
    s.kind_ = Kind::list;
    s.values_ = std::move(members);
    return s;
}

NbSet NbSet::residues(std::uint64_t modulus, std::vector<std::uint64_t> residues, std::uint64_t start_k)
{
    if (modulus == 0) {
        throw ConstructionError("N_B residue modulus must be positive");
    }
    for (auto r : residues) {
        if (r >= modulus) {
            throw ConstructionError("N_B residue " + std::to_string(r) + " not below modulus "
                                    + std::to_string(modulus));
        }
    }
    std::sort(residues.begin(), residues.end());
    residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
    NbSet s;
    s.kind_ = Kind::residues;
    s.values_ = std::move(residues);
    s.modulus_ = modulus;
    s.start_k_ = start_k;
    return s;
}

NbSet NbSet::complement_of(NbSet inner)
{
    NbSet s;
    s.kind_ = Kind::complement;
    s.inner_ = std::make_shared<const NbSet>(std::move(inner));
    return s;
}

bool NbSet::contains(std::uint64_t n) const
{
    if (n == 0) {
        return false;
    }
    switch (kind_) {
    case Kind::empty:
        return false;
    case Kind::all:
        return true;
    case Kind::odd:
        return n % 2 == 1;
    case Kind::even:
        return n % 2 == 0;
    case Kind::list:
        return std::binary_search(values_.begin(), values_.end(), n);
    case Kind::residues: {
        const std::uint64_t r = n % modulus_;
        if (!std::binary_search(values_.begin(), values_.end(), r)) {
            return false;
        }
        return (n - r) / modulus_ >= start_k_;
    }
    case Kind::complement:
        return !inner_->contains(n);
    }
    return false;
}

Periodicity NbSet::periodicity() const
{
    switch (kind_) {
    case Kind::empty:
    case Kind::all:
        return {1, 1};
    case Kind::odd:
    case Kind::even:
        return {1, 2};
    case Kind::list:
        return {values_.empty() ? 1 : values_.back() + 1, 1};
    case Kind::residues:
        return {std::max<std::uint64_t>(1, modulus_ * start_k_), modulus_};
    case Kind::complement:
        return inner_->periodicity();
    }
    return {1, 1};
}

std::optional<bool> NbSet::constant_beyond(std::uint64_t after) const
{
    const Periodicity p = periodicity();
    const std::uint64_t first = after + 1;
    const std::uint64_t last = std::max(first, p.start) + p.period; // exclusive
    const bool value = contains(first);
    for (std::uint64_t n = first + 1; n < last; ++n) {
        if (contains(n) != value) {
            return std::nullopt;
        }
    }
    return value;
}

std::vector<std::uint64_t> NbSet::enumerate(std::size_t count, std::uint64_t search_limit) const
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 1; n <= search_limit && out.size() < count; ++n) {
        if (contains(n)) {
            out.push_back(n);
        }
    }
    return out;
}

std::string NbSet::describe() const
{
    std::ostringstream os;
    auto join = [&os](const std::vector<std::uint64_t>& v) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            os << (i != 0 ? "," : "") << v[i];
        }
    };
    switch (kind_) {
    case Kind::empty:
        os << "empty";
        break;
    case Kind::all:
        os << "all";
        break;
    case Kind::odd:
        os << "odd";
        break;
    case Kind::even:
        os << "even";
        break;
    case Kind::list:
        os << "{";
        join(values_);
        os << "}";
        break;
    case Kind::residues:
        os << "{" << modulus_ << "k+r : r in {";
        join(values_);
        os << "}, k>=" << start_k_ << "}";
        break;
    case Kind::complement:
        os << "complement(" << inner_->describe() << ")";
        break;
    }
    return os.str();
}

bool operator==(const NbSet& a, const NbSet& b)
{
    if (a.kind_ != b.kind_ || a.values_ != b.values_ || a.modulus_ != b.modulus_
        || a.start_k_ != b.start_k_) {
        return false;
    }
    if (a.kind_ == NbSet::Kind::complement) {
        return *a.inner_ == *b.inner_;
    }
    return true;
}

} // namespace qrep
