#include "qrep/classics.hpp"

#include "qrep/errors.hpp"

#include <sstream>

namespace qrep {

CantorBases CantorBases::list(std::vector<std::uint64_t> bases, Extension ext)
{
    if (bases.empty()) {
        throw ConstructionError("Cantor base list is empty");
    }
    for (auto q : bases) {
        if (q < 2) {
            throw ConstructionError("Cantor bases must be >= 2");
        }
    }
    CantorBases b;
    b.bases_ = std::move(bases);
    b.ext_ = ext;
    return b;
}

CantorBases CantorBases::progression(std::uint64_t first, std::uint64_t step)
{
    if (first < 2) {
        throw ConstructionError("Cantor bases must be >= 2");
    }
    CantorBases b;
    b.first_ = first;
    b.step_ = step;
    b.progression_ = true;
    return b;
}

std::uint64_t CantorBases::at(Position n) const
{
    if (n == 0) {
        throw DomainError("Cantor base index must be >= 1");
    }
    if (progression_) {
        return first_ + (n - 1) * step_;
    }
    if (n <= bases_.size()) {
        return bases_[n - 1];
    }
    return ext_ == Extension::repeat_last ? bases_.back() : bases_[(n - 1) % bases_.size()];
}

std::string CantorBases::describe() const
{
    std::ostringstream os;
    if (progression_) {
        os << first_ << "+" << step_ << "(n-1)";
        return os.str();
    }
    os << "(";
    for (std::size_t i = 0; i < bases_.size(); ++i) {
        os << (i != 0 ? "," : "") << bases_[i];
    }
    os << (ext_ == Extension::cycle ? ")*" : ")+");
    return os.str();
}

ClassicKind ClassicKind::s_adic(std::uint64_t s)
{
    ClassicKind k;
    k.tag = Tag::s_adic;
    k.s = s;
    return k;
}

ClassicKind ClassicKind::nega_s_adic(std::uint64_t s)
{
    ClassicKind k;
    k.tag = Tag::nega_s_adic;
    k.s = s;
    return k;
}

ClassicKind ClassicKind::cantor(CantorBases bases)
{
    ClassicKind k;
    k.tag = Tag::cantor;
    k.bases = std::move(bases);
    return k;
}

ClassicKind ClassicKind::nega_cantor(CantorBases bases)
{
    ClassicKind k;
    k.tag = Tag::nega_cantor;
    k.bases = std::move(bases);
    return k;
}

ClassicKind ClassicKind::nega_tilde_q(std::vector<Column> columns, Extension ext)
{
    ClassicKind k;
    k.tag = Tag::nega_tilde_q;
    k.matrix = std::move(columns);
    k.extension = ext;
    return k;
}

ClassicKind ClassicKind::mixed_sign_s(std::uint64_t s, NbSet nb)
{
    ClassicKind k;
    k.tag = Tag::mixed_sign_s;
    k.s = s;
    k.nb = std::move(nb);
    return k;
}

ClassicKind ClassicKind::example_a()
{
    ClassicKind k;
    k.tag = Tag::example_a;
    return k;
}

ClassicKind ClassicKind::example_b()
{
    ClassicKind k;
    k.tag = Tag::example_b;
    return k;
}

bool ClassicKind::has_closed_form() const
{
    return tag != Tag::nega_tilde_q && tag != Tag::example_a && tag != Tag::example_b;
}

namespace {

void require_base(std::uint64_t s)
{
    if (s < 2) {
        throw ConstructionError("base s must be >= 2, got " + std::to_string(s));
    }
}

const CantorBases& require_bases(const ClassicKind& kind)
{
    if (!kind.bases) {
        throw ConstructionError("Cantor kind without bases");
    }
    return *kind.bases;
}

Rational ratio(std::uint64_t p, std::uint64_t q)
{
    return Rational(mpz_class(static_cast<unsigned long>(p)), mpz_class(static_cast<unsigned long>(q)));
}

// Columns n/(n+1)^{i+1}, i >= 0: geometric with c = n/(n+1), r = 1/(n+1).
Column example_a_column(Position n)
{
    return Column::geometric(ratio(n, n + 1), ratio(1, n + 1));
}

// n = 1: (1/2, 1/2); odd n > 1: n entries 1/n; even n: digits d = i - 1 of
// 2^{i-1} (n+1)/(n+3)^i, i.e. c = (n+1)/(n+3), r = 2/(n+3).
Column example_b_column(Position n)
{
    if (n == 1) {
        return Column::uniform(2);
    }
    if (n % 2 == 1) {
        return Column::uniform(n);
    }
    return Column::geometric(ratio(n + 1, n + 3), ratio(2, n + 3));
}

} // namespace

QSystem make_classic(const ClassicKind& kind)
{
    using Tag = ClassicKind::Tag;
    switch (kind.tag) {
    case Tag::s_adic:
        require_base(kind.s);
        return QSystem(NbSet::empty(), {Column::uniform(kind.s)}, Extension::repeat_last,
                       "s-adic(" + std::to_string(kind.s) + ")");
    case Tag::nega_s_adic:
        require_base(kind.s);
        return QSystem(NbSet::odd(), {Column::uniform(kind.s)}, Extension::repeat_last,
                       "nega-s-adic(" + std::to_string(kind.s) + ")");
    case Tag::mixed_sign_s:
        require_base(kind.s);
        return QSystem(kind.nb, {Column::uniform(kind.s)}, Extension::repeat_last,
                       "mixed(" + std::to_string(kind.s) + ", " + kind.nb.describe() + ")");
    case Tag::cantor:
    case Tag::nega_cantor: {
        const CantorBases bases = require_bases(kind);
        const bool nega = kind.tag == Tag::nega_cantor;
        return QSystem(nega ? NbSet::odd() : NbSet::empty(),
                       [bases](Position n) {
                           const std::uint64_t q = bases.at(n);
                           if (q < 2) {
                               throw ConstructionError("Cantor bases must be >= 2");
                           }
                           return Column::uniform(q);
                       },
                       std::string(nega ? "nega-cantor" : "cantor") + bases.describe());
    }
    case Tag::nega_tilde_q:
        return QSystem(NbSet::odd(), kind.matrix, kind.extension, "nega-tilde-q");
    case Tag::example_a:
        return QSystem(NbSet::residues(4, {1, 2}, 1), example_a_column, "example-a");
    case Tag::example_b:
        return QSystem(NbSet::empty(), example_b_column, "example-b");
    }
    throw ConstructionError("unknown classic kind");
}

Rational oracle_eval(const ClassicKind& kind, std::span<const Digit> digits)
{
    using Tag = ClassicKind::Tag;
    if (!kind.has_closed_form()) {
        throw ParameterError("this system has no classical closed form");
    }
    mpq_class sum(0);
    mpz_class denominator(1); // running product of bases, sign included
    for (std::size_t k = 0; k < digits.size(); ++k) {
        const Position n = k + 1;
        std::uint64_t base = kind.s;
        bool negative = false;
        switch (kind.tag) {
        case Tag::s_adic:
            break;
        case Tag::nega_s_adic:
            negative = n % 2 == 1;
            break;
        case Tag::mixed_sign_s:
            negative = kind.nb.contains(n);
            break;
        case Tag::cantor:
            base = require_bases(kind).at(n);
            break;
        case Tag::nega_cantor:
            base = require_bases(kind).at(n);
            break;
        default:
            break;
        }
        if (digits[k] >= base) {
            throw DomainError("digit " + std::to_string(digits[k]) + " >= base " + std::to_string(base)
                              + " at position " + std::to_string(n));
        }
        const mpz_class digit(static_cast<unsigned long>(digits[k]));
        if (kind.tag == Tag::nega_cantor) {
            // i_n / ((-q_1)(-q_2)...(-q_n))
            denominator *= -mpz_class(static_cast<unsigned long>(base));
        } else {
            denominator *= static_cast<unsigned long>(base);
        }
        mpq_class term(negative ? mpz_class(-digit) : digit, denominator);
        term.canonicalize();
        sum += term;
    }
    return Rational::from_mpq(sum);
}

} // namespace qrep
