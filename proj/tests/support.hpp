#pragma once

#include "qrep/classics.hpp"
#include "qrep/expansion.hpp"

#include <functional>
#include <random>
#include <vector>

namespace qrep::testing {

inline Rational r(long p, long q = 1)
{
    return Rational(p, q);
}

/// 2^-k
inline Rational pow2_neg(unsigned k)
{
    return Rational(mpz_class(1), mpz_class(1) << k);
}

inline QSystem s_adic(std::uint64_t s)
{
    return make_classic(ClassicKind::s_adic(s));
}

inline QSystem nega_s_adic(std::uint64_t s)
{
    return make_classic(ClassicKind::nega_s_adic(s));
}

inline ClassicKind cantor_kind()
{
    return ClassicKind::cantor(CantorBases::progression(2, 1));
}

inline ClassicKind nega_cantor_kind()
{
    return ClassicKind::nega_cantor(CantorBases::progression(2, 1));
}

/// N_B = {1}, column 1 = (1/2, 1/3, 1/6), halves afterwards.
inline QSystem gap_system()
{
    return QSystem(NbSet::list({1}), {Column::finite({r(1, 2), r(1, 3), r(1, 6)}), Column::uniform(2)},
                   Extension::repeat_last, "gap-demo");
}

/// Random column with `size` positive entries summing to 1.
inline Column random_finite_column(std::mt19937_64& rng, std::size_t size)
{
    std::uniform_int_distribution<long> weight(1, 9);
    std::vector<long> w(size);
    long total = 0;
    for (auto& x : w) {
        x = weight(rng);
        total += x;
    }
    std::vector<Rational> entries;
    for (auto x : w) {
        entries.emplace_back(x, total);
    }
    return Column::finite(std::move(entries));
}

inline NbSet random_nb(std::mt19937_64& rng)
{
    switch (std::uniform_int_distribution<int>(0, 5)(rng)) {
    case 0:
        return NbSet::empty();
    case 1:
        return NbSet::odd();
    case 2:
        return NbSet::even();
    case 3:
        return NbSet::all();
    case 4: {
        std::vector<std::uint64_t> members;
        for (std::uint64_t n = 1; n <= 8; ++n) {
            if (rng() % 2 == 0) {
                members.push_back(n);
            }
        }
        return NbSet::list(members);
    }
    default:
        return NbSet::residues(3, {static_cast<std::uint64_t>(rng() % 3)}, 0);
    }
}

/// Explicit random system: `len` random finite columns (alphabet 2..4),
/// extended cyclically.
inline QSystem random_finite_system(std::mt19937_64& rng, std::size_t len = 3)
{
    std::vector<Column> cols;
    for (std::size_t i = 0; i < len; ++i) {
        cols.push_back(random_finite_column(rng, 2 + rng() % 3));
    }
    return QSystem(random_nb(rng), std::move(cols), Extension::cycle, "random");
}

/// The first `support` columns of sys followed by a single-digit column
/// forever: every value is a finite sum.
inline QSystem truncate_support(const QSystem& sys, Position support)
{
    std::vector<Column> cols;
    for (Position n = 1; n <= support; ++n) {
        cols.push_back(sys.column(n));
    }
    cols.push_back(Column::finite({Rational(1)}));
    return QSystem(sys.nb(), std::move(cols), Extension::repeat_last, sys.name() + "|finite");
}

/// Visits every word of length `len` over the finite alphabets of sys.
inline void for_each_word(const QSystem& sys, std::size_t len, const std::function<void(const DigitWord&)>& f,
                          DigitWord prefix = {})
{
    if (prefix.size() == len) {
        f(prefix);
        return;
    }
    const auto size = *sys.column(prefix.size() + 1).alphabet_size();
    for (Digit d = 0; d < size; ++d) {
        prefix.push_back(d);
        for_each_word(sys, len, f, prefix);
        prefix.pop_back();
    }
}

/// Brute-force min and max of eval_prefix over all extensions of `base` to
/// length `len`.
inline std::pair<Rational, Rational> brute_extremes(const QSystem& sys, const DigitWord& base, std::size_t len)
{
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    std::function<void(DigitWord&)> go = [&](DigitWord& w) {
        if (w.size() == len) {
            const Rational v = eval_prefix(sys, w);
            if (!lo || v < *lo) {
                lo = v;
            }
            if (!hi || *hi < v) {
                hi = v;
            }
            return;
        }
        const auto size = *sys.column(w.size() + 1).alphabet_size();
        for (Digit d = 0; d < size; ++d) {
            w.push_back(d);
            go(w);
            w.pop_back();
        }
    };
    DigitWord w = base;
    go(w);
    return {*lo, *hi};
}

inline DigitWord random_word(std::mt19937_64& rng, const QSystem& sys, std::size_t len)
{
    DigitWord w;
    for (std::size_t k = 0; k < len; ++k) {
        const auto size = *sys.column(k + 1).alphabet_size();
        w.push_back(rng() % size);
    }
    return w;
}

} // namespace qrep::testing
