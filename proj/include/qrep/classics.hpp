#pragma once

#include "qrep/expansion.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qrep {

/// Integer bases q_1, q_2, ... of a Cantor series: either an explicit list
/// continued by an extension policy, or the progression first + (n-1)*step.
class CantorBases {
public:
    static CantorBases list(std::vector<std::uint64_t> bases, Extension ext);
    static CantorBases progression(std::uint64_t first, std::uint64_t step);

    /// q_n, n >= 1.
    [[nodiscard]] std::uint64_t at(Position n) const;
    [[nodiscard]] std::string describe() const;

private:
    std::vector<std::uint64_t> bases_;
    Extension ext_ = Extension::repeat_last;
    std::uint64_t first_ = 0;
    std::uint64_t step_ = 0;
    bool progression_ = false;
};

struct ClassicKind {
    enum class Tag { s_adic, nega_s_adic, cantor, nega_cantor, nega_tilde_q, mixed_sign_s, example_a, example_b };

    Tag tag = Tag::s_adic;
    std::uint64_t s = 2;
    std::optional<CantorBases> bases;  // cantor, nega_cantor
    NbSet nb;                          // mixed_sign_s
    std::vector<Column> matrix;        // nega_tilde_q
    Extension extension = Extension::repeat_last;

    static ClassicKind s_adic(std::uint64_t s);
    static ClassicKind nega_s_adic(std::uint64_t s);
    static ClassicKind cantor(CantorBases bases);
    static ClassicKind nega_cantor(CantorBases bases);
    static ClassicKind nega_tilde_q(std::vector<Column> columns, Extension ext);
    static ClassicKind mixed_sign_s(std::uint64_t s, NbSet nb);
    static ClassicKind example_a();
    static ClassicKind example_b();

    [[nodiscard]] bool has_closed_form() const;
};

/// Throws ConstructionError for s < 2 or any Cantor base below 2.
QSystem make_classic(const ClassicKind& kind);

/// Direct evaluation of the classical closed form of a digit word, without
/// going through QSystem:
///   s-adic       sum i_n / s^n
///   nega-s-adic  sum (-1)^n i_n / s^n
///   Cantor       sum i_n / (q_1 ... q_n)
///   nega-Cantor  sum i_n / ((-q_1) ... (-q_n))
///   mixed        sum (-1)^{rho_n} i_n / s^n
/// Throws ParameterError for kinds without a closed form and DomainError
/// for out-of-range digits.
Rational oracle_eval(const ClassicKind& kind, std::span<const Digit> digits);

} // namespace qrep
