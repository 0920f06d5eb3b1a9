#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qrep {

/// Eventual periodicity of a position predicate: for every n >= start,
/// the predicate at n equals the predicate at n + period.
struct Periodicity {
    std::uint64_t start = 1;
    std::uint64_t period = 1;
};

/// The set N_B of positions whose series term carries a negative sign.
/// Membership is a total predicate over the positive integers.
class NbSet {
public:
    enum class Kind { empty, all, odd, even, list, residues, complement };

    NbSet() = default; // empty set

    static NbSet empty() { return NbSet(); }
    static NbSet all();
    static NbSet odd();
    static NbSet even();
    /// Finite explicit set. Members must be positive.
    static NbSet list(std::vector<std::uint64_t> members);
    /// { modulus*k + r : r in residues, k >= start_k } restricted to n >= 1.
    static NbSet residues(std::uint64_t modulus, std::vector<std::uint64_t> residues,
                          std::uint64_t start_k);
    static NbSet complement_of(NbSet inner);

    [[nodiscard]] bool contains(std::uint64_t n) const;
    [[nodiscard]] Kind kind() const { return kind_; }

    /// Every supported rule is eventually periodic.
    [[nodiscard]] Periodicity periodicity() const;

    /// If all positions n > after share one membership value, return it.
    [[nodiscard]] std::optional<bool> constant_beyond(std::uint64_t after) const;

    /// First `count` members in increasing order (the sequence B = (b_n)).
    [[nodiscard]] std::vector<std::uint64_t> enumerate(std::size_t count,
                                                       std::uint64_t search_limit = 1u << 20) const;

    [[nodiscard]] const std::vector<std::uint64_t>& members() const { return values_; }
    [[nodiscard]] std::uint64_t modulus() const { return modulus_; }
    [[nodiscard]] std::uint64_t start_k() const { return start_k_; }
    [[nodiscard]] const NbSet* inner() const { return inner_.get(); }

    [[nodiscard]] std::string describe() const;

    friend bool operator==(const NbSet& a, const NbSet& b);

private:
    Kind kind_ = Kind::empty;
    std::vector<std::uint64_t> values_; // list members or residues, sorted
    std::uint64_t modulus_ = 0;
    std::uint64_t start_k_ = 0;
    std::shared_ptr<const NbSet> inner_;
};

} // namespace qrep
