#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "zsdiv/errors.hpp"

namespace zsdiv {

struct GroupElement {
    std::vector<std::int64_t> coords;
    bool operator==(const GroupElement&) const = default;
};

struct Character {
    std::vector<std::int64_t> dual_coords;
    bool operator==(const Character&) const = default;
};

/**
 * A finite abelian group presented as Z/d1 x ... x Z/dk.
 *
 * Elements are coordinate tuples reduced into [0, dj).  Characters are dual
 * tuples (a1,...,ak); evaluation is kept exact as an angle numerator t over
 * the group exponent N, so chi(x) = exp(2*pi*i*t/N) with
 * t = sum_j aj*xj*(N/dj) mod N.
 *
 * Degenerate factors dj = 1 are allowed; Z/1 models the trivial group.
 * All values are immutable after construction and every operation is pure.
 */
class FiniteAbelianGroup {
public:
    explicit FiniteAbelianGroup(std::vector<std::int64_t> moduli);

    const std::vector<std::int64_t>& moduli() const { return moduli_; }
    std::size_t rank() const { return moduli_.size(); }
    std::int64_t order() const { return order_; }       // h
    std::int64_t exponent() const { return exponent_; } // N = lcm(dj)
    bool is_cyclic() const { return exponent_ == order_; }

    GroupElement zero() const;
    // Validates 0 <= xj < dj.
    GroupElement element(std::vector<std::int64_t> coords) const;
    // Reduces arbitrary integer coordinates into range.
    GroupElement reduce(const std::vector<std::int64_t>& coords) const;

    GroupElement add(const GroupElement& x, const GroupElement& y) const;
    GroupElement negate(const GroupElement& x) const;
    GroupElement scale(std::int64_t k, const GroupElement& x) const;
    bool is_zero(const GroupElement& x) const;

    // Mixed-radix rank with the first coordinate most significant, so ranks
    // enumerate elements in lexicographic order.
    std::int64_t index_of(const GroupElement& x) const;
    GroupElement element_at(std::int64_t index) const;
    std::vector<GroupElement> elements() const;

    void check_element(const GroupElement& x) const;
    void check_character(const Character& chi) const;

    bool operator==(const FiniteAbelianGroup&) const = default;

private:
    std::vector<std::int64_t> moduli_;
    std::int64_t order_;
    std::int64_t exponent_;
};

// Angle numerator t in [0, N) with chi(x) = exp(2*pi*i*t/N).
std::int64_t char_angle(const FiniteAbelianGroup& g, const Character& chi,
                        const GroupElement& x);

std::complex<double> char_value(const FiniteAbelianGroup& g, const Character& chi,
                                const GroupElement& x);

// All h characters in lexicographic order of dual coordinates; the trivial
// character comes first.
std::vector<Character> characters(const FiniteAbelianGroup& g);

/**
 * (1/h) * sum over all characters of chi(x), evaluated exactly.
 *
 * The character sum factors over the cyclic components as a product of full
 * geometric sums of roots of unity, so it equals h when every chi(x) = 1 and
 * 0 otherwise; because the dual separates points, every angle vanishes
 * exactly when x = 0.  The implementation tallies angle multiplicities and
 * returns 1 or 0 accordingly -- no floating point involved.
 */
std::int64_t char_indicator(const FiniteAbelianGroup& g, const GroupElement& x);

struct DavenportResult {
    std::int64_t value;
    bool cyclic_shortcut;
};

inline constexpr std::int64_t davenport_default_max_order = 64;

// Exhaustive search: 1 + length of the longest zero-sum-free multiset.
// Canonical non-decreasing DFS over nonzero elements with subset-sum pruning.
std::int64_t davenport_search(const FiniteAbelianGroup& g,
                              std::int64_t max_order = davenport_default_max_order);

// Cyclic groups use D(G) = |G|; everything else falls back to the search,
// subject to the capability bound.
DavenportResult davenport(const FiniteAbelianGroup& g,
                          std::int64_t max_order = davenport_default_max_order);

} // namespace zsdiv
