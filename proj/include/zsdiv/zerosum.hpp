#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zsdiv/group.hpp"
#include "zsdiv/util.hpp"

namespace zsdiv {

struct Term {
    GroupElement element;
    std::int64_t multiplicity; // >= 1
    bool operator==(const Term&) const = default;
};

/**
 * A sequence S = (r1^e1, ..., rg^eg) over a finite abelian group.
 *
 * Terms are ordered positions, not a merged multiset: two terms may carry the
 * same group element.  This matters when terms come from distinct prime
 * ideals that happen to share an ideal class -- subsequences are selected
 * per term, so the divisor correspondence stays one-to-one.
 */
class ZSequence {
public:
    ZSequence(FiniteAbelianGroup group, std::vector<Term> terms);

    const FiniteAbelianGroup& group() const { return group_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); } // g
    std::int64_t length() const;                             // |S| = sum of ei
    int128 selector_space() const;                           // prod (ei + 1)

private:
    FiniteAbelianGroup group_;
    std::vector<Term> terms_;
};

// Exponent tuple (f1,...,fg) with 0 <= fi <= ei; the all-zero selector is the
// empty subsequence.
using Selector = std::vector<std::int64_t>;

enum class CountMethod { character, groupring, brute };

std::string to_string(CountMethod m);

struct CountReport {
    std::int64_t value;
    CountMethod method;
    double residual; // rounding residual; 0 for the exact methods
};

inline constexpr std::int64_t default_max_states = std::int64_t(1) << 20;

void check_selector(const ZSequence& seq, const Selector& sel);

// sum of fi * ri in the group.
GroupElement sum_of(const ZSequence& seq, const Selector& sel);

// Exact n(S) by enumerating every selector.  Requires
// selector_space() <= max_states.
CountReport count_brute(const ZSequence& seq, std::int64_t max_states = default_max_states);

// Exact n(S) by convolving per-term distributions over the group: a table of
// subsequence counts indexed by group element, folded one term at a time.
// Memory is proportional to |G|.
CountReport count_groupring(const ZSequence& seq);

/**
 * n(S) = (1/h) * sum over characters of prod_i (sum_{k=0}^{ei} chi(ri)^k).
 *
 * Each geometric factor is evaluated in closed form from the exact angle of
 * chi(ri); characters are summed in the fixed enumeration order and the total
 * is divided by h and rounded to the nearest integer (round-half-to-even).
 * The rounding residual must stay below 1e-6 or a numerical_error is thrown;
 * callers can fall back to count_groupring.
 */
CountReport count_char(const ZSequence& seq);

// All zero-sum selectors in lexicographic order.
std::vector<Selector> list_zero_sum(const ZSequence& seq,
                                    std::int64_t max_states = default_max_states);

// Zero-sum selectors not strictly dominated componentwise by another zero-sum
// selector.  Equivalently the complement e - f is zero-sum-free: the
// difference of two nested zero-sum selectors is itself zero-sum.
std::vector<Selector> maximal_zero_sum(const ZSequence& seq,
                                       std::int64_t max_states = default_max_states);

struct SequenceDecomposition {
    Selector principal_part; // a maximal zero-sum selector
    Selector residue;        // e - f, always zero-sum-free
};

// One decomposition per maximal zero-sum selector.  Over a cyclic group of
// order h every residue has total length <= h - 1.
std::vector<SequenceDecomposition> decompose_sequence(
    const ZSequence& seq, std::int64_t max_states = default_max_states);

// True iff n(S) = 2, i.e. the only zero-sum subsequences are the empty one
// and S itself.  S must be nonempty.
bool is_irreducible_count(const ZSequence& seq);

} // namespace zsdiv
