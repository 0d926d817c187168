#include "zsdiv/zerosum.hpp"

#include <cfenv>
#include <cmath>
#include <complex>
#include <numbers>

#include "zsdiv/util.hpp"

namespace zsdiv {

ZSequence::ZSequence(FiniteAbelianGroup group, std::vector<Term> terms)
    : group_(std::move(group)), terms_(std::move(terms)) {
    for (const Term& t : terms_) {
        group_.check_element(t.element);
        if (t.multiplicity < 1) {
            throw validation_error("term multiplicity must be >= 1, got " +
                                   std::to_string(t.multiplicity));
        }
    }
}

std::int64_t ZSequence::length() const {
    int128 total = 0;
    for (const Term& t : terms_) total += t.multiplicity;
    return narrow_i64(total, "sequence length");
}

int128 ZSequence::selector_space() const {
    int128 space = 1;
    for (const Term& t : terms_) {
        space *= int128(t.multiplicity) + 1;
        if (space > (int128(1) << 100)) return space; // already far past any bound
    }
    return space;
}

std::string to_string(CountMethod m) {
    switch (m) {
        case CountMethod::character: return "character";
        case CountMethod::groupring: return "groupring";
        case CountMethod::brute: return "brute";
    }
    return "?";
}

void check_selector(const ZSequence& seq, const Selector& sel) {
    if (sel.size() != seq.term_count()) {
        throw validation_error("selector has wrong number of components");
    }
    for (std::size_t i = 0; i < sel.size(); ++i) {
        if (sel[i] < 0 || sel[i] > seq.terms()[i].multiplicity) {
            throw validation_error("selector component out of range");
        }
    }
}

GroupElement sum_of(const ZSequence& seq, const Selector& sel) {
    check_selector(seq, sel);
    const FiniteAbelianGroup& g = seq.group();
    GroupElement acc = g.zero();
    for (std::size_t i = 0; i < sel.size(); ++i) {
        acc = g.add(acc, g.scale(sel[i], seq.terms()[i].element));
    }
    return acc;
}

namespace {

void require_states(const ZSequence& seq, std::int64_t max_states, const char* op) {
    if (seq.selector_space() > int128(max_states)) {
        throw capability_error(std::string(op) + " requires at most " +
                               std::to_string(max_states) +
                               " selector states, sequence has " +
                               i128_to_string(seq.selector_space()));
    }
}

// Walks all selectors in lexicographic order, keeping the running sum
// incrementally: odometer increments the last component fastest.
template <typename Visit>
void walk_selectors(const ZSequence& seq, Visit&& visit) {
    const FiniteAbelianGroup& g = seq.group();
    const auto& terms = seq.terms();
    const std::size_t n = terms.size();
    Selector f(n, 0);
    GroupElement sum = g.zero();
    for (;;) {
        visit(f, sum);
        std::size_t j = n;
        while (j > 0) {
            --j;
            if (f[j] < terms[j].multiplicity) {
                f[j] += 1;
                sum = g.add(sum, terms[j].element);
                break;
            }
            // reset component j to zero
            sum = g.add(sum, g.negate(g.scale(f[j], terms[j].element)));
            f[j] = 0;
            if (j == 0) return;
        }
        if (n == 0) return;
    }
}

} // namespace

CountReport count_brute(const ZSequence& seq, std::int64_t max_states) {
    require_states(seq, max_states, "count_brute");
    const FiniteAbelianGroup& g = seq.group();
    std::int64_t count = 0;
    walk_selectors(seq, [&](const Selector&, const GroupElement& sum) {
        if (g.is_zero(sum)) ++count;
    });
    return {count, CountMethod::brute, 0.0};
}

CountReport count_groupring(const ZSequence& seq) {
    const FiniteAbelianGroup& g = seq.group();
    const std::int64_t h = g.order();
    // table[i] = number of selectors over the terms folded so far whose sum
    // is the element of rank i; starts as the indicator of 0.
    std::vector<int128> table(static_cast<std::size_t>(h), 0);
    table[0] = 1;
    for (const Term& t : seq.terms()) {
        std::vector<int128> next(static_cast<std::size_t>(h), 0);
        for (std::int64_t s = 0; s < h; ++s) {
            if (table[static_cast<std::size_t>(s)] == 0) continue;
            GroupElement base = g.element_at(s);
            GroupElement shifted = base;
            for (std::int64_t k = 0; k <= t.multiplicity; ++k) {
                next[static_cast<std::size_t>(g.index_of(shifted))] +=
                    table[static_cast<std::size_t>(s)];
                if (k < t.multiplicity) shifted = g.add(shifted, t.element);
            }
        }
        table = std::move(next);
    }
    return {narrow_i64(table[0], "zero-sum count"), CountMethod::groupring, 0.0};
}

CountReport count_char(const ZSequence& seq) {
    const FiniteAbelianGroup& g = seq.group();
    const std::int64_t h = g.order();
    const std::int64_t N = g.exponent();
    const double two_pi = 2.0 * std::numbers::pi;
    auto cis = [&](std::int64_t t) {
        const double theta = two_pi * double(t) / double(N);
        return std::complex<double>(std::cos(theta), std::sin(theta));
    };

    std::complex<double> total = 0.0;
    for (const Character& chi : characters(g)) {
        std::complex<double> prod = 1.0;
        for (const Term& term : seq.terms()) {
            const std::int64_t t = char_angle(g, chi, term.element);
            if (t == 0) {
                prod *= double(term.multiplicity + 1);
            } else {
                // geometric series (z^(e+1) - 1) / (z - 1) with the power's
                // angle reduced exactly mod N before leaving integers
                const std::int64_t top = mod_floor(int128(t) * ((term.multiplicity + 1) % N), N);
                prod *= (cis(top) - 1.0) / (cis(t) - 1.0);
            }
        }
        total += prod;
    }
    total /= double(h);
    const double rounded = std::nearbyint(total.real());
    const double residual = std::abs(total - std::complex<double>(rounded, 0.0));
    if (!(residual < 1e-6)) {
        throw numerical_error("character-sum count residual " + std::to_string(residual) +
                              " exceeds 1e-6; use the group-ring method");
    }
    if (rounded < 0 || rounded > 9.2e18) {
        throw numerical_error("character-sum count out of integer range");
    }
    return {static_cast<std::int64_t>(rounded), CountMethod::character, residual};
}

std::vector<Selector> list_zero_sum(const ZSequence& seq, std::int64_t max_states) {
    require_states(seq, max_states, "list_zero_sum");
    const FiniteAbelianGroup& g = seq.group();
    std::vector<Selector> out;
    walk_selectors(seq, [&](const Selector& f, const GroupElement& sum) {
        if (g.is_zero(sum)) out.push_back(f);
    });
    return out;
}

std::vector<Selector> maximal_zero_sum(const ZSequence& seq, std::int64_t max_states) {
    require_states(seq, max_states, "maximal_zero_sum");
    const FiniteAbelianGroup& g = seq.group();
    const auto& terms = seq.terms();
    const std::size_t n = terms.size();
    const std::int64_t states = static_cast<std::int64_t>(seq.selector_space());

    // Strides for the mixed-radix rank of a selector (last component fastest,
    // matching lexicographic order).
    std::vector<std::int64_t> stride(n, 1);
    for (std::size_t j = n; j-- > 1;) {
        stride[j - 1] = stride[j] * (terms[j].multiplicity + 1);
    }

    std::vector<bool> zero(static_cast<std::size_t>(states), false);
    std::int64_t rank = 0;
    walk_selectors(seq, [&](const Selector&, const GroupElement& sum) {
        zero[static_cast<std::size_t>(rank++)] = g.is_zero(sum);
    });

    // dominated[r] = some zero-sum selector strictly above r exists.
    // Sweep ranks downward; each selector looks at its +1 successors.
    std::vector<bool> dominated(static_cast<std::size_t>(states), false);
    Selector f(n, 0);
    auto decode = [&](std::int64_t r) {
        for (std::size_t j = 0; j < n; ++j) {
            f[j] = r / stride[j];
            r %= stride[j];
        }
    };
    for (std::int64_t r = states - 1; r >= 0; --r) {
        decode(r);
        for (std::size_t j = 0; j < n; ++j) {
            if (f[j] < terms[j].multiplicity) {
                const std::int64_t child = r + stride[j];
                if (zero[static_cast<std::size_t>(child)] ||
                    dominated[static_cast<std::size_t>(child)]) {
                    dominated[static_cast<std::size_t>(r)] = true;
                    break;
                }
            }
        }
    }

    std::vector<Selector> out;
    for (std::int64_t r = 0; r < states; ++r) {
        if (zero[static_cast<std::size_t>(r)] && !dominated[static_cast<std::size_t>(r)]) {
            decode(r);
            out.push_back(f);
        }
    }
    return out;
}

std::vector<SequenceDecomposition> decompose_sequence(const ZSequence& seq,
                                                      std::int64_t max_states) {
    std::vector<SequenceDecomposition> out;
    for (const Selector& f : maximal_zero_sum(seq, max_states)) {
        Selector residue(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) {
            residue[i] = seq.terms()[i].multiplicity - f[i];
        }
        out.push_back({f, residue});
    }
    return out;
}

bool is_irreducible_count(const ZSequence& seq) {
    if (seq.term_count() == 0) {
        throw validation_error("irreducibility is only defined for nonempty sequences");
    }
    return count_groupring(seq).value == 2;
}

} // namespace zsdiv
