#include "zsdiv/group.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "zsdiv/util.hpp"

namespace zsdiv {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> moduli)
    : moduli_(std::move(moduli)) {
    int128 order = 1;
    std::int64_t exponent = 1;
    for (std::int64_t d : moduli_) {
        if (d < 1) {
            throw validation_error("group modulus must be a positive integer, got " +
                                   std::to_string(d));
        }
        order *= d;
        if (order > int128(1) << 62) {
            throw capability_error("group order exceeds 2^62");
        }
        exponent = std::lcm(exponent, d);
    }
    order_ = static_cast<std::int64_t>(order);
    exponent_ = exponent;
}

GroupElement FiniteAbelianGroup::zero() const {
    return GroupElement{std::vector<std::int64_t>(moduli_.size(), 0)};
}

GroupElement FiniteAbelianGroup::element(std::vector<std::int64_t> coords) const {
    if (coords.size() != moduli_.size()) {
        throw validation_error("element has " + std::to_string(coords.size()) +
                               " coordinates, group has rank " + std::to_string(moduli_.size()));
    }
    for (std::size_t j = 0; j < coords.size(); ++j) {
        if (coords[j] < 0 || coords[j] >= moduli_[j]) {
            throw validation_error("coordinate " + std::to_string(coords[j]) +
                                   " out of range [0, " + std::to_string(moduli_[j]) + ")");
        }
    }
    return GroupElement{std::move(coords)};
}

GroupElement FiniteAbelianGroup::reduce(const std::vector<std::int64_t>& coords) const {
    if (coords.size() != moduli_.size()) {
        throw validation_error("element rank mismatch in reduce");
    }
    GroupElement out{std::vector<std::int64_t>(coords.size())};
    for (std::size_t j = 0; j < coords.size(); ++j) {
        out.coords[j] = mod_floor(coords[j], moduli_[j]);
    }
    return out;
}

void FiniteAbelianGroup::check_element(const GroupElement& x) const {
    if (x.coords.size() != moduli_.size()) {
        throw validation_error("element belongs to a group of different rank");
    }
    for (std::size_t j = 0; j < x.coords.size(); ++j) {
        if (x.coords[j] < 0 || x.coords[j] >= moduli_[j]) {
            throw validation_error("element coordinate out of range for this group");
        }
    }
}

void FiniteAbelianGroup::check_character(const Character& chi) const {
    if (chi.dual_coords.size() != moduli_.size()) {
        throw validation_error("character belongs to a group of different rank");
    }
    for (std::size_t j = 0; j < chi.dual_coords.size(); ++j) {
        if (chi.dual_coords[j] < 0 || chi.dual_coords[j] >= moduli_[j]) {
            throw validation_error("character coordinate out of range for this group");
        }
    }
}

GroupElement FiniteAbelianGroup::add(const GroupElement& x, const GroupElement& y) const {
    check_element(x);
    check_element(y);
    GroupElement out{std::vector<std::int64_t>(moduli_.size())};
    for (std::size_t j = 0; j < moduli_.size(); ++j) {
        out.coords[j] = (x.coords[j] + y.coords[j]) % moduli_[j];
    }
    return out;
}

GroupElement FiniteAbelianGroup::negate(const GroupElement& x) const {
    check_element(x);
    GroupElement out{std::vector<std::int64_t>(moduli_.size())};
    for (std::size_t j = 0; j < moduli_.size(); ++j) {
        out.coords[j] = x.coords[j] == 0 ? 0 : moduli_[j] - x.coords[j];
    }
    return out;
}

GroupElement FiniteAbelianGroup::scale(std::int64_t k, const GroupElement& x) const {
    check_element(x);
    GroupElement out{std::vector<std::int64_t>(moduli_.size())};
    for (std::size_t j = 0; j < moduli_.size(); ++j) {
        out.coords[j] = mod_floor(int128(k) * x.coords[j], moduli_[j]);
    }
    return out;
}

bool FiniteAbelianGroup::is_zero(const GroupElement& x) const {
    check_element(x);
    return std::all_of(x.coords.begin(), x.coords.end(),
                       [](std::int64_t c) { return c == 0; });
}

std::int64_t FiniteAbelianGroup::index_of(const GroupElement& x) const {
    check_element(x);
    std::int64_t idx = 0;
    for (std::size_t j = 0; j < moduli_.size(); ++j) {
        idx = idx * moduli_[j] + x.coords[j];
    }
    return idx;
}

GroupElement FiniteAbelianGroup::element_at(std::int64_t index) const {
    if (index < 0 || index >= order_) {
        throw validation_error("element index out of range");
    }
    GroupElement out{std::vector<std::int64_t>(moduli_.size())};
    for (std::size_t j = moduli_.size(); j-- > 0;) {
        out.coords[j] = index % moduli_[j];
        index /= moduli_[j];
    }
    return out;
}

std::vector<GroupElement> FiniteAbelianGroup::elements() const {
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(order_));
    for (std::int64_t i = 0; i < order_; ++i) {
        out.push_back(element_at(i));
    }
    return out;
}

std::int64_t char_angle(const FiniteAbelianGroup& g, const Character& chi,
                        const GroupElement& x) {
    g.check_character(chi);
    g.check_element(x);
    const std::int64_t N = g.exponent();
    int128 t = 0;
    for (std::size_t j = 0; j < g.rank(); ++j) {
        t += int128(chi.dual_coords[j]) * x.coords[j] * (N / g.moduli()[j]);
    }
    return mod_floor(t, N);
}

std::complex<double> char_value(const FiniteAbelianGroup& g, const Character& chi,
                                const GroupElement& x) {
    const std::int64_t t = char_angle(g, chi, x);
    const double theta = 2.0 * std::numbers::pi * double(t) / double(g.exponent());
    return {std::cos(theta), std::sin(theta)};
}

std::vector<Character> characters(const FiniteAbelianGroup& g) {
    std::vector<Character> out;
    out.reserve(static_cast<std::size_t>(g.order()));
    for (std::int64_t i = 0; i < g.order(); ++i) {
        out.push_back(Character{g.element_at(i).coords});
    }
    return out;
}

std::int64_t char_indicator(const FiniteAbelianGroup& g, const GroupElement& x) {
    g.check_element(x);
    std::int64_t zero_angles = 0;
    for (const Character& chi : characters(g)) {
        if (char_angle(g, chi, x) == 0) ++zero_angles;
    }
    // The full sum of chi(x) is h exactly when every angle is 0, and 0
    // otherwise (the nonzero angles pair off into complete root-of-unity
    // cycles that cancel).
    return zero_angles == g.order() ? 1 : 0;
}

namespace {

struct DavenportSearch {
    const FiniteAbelianGroup& g;
    std::vector<GroupElement> els;
    std::size_t blocks;
    std::int64_t best = 0;

    explicit DavenportSearch(const FiniteAbelianGroup& group) : g(group) {
        els = g.elements();
        blocks = static_cast<std::size_t>((g.order() + 63) / 64);
    }

    static bool test_bit(const std::vector<std::uint64_t>& bs, std::int64_t i) {
        return (bs[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u;
    }
    static void set_bit(std::vector<std::uint64_t>& bs, std::int64_t i) {
        bs[static_cast<std::size_t>(i >> 6)] |= std::uint64_t(1) << (i & 63);
    }

    // sums = indices of all values realized by nonempty sub-multisets of the
    // current prefix.  Zero-sum-free means index 0 is never set.
    void dfs(std::size_t start, const std::vector<std::uint64_t>& sums, std::int64_t depth) {
        best = std::max(best, depth);
        for (std::size_t i = start; i < els.size(); ++i) {
            const GroupElement& r = els[i];
            std::vector<std::uint64_t> next(sums);
            set_bit(next, g.index_of(r));
            for (std::int64_t s = 0; s < g.order(); ++s) {
                if (test_bit(sums, s)) {
                    set_bit(next, g.index_of(g.add(g.element_at(s), r)));
                }
            }
            if (test_bit(next, 0)) continue;
            dfs(i, next, depth + 1);
        }
    }

    std::int64_t run() {
        // skip the zero element: any multiset containing it is not zero-sum-free
        els.erase(els.begin());
        std::vector<std::uint64_t> sums(blocks, 0);
        dfs(0, sums, 0);
        return best + 1;
    }
};

} // namespace

std::int64_t davenport_search(const FiniteAbelianGroup& g, std::int64_t max_order) {
    if (g.order() > max_order) {
        throw capability_error("davenport search limited to groups of order <= " +
                               std::to_string(max_order) + ", got order " +
                               std::to_string(g.order()));
    }
    DavenportSearch search(g);
    return search.run();
}

DavenportResult davenport(const FiniteAbelianGroup& g, std::int64_t max_order) {
    if (g.is_cyclic()) {
        return {g.order(), true};
    }
    return {davenport_search(g, max_order), false};
}

} // namespace zsdiv
