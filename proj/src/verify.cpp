#include "zsdiv/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "zsdiv/classtable.hpp"
#include "zsdiv/grammar.hpp"
#include "zsdiv/quadfield.hpp"
#include "zsdiv/util.hpp"
#include "zsdiv/zerosum.hpp"

namespace zsdiv {

namespace {

// All abelian groups of order <= bound, as factor lists (not only invariant
// form, so some isomorphism classes appear twice -- harmless for checks).
std::vector<std::vector<std::int64_t>> small_groups(std::int64_t bound) {
    std::vector<std::vector<std::int64_t>> out = {{1}};
    std::vector<std::int64_t> current;
    std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t min_factor,
                                                              std::int64_t product) {
        if (!current.empty()) out.push_back(current);
        for (std::int64_t f = min_factor; product * f <= bound; ++f) {
            current.push_back(f);
            rec(f, product * f);
            current.pop_back();
        }
    };
    rec(2, 1);
    return out;
}

VerifyCheck check_orthogonality(std::int64_t bound) {
    std::size_t groups = 0, elements = 0;
    for (const auto& moduli : small_groups(bound)) {
        const FiniteAbelianGroup g(moduli);
        ++groups;
        for (const GroupElement& x : g.elements()) {
            ++elements;
            const std::int64_t expected = g.is_zero(x) ? 1 : 0;
            if (char_indicator(g, x) != expected) {
                return {"orthogonality", false,
                        "indicator wrong at " + format_group_element(x) + " in " + format_group(g)};
            }
        }
    }
    std::ostringstream os;
    os << groups << " groups of order <= " << bound << ", " << elements << " elements";
    return {"orthogonality", true, os.str()};
}

VerifyCheck check_davenport() {
    for (std::int64_t n = 1; n <= 8; ++n) {
        const FiniteAbelianGroup g({n});
        if (davenport_search(g) != n) {
            return {"davenport", false, "search value wrong for Z" + std::to_string(n)};
        }
    }
    const FiniteAbelianGroup klein({2, 2});
    const FiniteAbelianGroup three({3, 3});
    if (davenport_search(klein) != 3) return {"davenport", false, "D(Z2xZ2) != 3"};
    if (davenport_search(three) != 5) return {"davenport", false, "D(Z3xZ3) != 5"};
    for (const auto& moduli : small_groups(12)) {
        const FiniteAbelianGroup g(moduli);
        if (davenport_search(g) > g.order()) {
            return {"davenport", false, "D(G) > |G| for " + format_group(g)};
        }
    }
    return {"davenport", true, "cyclic orders 1..8 by search, Klein = 3, Z3xZ3 = 5, D <= |G|"};
}

VerifyCheck check_three_way(std::uint64_t seed, int cases) {
    static const std::vector<std::vector<std::int64_t>> pool = {
        {2}, {3}, {4}, {5}, {6}, {7}, {8}, {9}, {10}, {11}, {12}, {2, 2}, {2, 4}, {3, 3}};
    std::mt19937_64 rng(seed);
    double worst_residual = 0.0;
    for (int i = 0; i < cases; ++i) {
        const auto& moduli = pool[rng() % pool.size()];
        const FiniteAbelianGroup g(moduli);
        std::vector<Term> terms;
        const int term_count = static_cast<int>(rng() % 6);
        int128 space = 1;
        for (int t = 0; t < term_count; ++t) {
            std::int64_t mult = 1 + static_cast<std::int64_t>(rng() % 6);
            while (space * (mult + 1) > (int128(1) << 16) && mult > 1) --mult;
            if (space * (mult + 1) > (int128(1) << 16)) break;
            space *= mult + 1;
            terms.push_back({g.element_at(static_cast<std::int64_t>(rng() % g.order())), mult});
        }
        const ZSequence seq(g, terms);
        const CountReport brute = count_brute(seq, std::int64_t(1) << 16);
        const CountReport ring = count_groupring(seq);
        const CountReport chars = count_char(seq);
        worst_residual = std::max(worst_residual, chars.residual);
        if (brute.value != ring.value || ring.value != chars.value) {
            return {"three_way_agreement", false,
                    "disagreement on " + format_sequence(seq) + " over " + format_group(g)};
        }
    }
    std::ostringstream os;
    os << cases << " random sequences, worst character residual " << worst_residual;
    return {"three_way_agreement", true, os.str()};
}

VerifyCheck check_zerosum_invariants(std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x5eedULL);
    for (int i = 0; i < 60; ++i) {
        const std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 6);
        const FiniteAbelianGroup g({n});
        std::vector<Term> terms;
        const int term_count = 1 + static_cast<int>(rng() % 4);
        for (int t = 0; t < term_count; ++t) {
            terms.push_back({g.element_at(static_cast<std::int64_t>(rng() % n)),
                             1 + static_cast<std::int64_t>(rng() % 3)});
        }
        const ZSequence seq(g, terms);
        const std::int64_t count = count_groupring(seq).value;
        // appending a zero term doubles the count
        std::vector<Term> extended = terms;
        extended.push_back({g.zero(), 1});
        if (count_groupring(ZSequence(g, extended)).value != 2 * count) {
            return {"zerosum_invariants", false, "zero-append did not double the count"};
        }
        // n >= 2 exactly when a nonempty zero-sum selector exists
        const auto sels = list_zero_sum(seq);
        if ((count >= 2) != (sels.size() >= 2)) {
            return {"zerosum_invariants", false, "count vs enumeration mismatch"};
        }
        // a sequence at least as long as D(G) always has one
        if (seq.length() >= g.order() && count < 2) {
            return {"zerosum_invariants", false, "Davenport length forcing violated"};
        }
        // maximality: complements of maximal selectors are zero-sum-free
        for (const Selector& f : maximal_zero_sum(seq)) {
            std::vector<Term> rest;
            for (std::size_t j = 0; j < f.size(); ++j) {
                if (terms[j].multiplicity - f[j] > 0) {
                    rest.push_back({terms[j].element, terms[j].multiplicity - f[j]});
                }
            }
            if (list_zero_sum(ZSequence(g, rest)).size() != 1) {
                return {"zerosum_invariants", false, "maximal selector complement not zero-sum-free"};
            }
        }
    }
    return {"zerosum_invariants", true, "60 random sequences over cyclic groups"};
}

// --- goldens over the bundled fields -------------------------------------

VerifyCheck check_golden_q10() {
    const QuadField f = QuadField::make(10);
    const ClassGroupData data = class_group(f);
    if (!(data.group() == FiniteAbelianGroup({2}))) {
        return {"golden_q10", false, "class group of Q(sqrt 10) is not Z2"};
    }
    const QElement alpha{f, 18, 0};
    const QElement beta{f, 10, 1};
    const auto decs = decompose_pair(data, alpha, beta);
    if (decs.size() != 2) {
        return {"golden_q10", false, "expected two maximal decompositions of (18, 10+w)"};
    }
    const QIdeal want1 = principal_ideal({f, -2, 1}); // (-2+sqrt10) = (2,w)(3,1+w)
    const QIdeal want2 = principal_ideal({f, 1, 1});  // (1+sqrt10) = (3,1+w)^2
    std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t>> got;
    for (const auto& dec : decs) {
        got.insert(dec.principal_part.triple());
        std::int64_t total = 0;
        for (const auto& [prime, c] : dec.residue) total += c;
        if (total > data.group().order() - 1) {
            return {"golden_q10", false, "residue exceeds h-1"};
        }
    }
    if (got != std::set{want1.triple(), want2.triple()}) {
        return {"golden_q10", false, "principal parts differ from (-2+w), (1+w)"};
    }
    return {"golden_q10", true, "(18, 10+w) has maximal parts (-2+w) and (1+w)"};
}

VerifyCheck check_golden_q195() {
    const QuadField f = QuadField::make(195);
    const ClassGroupData data = class_group(f);
    if (!(data.group() == FiniteAbelianGroup({2, 2}))) {
        return {"golden_q195", false, "class group of Q(sqrt 195) is not Z2xZ2"};
    }
    const QIdeal p3 = QIdeal::from_hnf(f, 3, 0, 1);
    const QIdeal p5 = QIdeal::from_hnf(f, 5, 0, 1);
    const QIdeal p13 = QIdeal::from_hnf(f, 13, 0, 1);
    const auto& g = data.group();
    const GroupElement c3 = data.class_of(p3), c5 = data.class_of(p5), c13 = data.class_of(p13);
    for (const GroupElement& c : {c3, c5, c13}) {
        if (g.is_zero(c)) return {"golden_q195", false, "a ramified prime is principal"};
        if (!g.is_zero(g.add(c, c))) return {"golden_q195", false, "class not 2-torsion"};
    }
    if (!g.is_zero(g.add(g.add(c3, c5), c13))) {
        return {"golden_q195", false, "[p3]+[p5]+[p13] != 0"};
    }
    if (g.is_zero(g.add(c3, c5)) || g.is_zero(g.add(c3, c13)) || g.is_zero(g.add(c5, c13))) {
        return {"golden_q195", false, "a pair of the three primes is already principal"};
    }
    const QIdeal product = ideal_mul(ideal_mul(p3, p5), p13);
    if (!(product == principal_ideal({f, 0, 1}))) {
        return {"golden_q195", false, "p3 p5 p13 != (sqrt 195)"};
    }
    const QIdeal I = ideal_mul(ideal_mul(ideal_pow(p3, 2), ideal_pow(p5, 2)), p13);
    const auto divisors = list_principal_divisors(data, I);
    const QIdeal want15 = principal_ideal({f, 15, 0});
    bool has15 = false, hasRoot = false;
    for (const auto& div : divisors) {
        if (div.ideal == want15) has15 = true;
        if (div.ideal == product) hasRoot = true;
    }
    if (!has15 || !hasRoot) {
        return {"golden_q195", false, "divisors of p3^2 p5^2 p13 miss (15) or (sqrt 195)"};
    }
    const IdealSequence iseq = sequence_of_ideal(data, I);
    std::set<std::int64_t> lengths;
    for (const Selector& sel : maximal_zero_sum(iseq.sequence)) {
        std::int64_t total = 0;
        for (std::int64_t v : sel) total += v;
        lengths.insert(total);
    }
    if (lengths.size() < 2) {
        return {"golden_q195", false, "maximal selectors all have the same total length"};
    }
    return {"golden_q195", true, "Klein relations, (15) and (sqrt 195) both maximal"};
}

VerifyCheck check_golden_q219() {
    const QuadField f = QuadField::make(219);
    const ClassGroupData data = class_group(f);
    if (!(data.group() == FiniteAbelianGroup({4}))) {
        return {"golden_q219", false, "class group of Q(sqrt 219) is not Z4"};
    }
    const QElement x{f, 3, 1};
    const IdealSequence iseq = sequence_of_ideal(data, principal_ideal(x));
    const std::vector<QIdeal> want = {
        QIdeal::from_hnf(f, 2, 1, 1), QIdeal::from_hnf(f, 3, 0, 1),
        QIdeal::from_hnf(f, 5, 3, 1), QIdeal::from_hnf(f, 7, 3, 1)};
    if (iseq.factors.factors.size() != 4) {
        return {"golden_q219", false, "(3+w) does not have 4 prime factors"};
    }
    for (std::size_t i = 0; i < 4; ++i) {
        if (!(iseq.factors.factors[i].first == want[i]) || iseq.factors.factors[i].second != 1) {
            return {"golden_q219", false, "prime factors of (3+w) differ from the expected HNF list"};
        }
    }
    const auto divisors = list_principal_divisors(data, principal_ideal(x));
    if (divisors.size() != 4 || count_principal_divisors(data, principal_ideal(x)) != 4) {
        return {"golden_q219", false, "(3+w) must have exactly 4 principal divisors"};
    }
    const std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t>> expected = {
        {1, 0, 1}, {6, 3, 1}, {35, 3, 1}, {210, 3, 1}};
    std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t>> got;
    for (const auto& div : divisors) got.insert(div.ideal.triple());
    if (got != expected) {
        return {"golden_q219", false, "principal divisor ideals differ from the expected list"};
    }
    return {"golden_q219", true, "(3+w): 4 primes, principal divisors (1),(6,3,1),(35,3,1),(210,3,1)"};
}

VerifyCheck check_golden_q399() {
    const QuadField f = QuadField::make(399);
    const ClassGroupData data = class_group(f);
    // (19 + sqrt 399) and (2 + sqrt 399): principal products of two
    // non-principal primes, hence irreducible with divisor count 2.
    for (const QElement x : {QElement{f, 19, 1}, QElement{f, 2, 1}}) {
        const IdealSequence iseq = sequence_of_ideal(data, principal_ideal(x));
        if (iseq.factors.factors.size() != 2) {
            return {"golden_q399", false, format_qelement(x) + " is not a product of two primes"};
        }
        for (const auto& [prime, e] : iseq.factors.factors) {
            if (e != 1 || is_principal(prime)) {
                return {"golden_q399", false, "a factor of " + format_qelement(x) + " is principal"};
            }
        }
        if (!is_irreducible(data, x)) {
            return {"golden_q399", false, format_qelement(x) + " should be irreducible"};
        }
    }
    // (sqrt 399) = (3,w)(7,w)(19,w), all non-principal, all pairs
    // non-principal, so its divisor count is 2.
    const QElement root{f, 0, 1};
    const IdealSequence iseq = sequence_of_ideal(data, principal_ideal(root));
    if (iseq.factors.factors.size() != 3) {
        return {"golden_q399", false, "(sqrt 399) does not factor into three primes"};
    }
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i; j < 3; ++j) {
            const QIdeal prod = i == j ? iseq.factors.factors[i].first
                                       : ideal_mul(iseq.factors.factors[i].first,
                                                   iseq.factors.factors[j].first);
            if (i == j && is_principal(prod)) {
                return {"golden_q399", false, "a prime factor of (sqrt 399) is principal"};
            }
            if (i != j && is_principal(prod)) {
                return {"golden_q399", false, "a pair product inside (sqrt 399) is principal"};
            }
        }
    }
    if (count_principal_divisors(data, principal_ideal(root)) != 2) {
        return {"golden_q399", false, "(sqrt 399) must have exactly 2 principal divisors"};
    }
    return {"golden_q399", true,
            "19+w and 2+w irreducible two-prime products; (sqrt 399) = three primes, count 2"};
}

} // namespace

std::vector<VerifyCheck> run_verify(const std::string& scope, std::uint64_t seed) {
    std::vector<VerifyCheck> checks;
    const bool all = scope == "all" || scope.empty();
    if (all || scope == "group") {
        checks.push_back(check_orthogonality(16));
        checks.push_back(check_davenport());
    }
    if (all || scope == "zerosum") {
        checks.push_back(check_three_way(seed, 200));
        checks.push_back(check_zerosum_invariants(seed));
    }
    if (all || scope == "paper") {
        checks.push_back(check_golden_q10());
        checks.push_back(check_golden_q195());
        checks.push_back(check_golden_q219());
        checks.push_back(check_golden_q399());
    }
    if (checks.empty()) {
        throw validation_error("unknown verify scope '" + scope +
                               "' (expected group|zerosum|paper|all)");
    }
    return checks;
}

} // namespace zsdiv
