#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "zsdiv/classtable.hpp"
#include "zsdiv/quadfield.hpp"
#include "zsdiv/util.hpp"

using namespace zsdiv;

namespace {

// Dirichlet class number formula, used as an oracle independent of the
// relation-search path.  Real: h = -(1 / 2 ln eps) * sum chi(a) ln(2 sin(pi a / D)).
// Imaginary: h = w / (2|D|) * |sum chi(a) a|.
std::int64_t analytic_class_number(const QuadField& field) {
    const std::int64_t disc = field.discriminant();
    if (field.is_real()) {
        const QElement eps = fundamental_unit(field);
        const double omega = field.omega_is_half()
                                 ? (1.0 + std::sqrt(double(field.d()))) / 2.0
                                 : std::sqrt(double(field.d()));
        const double eps_val = double(eps.a) + double(eps.b) * omega;
        double sum = 0.0;
        for (std::int64_t a = 1; a < disc; ++a) {
            const int chi = kronecker(disc, a);
            if (chi != 0) {
                sum += chi * std::log(2.0 * std::sin(std::numbers::pi * double(a) / double(disc)));
            }
        }
        return llround(-sum / (2.0 * std::log(eps_val)));
    }
    const std::int64_t q = -disc;
    const std::int64_t w = q == 3 ? 6 : (q == 4 ? 4 : 2);
    std::int64_t sum = 0;
    for (std::int64_t a = 1; a < q; ++a) {
        sum += kronecker(disc, a) * a;
    }
    return std::llabs(sum) * w / (2 * q);
}

} // namespace

TEST_CASE("analytic class numbers match the computed groups") {
    for (std::int64_t d : {-1LL, 2LL, 10LL, 195LL, 219LL, 399LL, -5LL, -3LL, 5LL}) {
        const QuadField f = QuadField::make(d);
        const ClassGroupData data = class_group(f);
        CHECK(data.group().order() == analytic_class_number(f));
    }
}

TEST_CASE("class groups of the bundled fields") {
    CHECK(class_group(QuadField::make(-1)).group().order() == 1);
    CHECK(class_group(QuadField::make(2)).group().order() == 1);
    CHECK(class_group(QuadField::make(10)).group() == FiniteAbelianGroup({2}));
    CHECK(class_group(QuadField::make(195)).group() == FiniteAbelianGroup({2, 2}));
    CHECK(class_group(QuadField::make(219)).group() == FiniteAbelianGroup({4}));
    CHECK(class_group(QuadField::make(399)).group() == FiniteAbelianGroup({2, 4}));
    // not in the table; computed from scratch
    CHECK(class_group(QuadField::make(-5)).group() == FiniteAbelianGroup({2}));
}

TEST_CASE("computed groups match the embedded table") {
    for (const ClassTableEntry& entry : ClassTable::embedded().entries()) {
        const QuadField f = QuadField::make(entry.d);
        CHECK(f.discriminant() == entry.discriminant);
        const ClassGroupData data = class_group(f);
        const std::vector<std::int64_t> computed =
            data.group().order() == 1 ? std::vector<std::int64_t>{} : data.group().moduli();
        CHECK(computed == entry.invariant_factors);
        // generator ideals recorded bit-exactly
        REQUIRE(data.generator_ideals().size() == entry.generators.size());
        for (std::size_t i = 0; i < entry.generators.size(); ++i) {
            const auto& g = entry.generators[i];
            CHECK(data.generator_ideals()[i] == QIdeal::from_hnf(f, g.a, g.b, g.c));
        }
    }
}

TEST_CASE("class_of basics") {
    const QuadField q10 = QuadField::make(10);
    const ClassGroupData data = class_group(q10);
    const auto& g = data.group();

    CHECK(g.is_zero(data.class_of(QIdeal::unit(q10))));
    CHECK(g.is_zero(data.class_of(principal_ideal({q10, 1, 1}))));
    // (2, w) is the nonzero class of Z2
    CHECK_FALSE(g.is_zero(data.class_of(QIdeal::from_hnf(q10, 2, 0, 1))));
}

TEST_CASE("class_of is a homomorphism") {
    std::mt19937_64 rng(13);
    for (std::int64_t d : {10LL, 195LL, 219LL}) {
        const QuadField f = QuadField::make(d);
        const ClassGroupData data = class_group(f);
        const auto& g = data.group();
        for (int i = 0; i < 12; ++i) {
            const QElement x{f, static_cast<std::int64_t>(rng() % 14) - 7,
                             static_cast<std::int64_t>(rng() % 6) - 3};
            const QElement y{f, static_cast<std::int64_t>(rng() % 14) - 7,
                             static_cast<std::int64_t>(rng() % 6) - 3};
            if (elem_is_zero(x) || elem_is_zero(y)) continue;
            if (std::llabs(elem_norm(x)) > 300 || std::llabs(elem_norm(y)) > 300) continue;
            const QIdeal a = ideal_from_generators(f, {x, QElement{f, 2 + (std::int64_t)(rng() % 9), 1}});
            const QIdeal b = principal_ideal(y);
            CHECK(data.class_of(ideal_mul(a, b)) == g.add(data.class_of(a), data.class_of(b)));
        }
    }
}

TEST_CASE("principality coherence with classes") {
    for (std::int64_t d : {10LL, 195LL, 219LL, 399LL}) {
        const QuadField f = QuadField::make(d);
        const ClassGroupData data = class_group(f);
        for (std::int64_t p = 2; p <= 50; ++p) {
            bool prime = true;
            for (std::int64_t q = 2; q * q <= p; ++q) {
                if (p % q == 0) { prime = false; break; }
            }
            if (!prime) continue;
            for (const PrimeAbove& pa : primes_above(f, p)) {
                if (pa.ideal.norm() > 50) continue;
                const bool principal = is_principal(pa.ideal).has_value();
                CHECK(principal == data.group().is_zero(data.class_of(pa.ideal)));
            }
        }
    }
}

TEST_CASE("Q(sqrt 195) relations") {
    const QuadField f = QuadField::make(195);
    const ClassGroupData data = class_group(f);
    const auto& g = data.group();
    const GroupElement c3 = data.class_of(QIdeal::from_hnf(f, 3, 0, 1));
    const GroupElement c5 = data.class_of(QIdeal::from_hnf(f, 5, 0, 1));
    const GroupElement c13 = data.class_of(QIdeal::from_hnf(f, 13, 0, 1));
    CHECK_FALSE(g.is_zero(c3));
    CHECK_FALSE(g.is_zero(c5));
    CHECK_FALSE(g.is_zero(c13));
    CHECK(g.is_zero(g.add(g.add(c3, c5), c13)));
    CHECK_FALSE(g.is_zero(g.add(c3, c5)));
}

TEST_CASE("sequence_of_ideal") {
    SUBCASE("(3+w) over Q(sqrt 219) yields count 4") {
        const QuadField f = QuadField::make(219);
        const ClassGroupData data = class_group(f);
        const IdealSequence iseq = sequence_of_ideal(data, principal_ideal({f, 3, 1}));
        CHECK(iseq.sequence.term_count() == 4);
        CHECK(count_groupring(iseq.sequence).value == 4);
    }
    SUBCASE("a principal prime maps to (0^1)") {
        const QuadField f = QuadField::make(-1);
        const ClassGroupData data = class_group(f);
        const IdealSequence iseq = sequence_of_ideal(data, QIdeal::from_hnf(f, 2, 1, 1));
        REQUIRE(iseq.sequence.term_count() == 1);
        CHECK(data.group().is_zero(iseq.sequence.terms()[0].element));
        CHECK(iseq.sequence.terms()[0].multiplicity == 1);
    }
    SUBCASE("(18, 10+w) over Q(sqrt 10) yields (x^1, x^2)") {
        const QuadField f = QuadField::make(10);
        const ClassGroupData data = class_group(f);
        const QIdeal ideal = QIdeal::from_hnf(f, 18, 10, 1);
        const IdealSequence iseq = sequence_of_ideal(data, ideal);
        REQUIRE(iseq.sequence.term_count() == 2);
        const GroupElement x = iseq.sequence.terms()[0].element;
        CHECK_FALSE(data.group().is_zero(x));
        CHECK(iseq.sequence.terms()[1].element == x);
        CHECK(iseq.sequence.terms()[0].multiplicity == 1);
        CHECK(iseq.sequence.terms()[1].multiplicity == 2);
    }
}

TEST_CASE("count and list principal divisors") {
    const QuadField f = QuadField::make(219);
    const ClassGroupData data = class_group(f);
    SUBCASE("(3+w) has the paper's four divisors") {
        const QIdeal ideal = principal_ideal({f, 3, 1});
        CHECK(count_principal_divisors(data, ideal) == 4);
        const auto divisors = list_principal_divisors(data, ideal);
        REQUIRE(divisors.size() == 4);
        CHECK(divisors[0].ideal == QIdeal::unit(f));
        CHECK(divisors[1].ideal == principal_ideal({f, -29, 2}));
        CHECK(divisors[2].ideal == principal_ideal({f, -15, 1}));
        CHECK(divisors[3].ideal == principal_ideal({f, 3, 1}));
        for (const auto& div : divisors) {
            CHECK(principal_ideal(div.generator) == div.ideal);
        }
    }
    SUBCASE("unit ideal") {
        CHECK(count_principal_divisors(data, QIdeal::unit(f)) == 1);
        CHECK(list_principal_divisors(data, QIdeal::unit(f)).size() == 1);
    }
    SUBCASE("non-principal prime has only the trivial divisor") {
        const auto divisors = list_principal_divisors(data, QIdeal::from_hnf(f, 2, 1, 1));
        REQUIRE(divisors.size() == 1);
        CHECK(divisors[0].ideal == QIdeal::unit(f));
    }
    SUBCASE("PID fields reduce to the divisor-count product") {
        std::mt19937_64 rng(3);
        for (std::int64_t d : {-1LL, 2LL}) {
            const QuadField pid = QuadField::make(d);
            const ClassGroupData pid_data = class_group(pid);
            for (int i = 0; i < 10; ++i) {
                const QElement x{pid, static_cast<std::int64_t>(rng() % 40) - 20,
                                 static_cast<std::int64_t>(rng() % 16) - 8};
                if (elem_is_zero(x) || std::llabs(elem_norm(x)) > 10000) continue;
                const QIdeal ideal = principal_ideal(x);
                std::int64_t product = 1;
                for (const auto& [p, e] : factor_ideal(ideal).factors) product *= e + 1;
                CHECK(count_principal_divisors(pid_data, ideal) == product);
            }
        }
    }
    SUBCASE("divisor count equals list length on composite ideals") {
        const QuadField q195 = QuadField::make(195);
        const ClassGroupData d195 = class_group(q195);
        const QIdeal I = ideal_mul(ideal_mul(ideal_pow(QIdeal::from_hnf(q195, 3, 0, 1), 2),
                                             ideal_pow(QIdeal::from_hnf(q195, 5, 0, 1), 2)),
                                   QIdeal::from_hnf(q195, 13, 0, 1));
        CHECK(static_cast<std::int64_t>(list_principal_divisors(d195, I).size()) ==
              count_principal_divisors(d195, I));
    }
}

TEST_CASE("decompose_pair") {
    SUBCASE("the Q(sqrt 10) example has two maximal decompositions") {
        const QuadField f = QuadField::make(10);
        const ClassGroupData data = class_group(f);
        const auto decs = decompose_pair(data, {f, 18, 0}, {f, 10, 1});
        REQUIRE(decs.size() == 2);
        CHECK(decs[0].principal_part == principal_ideal({f, 1, 1}));    // (3,1+w)^2
        REQUIRE(decs[0].residue.size() == 1);
        CHECK(decs[0].residue[0].first.triple() ==
              std::tuple<std::int64_t, std::int64_t, std::int64_t>{2, 0, 1});
        CHECK(decs[1].principal_part == principal_ideal({f, -2, 1}));   // (2,w)(3,1+w)
        REQUIRE(decs[1].residue.size() == 1);
        CHECK(decs[1].residue[0].first.triple() ==
              std::tuple<std::int64_t, std::int64_t, std::int64_t>{3, 1, 1});
        for (const auto& dec : decs) {
            std::int64_t total = 0;
            for (const auto& [p, c] : dec.residue) total += c;
            CHECK(total <= data.group().order() - 1);
        }
    }
    SUBCASE("coprime pair gives the trivial decomposition") {
        const QuadField f = QuadField::make(10);
        const ClassGroupData data = class_group(f);
        const auto decs = decompose_pair(data, {f, 3, 0}, {f, 5, 0});
        REQUIRE(decs.size() == 1);
        CHECK(decs[0].principal_part == QIdeal::unit(f));
        CHECK(elem_is_unit(decs[0].generator));
        CHECK(decs[0].residue.empty());
    }
    SUBCASE("both zero is rejected") {
        const QuadField f = QuadField::make(10);
        const ClassGroupData data = class_group(f);
        CHECK_THROWS_AS(decompose_pair(data, {f, 0, 0}, {f, 0, 0}), validation_error);
    }
}

TEST_CASE("is_irreducible") {
    const QuadField q219 = QuadField::make(219);
    const ClassGroupData d219 = class_group(q219);
    CHECK(is_irreducible(d219, {q219, -15, 1}));
    CHECK(is_irreducible(d219, {q219, -29, 2}));
    CHECK_FALSE(is_irreducible(d219, {q219, 3, 1})); // n = 4

    const QuadField q399 = QuadField::make(399);
    const ClassGroupData d399 = class_group(q399);
    // (sqrt 399) = three non-principal primes with no principal subproduct
    CHECK(is_irreducible(d399, {q399, 0, 1}));
    CHECK(is_irreducible(d399, {q399, 19, 1}));
    CHECK(is_irreducible(d399, {q399, 2, 1}));

    const QuadField gauss = QuadField::make(-1);
    const ClassGroupData dg = class_group(gauss);
    CHECK(is_irreducible(dg, {gauss, 1, 1}));        // 1 + i, prime of norm 2
    CHECK_FALSE(is_irreducible(dg, {gauss, 6, 0}));  // 6 = 2 * 3

    CHECK_THROWS_AS(is_irreducible(dg, {gauss, 0, 0}), validation_error);
    CHECK_THROWS_AS(is_irreducible(dg, {gauss, 1, 0}), validation_error);
    CHECK_THROWS_AS(is_irreducible(d219, fundamental_unit(q219)), validation_error);
}

TEST_CASE("class table parsing and override") {
    const ClassTable& table = ClassTable::embedded();
    CHECK(table.entries().size() == 6);
    REQUIRE(table.find(219) != nullptr);
    CHECK(table.find(219)->invariant_factors == std::vector<std::int64_t>{4});
    CHECK(table.find(7) == nullptr);

    CHECK_THROWS_AS(ClassTable::from_json("{}"), validation_error);
    CHECK_THROWS_AS(ClassTable::from_json("not json"), validation_error);

    const ClassTable custom = ClassTable::from_json(R"({
      "format": "zsdiv-class-table",
      "fields": [{"d": 10, "discriminant": 40, "invariant_factors": [2],
                  "generators": [{"p": 2, "hnf": [2, 0, 1]}], "source": "test override"}]
    })");
    REQUIRE(custom.find(10) != nullptr);
    const ClassGroupData data = class_group(QuadField::make(10), {}, &custom);
    CHECK(data.source() == "test override");
}

TEST_CASE("capability paths") {
    // beyond the Minkowski computation limit and not in the table
    ClassGroupLimits tight;
    tight.max_minkowski_bound = 1.0;
    CHECK_THROWS_AS(class_group(QuadField::make(-5), tight), capability_error);
    // beyond the limit but present in the table: falls back to table data
    const ClassGroupData data = class_group(QuadField::make(219), tight);
    CHECK(data.group() == FiniteAbelianGroup({4}));
    CHECK(data.class_of(QIdeal::from_hnf(QuadField::make(219), 5, 2, 1)) ==
          data.group().element({1}));
}
