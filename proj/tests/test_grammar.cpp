#include <doctest.h>

#include "zsdiv/grammar.hpp"

using namespace zsdiv;

TEST_CASE("group spec parsing") {
    CHECK(parse_group_spec("Z4") == FiniteAbelianGroup({4}));
    CHECK(parse_group_spec("Z2xZ2") == FiniteAbelianGroup({2, 2}));
    CHECK(parse_group_spec("z2Xz6") == FiniteAbelianGroup({2, 6}));
    CHECK(parse_group_spec("Z1") == FiniteAbelianGroup({1}));
    CHECK(format_group(FiniteAbelianGroup({2, 4})) == "Z2xZ4");
    CHECK_THROWS_AS(parse_group_spec("Q7"), validation_error);
    CHECK_THROWS_AS(parse_group_spec("Z0"), validation_error);
    CHECK_THROWS_AS(parse_group_spec(""), validation_error);
}

TEST_CASE("element and sequence literals") {
    const FiniteAbelianGroup z4({4});
    CHECK(parse_group_element(z4, "3") == z4.element({3}));
    CHECK(parse_group_element(z4, "(3)") == z4.element({3}));
    CHECK_THROWS_AS(parse_group_element(z4, "4"), validation_error);

    const FiniteAbelianGroup klein({2, 2});
    CHECK(parse_group_element(klein, "(1,0)") == klein.element({1, 0}));
    CHECK(format_group_element(klein.element({1, 0})) == "(1,0)");

    const ZSequence s = parse_sequence(z4, "1^1,3^1,2^2");
    CHECK(s.term_count() == 3);
    CHECK(s.terms()[2].multiplicity == 2);
    CHECK(format_sequence(s) == "(1)^1,(3)^1,(2)^2");
    // parenthesized form and default multiplicity
    const ZSequence t = parse_sequence(klein, "(1,0)^2,(0,1)");
    CHECK(t.terms()[0].multiplicity == 2);
    CHECK(t.terms()[1].multiplicity == 1);
    CHECK(parse_sequence(z4, "").term_count() == 0);
    CHECK_THROWS_AS(parse_sequence(z4, "1^0"), validation_error);
    CHECK_THROWS_AS(parse_sequence(z4, "9^1"), validation_error);
}

TEST_CASE("field element literals") {
    const QuadField q219 = QuadField::make(219);
    CHECK(parse_qelement(q219, "18") == QElement{q219, 18, 0});
    CHECK(parse_qelement(q219, "3+1*sqrt") == QElement{q219, 3, 1});
    CHECK(parse_qelement(q219, "3+1*sqrt(219)") == QElement{q219, 3, 1});
    CHECK(parse_qelement(q219, "-15+1*w") == QElement{q219, -15, 1});
    CHECK(parse_qelement(q219, "-29+2*sqrt") == QElement{q219, -29, 2});
    CHECK(parse_qelement(q219, "sqrt(219)") == QElement{q219, 0, 1});
    CHECK(parse_qelement(q219, "2*w") == QElement{q219, 0, 2});
    CHECK(parse_qelement(q219, "5-1*w") == QElement{q219, 5, -1});

    CHECK_THROWS_AS(parse_qelement(q219, "3+1*sqrt(10)"), validation_error);
    CHECK_THROWS_AS(parse_qelement(q219, ""), validation_error);
    CHECK_THROWS_AS(parse_qelement(q219, "3+"), validation_error);
    CHECK_THROWS_AS(parse_qelement(q219, "x+1"), validation_error);

    // sqrt-basis input converts into the omega basis when w = (1 + sqrt d)/2
    const QuadField q5 = QuadField::make(5);
    CHECK(parse_qelement(q5, "1+1*sqrt(5)") == QElement{q5, 0, 2});
    CHECK(parse_qelement(q5, "2+1*w") == QElement{q5, 2, 1});
}

TEST_CASE("field element formatting") {
    const QuadField q219 = QuadField::make(219);
    CHECK(format_qelement({q219, 3, 1}) == "3+1*w");
    CHECK(format_qelement({q219, -15, 1}) == "-15+1*w");
    CHECK(format_qelement_sqrt({q219, -29, 2}) == "-29+2*sqrt(219)");

    const QuadField q5 = QuadField::make(5);
    CHECK(format_qelement({q5, 0, 1}) == "0+1*w");
    CHECK(format_qelement_sqrt({q5, 0, 1}) == "(1+1*sqrt(5))/2");
    CHECK(format_qelement_sqrt({q5, 0, 2}) == "1+1*sqrt(5)");

    // parse/format round trip in the omega basis
    for (const QElement x : {QElement{q219, 3, 1}, QElement{q219, -15, 1}, QElement{q5, -2, 7}}) {
        CHECK(parse_qelement(x.field, format_qelement(x)) == x);
    }
}

TEST_CASE("ideal formatting") {
    const QuadField q10 = QuadField::make(10);
    CHECK(format_ideal(QIdeal::from_hnf(q10, 18, 10, 1)) == "[18,10,1]");
    CHECK(format_selector({1, 0, 2}) == "(1,0,2)");
}
