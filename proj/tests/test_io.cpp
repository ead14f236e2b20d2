#include <doctest.h>

#include <random>

#include "slnk2/io.hpp"
#include "test_util.hpp"

using namespace slnk2;

TEST_CASE("field descriptors round-trip") {
    for (const char* d : {"gf2", "gf2e:r=3", "gf2e:r=4", "ratfunc:q=2", "ratfunc:q=4"}) {
        FieldSpecPtr spec = parse_field(d);
        CHECK(field_descriptor(*spec) == d);
        CHECK(parse_field(field_descriptor(*spec))->same_as(*spec));
    }
    // explicit non-default modulus survives
    FieldSpecPtr spec = parse_field("gf2e:r=4:mod=0x19");
    CHECK(spec->modulus() == 0x19);
    CHECK(parse_field(field_descriptor(*spec))->same_as(*spec));
    CHECK_THROWS_AS(parse_field("gf3"), parse_error);
    CHECK_THROWS_AS(parse_field("ratfunc:q=3"), parse_error);
    CHECK_THROWS_AS(parse_field("gf2e:r=2:mod=0x5"), error);  // reducible modulus
}

TEST_CASE("element text: finite hex and ratfunc fractions") {
    FieldSpecPtr f4 = FieldSpec::finite(2);
    CHECK(element_to_text(FieldElement::from_bits(f4, 0x3)) == "0x3");
    CHECK(element_from_text(f4, "0x3") == FieldElement::from_bits(f4, 0x3));
    CHECK(element_from_text(f4, "0") == FieldElement::zero(f4));

    FieldSpecPtr f2 = FieldSpec::gf2();
    FieldSpecPtr rf = FieldSpec::ratfunc(f2);
    FieldElement x = element_from_text(rf, "x");
    CHECK(element_to_text(x) == "x");
    FieldElement frac = element_from_text(rf, "x^3+x+1/x^2+x");
    CHECK(element_to_text(frac) == "x^3+x+1/x^2+x");
    CHECK(frac.num() == poly_from_text(f2, "x^3+x+1"));
    CHECK(frac.den() == poly_from_text(f2, "x^2+x"));
    // reduction is applied on parse
    CHECK(element_from_text(rf, "x^2+x/x") == element_from_text(rf, "x+1"));
}

TEST_CASE("polynomial text round-trips, including GF(4) coefficients") {
    FieldSpecPtr f2 = FieldSpec::gf2();
    for (const char* s : {"x^3+x+1", "x", "1", "0", "x^5+1"}) {
        CHECK(poly_to_text(poly_from_text(f2, s)) == s);
    }
    FieldSpecPtr f4 = FieldSpec::finite(2);
    Polynomial p = poly_from_text(f4, "0x2*x^3+x+0x3");
    CHECK(poly_to_text(p) == "0x2*x^3+x+0x3");
    CHECK(p.coeff(3) == FieldElement::from_bits(f4, 0x2));
    CHECK(p.coeff(1).is_one());
    CHECK(p.coeff(0) == FieldElement::from_bits(f4, 0x3));
}

TEST_CASE("matrix JSON round-trips over every field family") {
    std::mt19937_64 rng(101);
    for (const auto& spec : {FieldSpec::gf2(), FieldSpec::finite(2), FieldSpec::ratfunc(FieldSpec::gf2()),
                             FieldSpec::ratfunc(FieldSpec::finite(2))}) {
        for (int trial = 0; trial < 8; ++trial) {
            Matrix m = testutil::random_matrix(spec, 3, rng);
            json j = matrix_to_json(m);
            CHECK(matrix_from_json(j) == m);
        }
    }
    CHECK_THROWS_AS(matrix_from_json(json::parse("{\"n\": 2}")), parse_error);
}

TEST_CASE("automorphism and label JSON round-trips") {
    FieldSpecPtr f2 = FieldSpec::gf2();
    Automorphism phi = Automorphism::outer(make_J(f2, 4));
    json j = automorphism_to_json(phi);
    Automorphism back = automorphism_from_json(j);
    CHECK(back.parity == Automorphism::Parity::outer);
    CHECK(back.mat == phi.mat);

    FieldSpecPtr rf = FieldSpec::ratfunc(f2);
    ClassLabel p{ClassLabel::Kind::inner_p, 0, element_from_text(rf, "x"), {}};
    json jp = label_to_json(p);
    CHECK(jp["type"] == "P");
    CHECK(label_from_json(jp, rf) == p);

    ClassLabel l{ClassLabel::Kind::inner_l, 2, FieldElement::one(f2), {}};
    CHECK(label_from_json(label_to_json(l), f2) == l);
    ClassLabel alt{ClassLabel::Kind::outer_alt, 0, std::nullopt, {}};
    CHECK(label_from_json(label_to_json(alt), f2) == alt);
    ClassLabel diag{ClassLabel::Kind::outer_diag, 0, std::nullopt,
                    {FieldElement::one(rf), element_from_text(rf, "x")}};
    CHECK(label_from_json(label_to_json(diag), rf) == diag);
}

TEST_CASE("classification JSON carries a verifiable witness") {
    FieldSpecPtr f2 = FieldSpec::gf2();
    Matrix a(f2, 2, {FieldElement::zero(f2), FieldElement::one(f2), FieldElement::one(f2),
                     FieldElement::zero(f2)});
    InnerClassification c = classify_inner(a);
    json j = classification_to_json(c);
    CHECK(j["label"]["type"] == "L");
    CHECK(j["label"]["m"] == 1);
    Matrix witness = matrix_from_json(j["witness"]["C"]);
    Matrix canonical = matrix_from_json(j["canonical"]);
    FieldElement p = element_from_text(f2, j["witness"]["p"].get<std::string>());
    CHECK(witness * a == (canonical * p) * witness);
}

TEST_CASE("reports serialize deterministically") {
    CensusReport rep = involution_census(FieldSpec::gf2(), 2);
    json a = census_report_to_json(rep);
    json b = census_report_to_json(involution_census(FieldSpec::gf2(), 2));
    CHECK(a.dump() == b.dump());
    CHECK(a["inner_involutions"] == 3);
    VerifyOptions opt;
    TheoremReport t1 = verify_theorem("serre", opt);
    TheoremReport t2 = verify_theorem("serre", opt);
    CHECK(theorem_report_to_json(t1).dump() == theorem_report_to_json(t2).dump());
}

TEST_CASE("matrix_to_text aligns entries") {
    FieldSpecPtr f2 = FieldSpec::gf2();
    std::string text = matrix_to_text(Matrix::identity(f2, 2));
    CHECK(text.find("0x1") != std::string::npos);
    CHECK(text.find('\n') != std::string::npos);
}
