#include <doctest.h>

#include "slnk2/sym_variety.hpp"
#include "slnk2/oracle.hpp"
#include "test_util.hpp"

using namespace slnk2;

TEST_CASE("q_element: identity source, outer symmetry, hand example") {
    FieldSpecPtr f2 = FieldSpec::gf2();
    Matrix a = make_L_np(f2, 2, FieldElement::one(f2));
    Automorphism phi = Automorphism::inner(a);
    CHECK(q_element(phi, Matrix::identity(f2, 2)).value == Matrix::identity(f2, 2));

    // inner n=2, p=1, X = [[1,1],[0,1]]: V = [[0,1],[1,1]], semisimple
    Matrix x(f2, 2, {FieldElement::one(f2), FieldElement::one(f2), FieldElement::zero(f2),
                     FieldElement::one(f2)});
    VarietyElement v = q_element(phi, x);
    Matrix expected(f2, 2, {FieldElement::zero(f2), FieldElement::one(f2), FieldElement::one(f2),
                            FieldElement::one(f2)});
    CHECK(v.value == expected);
    CHECK(v.semisimple);  // min poly t^2+t+1 is separable
    CHECK(v.value.det().is_one());

    // outer with A = Id: V = X X^T, symmetric
    Automorphism theta = Automorphism::outer(Matrix::identity(f2, 3));
    Matrix y = Matrix::identity(f2, 3);
    y.set(0, 1, FieldElement::one(f2));
    VarietyElement w = q_element(theta, y);
    CHECK(w.value == y * y.transpose());
    CHECK(w.value == w.value.transpose());
}

TEST_CASE("semisimple_by_formula_n2: examples including the boundary") {
    FieldSpecPtr f2 = FieldSpec::gf2();
    FieldElement one = FieldElement::one(f2), zero = FieldElement::zero(f2);
    // X = Id: expression is 0 although V = Id is semisimple (the audited boundary)
    CHECK_FALSE(semisimple_by_formula_n2(one, Matrix::identity(f2, 2)));
    Matrix upper(f2, 2, {one, one, zero, one});
    CHECK(semisimple_by_formula_n2(one, upper));  // 1+1+1+0 = 1
    Matrix lower(f2, 2, {one, zero, one, one});
    CHECK(semisimple_by_formula_n2(one, lower));
    CHECK_THROWS_AS(semisimple_by_formula_n2(zero, upper), zero_input);
    CHECK_THROWS_AS(semisimple_by_formula_n2(one, Matrix::identity(f2, 3)), dimension_mismatch);
}

TEST_CASE("the paper-displayed entries of Q_k match q_element for all of SL(2,q)") {
    for (int r : {1, 2, 3}) {
        FieldSpecPtr spec = FieldSpec::finite(r);
        for (const auto& p : enumerate_field(spec)) {
            if (p.is_zero() || p.bits() > 2) continue;  // keep runtime small: p in {1, g}
            Matrix mat_a = make_L_np(spec, 2, p);
            Automorphism phi = Automorphism::inner(mat_a);
            for_each_matrix(spec, 2, GroupKind::SL, [&](const Matrix& x) {
                const FieldElement &a = x.at(0, 0), &b = x.at(0, 1), &c = x.at(1, 0), &d = x.at(1, 1);
                Matrix expected(spec, 2,
                                {p * b * b + a * a, (p * b * d + a * c) / p, p * b * d + a * c,
                                 (p * d * d + c * c) / p});
                CHECK(q_element(phi, x).value == expected);
            });
        }
    }
}

TEST_CASE("phi(V) = V^{-1} for every variety element at desk scale") {
    FieldSpecPtr f4 = FieldSpec::finite(2);
    Matrix a = make_L_np(f4, 2, FieldElement::one(f4));
    Automorphism phi = Automorphism::inner(a);
    for_each_matrix(f4, 2, GroupKind::SL, [&](const Matrix& x) {
        Matrix v = q_element(phi, x).value;
        CHECK(apply(phi, v) == v.inverse());
    });
    // outer case
    FieldSpecPtr f2 = FieldSpec::gf2();
    Automorphism theta = Automorphism::outer(Matrix::identity(f2, 3));
    for_each_matrix(f2, 3, GroupKind::SL, [&](const Matrix& x) {
        Matrix v = q_element(theta, x).value;
        CHECK(apply(theta, v) == v.inverse());
    });
}

TEST_CASE("enumerate_variety: SL(2,2) and SL(2,4) audits") {
    FieldSpecPtr f2 = FieldSpec::gf2();
    Matrix a = make_L_np(f2, 2, FieldElement::one(f2));
    VarietyReport rep = enumerate_variety(Automorphism::inner(a));
    CHECK(rep.sources == sl_order(2, 2));
    CHECK(rep.distinct >= 1);
    bool has_id = false;
    for (const auto& v : rep.elements) {
        CHECK(v.det().is_one());
        if (v == Matrix::identity(f2, 2)) has_id = true;
    }
    CHECK(has_id);
    CHECK(rep.formula_audit_clean);

    FieldSpecPtr f4 = FieldSpec::finite(2);
    Matrix a4 = make_L_np(f4, 2, FieldElement::one(f4));
    VarietyReport rep4 = enumerate_variety(Automorphism::inner(a4));
    CHECK(rep4.sources == sl_order(2, 4));
    CHECK(rep4.formula_audit_clean);
    CHECK(rep4.formula_disagreements > 0);  // X = Id is always a boundary case

    // outer A = Id over F_2, n=3: the variety is exactly {X X^T}, all symmetric
    Automorphism theta = Automorphism::outer(Matrix::identity(f2, 3));
    VarietyReport rep3 = enumerate_variety(theta);
    for (const auto& v : rep3.elements) CHECK(v == v.transpose());
}

TEST_CASE("budget and field guards") {
    FieldSpecPtr rf = FieldSpec::ratfunc(FieldSpec::gf2());
    Matrix lr = make_L_np(rf, 2, FieldElement::one(rf));
    CHECK_THROWS_AS(enumerate_variety(Automorphism::inner(lr)), infinite_field);
    FieldSpecPtr f8 = FieldSpec::finite(3);
    Matrix l8 = make_L_mc(f8, 4, 1, FieldElement::one(f8));
    CHECK_THROWS_AS(enumerate_variety(Automorphism::inner(l8), 1000), budget_exceeded);
}
