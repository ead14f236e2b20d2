#include <doctest.h>

#include <set>

#include "slnk2/fixed_points.hpp"
#include "slnk2/oracle.hpp"
#include "test_util.hpp"

using namespace slnk2;

namespace {

std::string key_of(const Matrix& m) {
    std::string k;
    for (const auto& e : m.entries()) k += e.sort_key() + ",";
    return k;
}

std::set<std::string> keys_of(const std::vector<Matrix>& v) {
    std::set<std::string> s;
    for (const auto& m : v) s.insert(key_of(m));
    return s;
}

}  // namespace

TEST_CASE("is_fixed: examples") {
    FieldSpecPtr f2 = FieldSpec::gf2();
    Matrix swap(f2, 2, {FieldElement::zero(f2), FieldElement::one(f2), FieldElement::one(f2),
                        FieldElement::zero(f2)});
    Automorphism phi = Automorphism::inner(swap);
    CHECK(is_fixed(phi, swap));  // det = 1 over F_2 and A commutes with itself
    CHECK(is_fixed(phi, Matrix::identity(f2, 2)));

    // outer theta: permutation (1 2) padded in SL(3,2) is fixed iff orthogonal
    Automorphism theta = Automorphism::outer(Matrix::identity(f2, 3));
    Matrix perm(f2, 3);
    perm.set(0, 1, FieldElement::one(f2));
    perm.set(1, 0, FieldElement::one(f2));
    perm.set(2, 2, FieldElement::one(f2));
    CHECK(perm.transpose() * perm == Matrix::identity(f2, 3));
    CHECK(is_fixed(theta, perm));
    Matrix shear = Matrix::identity(f2, 3);
    shear.set(0, 1, FieldElement::one(f2));
    CHECK_FALSE(is_fixed(theta, shear));
    CHECK((shear.transpose() * shear == Matrix::identity(f2, 3)) == false);

    Matrix singular(f2, 2, {FieldElement::one(f2), FieldElement::one(f2), FieldElement::one(f2),
                            FieldElement::one(f2)});
    CHECK_THROWS_AS(is_fixed(phi, singular), singular_input);
}

TEST_CASE("block structure predicate: P-type n=2 and violations") {
    FieldSpecPtr f4 = FieldSpec::finite(2);
    FieldElement p = FieldElement::one(f4);
    ClassLabel plabel{ClassLabel::Kind::inner_p, 0, p, {}};
    // [[a,b],[pb,a]] with a^2 + p b^2 = 1
    FieldElement g = FieldElement::from_bits(f4, 0x2);
    FieldElement a = g + FieldElement::one(f4) /* so that a = 1+g */, b = g;
    // a^2 + b^2 = (a+b)^2 = 1 since a+b = 1
    Matrix x(f4, 2, {a, b, p * b, a});
    CHECK(x.det().is_one());
    CHECK(block_structure_predicate(plabel, x));
    Matrix bad(f4, 2, {a, b, p * b + FieldElement::one(f4), a});
    CHECK_FALSE(block_structure_predicate(plabel, bad));

    FieldSpecPtr f2 = FieldSpec::gf2();
    ClassLabel alt{ClassLabel::Kind::outer_alt, 0, std::nullopt, {}};
    CHECK(block_structure_predicate(alt, Matrix::identity(f2, 4)));
}

TEST_CASE("L-type border relations: derived from the row/column replacement rules") {
    FieldSpecPtr f4 = FieldSpec::finite(2);
    for (const auto& c : enumerate_field(f4)) {
        if (c.is_zero()) continue;
        Matrix l = make_L_mc(f4, 3, 1, c);
        ClassLabel label{ClassLabel::Kind::inner_l, 1, c, {}};
        // the predicate must agree with literal commutation; random samples
        // cover the negative side, block-built matrices the positive side
        std::mt19937_64 rng(97);
        for (int trial = 0; trial < 200; ++trial) {
            Matrix x = testutil::random_matrix(f4, 3, rng);
            if (!x.det().is_one()) continue;
            CHECK(block_structure_predicate(label, x) == (l * x == x * l));
        }
        for (int trial = 0; trial < 200; ++trial) {
            FieldElement a = testutil::random_element(f4, rng);
            FieldElement b = testutil::random_element(f4, rng);
            FieldElement h = testutil::random_element(f4, rng);
            FieldElement g = testutil::random_element(f4, rng);
            FieldElement s = testutil::random_element(f4, rng);
            Matrix x(f4, 3, {a, b, h, c * c * b, a, c * h, c * g, g, s});
            CHECK(block_structure_predicate(label, x));
            CHECK(l * x == x * l);
        }
    }
}

TEST_CASE("enumerate_fixed_group: n=2, p=1 structure over F_2, F_4, F_8") {
    for (int r : {1, 2, 3}) {
        FieldSpecPtr spec = FieldSpec::finite(r);
        Matrix a = make_L_np(spec, 2, FieldElement::one(spec));
        Automorphism phi = Automorphism::inner(a);
        FixedGroupReport rep = enumerate_fixed_group(phi, kDefaultBudget, EnumMethod::scan);
        CHECK(rep.order == spec->order());
        CHECK(rep.all_unipotent);
        CHECK(rep.abelian);
        CHECK(rep.closure_checked);
        // x + y = 1 parametrization: every element is [[1+y,y],[y,1+y]]
        for (const auto& x : rep.elements) {
            CHECK(x.at(0, 0) == x.at(1, 1));
            CHECK(x.at(0, 1) == x.at(1, 0));
            CHECK(x.at(0, 0) + x.at(0, 1) == FieldElement::one(spec));
        }
        // family path agrees
        FixedGroupReport fam = enumerate_fixed_group(phi, kDefaultBudget, EnumMethod::family);
        CHECK(keys_of(rep.elements) == keys_of(fam.elements));
    }
}

TEST_CASE("n=2, p=1, F_2: the fixed group is {Id, [[0,1],[1,0]]}") {
    FieldSpecPtr f2 = FieldSpec::gf2();
    Matrix a = make_L_np(f2, 2, FieldElement::one(f2));
    FixedGroupReport rep = enumerate_fixed_group(Automorphism::inner(a));
    REQUIRE(rep.order == 2);
    std::set<std::string> keys = keys_of(rep.elements);
    CHECK(keys.count(key_of(Matrix::identity(f2, 2))) == 1);
    CHECK(keys.count(key_of(a)) == 1);
}

TEST_CASE("verify_unipotent_model: squares pass, non-squares rejected") {
    FieldSpecPtr f2 = FieldSpec::gf2();
    CHECK(verify_unipotent_model(FieldElement::one(f2)));
    FieldSpecPtr f4 = FieldSpec::finite(2);
    FieldElement g = FieldElement::from_bits(f4, 0x2);
    CHECK(verify_unipotent_model(g * g));
    CHECK(verify_unipotent_model(g));  // g is a square too (finite field)
    FieldSpecPtr rf = FieldSpec::ratfunc(f2);
    FieldElement x = FieldElement::from_poly(rf, Polynomial::x(f2));
    CHECK_THROWS_AS(verify_unipotent_model(x), not_a_square);
    CHECK(verify_unipotent_model(x * x));
}

TEST_CASE("outer fixed groups: orthogonal for A=Id, symplectic for A=J") {
    FieldSpecPtr f2 = FieldSpec::gf2();
    {
        Automorphism theta = Automorphism::outer(Matrix::identity(f2, 3));
        FixedGroupReport rep = enumerate_fixed_group(theta, kDefaultBudget, EnumMethod::scan);
        for (const auto& x : rep.elements) CHECK(x.transpose() * x == Matrix::identity(f2, 3));
        CHECK(rep.closure_checked);
        CHECK(rep.order > 1);
    }
    {
        Matrix j = make_J(f2, 4);
        Automorphism phi = Automorphism::outer(j);
        FixedGroupReport rep = enumerate_fixed_group(phi, kDefaultBudget, EnumMethod::scan);
        for (const auto& x : rep.elements) CHECK(x.transpose() * j * x == j);
        // |Sp(4,2)| = 2^4 (2^2-1)(2^4-1) = 720
        CHECK(rep.order == 720);
    }
}

TEST_CASE("family enumeration equals scan for L-type labels") {
    FieldSpecPtr f2 = FieldSpec::gf2();
    for (int n : {3, 4}) {
        for (int m = 1; 2 * m <= n; ++m) {
            Matrix l = make_L_mc(f2, n, m, FieldElement::one(f2));
            Automorphism phi = Automorphism::inner(l);
            FixedGroupReport scan = enumerate_fixed_group(phi, kDefaultBudget, EnumMethod::scan);
            FixedGroupReport fam = enumerate_fixed_group(phi, kDefaultBudget, EnumMethod::family);
            CHECK(scan.order == fam.order);
            CHECK(keys_of(scan.elements) == keys_of(fam.elements));
        }
    }
}

TEST_CASE("family enumeration tracks a conjugated involution through its witness") {
    FieldSpecPtr f2 = FieldSpec::gf2();
    Matrix l = make_L_mc(f2, 3, 1, FieldElement::one(f2));
    Matrix c = Matrix::identity(f2, 3);
    c.set(0, 2, FieldElement::one(f2));
    c.set(2, 1, FieldElement::one(f2));
    Matrix a = c * l * c.inverse();
    Automorphism phi = Automorphism::inner(a);
    FixedGroupReport scan = enumerate_fixed_group(phi, kDefaultBudget, EnumMethod::scan);
    FixedGroupReport fam = enumerate_fixed_group(phi, kDefaultBudget, EnumMethod::family);
    CHECK(keys_of(scan.elements) == keys_of(fam.elements));
    for (const auto& x : fam.elements) CHECK(is_fixed(phi, x));
}

TEST_CASE("budget guard") {
    FieldSpecPtr f8 = FieldSpec::finite(3);
    Matrix l = make_L_mc(f8, 4, 1, FieldElement::one(f8));
    CHECK_THROWS_AS(enumerate_fixed_group(Automorphism::inner(l), 1000, EnumMethod::scan), budget_exceeded);
    FieldSpecPtr rf = FieldSpec::ratfunc(FieldSpec::gf2());
    Matrix lr = make_L_np(rf, 2, FieldElement::one(rf));
    CHECK_THROWS_AS(enumerate_fixed_group(Automorphism::inner(lr)), infinite_field);
}
