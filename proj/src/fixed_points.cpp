#include "slnk2/fixed_points.hpp"

#include <set>

#include "slnk2/bilinear.hpp"

namespace slnk2 {

bool is_fixed(const Automorphism& phi, const Matrix& x) {
    if (!x.det().is_one()) throw singular_input("is_fixed expects det X = 1");
    return apply(phi, x) == x;
}

bool block_structure_predicate(const ClassLabel& label, const Matrix& x) {
    const FieldSpecPtr& spec = x.spec();
    int n = x.n();
    switch (label.kind) {
        case ClassLabel::Kind::inner_l: {
            int m = label.m;
            if (m < 1 || 2 * m > n) throw shape_mismatch();
            FieldElement c = label.scalar ? *label.scalar : FieldElement::one(spec);
            FieldElement c2 = c * c;
            for (int bi = 0; bi < m; ++bi)
                for (int bj = 0; bj < m; ++bj) {
                    // block [[a,b],[c^2 b, a]]
                    if (x.at(2 * bi, 2 * bj) != x.at(2 * bi + 1, 2 * bj + 1)) return false;
                    if (x.at(2 * bi + 1, 2 * bj) != c2 * x.at(2 * bi, 2 * bj + 1)) return false;
                }
            for (int bi = 0; bi < m; ++bi)
                for (int r = 2 * m; r < n; ++r)
                    if (x.at(2 * bi + 1, r) != c * x.at(2 * bi, r)) return false;
            for (int bj = 0; bj < m; ++bj)
                for (int r = 2 * m; r < n; ++r)
                    if (x.at(r, 2 * bj) != c * x.at(r, 2 * bj + 1)) return false;
            return true;  // lower-right block is free
        }
        case ClassLabel::Kind::inner_p: {
            if (n % 2 != 0) throw shape_mismatch();
            const FieldElement& p = *label.scalar;
            int m = n / 2;
            for (int bi = 0; bi < m; ++bi)
                for (int bj = 0; bj < m; ++bj) {
                    if (x.at(2 * bi, 2 * bj) != x.at(2 * bi + 1, 2 * bj + 1)) return false;
                    if (x.at(2 * bi + 1, 2 * bj) != p * x.at(2 * bi, 2 * bj + 1)) return false;
                }
            return true;
        }
        case ClassLabel::Kind::outer_diag: {
            Matrix a = canonical_matrix(label, spec, n);
            return x.transpose() * a * x == a;
        }
        case ClassLabel::Kind::outer_alt: {
            Matrix j = make_J(spec, n);
            return x.transpose() * j * x == j;
        }
    }
    return false;
}

namespace {

// odometer over assignments of `count` field elements
bool next_tuple(std::vector<std::size_t>& digits, std::size_t base) {
    for (auto& d : digits) {
        if (++d < base) return true;
        d = 0;
    }
    return false;
}

ClassLabel label_of(const Automorphism& phi) {
    if (phi.parity == Automorphism::Parity::inner) return classify_inner(phi.mat).label;
    return classify_outer(phi.mat);
}

void finalize_report(FixedGroupReport& rep) {
    std::size_t count = rep.elements.size();
    rep.order = count;
    rep.all_unipotent = true;
    for (const auto& x : rep.elements)
        if (!is_unipotent(x)) { rep.all_unipotent = false; break; }
    if (count <= 2000) {
        rep.abelian = true;
        for (std::size_t i = 0; i < count && rep.abelian; ++i)
            for (std::size_t j = i + 1; j < count; ++j)
                if (rep.elements[i] * rep.elements[j] != rep.elements[j] * rep.elements[i]) {
                    rep.abelian = false;
                    break;
                }
        // closure under multiplication and inverse
        std::set<std::string> keys;
        auto key_of = [](const Matrix& m) {
            std::string k;
            for (const auto& e : m.entries()) k += e.sort_key() + ",";
            return k;
        };
        for (const auto& x : rep.elements) keys.insert(key_of(x));
        bool closed = true;
        for (const auto& x : rep.elements) {
            if (!keys.count(key_of(x.inverse()))) { closed = false; break; }
            for (const auto& y : rep.elements)
                if (!keys.count(key_of(x * y))) { closed = false; break; }
            if (!closed) break;
        }
        if (!closed) throw error("fixed set is not closed (internal)");
        rep.closure_checked = true;
    }
}

}  // namespace

FixedGroupReport enumerate_fixed_group(const Automorphism& phi, std::uint64_t budget, EnumMethod method) {
    const FieldSpecPtr& spec = phi.mat.spec();
    if (!spec->is_finite()) throw infinite_field("enumerate_fixed_group");
    int n = phi.mat.n();
    std::uint64_t q = spec->order();

    FixedGroupReport rep;
    rep.n = n;
    rep.field = field_descriptor(*spec);

    bool use_family = false;
    ClassLabel label{ClassLabel::Kind::inner_l, 1, std::nullopt, {}};
    if (method != EnumMethod::scan && phi.parity == Automorphism::Parity::inner && is_involution(phi)) {
        label = label_of(phi);
        if (label.kind == ClassLabel::Kind::inner_l) use_family = true;
    }
    if (method == EnumMethod::family && !use_family)
        throw error("family enumeration needs an inner L-type involution");

    auto full_cost = [&](int params) {
        double c = 1;
        for (int i = 0; i < params; ++i) c *= static_cast<double>(q);
        return c;
    };

    std::vector<FieldElement> elems = enumerate_field(spec);

    if (!use_family) {
        if (full_cost(n * n) > static_cast<double>(budget))
            throw budget_exceeded("fixed-group scan q^(n^2)");
        std::vector<std::size_t> digits(static_cast<std::size_t>(n) * n, 0);
        do {
            std::vector<FieldElement> entries;
            entries.reserve(digits.size());
            for (auto d : digits) entries.push_back(elems[d]);
            Matrix x(spec, n, std::move(entries));
            if (!x.det().is_one()) continue;
            if (apply(phi, x) == x) rep.elements.push_back(std::move(x));
        } while (next_tuple(digits, elems.size()));
        rep.method = "scan";
        rep.elements_complete = true;
        finalize_report(rep);
        return rep;
    }

    // family path: enumerate the block parametrization of the canonical
    // involution's fixed group, then conjugate back through the witness
    InnerClassification cls = classify_inner(phi.mat);
    int m = cls.label.m;
    int free_params = 2 * m * m + 2 * m * (n - 2 * m) + (n - 2 * m) * (n - 2 * m);
    if (full_cost(free_params) > static_cast<double>(budget))
        throw budget_exceeded("fixed-group family enumeration");
    FieldElement c = FieldElement::one(spec);  // canonical label uses c = 1
    Matrix winv = cls.witness.inverse();
    std::vector<std::size_t> digits(static_cast<std::size_t>(free_params), 0);
    do {
        std::size_t pos = 0;
        auto take = [&]() { return elems[digits[pos++]]; };
        Matrix x(spec, n);
        for (int bi = 0; bi < m; ++bi)
            for (int bj = 0; bj < m; ++bj) {
                FieldElement a = take(), b = take();
                x.set(2 * bi, 2 * bj, a);
                x.set(2 * bi + 1, 2 * bj + 1, a);
                x.set(2 * bi, 2 * bj + 1, b);
                x.set(2 * bi + 1, 2 * bj, c * c * b);
            }
        for (int bi = 0; bi < m; ++bi)
            for (int r = 2 * m; r < n; ++r) {
                FieldElement h = take();
                x.set(2 * bi, r, h);
                x.set(2 * bi + 1, r, c * h);
            }
        for (int bj = 0; bj < m; ++bj)
            for (int r = 2 * m; r < n; ++r) {
                FieldElement g = take();
                x.set(r, 2 * bj + 1, g);
                x.set(r, 2 * bj, c * g);
            }
        for (int i = 2 * m; i < n; ++i)
            for (int j = 2 * m; j < n; ++j) x.set(i, j, take());
        if (!x.det().is_one()) continue;
        // x is fixed by the canonical involution; pull back through C
        Matrix y = winv * x * cls.witness;
        rep.elements.push_back(std::move(y));
    } while (next_tuple(digits, elems.size()));
    rep.method = "family";
    rep.elements_complete = true;
    finalize_report(rep);
    return rep;
}

bool verify_unipotent_model(const FieldElement& p) {
    const FieldSpecPtr& spec = p.spec();
    if (p.is_zero()) throw zero_input("verify_unipotent_model");
    if (!p.is_square()) throw not_a_square("p");
    FieldElement s = p.sqrt();
    FieldElement one = FieldElement::one(spec), zero = FieldElement::zero(spec);

    Matrix a(spec, 2, {zero, one, p, zero});
    Matrix u(spec, 2, {one, zero, s, one});
    Matrix expected(spec, 2, {s, one, zero, s});
    if (u * a * u != expected) return false;

    Matrix b(spec, 2, {one, s.inverse(), zero, one});
    if (u * a * u != b * s) return false;

    auto m_of = [&](const FieldElement& y) { return Matrix(spec, 2, {one, y, zero, one}); };

    if (spec->is_finite() && spec->degree() <= 8) {
        Automorphism inn_b = Automorphism::inner(b);
        std::vector<FieldElement> elems = enumerate_field(spec);
        // fixed group of Inn_B must be exactly { [[1,y],[0,1]] }
        std::uint64_t found = 0;
        for (const auto& e00 : elems)
            for (const auto& e01 : elems)
                for (const auto& e10 : elems)
                    for (const auto& e11 : elems) {
                        Matrix x(spec, 2, {e00, e01, e10, e11});
                        if (!x.det().is_one()) continue;
                        bool fixed = apply(inn_b, x) == x;
                        bool triangular = e10.is_zero() && e00.is_one() && e11.is_one();
                        if (fixed != triangular) return false;
                        if (fixed) ++found;
                    }
        if (found != spec->order()) return false;
        // additivity of the parametrization
        for (const auto& y1 : elems)
            for (const auto& y2 : elems)
                if (m_of(y1) * m_of(y2) != m_of(y1 + y2)) return false;
        // the fixed group of Inn_A is the U-conjugate of the triangular group
        Automorphism inn_a = Automorphism::inner(a);
        for (const auto& y : elems) {
            Matrix h = u * m_of(y) * u;  // U^{-1} = U
            if (apply(inn_a, h) != h) return false;
        }
    } else {
        // infinite field: spot-check the parametrization algebraically
        FieldElement y1 = spec->is_finite() ? FieldElement::one(spec)
                                            : FieldElement::from_poly(spec, Polynomial::x(spec->base()));
        FieldElement y2 = y1 * y1 + FieldElement::one(spec);
        if (m_of(y1) * m_of(y2) != m_of(y1 + y2)) return false;
        Automorphism inn_a = Automorphism::inner(a);
        for (const auto& y : {y1, y2, y1 + y2}) {
            Matrix h = u * m_of(y) * u;
            if (apply(inn_a, h) != h) return false;
        }
    }
    return true;
}

}  // namespace slnk2
