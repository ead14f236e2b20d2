#include "slnk2/involution.hpp"

#include "slnk2/bilinear.hpp"

namespace slnk2 {

Automorphism Automorphism::inner(Matrix a) {
    if (a.det().is_zero()) throw singular_input("automorphism matrix");
    return Automorphism{Parity::inner, std::move(a)};
}

Automorphism Automorphism::outer(Matrix a) {
    if (a.n() <= 2) throw error("outer automorphisms require n > 2");
    if (a.det().is_zero()) throw singular_input("automorphism matrix");
    return Automorphism{Parity::outer, std::move(a)};
}

bool ClassLabel::operator==(const ClassLabel& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
        case Kind::inner_l:
            return m == o.m;  // c is normalized, not part of the invariant
        case Kind::inner_p:
            return *scalar == *o.scalar;
        case Kind::outer_alt:
            return true;
        case Kind::outer_diag: {
            if (classes.size() != o.classes.size()) return false;
            for (std::size_t i = 0; i < classes.size(); ++i)
                if (classes[i] != o.classes[i]) return false;
            return true;
        }
    }
    return false;
}

Matrix apply(const Automorphism& phi, const Matrix& x) {
    if (x.n() != phi.mat.n()) throw dimension_mismatch();
    if (x.det().is_zero()) throw singular_input("apply");
    const Matrix& a = phi.mat;
    if (phi.parity == Automorphism::Parity::inner) return a * x * a.inverse();
    // theta(A X A^{-1}) = A^{-T} (X^{-1})^T A^T
    Matrix at = a.transpose();
    return at.inverse() * x.inverse().transpose() * at;
}

bool acts_trivially(const Automorphism& phi) {
    if (phi.parity != Automorphism::Parity::inner)
        throw wrong_parity("outer automorphisms never act trivially for n > 2");
    return phi.mat.is_scalar();
}

bool is_involution(const Automorphism& phi) {
    const Matrix& a = phi.mat;
    if (phi.parity == Automorphism::Parity::outer) return a == a.transpose();
    if (a.is_scalar()) return false;  // order 1
    return (a * a).is_scalar();
}

Matrix make_L_mc(const FieldSpecPtr& spec, int n, int m, const FieldElement& c) {
    if (m < 1 || 2 * m > n) throw inconsistent_label("L_{m,c^2,c} needs 1 <= m <= n/2");
    if (c.is_zero()) throw inconsistent_label("c must be nonzero");
    Matrix a(spec, n);
    FieldElement c2 = c * c;
    for (int i = 0; i < m; ++i) {
        a.set(2 * i, 2 * i + 1, FieldElement::one(spec));
        a.set(2 * i + 1, 2 * i, c2);
    }
    for (int i = 2 * m; i < n; ++i) a.set(i, i, c);
    return a;
}

Matrix make_L_np(const FieldSpecPtr& spec, int n, const FieldElement& p) {
    if (n % 2 != 0) throw inconsistent_label("L_{n/2,p} needs even n");
    if (p.is_zero()) throw inconsistent_label("p must be nonzero");
    Matrix a(spec, n);
    for (int i = 0; i < n / 2; ++i) {
        a.set(2 * i, 2 * i + 1, FieldElement::one(spec));
        a.set(2 * i + 1, 2 * i, p);
    }
    return a;
}

Matrix make_U_mc(const FieldSpecPtr& spec, int n, int m, const FieldElement& c) {
    if (m < 1 || 2 * m > n) throw inconsistent_label("U_{m,c} needs 1 <= m <= n/2");
    Matrix u = Matrix::identity(spec, n);
    for (int i = 0; i < m; ++i) u.set(2 * i + 1, 2 * i, c);
    return u;
}

Matrix make_J(const FieldSpecPtr& spec, int n) {
    if (n % 2 != 0) throw odd_dimension();
    Matrix j(spec, n);
    for (int i = 0; i < n / 2; ++i) {
        j.set(i, n / 2 + i, FieldElement::one(spec));
        j.set(n / 2 + i, i, FieldElement::one(spec));
    }
    return j;
}

Matrix make_B1(const FieldSpecPtr& spec, int n, int m, const FieldElement& c) {
    Matrix b = Matrix::identity(spec, n);
    FieldElement cinv = c.inverse();
    for (int i = 0; i < m; ++i) b.set(2 * i, 2 * i + 1, cinv);
    return b;
}

Matrix canonical_matrix(const ClassLabel& label, const FieldSpecPtr& spec, int n) {
    switch (label.kind) {
        case ClassLabel::Kind::inner_l:
            return make_L_mc(spec, n, label.m, label.scalar ? *label.scalar : FieldElement::one(spec));
        case ClassLabel::Kind::inner_p:
            return make_L_np(spec, n, *label.scalar);
        case ClassLabel::Kind::outer_alt:
            return make_J(spec, n);
        case ClassLabel::Kind::outer_diag: {
            if (static_cast<int>(label.classes.size()) != n)
                throw inconsistent_label("outer-diag label needs n class entries");
            Matrix d(spec, n);
            for (int i = 0; i < n; ++i) d.set(i, i, label.classes[static_cast<std::size_t>(i)]);
            return d;
        }
    }
    throw inconsistent_label("unknown label kind");
}

InnerClassification classify_inner(const Matrix& a) {
    if (!is_involution(Automorphism{Automorphism::Parity::inner, a})) throw not_an_involution();
    const FieldSpecPtr& spec = a.spec();
    int n = a.n();
    FieldElement q = (a * a).at(0, 0);

    ClassLabel label;
    Matrix canonical(spec, n);
    FieldElement p = FieldElement::one(spec);
    if (q.is_square()) {
        FieldElement c = q.sqrt();
        int m = (a + Matrix::scalar(spec, n, c)).rank();
        label = ClassLabel{ClassLabel::Kind::inner_l, m, FieldElement::one(spec), {}};
        canonical = make_L_mc(spec, n, m, FieldElement::one(spec));
        p = c;
    } else {
        if (n % 2 != 0) throw error("non-square scalar forces even dimension");
        FieldElement rep = q.square_class_rep();
        label = ClassLabel{ClassLabel::Kind::inner_p, 0, rep, {}};
        canonical = make_L_np(spec, n, rep);
        p = (q / rep).sqrt();
    }
    auto [ok, witness] = are_conjugate(a, canonical * p);
    if (!ok || !witness) throw error("classification target is not conjugate (internal)");
    // verified: C A C^{-1} = p * canonical
    if (*witness * a != (canonical * p) * *witness) throw error("classification witness check failed");
    return InnerClassification{std::move(label), std::move(canonical), std::move(*witness), std::move(p)};
}

IsoResult are_isomorphic(const Automorphism& phi1, const Automorphism& phi2) {
    if (phi1.mat.n() != phi2.mat.n() || !phi1.mat.spec()->same_as(*phi2.mat.spec()))
        throw shape_mismatch();
    if (!is_involution(phi1) || !is_involution(phi2)) throw not_an_involution();
    if (phi1.parity != phi2.parity) return IsoResult{false, std::nullopt, std::nullopt};

    if (phi1.parity == Automorphism::Parity::outer) {
        CongruenceResult cr = are_congruent_proj(phi1.mat, phi2.mat);
        return IsoResult{cr.congruent, std::move(cr.q), std::move(cr.scalar)};
    }

    InnerClassification c1 = classify_inner(phi1.mat);
    InnerClassification c2 = classify_inner(phi2.mat);
    if (c1.label != c2.label) return IsoResult{false, std::nullopt, std::nullopt};
    // C1 A C1^{-1} = p1 K and C2 B C2^{-1} = p2 K give
    // (C2^{-1} C1) A (C2^{-1} C1)^{-1} = (p1/p2) B
    Matrix c = c2.witness.inverse() * c1.witness;
    FieldElement p = c1.scalar / c2.scalar;
    if (c * phi1.mat != (phi2.mat * p) * c) throw error("isomorphy witness check failed");
    return IsoResult{true, std::move(c), std::move(p)};
}

}  // namespace slnk2
