#ifndef SLNK2_INVOLUTION_HPP
#define SLNK2_INVOLUTION_HPP

#include <optional>
#include <vector>

#include "slnk2/matrix.hpp"

namespace slnk2 {

/// A k-automorphism of SL(n,k): inner X -> A X A^{-1}, or outer
/// X -> theta(A X A^{-1}) with theta(X) = (X^{-1})^T. Outer requires n > 2
/// (theta is inner for n = 2).
struct Automorphism {
    enum class Parity { inner, outer };
    Parity parity;
    Matrix mat;

    static Automorphism inner(Matrix a);
    static Automorphism outer(Matrix a);
};

/// Canonical label of an isomorphy class of k-involutions.
struct ClassLabel {
    enum class Kind { inner_l, inner_p, outer_diag, outer_alt };
    Kind kind = Kind::inner_l;
    int m = 0;                          // inner_l: number of 2x2 blocks
    std::optional<FieldElement> scalar; // inner_l: c (normalized to 1); inner_p: square-class rep
    std::vector<FieldElement> classes;  // outer_diag: canonical square-class multiset, n entries

    bool operator==(const ClassLabel& o) const;
    bool operator!=(const ClassLabel& o) const { return !(*this == o); }
};

Matrix apply(const Automorphism& phi, const Matrix& x);
bool acts_trivially(const Automorphism& phi);  // inner only; true iff A scalar
bool is_involution(const Automorphism& phi);

/// m blocks [[0,1],[c^2,0]] padded with n-2m diagonal entries c
Matrix make_L_mc(const FieldSpecPtr& spec, int n, int m, const FieldElement& c);
/// n/2 blocks [[0,1],[p,0]]
Matrix make_L_np(const FieldSpecPtr& spec, int n, const FieldElement& p);
/// m blocks [[1,0],[c,1]] padded with 1s; satisfies U L U = cB
Matrix make_U_mc(const FieldSpecPtr& spec, int n, int m, const FieldElement& c);
/// [[0,I],[I,0]], n even
Matrix make_J(const FieldSpecPtr& spec, int n);
/// the unit upper-triangular B with 1/c in the (2i-1,2i) positions, i <= m
Matrix make_B1(const FieldSpecPtr& spec, int n, int m, const FieldElement& c);

Matrix canonical_matrix(const ClassLabel& label, const FieldSpecPtr& spec, int n);

struct InnerClassification {
    ClassLabel label;
    Matrix canonical;   // canonical_matrix(label)
    Matrix witness;     // witness * A * witness^{-1} = scalar * canonical
    FieldElement scalar;
};

/// Classification of an inner involution Inn_A: A^2 = q Id with q a square
/// gives the L-type (m = rank(A + sqrt(q) Id)); q a non-square gives the
/// P-type labelled by the square class of q. Witness verified on every call.
InnerClassification classify_inner(const Matrix& a);

struct IsoResult {
    bool isomorphic = false;
    std::optional<Matrix> witness;       // inner: C with C A C^{-1} = p B; outer: Q with Q^T A Q = p B
    std::optional<FieldElement> scalar;  // p
};

IsoResult are_isomorphic(const Automorphism& phi1, const Automorphism& phi2);

}  // namespace slnk2

#endif
