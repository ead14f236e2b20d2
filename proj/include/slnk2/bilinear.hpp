#ifndef SLNK2_BILINEAR_HPP
#define SLNK2_BILINEAR_HPP

#include "slnk2/involution.hpp"

namespace slnk2 {

/// symmetric with all-zero diagonal (characteristic-2 analogue of
/// skew-symmetric); throws not_symmetric otherwise
bool is_alternate(const Matrix& a);

struct CongruenceDiag {
    Matrix q;  // invertible, q^T a q = d
    Matrix d;  // diagonal with nonzero entries
};

/// congruence diagonalization of a symmetric, invertible, non-alternate
/// matrix; the identity q^T a q = d is re-verified before return
CongruenceDiag diagonalize_congruence(const Matrix& a);

/// hyperbolic-pair extraction: q with q^T a q = J for alternate invertible a
Matrix symplectic_normalize(const Matrix& a);

struct CongruenceResult {
    bool congruent = false;
    std::optional<Matrix> q;            // q^T a q = p b
    std::optional<FieldElement> scalar; // p
};

/// projective congruence test: a congruent to p*b for some scalar p
CongruenceResult are_congruent_proj(const Matrix& a, const Matrix& b);

/// outer involution label: alternate, or the canonical square-class multiset
/// of a congruence diagonalization (resolved modulo one global scalar)
ClassLabel classify_outer(const Matrix& a);

}  // namespace slnk2

#endif
