#ifndef SLNK2_SYM_VARIETY_HPP
#define SLNK2_SYM_VARIETY_HPP

#include <cstdint>
#include <vector>

#include "slnk2/involution.hpp"

namespace slnk2 {

/// V = X * phi(X)^{-1}: a commutator X A X^{-1} A^{-1} for inner phi,
/// X A X^T A^{-1} for outer phi (A symmetric)
struct VarietyElement {
    Matrix source;
    Matrix value;
    bool semisimple = false;
};

VarietyElement q_element(const Automorphism& phi, const Matrix& x);

/// the closed-form n = 2 criterion a^2 + d^2 + p b^2 + c^2/p != 0 for
/// X = [[a,b],[c,d]]; the scalar-value boundary is audited separately
bool semisimple_by_formula_n2(const FieldElement& p, const Matrix& x);

struct VarietyReport {
    std::uint64_t sources = 0;           // |SL(n,q)|
    std::uint64_t distinct = 0;          // |Q_k|
    std::uint64_t semisimple = 0;        // semisimple members of Q_k
    std::vector<Matrix> elements;        // the deduplicated variety
    // n = 2 inner audit: sources where the formula and the direct minimal
    // polynomial test disagree; must all have scalar variety value
    std::uint64_t formula_disagreements = 0;
    std::uint64_t scalar_value_exceptions = 0;
    bool formula_audit_clean = false;    // disagreements == scalar-value cases
};

VarietyReport enumerate_variety(const Automorphism& phi, std::uint64_t budget = kDefaultBudget);

}  // namespace slnk2

#endif
