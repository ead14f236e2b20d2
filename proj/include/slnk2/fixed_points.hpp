#ifndef SLNK2_FIXED_POINTS_HPP
#define SLNK2_FIXED_POINTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "slnk2/involution.hpp"

namespace slnk2 {

bool is_fixed(const Automorphism& phi, const Matrix& x);

/// the explicit coordinate description of the fixed-point group of the
/// canonical involution attached to the label:
///   inner L(m,c):  2x2 blocks [[a,b],[c^2 b,a]] upper-left, right part rows
///                  with row_{2i} = c*row_{2i-1}, left part columns with
///                  col_{2j-1} = c*col_{2j}, free lower-right
///   inner P(p):    full 2x2 block pattern [[a,b],[p b,a]]
///   outer diag A:  X^T A X = A
///   outer alt:     X^T J X = J
bool block_structure_predicate(const ClassLabel& label, const Matrix& x);

struct FixedGroupReport {
    std::string field;
    int n = 0;
    std::uint64_t order = 0;
    std::vector<Matrix> elements;   // all elements when small, else a sample
    bool elements_complete = false;
    bool all_unipotent = false;
    bool abelian = false;
    bool closure_checked = false;
    std::string method;  // "scan" or "family"
};

enum class EnumMethod { automatic, scan, family };

/// exhaustive fixed group of phi over a finite field; the family method
/// walks the label's block parametrization instead of all of SL(n,q)
FixedGroupReport enumerate_fixed_group(const Automorphism& phi, std::uint64_t budget = kDefaultBudget,
                                       EnumMethod method = EnumMethod::automatic);

/// checks the n = 2 unipotent model for Inn_{[[0,1],[p,0]]} with p a square:
/// the printed conjugation identity, the triangular fixed group of the
/// conjugate, and the additive parametrization y -> [[1,y],[0,1]]
bool verify_unipotent_model(const FieldElement& p);

}  // namespace slnk2

#endif
