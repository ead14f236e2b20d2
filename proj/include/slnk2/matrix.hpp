#ifndef SLNK2_MATRIX_HPP
#define SLNK2_MATRIX_HPP

#include <optional>
#include <utility>
#include <vector>

#include "slnk2/poly.hpp"

namespace slnk2 {

/// Exact square matrix over a FieldSpec, row-major. Immutable in spirit:
/// operations return fresh values.
class Matrix {
public:
    Matrix(FieldSpecPtr spec, int n);  // zero matrix
    Matrix(FieldSpecPtr spec, int n, std::vector<FieldElement> entries);

    static Matrix identity(const FieldSpecPtr& spec, int n);
    static Matrix scalar(const FieldSpecPtr& spec, int n, const FieldElement& c);

    const FieldSpecPtr& spec() const { return spec_; }
    int n() const { return n_; }
    const FieldElement& at(int i, int j) const { return e_[idx(i, j)]; }
    void set(int i, int j, const FieldElement& v) { e_[idx(i, j)] = v; }
    const std::vector<FieldElement>& entries() const { return e_; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator*(const FieldElement& c) const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const;
    FieldElement det() const;      // constant term of the division-free char poly
    Matrix inverse() const;        // Gauss-Jordan; throws singular_matrix
    Matrix adjugate() const;       // cofactor transpose; A·adj(A) = det(A)·Id
    int rank() const;

    bool is_scalar() const;
    bool is_identity() const;

private:
    FieldSpecPtr spec_;
    int n_ = 0;
    std::vector<FieldElement> e_;
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }
};

/// monic char poly det(tI - A), Samuelson-Berkowitz (division-free)
Polynomial char_poly(const Matrix& a);

/// least-degree monic annihilator, per-basis-vector Krylov lcm
Polynomial min_poly(const Matrix& a);

/// evaluate f at a matrix argument (Horner)
Matrix eval_poly_at(const Polynomial& f, const Matrix& a);

/// nontrivial invariant factors d_1 | d_2 | ... | d_k of tI - A, monic;
/// product is char_poly, last is min_poly
std::vector<Polynomial> invariant_factors(const Matrix& a);

struct RationalForm {
    Matrix form;   // block-diagonal companion matrices of the invariant factors
    Matrix basis;  // columns are the cyclic bases: A * basis = basis * form
};
RationalForm rational_canonical_form(const Matrix& a);

/// conjugacy test via invariant factors; on success the witness c satisfies
/// c * a * c^{-1} = b exactly (re-verified before return)
std::pair<bool, std::optional<Matrix>> are_conjugate(const Matrix& a, const Matrix& b);

bool is_unipotent(const Matrix& a);   // (A - Id)^n = 0
bool is_semisimple(const Matrix& a);  // min poly squarefree over the closure

}  // namespace slnk2

#endif
