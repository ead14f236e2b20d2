#ifndef SLNK2_POLY_HPP
#define SLNK2_POLY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "slnk2/field.hpp"

namespace slnk2 {

/// Dense univariate polynomial over a FieldSpec, lowest degree first,
/// no trailing zero coefficients. The zero polynomial has empty support.
class Polynomial {
public:
    explicit Polynomial(FieldSpecPtr spec) : spec_(std::move(spec)) {}
    Polynomial(FieldSpecPtr spec, std::vector<FieldElement> coeffs);

    static Polynomial zero(const FieldSpecPtr& spec) { return Polynomial(spec); }
    static Polynomial constant(const FieldElement& c);
    static Polynomial one(const FieldSpecPtr& spec);
    static Polynomial x(const FieldSpecPtr& spec);
    static Polynomial monomial(const FieldElement& c, int k);

    const FieldSpecPtr& spec() const { return spec_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    FieldElement coeff(int k) const;
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    FieldElement leading() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const { return *this + o; }  // char 2
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const FieldElement& c) const;
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
    Polynomial operator/(const Polynomial& o) const { return divmod(o).first; }
    Polynomial operator%(const Polynomial& o) const { return divmod(o).second; }
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial monic() const;
    FieldElement eval(const FieldElement& at) const;

private:
    FieldSpecPtr spec_;
    std::vector<FieldElement> coeffs_;
    void trim();
};

/// reduced fraction payload of a ratfunc FieldElement
struct RatFunc {
    Polynomial num;
    Polynomial den;
};

/// monic gcd by the plain Euclidean algorithm
Polynomial poly_gcd(Polynomial a, Polynomial b);
Polynomial poly_lcm(const Polynomial& a, const Polynomial& b);

/// formal derivative; in characteristic 2 every even-degree term vanishes
Polynomial derivative(const Polynomial& f);

/// f = g^2 test: derivative zero and every stored coefficient a square;
/// returns the witness g on success
std::pair<bool, std::optional<Polynomial>> is_square_poly(const Polynomial& f);

/// monic product of the distinct irreducible factors (radical), via the
/// characteristic-2 squarefree decomposition
Polynomial squarefree_part(const Polynomial& f);

/// the monic squarefree s with f = s·g^2 (odd-multiplicity factors);
/// s = f/gcd(f,f') in characteristic 2, and s = 1 when f' = 0
Polynomial square_class_part(const Polynomial& f);

/// no repeated roots in the algebraic closure: gcd(f, f') = 1, with
/// f' = 0 forcing false for deg f >= 1 (covers imperfect coefficients)
bool squarefree_over_closure(const Polynomial& f);

}  // namespace slnk2

#endif
