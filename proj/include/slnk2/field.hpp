#ifndef SLNK2_FIELD_HPP
#define SLNK2_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "slnk2/common.hpp"

namespace slnk2 {

class Polynomial;
struct RatFunc;

/// Field descriptor for the two supported characteristic-2 families:
/// GF(2^r) with a fixed irreducible modulus, and the rational function
/// field F_q(x) over such a finite base. Immutable, shared by value types.
class FieldSpec {
public:
    enum class Kind { finite, ratfunc };

    static std::shared_ptr<const FieldSpec> gf2();
    static std::shared_ptr<const FieldSpec> finite(int r);                       // default modulus table
    static std::shared_ptr<const FieldSpec> finite(int r, std::uint64_t modulus);
    static std::shared_ptr<const FieldSpec> ratfunc(std::shared_ptr<const FieldSpec> base,
                                                    int degree_cap = kMaxRatfuncDegree);

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::finite; }
    int degree() const { return r_; }                 // finite: r
    std::uint64_t modulus() const { return modulus_; }
    std::uint64_t order() const { return std::uint64_t(1) << r_; }  // finite: 2^r
    const std::shared_ptr<const FieldSpec>& base() const { return base_; }
    int degree_cap() const { return degree_cap_; }

    bool same_as(const FieldSpec& other) const;

    /// the default modulus shipped for 1 <= r <= 16: the lowest-bitmask
    /// irreducible polynomial of degree r over F_2
    static std::uint64_t default_modulus(int r);
    static bool is_irreducible_gf2(std::uint64_t poly);

private:
    FieldSpec() = default;
    Kind kind_ = Kind::finite;
    int r_ = 1;
    std::uint64_t modulus_ = 0x2;
    std::shared_ptr<const FieldSpec> base_;
    int degree_cap_ = kMaxRatfuncDegree;
};

using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

/// An element of GF(2^r) (coefficient bitmask) or of F_q(x) (reduced
/// numerator/denominator pair, denominator monic). Immutable value type;
/// all operations are pure.
class FieldElement {
public:
    FieldElement() = default;  // unusable placeholder; spec() is null

    static FieldElement zero(const FieldSpecPtr& spec);
    static FieldElement one(const FieldSpecPtr& spec);
    static FieldElement from_bits(const FieldSpecPtr& spec, std::uint64_t bits);
    static FieldElement from_ratfunc(const FieldSpecPtr& spec, Polynomial num, Polynomial den);
    static FieldElement from_poly(const FieldSpecPtr& spec, Polynomial num);  // den = 1

    const FieldSpecPtr& spec() const { return spec_; }
    bool valid() const { return spec_ != nullptr; }
    bool is_zero() const;
    bool is_one() const;
    std::uint64_t bits() const { return bits_; }  // finite only
    const Polynomial& num() const;                // ratfunc only
    const Polynomial& den() const;                // ratfunc only

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const { return *this + o; }  // char 2
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement inverse() const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    /// unique square root in GF(2^r) (Frobenius inverse a^(2^(r-1)));
    /// for F_q(x) requires is_square and throws not_a_square otherwise
    FieldElement sqrt() const;
    /// true iff the element lies in (k*)^2 ∪ {0}
    bool is_square() const;
    /// canonical representative of a·(k*)^2: 1 for finite fields, the monic
    /// squarefree s with a = s·g^2 for ratfunc. Throws zero_input on 0.
    FieldElement square_class_rep() const;

    FieldElement pow(std::uint64_t e) const;

    /// a stable total-order key (used to sort class-rep multisets)
    std::string sort_key() const;

private:
    FieldSpecPtr spec_;
    std::uint64_t bits_ = 0;
    std::shared_ptr<const RatFunc> rf_;
    void check_same(const FieldElement& o) const;
};

/// all 2^r elements of a finite spec, in bitmask order
std::vector<FieldElement> enumerate_field(const FieldSpecPtr& spec);

/// canonical descriptor: "gf2" | "gf2e:r=<r>[:mod=<hex>]" | "ratfunc:q=<2^r>"
std::string field_descriptor(const FieldSpec& spec);

// bitmask polynomial helpers over F_2 (bit i = coefficient of x^i)
namespace gf2x {
int degree(std::uint64_t p);  // -1 for zero
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod);
std::uint64_t mod(std::uint64_t a, std::uint64_t b);
}  // namespace gf2x

}  // namespace slnk2

#endif
