#include "slnk2/field.hpp"

#include <array>
#include <cstdio>

#include "slnk2/poly.hpp"

namespace slnk2 {

namespace gf2x {

int degree(std::uint64_t p) {
    if (p == 0) return -1;
    return 63 - __builtin_clzll(p);
}

std::uint64_t mod(std::uint64_t a, std::uint64_t b) {
    int db = degree(b);
    while (a != 0 && degree(a) >= db) a ^= b << (degree(a) - db);
    return a;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    // carry-less multiply with interleaved reduction; deg(m) <= 24 keeps
    // intermediates far below 64 bits
    std::uint64_t r = 0;
    int dm = degree(m);
    while (b != 0) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (degree(a) >= dm) a ^= m << (degree(a) - dm);
    }
    return mod(r, m);
}

}  // namespace gf2x

// lowest-bitmask irreducible polynomial of each degree over F_2
static constexpr std::array<std::uint64_t, 17> kDefaultModuli = {
    0,        // unused
    0x2,      // x
    0x7,      // x^2+x+1
    0xB,      // x^3+x+1
    0x13,     // x^4+x+1
    0x25,     // x^5+x^2+1
    0x43,     // x^6+x+1
    0x83,     // x^7+x+1
    0x11B,    // x^8+x^4+x^3+x+1
    0x203,    // x^9+x+1
    0x409,    // x^10+x^3+1
    0x805,    // x^11+x^2+1
    0x1009,   // x^12+x^3+1
    0x201B,   // x^13+x^4+x^3+x+1
    0x4021,   // x^14+x^5+1
    0x8003,   // x^15+x+1
    0x1002B,  // x^16+x^5+x^3+x+1
};

std::uint64_t FieldSpec::default_modulus(int r) {
    if (r < 1 || r > 16) throw error("no default modulus for r=" + std::to_string(r) + "; supply one explicitly");
    return kDefaultModuli[static_cast<std::size_t>(r)];
}

bool FieldSpec::is_irreducible_gf2(std::uint64_t poly) {
    int r = gf2x::degree(poly);
    if (r < 1) return false;
    // trial division against every polynomial of degree 1..r/2
    for (int d = 1; d <= r / 2; ++d) {
        for (std::uint64_t q = std::uint64_t(1) << d; q < (std::uint64_t(1) << (d + 1)); ++q) {
            if (gf2x::mod(poly, q) == 0) return false;
        }
    }
    return true;
}

FieldSpecPtr FieldSpec::gf2() {
    static FieldSpecPtr instance = finite(1);
    return instance;
}

FieldSpecPtr FieldSpec::finite(int r) { return finite(r, default_modulus(r)); }

FieldSpecPtr FieldSpec::finite(int r, std::uint64_t modulus) {
    if (r < 1 || r > kMaxExtensionDegree)
        throw error("extension degree out of range: " + std::to_string(r));
    if (gf2x::degree(modulus) != r) throw error("modulus degree does not match r");
    if (!is_irreducible_gf2(modulus)) throw error("modulus is reducible over F_2");
    auto s = std::shared_ptr<FieldSpec>(new FieldSpec());
    s->kind_ = Kind::finite;
    s->r_ = r;
    s->modulus_ = modulus;
    return s;
}

FieldSpecPtr FieldSpec::ratfunc(FieldSpecPtr base, int degree_cap) {
    if (!base || !base->is_finite()) throw error("ratfunc base must be a finite field");
    auto s = std::shared_ptr<FieldSpec>(new FieldSpec());
    s->kind_ = Kind::ratfunc;
    s->base_ = std::move(base);
    s->r_ = s->base_->degree();
    s->modulus_ = s->base_->modulus();
    s->degree_cap_ = degree_cap;
    return s;
}

bool FieldSpec::same_as(const FieldSpec& o) const {
    if (kind_ != o.kind_) return false;
    if (kind_ == Kind::finite) return r_ == o.r_ && modulus_ == o.modulus_;
    return base_->same_as(*o.base_);
}

// ---------------------------------------------------------------------------

void FieldElement::check_same(const FieldElement& o) const {
    if (!spec_ || !o.spec_ || !spec_->same_as(*o.spec_)) throw field_mismatch();
}

FieldElement FieldElement::zero(const FieldSpecPtr& spec) {
    if (spec->is_finite()) return from_bits(spec, 0);
    return from_ratfunc(spec, Polynomial::zero(spec->base()), Polynomial::one(spec->base()));
}

FieldElement FieldElement::one(const FieldSpecPtr& spec) {
    if (spec->is_finite()) return from_bits(spec, 1);
    return from_ratfunc(spec, Polynomial::one(spec->base()), Polynomial::one(spec->base()));
}

FieldElement FieldElement::from_bits(const FieldSpecPtr& spec, std::uint64_t bits) {
    if (!spec->is_finite()) throw error("from_bits needs a finite field");
    FieldElement e;
    e.spec_ = spec;
    e.bits_ = gf2x::mod(bits, spec->modulus());
    return e;
}

FieldElement FieldElement::from_ratfunc(const FieldSpecPtr& spec, Polynomial num, Polynomial den) {
    if (spec->is_finite()) throw error("from_ratfunc needs a ratfunc field");
    if (!num.spec()->same_as(*spec->base()) || !den.spec()->same_as(*spec->base()))
        throw field_mismatch();
    if (den.is_zero()) throw division_by_zero();
    if (num.is_zero()) den = Polynomial::one(spec->base());
    else {
        Polynomial g = poly_gcd(num, den);
        if (g.degree() > 0) {
            num = num / g;
            den = den / g;
        }
        FieldElement lead = den.leading();
        if (!lead.is_one()) {
            FieldElement inv = lead.inverse();
            num = num * inv;
            den = den * inv;
        }
    }
    if (num.degree() > spec->degree_cap() || den.degree() > spec->degree_cap())
        throw budget_exceeded("ratfunc degree cap " + std::to_string(spec->degree_cap()));
    FieldElement e;
    e.spec_ = spec;
    e.rf_ = std::make_shared<RatFunc>(RatFunc{std::move(num), std::move(den)});
    return e;
}

FieldElement FieldElement::from_poly(const FieldSpecPtr& spec, Polynomial num) {
    return from_ratfunc(spec, std::move(num), Polynomial::one(spec->base()));
}

const Polynomial& FieldElement::num() const {
    if (!rf_) throw error("num() on a finite-field element");
    return rf_->num;
}

const Polynomial& FieldElement::den() const {
    if (!rf_) throw error("den() on a finite-field element");
    return rf_->den;
}

bool FieldElement::is_zero() const {
    if (!spec_) throw error("uninitialized field element");
    return spec_->is_finite() ? bits_ == 0 : rf_->num.is_zero();
}

bool FieldElement::is_one() const {
    if (!spec_) throw error("uninitialized field element");
    if (spec_->is_finite()) return bits_ == 1;
    return rf_->num.is_one() && rf_->den.is_one();
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    if (spec_->is_finite()) return from_bits(spec_, bits_ ^ o.bits_);
    return from_ratfunc(spec_, rf_->num * o.rf_->den + o.rf_->num * rf_->den, rf_->den * o.rf_->den);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    if (spec_->is_finite()) return from_bits(spec_, gf2x::mulmod(bits_, o.bits_, spec_->modulus()));
    return from_ratfunc(spec_, rf_->num * o.rf_->num, rf_->den * o.rf_->den);
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_same(o);
    if (o.is_zero()) throw division_by_zero();
    if (spec_->is_finite()) return *this * o.inverse();
    return from_ratfunc(spec_, rf_->num * o.rf_->den, rf_->den * o.rf_->num);
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw division_by_zero();
    if (!spec_->is_finite()) return from_ratfunc(spec_, rf_->den, rf_->num);
    // extended Euclid on bitmask polynomials: maintain r_i = s_i*a (mod m)
    std::uint64_t r0 = bits_, r1 = spec_->modulus();
    std::uint64_t s0 = 1, s1 = 0;
    while (r1 != 0) {
        while (r0 != 0 && gf2x::degree(r0) >= gf2x::degree(r1)) {
            int shift = gf2x::degree(r0) - gf2x::degree(r1);
            r0 ^= r1 << shift;
            s0 ^= s1 << shift;
        }
        std::swap(r0, r1);
        std::swap(s0, s1);
    }
    if (r0 != 1) throw error("inverse failed (modulus not irreducible?)");
    return from_bits(spec_, s0);
}

bool FieldElement::operator==(const FieldElement& o) const {
    check_same(o);
    if (spec_->is_finite()) return bits_ == o.bits_;
    return rf_->num == o.rf_->num && rf_->den == o.rf_->den;
}

FieldElement FieldElement::pow(std::uint64_t e) const {
    FieldElement r = one(spec_), b = *this;
    while (e != 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

FieldElement FieldElement::sqrt() const {
    if (spec_->is_finite()) {
        // Frobenius is a bijection: the unique root is a^(2^(r-1))
        FieldElement r = *this;
        for (int i = 1; i < spec_->degree(); ++i) r = r * r;
        return r;
    }
    if (is_zero()) return *this;
    auto [nsq, nroot] = is_square_poly(rf_->num);
    auto [dsq, droot] = is_square_poly(rf_->den);
    if (!nsq || !dsq) throw not_a_square("ratfunc element");
    return from_ratfunc(spec_, *nroot, *droot);
}

bool FieldElement::is_square() const {
    if (spec_->is_finite()) return true;  // every element of GF(2^r) is a square
    if (is_zero()) return true;
    return is_square_poly(rf_->num).first && is_square_poly(rf_->den).first;
}

FieldElement FieldElement::square_class_rep() const {
    if (is_zero()) throw zero_input("square_class_rep");
    if (spec_->is_finite()) return one(spec_);
    // a = num/den ~ num*den modulo squares; the class representative is the
    // monic squarefree s with num*den = s*g^2
    Polynomial s = square_class_part(rf_->num) * square_class_part(rf_->den);
    return from_poly(spec_, s.monic());
}

std::string FieldElement::sort_key() const {
    if (spec_->is_finite()) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%020llu", static_cast<unsigned long long>(bits_));
        return buf;
    }
    auto poly_key = [](const Polynomial& p) {
        std::string k;
        char buf[32];
        std::snprintf(buf, sizeof buf, "%04d", p.degree() + 1);
        k += buf;
        for (int i = p.degree(); i >= 0; --i) {
            std::snprintf(buf, sizeof buf, "%020llu", static_cast<unsigned long long>(p.coeff(i).bits()));
            k += buf;
        }
        return k;
    };
    return poly_key(rf_->num) + "/" + poly_key(rf_->den);
}

std::string field_descriptor(const FieldSpec& spec) {
    if (spec.is_finite()) {
        if (spec.degree() == 1) return "gf2";
        std::string out = "gf2e:r=" + std::to_string(spec.degree());
        if (spec.modulus() != FieldSpec::default_modulus(spec.degree())) {
            char buf[32];
            std::snprintf(buf, sizeof buf, ":mod=0x%llX", static_cast<unsigned long long>(spec.modulus()));
            out += buf;
        }
        return out;
    }
    return "ratfunc:q=" + std::to_string(spec.base()->order());
}

std::vector<FieldElement> enumerate_field(const FieldSpecPtr& spec) {
    if (!spec->is_finite()) throw infinite_field("enumerate_field");
    if (spec->degree() > 20) throw budget_exceeded("enumerate_field r=" + std::to_string(spec->degree()));
    std::vector<FieldElement> out;
    out.reserve(std::size_t(1) << spec->degree());
    for (std::uint64_t b = 0; b < spec->order(); ++b) out.push_back(FieldElement::from_bits(spec, b));
    return out;
}

}  // namespace slnk2
