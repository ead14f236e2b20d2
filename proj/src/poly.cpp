#include "slnk2/poly.hpp"

namespace slnk2 {

Polynomial::Polynomial(FieldSpecPtr spec, std::vector<FieldElement> coeffs)
    : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (!c.spec()->same_as(*spec_)) throw field_mismatch();
    trim();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const FieldElement& c) {
    Polynomial p(c.spec());
    if (!c.is_zero()) p.coeffs_.push_back(c);
    return p;
}

Polynomial Polynomial::one(const FieldSpecPtr& spec) { return constant(FieldElement::one(spec)); }

Polynomial Polynomial::x(const FieldSpecPtr& spec) {
    return monomial(FieldElement::one(spec), 1);
}

Polynomial Polynomial::monomial(const FieldElement& c, int k) {
    Polynomial p(c.spec());
    if (!c.is_zero()) {
        p.coeffs_.assign(static_cast<std::size_t>(k) + 1, FieldElement::zero(c.spec()));
        p.coeffs_.back() = c;
    }
    return p;
}

bool Polynomial::is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }

FieldElement Polynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return FieldElement::zero(spec_);
    return coeffs_[static_cast<std::size_t>(k)];
}

FieldElement Polynomial::leading() const {
    if (is_zero()) return FieldElement::zero(spec_);
    return coeffs_.back();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (!spec_->same_as(*o.spec_)) throw field_mismatch();
    Polynomial r(spec_);
    std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    r.coeffs_.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        r.coeffs_.push_back(coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i)));
    r.trim();
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (!spec_->same_as(*o.spec_)) throw field_mismatch();
    if (is_zero() || o.is_zero()) return zero(spec_);
    Polynomial r(spec_);
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, FieldElement::zero(spec_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            r.coeffs_[i + j] = r.coeffs_[i + j] + coeffs_[i] * o.coeffs_[j];
    }
    r.trim();
    return r;
}

Polynomial Polynomial::operator*(const FieldElement& c) const {
    Polynomial r(spec_);
    if (c.is_zero()) return r;
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& a : coeffs_) r.coeffs_.push_back(a * c);
    r.trim();
    return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    if (!spec_->same_as(*divisor.spec_)) throw field_mismatch();
    if (divisor.is_zero()) throw division_by_zero();
    Polynomial q(spec_), r = *this;
    int dd = divisor.degree();
    if (r.degree() >= dd)
        q.coeffs_.assign(static_cast<std::size_t>(r.degree() - dd) + 1, FieldElement::zero(spec_));
    FieldElement lead_inv = divisor.leading().inverse();
    while (!r.is_zero() && r.degree() >= dd) {
        int k = r.degree() - dd;
        FieldElement f = r.leading() * lead_inv;
        q.coeffs_[static_cast<std::size_t>(k)] = f;
        // r -= f * x^k * divisor
        for (int i = 0; i <= dd; ++i)
            r.coeffs_[static_cast<std::size_t>(i + k)] =
                r.coeffs_[static_cast<std::size_t>(i + k)] + f * divisor.coeffs_[static_cast<std::size_t>(i)];
        r.trim();
    }
    q.trim();
    return {q, r};
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!spec_->same_as(*o.spec_)) throw field_mismatch();
    if (coeffs_.size() != o.coeffs_.size()) return false;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != o.coeffs_[i]) return false;
    return true;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) throw zero_input("monic");
    return *this * leading().inverse();
}

FieldElement Polynomial::eval(const FieldElement& at) const {
    FieldElement acc = FieldElement::zero(spec_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a % b;
        a = std::move(b);
        b = std::move(r);
        if (!a.is_zero()) a = a.monic();
    }
    if (a.is_zero()) return a;
    return a.monic();
}

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial::zero(a.spec());
    return ((a * b) / poly_gcd(a, b)).monic();
}

Polynomial derivative(const Polynomial& f) {
    Polynomial d(f.spec());
    std::vector<FieldElement> c;
    for (int i = 1; i <= f.degree(); ++i) {
        // i * coeff(i) in characteristic 2: kept for odd i, dropped for even
        c.push_back(i % 2 == 1 ? f.coeff(i) : FieldElement::zero(f.spec()));
    }
    return Polynomial(f.spec(), std::move(c));
}

std::pair<bool, std::optional<Polynomial>> is_square_poly(const Polynomial& f) {
    if (f.is_zero()) return {true, Polynomial::zero(f.spec())};
    if (!derivative(f).is_zero()) return {false, std::nullopt};
    // f = sum a_{2i} x^{2i}; the root is sum sqrt(a_{2i}) x^i
    std::vector<FieldElement> root;
    for (int i = 0; i <= f.degree(); i += 2) {
        FieldElement c = f.coeff(i);
        if (!c.is_square()) return {false, std::nullopt};
        root.push_back(c.sqrt());
    }
    return {true, Polynomial(f.spec(), std::move(root))};
}

Polynomial squarefree_part(const Polynomial& f) {
    if (f.is_zero()) throw zero_input("squarefree_part");
    if (!f.spec()->is_finite()) throw error("squarefree_part needs finite coefficients");
    Polynomial g = f.monic();
    if (g.degree() == 0) return g;
    Polynomial d = derivative(g);
    if (d.is_zero()) {
        // g = h^2 exactly; same distinct factors as h
        auto [ok, h] = is_square_poly(g);
        (void)ok;
        return squarefree_part(*h);
    }
    Polynomial gg = poly_gcd(g, d);
    if (gg.degree() == 0) return g;
    // w carries each odd-multiplicity factor once
    Polynomial w = (g / gg).monic();
    // strip w's factors from gg entirely; the leftover is a perfect square
    Polynomial c = gg;
    for (;;) {
        Polynomial h = poly_gcd(c, w);
        if (h.degree() == 0) break;
        c = (c / h).monic();
    }
    if (c.degree() == 0) return w;
    auto [ok, half] = is_square_poly(c);
    if (!ok) throw error("squarefree decomposition failed");
    Polynomial rest = squarefree_part(*half);
    // odd- and even-multiplicity factor sets are disjoint
    return (w * rest).monic();
}

Polynomial square_class_part(const Polynomial& f) {
    if (f.is_zero()) throw zero_input("square_class_part");
    if (!f.spec()->is_finite()) throw error("square_class_part needs finite coefficients");
    Polynomial g = f.monic();
    if (g.degree() == 0) return g;
    Polynomial d = derivative(g);
    if (d.is_zero()) return Polynomial::one(f.spec());  // perfect square
    return (g / poly_gcd(g, d)).monic();
}

bool squarefree_over_closure(const Polynomial& f) {
    if (f.is_zero()) throw zero_input("squarefree_over_closure");
    if (f.degree() == 0) return true;
    Polynomial d = derivative(f);
    if (d.is_zero()) return false;  // every root has even multiplicity
    return poly_gcd(f, d).degree() == 0;
}

}  // namespace slnk2
