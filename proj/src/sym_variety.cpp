#include "slnk2/sym_variety.hpp"

#include <map>
#include <string>

namespace slnk2 {

VarietyElement q_element(const Automorphism& phi, const Matrix& x) {
    if (!x.det().is_one()) throw singular_input("q_element expects det X = 1");
    const Matrix& a = phi.mat;
    Matrix v(x.spec(), x.n());
    if (phi.parity == Automorphism::Parity::inner) {
        v = x * a * x.inverse() * a.inverse();
    } else {
        v = x * a * x.transpose() * a.inverse();
    }
    bool ss = is_semisimple(v);
    return VarietyElement{x, std::move(v), ss};
}

bool semisimple_by_formula_n2(const FieldElement& p, const Matrix& x) {
    if (x.n() != 2) throw dimension_mismatch();
    if (p.is_zero()) throw zero_input("semisimple_by_formula_n2");
    if (!x.det().is_one()) throw singular_input("semisimple_by_formula_n2 expects det X = 1");
    const FieldElement &a = x.at(0, 0), &b = x.at(0, 1), &c = x.at(1, 0), &d = x.at(1, 1);
    FieldElement e = a * a + d * d + p * b * b + (c * c) / p;
    return !e.is_zero();
}

VarietyReport enumerate_variety(const Automorphism& phi, std::uint64_t budget) {
    const FieldSpecPtr& spec = phi.mat.spec();
    if (!spec->is_finite()) throw infinite_field("enumerate_variety");
    int n = phi.mat.n();
    double cost = 1;
    for (int i = 0; i < n * n; ++i) cost *= static_cast<double>(spec->order());
    if (cost > static_cast<double>(budget)) throw budget_exceeded("variety scan q^(n^2)");

    bool audit_n2 = (n == 2 && phi.parity == Automorphism::Parity::inner);
    FieldElement p = phi.mat.at(1, 0);  // only meaningful for the [[0,1],[p,0]] shape
    bool formula_applicable = audit_n2 && phi.mat.at(0, 0).is_zero() && phi.mat.at(1, 1).is_zero() &&
                              phi.mat.at(0, 1).is_one() && !p.is_zero();

    VarietyReport rep;
    std::map<std::string, std::size_t> seen;
    auto key_of = [](const Matrix& m) {
        std::string k;
        for (const auto& e : m.entries()) k += e.sort_key() + ",";
        return k;
    };

    std::vector<FieldElement> elems = enumerate_field(spec);
    std::vector<std::size_t> digits(static_cast<std::size_t>(n) * n, 0);
    bool more = true;
    while (more) {
        std::vector<FieldElement> entries;
        entries.reserve(digits.size());
        for (auto d : digits) entries.push_back(elems[d]);
        Matrix x(spec, n, std::move(entries));
        {
            bool insl = x.det().is_one();
            if (insl) {
                ++rep.sources;
                VarietyElement ve = q_element(phi, x);
                if (formula_applicable) {
                    bool by_formula = semisimple_by_formula_n2(p, x);
                    if (by_formula != ve.semisimple) {
                        ++rep.formula_disagreements;
                        if (ve.value.is_scalar()) ++rep.scalar_value_exceptions;
                    }
                }
                std::string k = key_of(ve.value);
                if (!seen.count(k)) {
                    seen.emplace(std::move(k), rep.elements.size());
                    if (ve.semisimple) ++rep.semisimple;
                    rep.elements.push_back(std::move(ve.value));
                }
            }
        }
        // advance odometer
        more = false;
        for (auto& d : digits) {
            if (++d < elems.size()) { more = true; break; }
            d = 0;
        }
    }
    rep.distinct = rep.elements.size();
    rep.formula_audit_clean = rep.formula_disagreements == rep.scalar_value_exceptions;
    return rep;
}

}  // namespace slnk2
