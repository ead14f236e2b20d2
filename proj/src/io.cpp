#include "slnk2/io.hpp"

#include <algorithm>
#include <sstream>

namespace slnk2 {

namespace {

std::uint64_t parse_u64(const std::string& s, bool hex) {
    try {
        std::size_t used = 0;
        std::uint64_t v = std::stoull(s, &used, hex ? 16 : 10);
        if (used != s.size()) throw parse_error("trailing characters in number: " + s);
        return v;
    } catch (const std::exception&) {
        throw parse_error("bad number: " + s);
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

}  // namespace

FieldSpecPtr parse_field(const std::string& descriptor) {
    std::vector<std::string> parts = split(strip(descriptor), ':');
    if (parts.empty()) throw parse_error("empty field descriptor");
    if (parts[0] == "gf2") {
        if (parts.size() != 1) throw parse_error("gf2 takes no parameters");
        return FieldSpec::gf2();
    }
    if (parts[0] == "gf2e") {
        int r = -1;
        std::uint64_t mod = 0;
        for (std::size_t i = 1; i < parts.size(); ++i) {
            if (parts[i].rfind("r=", 0) == 0) r = static_cast<int>(parse_u64(parts[i].substr(2), false));
            else if (parts[i].rfind("mod=0x", 0) == 0) mod = parse_u64(parts[i].substr(6), true);
            else if (parts[i].rfind("mod=", 0) == 0) mod = parse_u64(parts[i].substr(4), true);
            else throw parse_error("unknown gf2e parameter: " + parts[i]);
        }
        if (r < 0) throw parse_error("gf2e needs r=<r>");
        return mod != 0 ? FieldSpec::finite(r, mod) : FieldSpec::finite(r);
    }
    if (parts[0] == "ratfunc") {
        if (parts.size() != 2 || parts[1].rfind("q=", 0) != 0) throw parse_error("ratfunc needs q=<2^r>");
        std::uint64_t q = parse_u64(parts[1].substr(2), false);
        int r = 0;
        while ((std::uint64_t(1) << r) < q && r <= kMaxExtensionDegree) ++r;
        if ((std::uint64_t(1) << r) != q) throw parse_error("q must be a power of 2");
        return FieldSpec::ratfunc(FieldSpec::finite(r));
    }
    throw parse_error("unknown field kind: " + parts[0]);
}

namespace {

std::string hex_of(std::uint64_t v) {
    std::ostringstream os;
    os << "0x" << std::hex << v;
    return os.str();
}

std::string coeff_text(const FieldElement& c) { return c.is_one() ? "1" : hex_of(c.bits()); }

FieldElement coeff_from_token(const FieldSpecPtr& spec, const std::string& tok) {
    if (tok == "1") return FieldElement::one(spec);
    if (tok == "0") return FieldElement::zero(spec);
    if (tok.rfind("0x", 0) == 0 || tok.rfind("0X", 0) == 0)
        return FieldElement::from_bits(spec, parse_u64(tok.substr(2), true));
    throw parse_error("bad coefficient: " + tok);
}

}  // namespace

std::string poly_to_text(const Polynomial& p) {
    if (!p.spec()->is_finite()) throw error("poly_to_text expects finite coefficients");
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        FieldElement c = p.coeff(k);
        if (c.is_zero()) continue;
        if (!out.empty()) out += "+";
        if (k == 0) {
            out += coeff_text(c);
        } else {
            if (!c.is_one()) out += hex_of(c.bits()) + "*";
            out += (k == 1) ? "x" : "x^" + std::to_string(k);
        }
    }
    return out;
}

Polynomial poly_from_text(const FieldSpecPtr& coeff_spec, const std::string& text) {
    std::string body = strip(text);
    if (body.empty()) throw parse_error("empty polynomial");
    if (body == "0") return Polynomial::zero(coeff_spec);
    Polynomial acc = Polynomial::zero(coeff_spec);
    for (const std::string& raw : split(body, '+')) {
        std::string term = strip(raw);
        if (term.empty()) throw parse_error("empty term in polynomial: " + text);
        FieldElement c = FieldElement::one(coeff_spec);
        int k = 0;
        std::size_t star = term.find('*');
        std::string mono = term;
        if (star != std::string::npos) {
            c = coeff_from_token(coeff_spec, strip(term.substr(0, star)));
            mono = strip(term.substr(star + 1));
        }
        if (mono == "x") {
            k = 1;
        } else if (mono.rfind("x^", 0) == 0) {
            k = static_cast<int>(parse_u64(mono.substr(2), false));
        } else if (star == std::string::npos) {
            c = coeff_from_token(coeff_spec, mono);
            k = 0;
        } else {
            throw parse_error("bad monomial: " + mono);
        }
        acc = acc + Polynomial::monomial(c, k);
    }
    return acc;
}

std::string element_to_text(const FieldElement& e) {
    if (e.spec()->is_finite()) return hex_of(e.bits());
    std::string out = poly_to_text(e.num());
    if (!e.den().is_one()) out += "/" + poly_to_text(e.den());
    return out;
}

FieldElement element_from_text(const FieldSpecPtr& spec, const std::string& text) {
    std::string body = strip(text);
    if (spec->is_finite()) {
        if (body.rfind("0x", 0) == 0 || body.rfind("0X", 0) == 0)
            return FieldElement::from_bits(spec, parse_u64(body.substr(2), true));
        if (body == "0") return FieldElement::zero(spec);
        if (body == "1") return FieldElement::one(spec);
        throw parse_error("bad finite element: " + text);
    }
    std::size_t slash = body.find('/');
    Polynomial num = poly_from_text(spec->base(), slash == std::string::npos ? body : body.substr(0, slash));
    Polynomial den = slash == std::string::npos ? Polynomial::one(spec->base())
                                                : poly_from_text(spec->base(), body.substr(slash + 1));
    return FieldElement::from_ratfunc(spec, std::move(num), std::move(den));
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.n(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.n(); ++j) row.push_back(element_to_text(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"field", field_descriptor(*m.spec())}, {"n", m.n()}, {"rows", std::move(rows)}};
}

Matrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("n") || !j.contains("rows"))
        throw parse_error("matrix JSON needs field, n, rows");
    FieldSpecPtr spec = parse_field(j.at("field").get<std::string>());
    int n = j.at("n").get<int>();
    const json& rows = j.at("rows");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n) throw parse_error("rows must be an n-element array");
    std::vector<FieldElement> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != n) throw parse_error("each row needs n entries");
        for (const auto& cell : row) entries.push_back(element_from_text(spec, cell.get<std::string>()));
    }
    return Matrix(spec, n, std::move(entries));
}

json automorphism_to_json(const Automorphism& phi) {
    return json{{"parity", phi.parity == Automorphism::Parity::inner ? "inner" : "outer"},
                {"A", matrix_to_json(phi.mat)}};
}

Automorphism automorphism_from_json(const json& j) {
    if (!j.is_object() || !j.contains("parity") || !j.contains("A"))
        throw parse_error("automorphism JSON needs parity and A");
    std::string parity = j.at("parity").get<std::string>();
    Matrix a = matrix_from_json(j.at("A"));
    if (parity == "inner") return Automorphism::inner(std::move(a));
    if (parity == "outer") return Automorphism::outer(std::move(a));
    throw parse_error("parity must be inner or outer");
}

json label_to_json(const ClassLabel& label) {
    switch (label.kind) {
        case ClassLabel::Kind::inner_l:
            return json{{"type", "L"}, {"m", label.m}};
        case ClassLabel::Kind::inner_p:
            return json{{"type", "P"}, {"p", element_to_text(*label.scalar)}};
        case ClassLabel::Kind::outer_alt:
            return json{{"type", "outer-alt"}};
        case ClassLabel::Kind::outer_diag: {
            json classes = json::array();
            for (const auto& c : label.classes) classes.push_back(element_to_text(c));
            return json{{"type", "outer-diag"}, {"classes", std::move(classes)}};
        }
    }
    throw error("unknown label kind");
}

ClassLabel label_from_json(const json& j, const FieldSpecPtr& spec) {
    std::string type = j.at("type").get<std::string>();
    if (type == "L")
        return ClassLabel{ClassLabel::Kind::inner_l, j.at("m").get<int>(), FieldElement::one(spec), {}};
    if (type == "P")
        return ClassLabel{ClassLabel::Kind::inner_p, 0, element_from_text(spec, j.at("p").get<std::string>()), {}};
    if (type == "outer-alt") return ClassLabel{ClassLabel::Kind::outer_alt, 0, std::nullopt, {}};
    if (type == "outer-diag") {
        std::vector<FieldElement> classes;
        for (const auto& c : j.at("classes")) classes.push_back(element_from_text(spec, c.get<std::string>()));
        return ClassLabel{ClassLabel::Kind::outer_diag, 0, std::nullopt, std::move(classes)};
    }
    throw parse_error("unknown label type: " + type);
}

json classification_to_json(const InnerClassification& c) {
    return json{{"label", label_to_json(c.label)},
                {"canonical", matrix_to_json(c.canonical)},
                {"witness", json{{"C", matrix_to_json(c.witness)}, {"p", element_to_text(c.scalar)}}}};
}

json iso_result_to_json(const IsoResult& r, const FieldSpecPtr&) {
    json out{{"isomorphic", r.isomorphic}};
    if (r.isomorphic && r.witness) {
        out["witness"] = json{{"C", matrix_to_json(*r.witness)}, {"p", element_to_text(*r.scalar)}};
    }
    return out;
}

json fixed_group_report_to_json(const FixedGroupReport& rep, bool include_elements) {
    json out{{"field", rep.field},
             {"n", rep.n},
             {"order", rep.order},
             {"method", rep.method},
             {"all_unipotent", rep.all_unipotent},
             {"abelian", rep.abelian},
             {"closure_checked", rep.closure_checked},
             {"elements_complete", rep.elements_complete}};
    if (include_elements && rep.order <= 512) {
        json elems = json::array();
        for (const auto& x : rep.elements) elems.push_back(matrix_to_json(x));
        out["elements"] = std::move(elems);
    } else if (!rep.elements.empty()) {
        json sample = json::array();
        for (std::size_t i = 0; i < rep.elements.size() && i < 8; ++i)
            sample.push_back(matrix_to_json(rep.elements[i]));
        out["generator_sample"] = std::move(sample);
    }
    return out;
}

json variety_report_to_json(const VarietyReport& rep, bool include_elements) {
    json out{{"sources", rep.sources},
             {"distinct", rep.distinct},
             {"semisimple", rep.semisimple},
             {"non_semisimple", rep.distinct - rep.semisimple},
             {"formula_disagreements", rep.formula_disagreements},
             {"scalar_value_exceptions", rep.scalar_value_exceptions},
             {"formula_audit_clean", rep.formula_audit_clean}};
    if (include_elements && rep.distinct <= 512) {
        json elems = json::array();
        for (const auto& v : rep.elements) elems.push_back(matrix_to_json(v));
        out["elements"] = std::move(elems);
    }
    return out;
}

json census_report_to_json(const CensusReport& rep) {
    auto classes_to_json = [](const std::vector<ClassInfo>& infos) {
        json arr = json::array();
        for (const auto& ci : infos)
            arr.push_back(json{{"label", label_to_json(ci.label)}, {"size", ci.size}});
        return arr;
    };
    return json{{"field", rep.field},
                {"n", rep.n},
                {"inner_involutions", rep.inner_involutions},
                {"inner_classes", rep.inner_classes},
                {"predicted_inner", rep.predicted_inner},
                {"outer_symmetric", rep.outer_symmetric},
                {"outer_classes", rep.outer_classes},
                {"predicted_outer", rep.predicted_outer},
                {"ptype_classes_found", rep.ptype_classes_found},
                {"labels_match_orbits", rep.labels_match_orbits},
                {"inner_class_info", classes_to_json(rep.inner_class_info)},
                {"outer_class_info", classes_to_json(rep.outer_class_info)},
                {"pass", rep.pass}};
}

json theorem_report_to_json(const TheoremReport& rep) {
    return json{{"tag", rep.tag},
                {"pass", rep.pass},
                {"notes", rep.notes},
                {"counterexamples", rep.counterexamples}};
}

std::string matrix_to_text(const Matrix& m) {
    std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(m.n()));
    std::size_t width = 0;
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) {
            std::string t = element_to_text(m.at(i, j));
            width = std::max(width, t.size());
            cells[static_cast<std::size_t>(i)].push_back(std::move(t));
        }
    std::ostringstream os;
    for (int i = 0; i < m.n(); ++i) {
        os << "[ ";
        for (int j = 0; j < m.n(); ++j) {
            const std::string& t = cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            os << t << std::string(width - t.size() + (j + 1 < m.n() ? 2 : 0), ' ');
        }
        os << "]\n";
    }
    return os.str();
}

}  // namespace slnk2
