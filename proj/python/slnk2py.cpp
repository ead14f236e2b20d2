#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "slnk2/io.hpp"

namespace py = pybind11;
using slnk2::json;

namespace {

std::string classify(const std::string& automorphism_json) {
    slnk2::Automorphism phi = slnk2::automorphism_from_json(json::parse(automorphism_json));
    if (!slnk2::is_involution(phi)) throw slnk2::not_an_involution();
    if (phi.parity == slnk2::Automorphism::Parity::inner)
        return slnk2::classification_to_json(slnk2::classify_inner(phi.mat)).dump();
    slnk2::ClassLabel label = slnk2::classify_outer(phi.mat);
    return json{{"label", slnk2::label_to_json(label)},
                {"canonical",
                 slnk2::matrix_to_json(slnk2::canonical_matrix(label, phi.mat.spec(), phi.mat.n()))}}
        .dump();
}

std::string iso_test(const std::string& phi1_json, const std::string& phi2_json) {
    slnk2::Automorphism phi1 = slnk2::automorphism_from_json(json::parse(phi1_json));
    slnk2::Automorphism phi2 = slnk2::automorphism_from_json(json::parse(phi2_json));
    return slnk2::iso_result_to_json(slnk2::are_isomorphic(phi1, phi2), phi1.mat.spec()).dump();
}

std::string fixed_points(const std::string& phi_json, std::uint64_t budget, const std::string& method) {
    slnk2::Automorphism phi = slnk2::automorphism_from_json(json::parse(phi_json));
    slnk2::EnumMethod m = method == "scan"   ? slnk2::EnumMethod::scan
                          : method == "family" ? slnk2::EnumMethod::family
                                               : slnk2::EnumMethod::automatic;
    return slnk2::fixed_group_report_to_json(slnk2::enumerate_fixed_group(phi, budget, m)).dump();
}

std::string variety(const std::string& phi_json, std::uint64_t budget) {
    slnk2::Automorphism phi = slnk2::automorphism_from_json(json::parse(phi_json));
    return slnk2::variety_report_to_json(slnk2::enumerate_variety(phi, budget), true).dump();
}

std::string census(const std::string& field, int n, std::uint64_t budget) {
    return slnk2::census_report_to_json(slnk2::involution_census(slnk2::parse_field(field), n, budget)).dump();
}

std::string verify(const std::string& tag, std::uint64_t seed, std::uint64_t budget) {
    slnk2::VerifyOptions opt;
    opt.seed = seed;
    opt.budget = budget;
    return slnk2::theorem_report_to_json(slnk2::verify_theorem(tag, opt)).dump();
}

bool is_square(const std::string& field, const std::string& element) {
    slnk2::FieldSpecPtr spec = slnk2::parse_field(field);
    return slnk2::element_from_text(spec, element).is_square();
}

std::string square_class_rep(const std::string& field, const std::string& element) {
    slnk2::FieldSpecPtr spec = slnk2::parse_field(field);
    return slnk2::element_to_text(slnk2::element_from_text(spec, element).square_class_rep());
}

std::string field_sqrt(const std::string& field, const std::string& element) {
    slnk2::FieldSpecPtr spec = slnk2::parse_field(field);
    return slnk2::element_to_text(slnk2::element_from_text(spec, element).sqrt());
}

std::string min_poly_of(const std::string& matrix_json) {
    slnk2::Matrix m = slnk2::matrix_from_json(json::parse(matrix_json));
    slnk2::Polynomial p = slnk2::min_poly(m);
    if (!m.spec()->is_finite()) throw slnk2::error("text form needs finite coefficients");
    return slnk2::poly_to_text(p);
}

std::string char_poly_of(const std::string& matrix_json) {
    slnk2::Matrix m = slnk2::matrix_from_json(json::parse(matrix_json));
    slnk2::Polynomial p = slnk2::char_poly(m);
    if (!m.spec()->is_finite()) throw slnk2::error("text form needs finite coefficients");
    return slnk2::poly_to_text(p);
}

std::tuple<bool, std::string> conjugate(const std::string& a_json, const std::string& b_json) {
    slnk2::Matrix a = slnk2::matrix_from_json(json::parse(a_json));
    slnk2::Matrix b = slnk2::matrix_from_json(json::parse(b_json));
    auto [ok, witness] = slnk2::are_conjugate(a, b);
    return {ok, ok ? slnk2::matrix_to_json(*witness).dump() : std::string()};
}

}  // namespace

PYBIND11_MODULE(slnk2py, m) {
    m.doc() = "involutions of SL(n,k) over characteristic-2 fields";

    m.def("classify", &classify, py::arg("automorphism_json"),
          "classify an involution; returns a JSON string with label, canonical matrix and witness");
    m.def("iso_test", &iso_test, py::arg("phi1_json"), py::arg("phi2_json"),
          "isomorphy test for two involutions; returns a JSON string");
    m.def("fixed_points", &fixed_points, py::arg("phi_json"), py::arg("budget") = slnk2::kDefaultBudget,
          py::arg("method") = "auto", "exhaustive fixed-point group over a finite field");
    m.def("variety", &variety, py::arg("phi_json"), py::arg("budget") = slnk2::kDefaultBudget,
          "enumerate the symmetric variety Q_k over a finite field");
    m.def("census", &census, py::arg("field"), py::arg("n"), py::arg("budget") = slnk2::kDefaultBudget,
          "exhaustive involution census; returns a CensusReport JSON string");
    m.def("verify", &verify, py::arg("tag"), py::arg("seed") = 12345,
          py::arg("budget") = slnk2::kDefaultBudget, "run one verification suite");
    m.def("known_tags", [] { return slnk2::known_tags(); });
    m.def("is_square", &is_square, py::arg("field"), py::arg("element"));
    m.def("square_class_rep", &square_class_rep, py::arg("field"), py::arg("element"));
    m.def("sqrt", &field_sqrt, py::arg("field"), py::arg("element"));
    m.def("min_poly", &min_poly_of, py::arg("matrix_json"));
    m.def("char_poly", &char_poly_of, py::arg("matrix_json"));
    m.def("are_conjugate", &conjugate, py::arg("a_json"), py::arg("b_json"));

    py::register_exception<slnk2::error>(m, "Slnk2Error");
}
