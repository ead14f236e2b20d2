// slnk2: classification of involutions of SL(n,k) over characteristic-2
// fields, with a brute-force verification harness.
//
// Commands: classify | iso-test | fixed-points | variety | census | verify
// Exit status: 0 success/pass, 1 verification failure, 2 usage error.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "slnk2/io.hpp"

namespace {

using slnk2::json;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw slnk2::parse_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const std::exception& e) {
        throw slnk2::parse_error(std::string("invalid JSON: ") + e.what());
    }
}

void check_expectations(const slnk2::Automorphism& phi, const std::string& field, int n) {
    if (!field.empty()) {
        slnk2::FieldSpecPtr expected = slnk2::parse_field(field);
        if (!expected->same_as(*phi.mat.spec()))
            throw slnk2::parse_error("--field does not match the input matrix field");
    }
    if (n > 0 && n != phi.mat.n()) throw slnk2::parse_error("--n does not match the input matrix size");
}

void emit(const json& out, const std::string& format) {
    if (format == "json") {
        std::cout << out.dump(2) << "\n";
        return;
    }
    // text rendering: scalars inline, matrices aligned
    std::function<void(const json&, int)> render = [&](const json& node, int depth) {
        std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
        if (node.is_object()) {
            if (node.contains("rows") && node.contains("field")) {
                std::cout << pad << "matrix over " << node["field"].get<std::string>() << ":\n"
                          << slnk2::matrix_to_text(slnk2::matrix_from_json(node));
                return;
            }
            for (auto it = node.begin(); it != node.end(); ++it) {
                if (it.value().is_object() || it.value().is_array()) {
                    std::cout << pad << it.key() << ":\n";
                    render(it.value(), depth + 1);
                } else {
                    std::cout << pad << it.key() << ": " << it.value().dump() << "\n";
                }
            }
        } else if (node.is_array()) {
            for (const auto& item : node) render(item, depth + 1);
        } else {
            std::cout << pad << node.dump() << "\n";
        }
    };
    render(out, 0);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"involutions of SL(n,k) in characteristic 2"};
    app.require_subcommand(1);

    std::string field, format = "json", input, input2, tags;
    int n = 0;
    std::uint64_t budget = slnk2::kDefaultBudget, seed = 12345;
    std::string method = "auto";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--field", field, "field descriptor (gf2 | gf2e:r=<r>[:mod=<hex>] | ratfunc:q=<2^r>)");
        cmd->add_option("--n", n, "matrix dimension");
        cmd->add_option("--format", format, "output format: json|text")->check(CLI::IsMember({"json", "text"}));
        cmd->add_option("--budget", budget, "max enumeration size");
        cmd->add_option("--seed", seed, "seed for the randomized suites");
    };

    CLI::App* classify = app.add_subcommand("classify", "classify an involution read from JSON");
    classify->add_option("input", input, "automorphism JSON file (default: stdin)");
    add_common(classify);

    CLI::App* iso = app.add_subcommand("iso-test", "test two involutions for isomorphy");
    iso->add_option("input", input, "automorphism JSON file or two-element array (default: stdin)");
    iso->add_option("input2", input2, "second automorphism JSON file");
    add_common(iso);

    CLI::App* fixed = app.add_subcommand("fixed-points", "enumerate the fixed-point group");
    fixed->add_option("input", input, "automorphism JSON file (default: stdin)");
    fixed->add_option("--method", method, "scan|family|auto")->check(CLI::IsMember({"auto", "scan", "family"}));
    add_common(fixed);

    CLI::App* variety = app.add_subcommand("variety", "enumerate the symmetric variety Q_k");
    variety->add_option("input", input, "automorphism JSON file (default: stdin)");
    add_common(variety);

    CLI::App* census = app.add_subcommand("census", "exhaustive involution census over a finite field");
    add_common(census);

    CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
    verify->add_option("--tags", tags, "comma-separated tags (default: all of serre,n2,inner,outer,b1,fixed,ss)");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (classify->parsed()) {
            slnk2::Automorphism phi = slnk2::automorphism_from_json(parse_json(read_input(input)));
            check_expectations(phi, field, n);
            if (!slnk2::is_involution(phi)) throw slnk2::not_an_involution();
            json out;
            if (phi.parity == slnk2::Automorphism::Parity::inner) {
                out = slnk2::classification_to_json(slnk2::classify_inner(phi.mat));
            } else {
                slnk2::ClassLabel label = slnk2::classify_outer(phi.mat);
                out = json{{"label", slnk2::label_to_json(label)},
                           {"canonical", slnk2::matrix_to_json(
                                             slnk2::canonical_matrix(label, phi.mat.spec(), phi.mat.n()))}};
            }
            emit(out, format);
            return 0;
        }
        if (iso->parsed()) {
            json first = parse_json(read_input(input));
            json second;
            if (!input2.empty()) {
                second = parse_json(read_input(input2));
            } else {
                if (!first.is_array() || first.size() != 2)
                    throw slnk2::parse_error("iso-test expects two files or a two-element JSON array");
                second = first[1];
                first = first[0];
            }
            slnk2::Automorphism phi1 = slnk2::automorphism_from_json(first);
            slnk2::Automorphism phi2 = slnk2::automorphism_from_json(second);
            check_expectations(phi1, field, n);
            check_expectations(phi2, field, n);
            slnk2::IsoResult r = slnk2::are_isomorphic(phi1, phi2);
            emit(slnk2::iso_result_to_json(r, phi1.mat.spec()), format);
            return 0;
        }
        if (fixed->parsed()) {
            slnk2::Automorphism phi = slnk2::automorphism_from_json(parse_json(read_input(input)));
            check_expectations(phi, field, n);
            slnk2::EnumMethod m = method == "scan"   ? slnk2::EnumMethod::scan
                                  : method == "family" ? slnk2::EnumMethod::family
                                                       : slnk2::EnumMethod::automatic;
            slnk2::FixedGroupReport rep = slnk2::enumerate_fixed_group(phi, budget, m);
            emit(slnk2::fixed_group_report_to_json(rep), format);
            return 0;
        }
        if (variety->parsed()) {
            slnk2::Automorphism phi = slnk2::automorphism_from_json(parse_json(read_input(input)));
            check_expectations(phi, field, n);
            slnk2::VarietyReport rep = slnk2::enumerate_variety(phi, budget);
            emit(slnk2::variety_report_to_json(rep, true), format);
            return 0;
        }
        if (census->parsed()) {
            if (field.empty() || n <= 0) throw slnk2::parse_error("census needs --field and --n");
            slnk2::CensusReport rep = slnk2::involution_census(slnk2::parse_field(field), n, budget);
            emit(slnk2::census_report_to_json(rep), format);
            return rep.pass ? 0 : 1;
        }
        if (verify->parsed()) {
            slnk2::VerifyOptions opt;
            opt.seed = seed;
            opt.budget = budget;
            if (n > 0) opt.n_filter = n;
            if (!field.empty()) {
                slnk2::FieldSpecPtr spec = slnk2::parse_field(field);
                if (spec->is_finite()) opt.q_filter = spec->order();
            }
            std::vector<std::string> selected;
            if (tags.empty()) {
                selected = slnk2::known_tags();
            } else {
                std::stringstream ss(tags);
                std::string tag;
                while (std::getline(ss, tag, ',')) selected.push_back(tag);
            }
            json out = json::array();
            bool all_pass = true;
            for (const auto& tag : selected) {
                slnk2::TheoremReport rep = slnk2::verify_theorem(tag, opt);
                all_pass = all_pass && rep.pass;
                out.push_back(slnk2::theorem_report_to_json(rep));
            }
            emit(json{{"reports", out}, {"pass", all_pass}}, format);
            return all_pass ? 0 : 1;
        }
    } catch (const slnk2::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const slnk2::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
