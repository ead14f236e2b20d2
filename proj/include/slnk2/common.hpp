#ifndef SLNK2_COMMON_HPP
#define SLNK2_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace slnk2 {

// desk-scale guardrails
inline constexpr int kMaxExtensionDegree = 24;  // GF(2^r), r <= 24
inline constexpr int kMaxRatfuncDegree   = 64;  // default num/den degree cap
inline constexpr int kMaxDimension       = 16;  // matrices up to 16x16
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t(1) << 24;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct division_by_zero : error { division_by_zero() : error("division by zero") {} };
struct field_mismatch   : error { field_mismatch()   : error("operands belong to different fields") {} };
struct not_a_square     : error { explicit not_a_square(const std::string& w) : error("not a square: " + w) {} };
struct zero_input       : error { explicit zero_input(const std::string& w) : error("zero input: " + w) {} };
struct infinite_field   : error { explicit infinite_field(const std::string& w) : error("field is infinite: " + w) {} };
struct dimension_mismatch : error { dimension_mismatch() : error("matrix dimensions do not match") {} };
struct singular_matrix  : error { singular_matrix() : error("matrix is singular") {} };
struct singular_input   : error { explicit singular_input(const std::string& w) : error("singular input: " + w) {} };
struct not_symmetric    : error { not_symmetric() : error("matrix is not symmetric") {} };
struct not_alternate    : error { not_alternate() : error("matrix is not alternate") {} };
struct alternate_input  : error { alternate_input() : error("matrix is alternate") {} };
struct odd_dimension    : error { odd_dimension() : error("dimension must be even") {} };
struct wrong_parity     : error { explicit wrong_parity(const std::string& w) : error("wrong parity: " + w) {} };
struct not_an_involution : error { not_an_involution() : error("automorphism is not an involution") {} };
struct inconsistent_label : error { explicit inconsistent_label(const std::string& w) : error("inconsistent label: " + w) {} };
struct shape_mismatch   : error { shape_mismatch() : error("inputs have different shapes") {} };
struct budget_exceeded  : error { explicit budget_exceeded(const std::string& w) : error("enumeration budget exceeded: " + w) {} };
struct unknown_tag      : error { explicit unknown_tag(const std::string& w) : error("unknown verification tag: " + w) {} };
struct parse_error      : error { explicit parse_error(const std::string& w) : error("parse error: " + w) {} };

}  // namespace slnk2

#endif
