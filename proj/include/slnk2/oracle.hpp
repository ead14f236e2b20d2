#ifndef SLNK2_ORACLE_HPP
#define SLNK2_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "slnk2/bilinear.hpp"
#include "slnk2/involution.hpp"

namespace slnk2 {

// classical order formulas, computed, not hard-coded
std::uint64_t gl_order(int n, std::uint64_t q);
std::uint64_t sl_order(int n, std::uint64_t q);

enum class GroupKind { SL, GL, symmetric_invertible };

/// visit every qualifying matrix exactly once; returns the count
std::uint64_t for_each_matrix(const FieldSpecPtr& spec, int n, GroupKind which,
                              const std::function<void(const Matrix&)>& fn,
                              std::uint64_t budget = kDefaultBudget);

/// exhaustive conjugator search: C A C^{-1} = B over all C in GL(n,q)
std::pair<bool, std::optional<Matrix>> conjugate_bruteforce(const Matrix& a, const Matrix& b,
                                                            std::uint64_t budget = kDefaultBudget);

struct ClassInfo {
    ClassLabel label;
    std::uint64_t size = 0;
};

struct CensusReport {
    std::string field;
    int n = 0;
    std::uint64_t inner_involutions = 0;  // matrices up to scalar with Inn_A an involution
    std::uint64_t inner_classes = 0;      // brute-force projective-conjugacy orbits
    std::uint64_t outer_symmetric = 0;    // symmetric invertible matrices up to scalar (n > 2)
    std::uint64_t outer_classes = 0;      // brute-force congruence orbits
    std::vector<ClassInfo> inner_class_info;
    std::vector<ClassInfo> outer_class_info;
    std::uint64_t predicted_inner = 0;
    std::uint64_t predicted_outer = 0;
    std::uint64_t ptype_classes_found = 0;  // finite-field P-family verdict (expected 0)
    bool labels_match_orbits = false;
    bool pass = false;
};

/// exhaustive census over a finite field: inner projective-conjugacy orbits
/// and outer congruence orbits, each cross-checked against the classifiers
CensusReport involution_census(const FieldSpecPtr& spec, int n, std::uint64_t budget = kDefaultBudget);

struct VerifyOptions {
    std::uint64_t seed = 12345;
    std::uint64_t budget = kDefaultBudget;
    std::optional<int> n_filter;
    std::optional<std::uint64_t> q_filter;  // field order
};

struct TheoremReport {
    std::string tag;
    bool pass = false;
    std::vector<std::string> notes;
    std::vector<std::string> counterexamples;
};

/// tags: serre, n2, inner, outer, b1, fixed, ss
TheoremReport verify_theorem(const std::string& tag, const VerifyOptions& opt = {});
const std::vector<std::string>& known_tags();

}  // namespace slnk2

#endif
