#ifndef SLNK2_TEST_UTIL_HPP
#define SLNK2_TEST_UTIL_HPP

// test-only oracles, kept independent of the implementation paths they check

#include <algorithm>
#include <functional>
#include <random>

#include "slnk2/matrix.hpp"

namespace slnk2::testutil {

// determinant by permutation expansion (n <= 5); signs vanish in char 2
inline FieldElement det_by_permutations(const Matrix& a) {
    int n = a.n();
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    FieldElement acc = FieldElement::zero(a.spec());
    do {
        FieldElement term = FieldElement::one(a.spec());
        for (int i = 0; i < n; ++i) term = term * a.at(i, perm[static_cast<std::size_t>(i)]);
        acc = acc + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

// char poly det(tI + A) by cofactor expansion over k[t]
inline Polynomial char_poly_by_cofactors(const Matrix& a) {
    const FieldSpecPtr& spec = a.spec();
    int n = a.n();
    std::vector<Polynomial> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Polynomial p = Polynomial::constant(a.at(i, j));
            if (i == j) p = p + Polynomial::x(spec);
            entries.push_back(std::move(p));
        }
    std::function<Polynomial(std::vector<Polynomial>&, int)> rec = [&](std::vector<Polynomial>& m,
                                                                       int size) -> Polynomial {
        if (size == 1) return m[0];
        Polynomial acc = Polynomial::zero(spec);
        for (int r = 0; r < size; ++r) {
            if (m[static_cast<std::size_t>(r) * size].is_zero()) continue;
            std::vector<Polynomial> sub;
            sub.reserve(static_cast<std::size_t>(size - 1) * (size - 1));
            for (int i = 0; i < size; ++i) {
                if (i == r) continue;
                for (int j = 1; j < size; ++j) sub.push_back(m[static_cast<std::size_t>(i) * size + j]);
            }
            acc = acc + m[static_cast<std::size_t>(r) * size] * rec(sub, size - 1);
        }
        return acc;
    };
    return rec(entries, n);
}

inline FieldElement random_element(const FieldSpecPtr& spec, std::mt19937_64& rng, int max_deg = 3) {
    if (spec->is_finite())
        return FieldElement::from_bits(spec, rng() & ((std::uint64_t(1) << spec->degree()) - 1));
    auto random_poly = [&](bool nonzero) {
        std::vector<FieldElement> c;
        for (int i = 0; i <= max_deg; ++i)
            c.push_back(FieldElement::from_bits(spec->base(), rng() & ((std::uint64_t(1) << spec->base()->degree()) - 1)));
        Polynomial p(spec->base(), std::move(c));
        if (nonzero && p.is_zero()) p = Polynomial::one(spec->base());
        return p;
    };
    return FieldElement::from_ratfunc(spec, random_poly(false), random_poly(true));
}

inline Matrix random_matrix(const FieldSpecPtr& spec, int n, std::mt19937_64& rng) {
    std::vector<FieldElement> e;
    for (int i = 0; i < n * n; ++i) e.push_back(random_element(spec, rng, 2));
    return Matrix(spec, n, std::move(e));
}

inline Matrix random_invertible(const FieldSpecPtr& spec, int n, std::mt19937_64& rng) {
    for (;;) {
        Matrix m = random_matrix(spec, n, rng);
        if (!m.det().is_zero()) return m;
    }
}

}  // namespace slnk2::testutil

#endif
