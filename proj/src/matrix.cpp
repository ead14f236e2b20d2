#include "slnk2/matrix.hpp"

#include <algorithm>

namespace slnk2 {

Matrix::Matrix(FieldSpecPtr spec, int n) : spec_(std::move(spec)), n_(n) {
    if (n < 1 || n > kMaxDimension) throw error("dimension out of range: " + std::to_string(n));
    e_.assign(static_cast<std::size_t>(n) * n, FieldElement::zero(spec_));
}

Matrix::Matrix(FieldSpecPtr spec, int n, std::vector<FieldElement> entries)
    : spec_(std::move(spec)), n_(n), e_(std::move(entries)) {
    if (n < 1 || n > kMaxDimension) throw error("dimension out of range: " + std::to_string(n));
    if (e_.size() != static_cast<std::size_t>(n) * n) throw dimension_mismatch();
    for (const auto& v : e_)
        if (!v.spec()->same_as(*spec_)) throw field_mismatch();
}

Matrix Matrix::identity(const FieldSpecPtr& spec, int n) {
    Matrix m(spec, n);
    for (int i = 0; i < n; ++i) m.set(i, i, FieldElement::one(spec));
    return m;
}

Matrix Matrix::scalar(const FieldSpecPtr& spec, int n, const FieldElement& c) {
    Matrix m(spec, n);
    for (int i = 0; i < n; ++i) m.set(i, i, c);
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (n_ != o.n_) throw dimension_mismatch();
    Matrix r(spec_, n_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (n_ != o.n_) throw dimension_mismatch();
    Matrix r(spec_, n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const FieldElement& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < n_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.e_[r.idx(i, j)] = r.e_[r.idx(i, j)] + aik * o.at(k, j);
            }
        }
    return r;
}

Matrix Matrix::operator*(const FieldElement& c) const {
    Matrix r(spec_, n_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * c;
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (n_ != o.n_) return false;
    for (std::size_t k = 0; k < e_.size(); ++k)
        if (e_[k] != o.e_[k]) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix r(spec_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.set(j, i, at(i, j));
    return r;
}

FieldElement Matrix::det() const {
    // fast exact path for finite fields; the division-free route keeps
    // ratfunc coefficients from blowing up mid-elimination
    if (!spec_->is_finite()) return char_poly(*this).coeff(0);
    Matrix a = *this;
    FieldElement d = FieldElement::one(spec_);
    for (int col = 0; col < n_; ++col) {
        int piv = -1;
        for (int i = col; i < n_; ++i)
            if (!a.at(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) return FieldElement::zero(spec_);
        if (piv != col)
            for (int j = col; j < n_; ++j) std::swap(a.e_[a.idx(piv, j)], a.e_[a.idx(col, j)]);
        d = d * a.at(col, col);
        FieldElement pinv = a.at(col, col).inverse();
        for (int i = col + 1; i < n_; ++i) {
            if (a.at(i, col).is_zero()) continue;
            FieldElement f = a.at(i, col) * pinv;
            for (int j = col; j < n_; ++j) a.set(i, j, a.at(i, j) + f * a.at(col, j));
        }
    }
    return d;
}

Matrix Matrix::inverse() const {
    // Gauss-Jordan on [A | I]
    Matrix a = *this, inv = identity(spec_, n_);
    for (int col = 0; col < n_; ++col) {
        int piv = -1;
        for (int i = col; i < n_; ++i)
            if (!a.at(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) throw singular_matrix();
        if (piv != col)
            for (int j = 0; j < n_; ++j) {
                std::swap(a.e_[a.idx(piv, j)], a.e_[a.idx(col, j)]);
                std::swap(inv.e_[inv.idx(piv, j)], inv.e_[inv.idx(col, j)]);
            }
        FieldElement pinv = a.at(col, col).inverse();
        for (int j = 0; j < n_; ++j) {
            a.set(col, j, a.at(col, j) * pinv);
            inv.set(col, j, inv.at(col, j) * pinv);
        }
        for (int i = 0; i < n_; ++i) {
            if (i == col || a.at(i, col).is_zero()) continue;
            FieldElement f = a.at(i, col);
            for (int j = 0; j < n_; ++j) {
                a.set(i, j, a.at(i, j) + f * a.at(col, j));
                inv.set(i, j, inv.at(i, j) + f * inv.at(col, j));
            }
        }
    }
    return inv;
}

Matrix Matrix::adjugate() const {
    if (n_ == 1) return identity(spec_, 1);
    // cofactor transpose; in characteristic 2 all signs collapse
    Matrix adj(spec_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            std::vector<FieldElement> sub;
            sub.reserve(static_cast<std::size_t>(n_ - 1) * (n_ - 1));
            for (int r = 0; r < n_; ++r) {
                if (r == i) continue;
                for (int c = 0; c < n_; ++c) {
                    if (c == j) continue;
                    sub.push_back(at(r, c));
                }
            }
            Matrix minor(spec_, n_ - 1, std::move(sub));
            adj.set(j, i, minor.det());
        }
    return adj;
}

int Matrix::rank() const {
    Matrix a = *this;
    int rank = 0;
    for (int col = 0; col < n_ && rank < n_; ++col) {
        int piv = -1;
        for (int i = rank; i < n_; ++i)
            if (!a.at(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < n_; ++j) std::swap(a.e_[a.idx(piv, j)], a.e_[a.idx(rank, j)]);
        FieldElement pinv = a.at(rank, col).inverse();
        for (int i = rank + 1; i < n_; ++i) {
            if (a.at(i, col).is_zero()) continue;
            FieldElement f = a.at(i, col) * pinv;
            for (int j = col; j < n_; ++j) a.set(i, j, a.at(i, j) + f * a.at(rank, j));
        }
        ++rank;
    }
    return rank;
}

bool Matrix::is_scalar() const {
    const FieldElement& d = at(0, 0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (i == j && at(i, j) != d) return false;
            if (i != j && !at(i, j).is_zero()) return false;
        }
    return true;
}

bool Matrix::is_identity() const { return is_scalar() && at(0, 0).is_one(); }

// ---------------------------------------------------------------------------

Polynomial char_poly(const Matrix& a) {
    // Samuelson-Berkowitz; in characteristic 2 the alternating signs vanish.
    // Coefficient vectors are stored highest degree first.
    const FieldSpecPtr& spec = a.spec();
    int n = a.n();
    std::vector<FieldElement> c = {FieldElement::one(spec)};  // char poly of the empty matrix
    for (int k = 1; k <= n; ++k) {
        // leading (k-1)x(k-1) block M, row R = A[k-1][0..k-1), col C = A[0..k-1)[k-1]
        std::vector<FieldElement> t;  // Toeplitz first column: 1, a, RC, RMC, RM^2C, ...
        t.push_back(FieldElement::one(spec));
        t.push_back(a.at(k - 1, k - 1));
        std::vector<FieldElement> w(static_cast<std::size_t>(k - 1));
        for (int i = 0; i < k - 1; ++i) w[static_cast<std::size_t>(i)] = a.at(i, k - 1);
        for (int j = 2; j <= k; ++j) {
            FieldElement dot = FieldElement::zero(spec);
            for (int i = 0; i < k - 1; ++i) dot = dot + a.at(k - 1, i) * w[static_cast<std::size_t>(i)];
            t.push_back(dot);
            if (j < k) {
                std::vector<FieldElement> w2(static_cast<std::size_t>(k - 1), FieldElement::zero(spec));
                for (int i = 0; i < k - 1; ++i) {
                    if (w[static_cast<std::size_t>(i)].is_zero()) continue;
                    for (int r = 0; r < k - 1; ++r)
                        w2[static_cast<std::size_t>(r)] =
                            w2[static_cast<std::size_t>(r)] + a.at(r, i) * w[static_cast<std::size_t>(i)];
                }
                w = std::move(w2);
            }
        }
        std::vector<FieldElement> next(static_cast<std::size_t>(k) + 1, FieldElement::zero(spec));
        for (std::size_t i = 0; i < next.size(); ++i)
            for (std::size_t j = 0; j <= i && j < t.size(); ++j)
                if (i - j < c.size()) next[i] = next[i] + t[j] * c[i - j];
        c = std::move(next);
    }
    std::vector<FieldElement> lowfirst(c.rbegin(), c.rend());
    return Polynomial(spec, std::move(lowfirst));
}

Matrix eval_poly_at(const Polynomial& f, const Matrix& a) {
    Matrix acc(a.spec(), a.n());
    for (int i = f.degree(); i >= 0; --i) {
        acc = acc * a;
        acc = acc + Matrix::scalar(a.spec(), a.n(), f.coeff(i));
    }
    return acc;
}

namespace {

// minimal annihilator of the Krylov sequence v, Av, A^2 v, ...
Polynomial vector_order(const Matrix& a, const std::vector<FieldElement>& v0) {
    const FieldSpecPtr& spec = a.spec();
    int n = a.n();
    // echelon rows + their expressions in terms of the Krylov vectors
    std::vector<std::vector<FieldElement>> rows, combos;
    std::vector<int> lead_col;
    std::vector<FieldElement> v = v0;
    for (int step = 0;; ++step) {
        // combo of the current vector: t^step
        std::vector<FieldElement> combo(static_cast<std::size_t>(step) + 1, FieldElement::zero(spec));
        combo.back() = FieldElement::one(spec);
        std::vector<FieldElement> w = v;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            int lc = lead_col[r];
            if (w[static_cast<std::size_t>(lc)].is_zero()) continue;
            FieldElement f = w[static_cast<std::size_t>(lc)];
            for (int j = 0; j < n; ++j)
                w[static_cast<std::size_t>(j)] = w[static_cast<std::size_t>(j)] + f * rows[r][static_cast<std::size_t>(j)];
            for (std::size_t j = 0; j < combos[r].size(); ++j)
                combo[j] = combo[j] + f * combos[r][j];
        }
        int lc = -1;
        for (int j = 0; j < n; ++j)
            if (!w[static_cast<std::size_t>(j)].is_zero()) { lc = j; break; }
        if (lc < 0) return Polynomial(spec, std::move(combo));  // monic by construction
        FieldElement inv = w[static_cast<std::size_t>(lc)].inverse();
        for (int j = 0; j < n; ++j) w[static_cast<std::size_t>(j)] = w[static_cast<std::size_t>(j)] * inv;
        for (auto& cf : combo) cf = cf * inv;
        rows.push_back(std::move(w));
        combos.push_back(std::move(combo));
        lead_col.push_back(lc);
        // v <- A v
        std::vector<FieldElement> nv(static_cast<std::size_t>(n), FieldElement::zero(spec));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                nv[static_cast<std::size_t>(i)] = nv[static_cast<std::size_t>(i)] + a.at(i, j) * v[static_cast<std::size_t>(j)];
        v = std::move(nv);
    }
}

}  // namespace

Polynomial min_poly(const Matrix& a) {
    const FieldSpecPtr& spec = a.spec();
    int n = a.n();
    Polynomial m = Polynomial::one(spec);
    for (int i = 0; i < n; ++i) {
        std::vector<FieldElement> e(static_cast<std::size_t>(n), FieldElement::zero(spec));
        e[static_cast<std::size_t>(i)] = FieldElement::one(spec);
        m = poly_lcm(m, vector_order(a, e));
        if (m.degree() == n) break;
    }
    return m;
}

namespace {

// polynomial-entry matrix helpers for the Smith reduction of tI + A
struct PolyMat {
    int n;
    std::vector<Polynomial> e;
    Polynomial& at(int i, int j) { return e[static_cast<std::size_t>(i) * n + j]; }
    const Polynomial& at(int i, int j) const { return e[static_cast<std::size_t>(i) * n + j]; }
};

struct SmithResult {
    std::vector<Polynomial> diag;  // monic, divisibility chain, units included
    PolyMat uinv;                  // row-transform inverse: tI + A = Uinv * D * Vinv
};

SmithResult smith_form(const Matrix& a) {
    const FieldSpecPtr& spec = a.spec();
    int n = a.n();
    PolyMat s{n, {}};
    s.e.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Polynomial p = Polynomial::constant(a.at(i, j));
            if (i == j) p = p + Polynomial::x(spec);  // tI - A = tI + A in char 2
            s.e.push_back(std::move(p));
        }
    PolyMat uinv{n, {}};
    uinv.e.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            uinv.e.push_back(i == j ? Polynomial::one(spec) : Polynomial::zero(spec));

    auto swap_rows = [&](int r1, int r2) {
        if (r1 == r2) return;
        for (int j = 0; j < n; ++j) std::swap(s.at(r1, j), s.at(r2, j));
        // Uinv <- Uinv * E^{-1}: swap columns r1, r2
        for (int i = 0; i < n; ++i) std::swap(uinv.at(i, r1), uinv.at(i, r2));
    };
    auto swap_cols = [&](int c1, int c2) {
        if (c1 == c2) return;
        for (int i = 0; i < n; ++i) std::swap(s.at(i, c1), s.at(i, c2));
    };
    // row_dst += q * row_src; Uinv: col_src += q * col_dst
    auto add_row = [&](int dst, int src, const Polynomial& q) {
        if (q.is_zero()) return;
        for (int j = 0; j < n; ++j) s.at(dst, j) = s.at(dst, j) + q * s.at(src, j);
        for (int i = 0; i < n; ++i) uinv.at(i, src) = uinv.at(i, src) + q * uinv.at(i, dst);
    };
    auto add_col = [&](int dst, int src, const Polynomial& q) {
        if (q.is_zero()) return;
        for (int i = 0; i < n; ++i) s.at(i, dst) = s.at(i, dst) + q * s.at(i, src);
    };

    for (int pos = 0; pos < n; ++pos) {
        for (;;) {
            // lowest-degree nonzero pivot, ties broken by leftmost column
            int pr = -1, pc = -1, best = -1;
            for (int j = pos; j < n; ++j)
                for (int i = pos; i < n; ++i) {
                    const Polynomial& p = s.at(i, j);
                    if (p.is_zero()) continue;
                    if (best < 0 || p.degree() < best) { best = p.degree(); pr = i; pc = j; }
                }
            if (pr < 0) { pr = -2; break; }  // rest of the block is zero
            swap_rows(pos, pr);
            swap_cols(pos, pc);
            bool dirty = false;
            for (int i = pos + 1; i < n; ++i) {
                if (s.at(i, pos).is_zero()) continue;
                Polynomial q = s.at(i, pos) / s.at(pos, pos);
                add_row(i, pos, q);
                if (!s.at(i, pos).is_zero()) dirty = true;
            }
            for (int j = pos + 1; j < n; ++j) {
                if (s.at(pos, j).is_zero()) continue;
                Polynomial q = s.at(pos, j) / s.at(pos, pos);
                add_col(j, pos, q);
                if (!s.at(pos, j).is_zero()) dirty = true;
            }
            if (dirty) continue;
            // pivot must divide every remaining entry for the chain property
            bool fixed = false;
            for (int i = pos + 1; i < n && !fixed; ++i)
                for (int j = pos + 1; j < n && !fixed; ++j) {
                    if (s.at(i, j).is_zero()) continue;
                    if (!(s.at(i, j) % s.at(pos, pos)).is_zero()) {
                        add_row(pos, i, Polynomial::one(spec));
                        fixed = true;
                    }
                }
            if (!fixed) break;
        }
    }
    SmithResult out{{}, std::move(uinv)};
    for (int i = 0; i < n; ++i) {
        Polynomial d = s.at(i, i);
        if (d.is_zero()) throw error("smith form: zero diagonal (non-square module?)");
        FieldElement lead = d.leading();
        if (!lead.is_one()) {
            // scale row i by 1/lead; Uinv column i absorbs lead
            d = d.monic();
            for (int r = 0; r < n; ++r)
                out.uinv.at(r, i) = out.uinv.at(r, i) * Polynomial::constant(lead);
        }
        out.diag.push_back(std::move(d));
    }
    return out;
}

Matrix companion(const Polynomial& f) {
    int m = f.degree();
    Matrix c(f.spec(), m);
    for (int i = 0; i + 1 < m; ++i) c.set(i + 1, i, FieldElement::one(f.spec()));
    for (int i = 0; i < m; ++i) c.set(i, m - 1, f.coeff(i));  // char 2: -c_i = c_i
    return c;
}

}  // namespace

std::vector<Polynomial> invariant_factors(const Matrix& a) {
    SmithResult sr = smith_form(a);
    std::vector<Polynomial> out;
    for (auto& d : sr.diag)
        if (d.degree() >= 1) out.push_back(std::move(d));
    return out;
}

RationalForm rational_canonical_form(const Matrix& a) {
    const FieldSpecPtr& spec = a.spec();
    int n = a.n();
    SmithResult sr = smith_form(a);

    // k^n ≅ ⊕ k[t]/(d_i); the generator of summand i is column i of Uinv
    // with t evaluated as multiplication by A
    Matrix form(spec, n), basis(spec, n);
    int col = 0;
    for (int i = 0; i < n; ++i) {
        const Polynomial& d = sr.diag[static_cast<std::size_t>(i)];
        if (d.degree() < 1) continue;
        int maxdeg = 0;
        for (int r = 0; r < n; ++r) maxdeg = std::max(maxdeg, sr.uinv.at(r, i).degree());
        std::vector<FieldElement> g(static_cast<std::size_t>(n), FieldElement::zero(spec));
        // g = sum_j A^j * (coefficient-j vector of the column)
        Matrix apow = Matrix::identity(spec, n);
        for (int j = 0; j <= maxdeg; ++j) {
            for (int r = 0; r < n; ++r) {
                FieldElement cj = sr.uinv.at(r, i).coeff(j);
                if (cj.is_zero()) continue;
                for (int rr = 0; rr < n; ++rr)
                    g[static_cast<std::size_t>(rr)] = g[static_cast<std::size_t>(rr)] + apow.at(rr, r) * cj;
            }
            if (j < maxdeg) apow = apow * a;
        }
        // cyclic chain g, Ag, ..., A^{deg-1} g
        Matrix comp = companion(d);
        std::vector<FieldElement> v = g;
        for (int j = 0; j < d.degree(); ++j) {
            for (int r = 0; r < n; ++r) basis.set(r, col + j, v[static_cast<std::size_t>(r)]);
            if (j + 1 < d.degree()) {
                std::vector<FieldElement> nv(static_cast<std::size_t>(n), FieldElement::zero(spec));
                for (int r = 0; r < n; ++r)
                    for (int c = 0; c < n; ++c)
                        nv[static_cast<std::size_t>(r)] = nv[static_cast<std::size_t>(r)] + a.at(r, c) * v[static_cast<std::size_t>(c)];
                v = std::move(nv);
            }
        }
        for (int r = 0; r < d.degree(); ++r)
            for (int c = 0; c < d.degree(); ++c) form.set(col + r, col + c, comp.at(r, c));
        col += d.degree();
    }
    if (col != n) throw error("rational canonical form: degrees do not sum to n");
    // the construction is re-verified on every call
    if (a * basis != basis * form) throw error("rational canonical form: basis check failed");
    basis.inverse();  // throws if the extracted basis is singular
    return RationalForm{std::move(form), std::move(basis)};
}

std::pair<bool, std::optional<Matrix>> are_conjugate(const Matrix& a, const Matrix& b) {
    if (a.n() != b.n() || !a.spec()->same_as(*b.spec())) throw dimension_mismatch();
    std::vector<Polynomial> fa = invariant_factors(a), fb = invariant_factors(b);
    if (fa.size() != fb.size()) return {false, std::nullopt};
    for (std::size_t i = 0; i < fa.size(); ++i)
        if (fa[i] != fb[i]) return {false, std::nullopt};
    RationalForm ra = rational_canonical_form(a), rb = rational_canonical_form(b);
    // a = Pa F Pa^{-1}, b = Pb F Pb^{-1}  =>  (Pb Pa^{-1}) a (Pb Pa^{-1})^{-1} = b
    Matrix c = rb.basis * ra.basis.inverse();
    if (c * a != b * c) throw error("conjugacy witness check failed");
    return {true, c};
}

bool is_unipotent(const Matrix& a) {
    Matrix u = a + Matrix::identity(a.spec(), a.n());
    Matrix p = u;
    for (int i = 1; i < a.n(); ++i) p = p * u;
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j)
            if (!p.at(i, j).is_zero()) return false;
    return true;
}

bool is_semisimple(const Matrix& a) { return squarefree_over_closure(min_poly(a)); }

}  // namespace slnk2
