#include "slnk2/bilinear.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace slnk2 {

bool is_alternate(const Matrix& a) {
    if (a != a.transpose()) throw not_symmetric();
    for (int i = 0; i < a.n(); ++i)
        if (!a.at(i, i).is_zero()) return false;
    return true;
}

namespace {

// shared congruence bookkeeping: M <- E^T M E, Q <- Q E
struct CongruenceWorker {
    Matrix m, q;
    explicit CongruenceWorker(const Matrix& a) : m(a), q(Matrix::identity(a.spec(), a.n())) {}

    // basis change e_dst += f * e_src
    void add(int dst, int src, const FieldElement& f) {
        if (f.is_zero()) return;
        int n = m.n();
        for (int i = 0; i < n; ++i) m.set(i, dst, m.at(i, dst) + f * m.at(i, src));
        for (int j = 0; j < n; ++j) m.set(dst, j, m.at(dst, j) + f * m.at(src, j));
        for (int i = 0; i < n; ++i) q.set(i, dst, q.at(i, dst) + f * q.at(i, src));
    }

    // basis change e_j *= u
    void scale(int j, const FieldElement& u) {
        int n = m.n();
        for (int i = 0; i < n; ++i) m.set(i, j, m.at(i, j) * u);
        for (int c = 0; c < n; ++c) m.set(j, c, m.at(j, c) * u);
        for (int i = 0; i < n; ++i) q.set(i, j, q.at(i, j) * u);
    }

    // general basis change by an invertible E
    void transform(const Matrix& e) {
        m = e.transpose() * m * e;
        q = q * e;
    }
};

struct SplitResult {
    CongruenceWorker w;
    std::vector<int> diag;                    // finished diagonal indices
    std::vector<std::pair<int, int>> pairs;   // finished hyperbolic pairs, form value 1
};

// phase 1: split the form into diagonal entries and hyperbolic pairs
SplitResult split_diag_hyperbolic(const Matrix& a) {
    if (a.det().is_zero()) throw singular_input("congruence split");
    SplitResult s{CongruenceWorker(a), {}, {}};
    int n = a.n();
    std::vector<int> active;
    for (int i = 0; i < n; ++i) active.push_back(i);
    while (!active.empty()) {
        int piv = -1;
        for (int i : active)
            if (!s.w.m.at(i, i).is_zero()) { piv = i; break; }
        if (piv >= 0) {
            FieldElement dinv = s.w.m.at(piv, piv).inverse();
            for (int j : active) {
                if (j == piv || s.w.m.at(piv, j).is_zero()) continue;
                s.w.add(j, piv, s.w.m.at(piv, j) * dinv);
            }
            s.diag.push_back(piv);
            active.erase(std::find(active.begin(), active.end(), piv));
            continue;
        }
        // remaining block is alternate: extract a hyperbolic pair
        int pi = -1, pj = -1;
        for (std::size_t x = 0; x < active.size() && pi < 0; ++x)
            for (std::size_t y = x + 1; y < active.size(); ++y)
                if (!s.w.m.at(active[x], active[y]).is_zero()) {
                    pi = active[x];
                    pj = active[y];
                    break;
                }
        if (pi < 0) throw singular_input("degenerate block in congruence split");
        s.w.scale(pj, s.w.m.at(pi, pj).inverse());
        for (int mm : active) {
            if (mm == pi || mm == pj) continue;
            FieldElement alpha = s.w.m.at(mm, pj);
            FieldElement beta = s.w.m.at(mm, pi);
            s.w.add(mm, pi, alpha);
            s.w.add(mm, pj, beta);
        }
        s.pairs.emplace_back(pi, pj);
        active.erase(std::find(active.begin(), active.end(), pi));
        active.erase(std::find(active.begin(), active.end(), pj));
    }
    return s;
}

}  // namespace

CongruenceDiag diagonalize_congruence(const Matrix& a) {
    if (a != a.transpose()) throw not_symmetric();
    if (is_alternate(a)) throw alternate_input();
    if (a.det().is_zero()) throw singular_input("diagonalize_congruence");
    const FieldSpecPtr& spec = a.spec();
    int n = a.n();
    SplitResult s = split_diag_hyperbolic(a);

    // phase 2: fold each hyperbolic pair into a diagonal entry d:
    // (e_t, e_i, e_j) -> (e_t+e_i, e_t+d e_j, e_t+e_i+d e_j) has Gram diag(d,d,d)
    while (!s.pairs.empty()) {
        auto [i, j] = s.pairs.back();
        s.pairs.pop_back();
        int t = s.diag.back();
        FieldElement d = s.w.m.at(t, t);
        Matrix e = Matrix::identity(spec, n);
        FieldElement one = FieldElement::one(spec);
        e.set(t, t, one);   e.set(t, i, one);          e.set(t, j, one);
        e.set(i, t, one);   e.set(i, i, FieldElement::zero(spec)); e.set(i, j, one);
        e.set(j, t, FieldElement::zero(spec)); e.set(j, i, d);     e.set(j, j, d);
        s.w.transform(e);
        s.diag.push_back(i);
        s.diag.push_back(j);
    }

    Matrix d(spec, n);
    for (int i = 0; i < n; ++i) {
        if (!s.w.m.at(i, i).is_zero()) d.set(i, i, s.w.m.at(i, i));
        for (int j = 0; j < n; ++j)
            if (i != j && !s.w.m.at(i, j).is_zero()) throw error("diagonalization left off-diagonal residue");
    }
    if (s.w.q.transpose() * a * s.w.q != d) throw error("congruence diagonalization check failed");
    for (int i = 0; i < n; ++i)
        if (d.at(i, i).is_zero()) throw error("diagonalization produced a zero entry");
    return CongruenceDiag{std::move(s.w.q), std::move(d)};
}

Matrix symplectic_normalize(const Matrix& a) {
    if (a != a.transpose()) throw not_symmetric();
    if (!is_alternate(a)) throw not_alternate();
    if (a.n() % 2 != 0) throw odd_dimension();
    if (a.det().is_zero()) throw singular_input("symplectic_normalize");
    const FieldSpecPtr& spec = a.spec();
    int n = a.n();
    SplitResult s = split_diag_hyperbolic(a);
    if (!s.diag.empty()) throw error("alternate form produced diagonal entries");

    // reorder basis to u_1..u_m, v_1..v_m so the Gram matrix is [[0,I],[I,0]]
    Matrix perm(spec, n);
    int m = n / 2;
    for (int k = 0; k < m; ++k) {
        perm.set(s.pairs[static_cast<std::size_t>(k)].first, k, FieldElement::one(spec));
        perm.set(s.pairs[static_cast<std::size_t>(k)].second, m + k, FieldElement::one(spec));
    }
    Matrix q = s.w.q * perm;
    if (q.transpose() * a * q != make_J(spec, n)) throw error("symplectic normalization check failed");
    return q;
}

namespace {

std::vector<FieldElement> sorted_classes(std::vector<FieldElement> cls) {
    std::sort(cls.begin(), cls.end(),
              [](const FieldElement& a, const FieldElement& b) { return a.sort_key() < b.sort_key(); });
    return cls;
}

// canonical multiset modulo one global scalar: rescale by each entry's class
// (any multiset containing a 1 dominates those without, so the lex-min over
// all scalars is attained on these candidates) and keep the lex-least
std::vector<FieldElement> canonical_multiset(const std::vector<FieldElement>& entries) {
    std::vector<FieldElement> best;
    std::string best_key;
    for (const FieldElement& cand : entries) {
        std::vector<FieldElement> scaled;
        for (const FieldElement& e : entries) scaled.push_back((cand * e).square_class_rep());
        scaled = sorted_classes(std::move(scaled));
        std::string key;
        for (const auto& e : scaled) key += e.sort_key() + "|";
        if (best.empty() || key < best_key) {
            best = std::move(scaled);
            best_key = std::move(key);
        }
    }
    return best;
}

}  // namespace

ClassLabel classify_outer(const Matrix& a) {
    if (a != a.transpose()) throw not_symmetric();
    if (a.det().is_zero()) throw singular_input("classify_outer");
    if (is_alternate(a)) return ClassLabel{ClassLabel::Kind::outer_alt, 0, std::nullopt, {}};
    CongruenceDiag cd = diagonalize_congruence(a);
    std::vector<FieldElement> entries;
    for (int i = 0; i < a.n(); ++i) entries.push_back(cd.d.at(i, i));
    return ClassLabel{ClassLabel::Kind::outer_diag, 0, std::nullopt, canonical_multiset(entries)};
}

CongruenceResult are_congruent_proj(const Matrix& a, const Matrix& b) {
    if (a.n() != b.n() || !a.spec()->same_as(*b.spec())) throw shape_mismatch();
    if (a != a.transpose() || b != b.transpose()) throw not_symmetric();
    if (a.det().is_zero() || b.det().is_zero()) throw singular_input("are_congruent_proj");
    const FieldSpecPtr& spec = a.spec();
    int n = a.n();
    bool alt_a = is_alternate(a), alt_b = is_alternate(b);
    if (alt_a != alt_b) return {};

    if (alt_a) {
        Matrix qa = symplectic_normalize(a), qb = symplectic_normalize(b);
        Matrix w = qa * qb.inverse();
        FieldElement p = FieldElement::one(spec);
        if (w.transpose() * a * w != b) throw error("congruence witness check failed");
        return CongruenceResult{true, std::move(w), std::move(p)};
    }

    if (classify_outer(a) != classify_outer(b)) return {};

    CongruenceDiag da = diagonalize_congruence(a), db = diagonalize_congruence(b);
    // find the global scalar p with {class(a_i)} = {class(p b_i)} as multisets
    for (int i = 0; i < n; ++i) {
        FieldElement p = (da.d.at(i, i) / db.d.at(0, 0)).square_class_rep();
        std::vector<FieldElement> ca, cb;
        for (int k = 0; k < n; ++k) {
            ca.push_back(da.d.at(k, k).square_class_rep());
            cb.push_back((db.d.at(k, k) * p).square_class_rep());
        }
        std::multiset<std::string> ka, kb;
        for (const auto& e : ca) ka.insert(e.sort_key());
        for (const auto& e : cb) kb.insert(e.sort_key());
        if (ka != kb) continue;
        // greedy class matching: sigma(j) = index into a's diagonal for target j
        std::vector<bool> used(static_cast<std::size_t>(n), false);
        Matrix qmid(spec, n);
        bool ok = true;
        for (int j = 0; j < n && ok; ++j) {
            FieldElement target = (db.d.at(j, j) * p);
            int pick = -1;
            for (int k = 0; k < n; ++k) {
                if (used[static_cast<std::size_t>(k)]) continue;
                if ((da.d.at(k, k) / target).is_square()) { pick = k; break; }
            }
            if (pick < 0) { ok = false; break; }
            used[static_cast<std::size_t>(pick)] = true;
            // column j of qmid sends e_j to t * e_pick with t^2 a_pick = p b_j
            FieldElement t = (target / da.d.at(pick, pick)).sqrt();
            qmid.set(pick, j, t);
        }
        if (!ok) continue;
        Matrix w = da.q * qmid * db.q.inverse();
        if (w.transpose() * a * w != b * p) continue;
        return CongruenceResult{true, std::move(w), std::move(p)};
    }
    // labels matched, so a scalar must exist; reaching here is a defect
    throw error("projective congruence: matched labels but no witness found");
}

}  // namespace slnk2
