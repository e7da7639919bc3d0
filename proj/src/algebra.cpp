#include "algebra.hpp"

#include <algorithm>
#include <set>

#include "errors.hpp"

namespace leibniz {

SparseVec to_sparse(const Vec& v) {
    SparseVec s;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) s.emplace_back(static_cast<int>(i), v[i]);
    return s;
}

Vec to_dense(const SparseVec& s, int n) {
    Vec v(n, Rational(0));
    for (const auto& [i, c] : s) v[i] = c;
    return v;
}

void AlgebraTable::set_product(int i, int j, SparseVec terms) {
    check_index(i);
    check_index(j);
    SparseVec norm;
    for (auto& [t, c] : terms) {
        check_index(t);
        if (c != 0) norm.emplace_back(t, c);
    }
    std::sort(norm.begin(), norm.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t t = 1; t < norm.size(); ++t)
        if (norm[t].first == norm[t - 1].first)
            throw ArgError("duplicate basis index in product terms");
    if (norm.empty())
        gamma.erase({i, j});
    else
        gamma[{i, j}] = std::move(norm);
}

const SparseVec* AlgebraTable::product(int i, int j) const {
    const auto it = gamma.find({i, j});
    return it == gamma.end() ? nullptr : &it->second;
}

int AlgebraTable::index_of(const std::string& label) const {
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return static_cast<int>(i);
    return -1;
}

void AlgebraTable::check_index(int i) const {
    if (i < 0 || i >= n) throw ArgError("basis index out of range");
}

bool tables_equal(const AlgebraTable& a, const AlgebraTable& b) {
    return a.n == b.n && a.gamma == b.gamma;
}

Vec bracket(const AlgebraTable& a, const Vec& u, const Vec& v) {
    if (static_cast<int>(u.size()) != a.n || static_cast<int>(v.size()) != a.n)
        throw ArgError("element dimension mismatch");
    Vec out(a.n, Rational(0));
    for (const auto& [pair, terms] : a.gamma) {
        const auto [i, j] = pair;
        if (u[i] == 0 || v[j] == 0) continue;
        const Rational f = u[i] * v[j];
        for (const auto& [t, c] : terms) out[t] += f * c;
    }
    return out;
}

namespace {

// Bracket of a sparse element with a basis vector (right), sparse result.
Vec bracket_sparse_basis(const AlgebraTable& a, const Vec& u, int j) {
    Vec out(a.n, Rational(0));
    for (int i = 0; i < a.n; ++i) {
        if (u[i] == 0) continue;
        const SparseVec* terms = a.product(i, j);
        if (!terms) continue;
        for (const auto& [t, c] : *terms) out[t] += u[i] * c;
    }
    return out;
}

Vec bracket_basis_sparse(const AlgebraTable& a, int i, const Vec& v) {
    Vec out(a.n, Rational(0));
    for (int j = 0; j < a.n; ++j) {
        if (v[j] == 0) continue;
        const SparseVec* terms = a.product(i, j);
        if (!terms) continue;
        for (const auto& [t, c] : *terms) out[t] += v[j] * c;
    }
    return out;
}

} // namespace

std::vector<LeibnizViolation> check_leibniz(const AlgebraTable& a) {
    std::vector<LeibnizViolation> violations;
    const Vec zero(a.n, Rational(0));
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) {
            const SparseVec* ij = a.product(i, j);
            const Vec vij = ij ? to_dense(*ij, a.n) : zero;
            for (int k = 0; k < a.n; ++k) {
                // [[b_i,b_j],b_k]
                Vec defect = bracket_sparse_basis(a, vij, k);
                // - [[b_i,b_k],b_j]
                if (const SparseVec* ik = a.product(i, k)) {
                    const Vec vik = to_dense(*ik, a.n);
                    const Vec term = bracket_sparse_basis(a, vik, j);
                    for (int t = 0; t < a.n; ++t) defect[t] -= term[t];
                }
                // - [b_i,[b_j,b_k]]
                if (const SparseVec* jk = a.product(j, k)) {
                    const Vec vjk = to_dense(*jk, a.n);
                    const Vec term = bracket_basis_sparse(a, i, vjk);
                    for (int t = 0; t < a.n; ++t) defect[t] -= term[t];
                }
                if (!vec_is_zero(defect))
                    violations.push_back({i, j, k, std::move(defect)});
            }
        }
    return violations;
}

bool is_lie(const AlgebraTable& a) {
    if (!check_leibniz(a).empty())
        throw DomainError("is_lie requires a Leibniz table");
    const Vec zero(a.n, Rational(0));
    for (int i = 0; i < a.n; ++i)
        for (int j = i; j < a.n; ++j) {
            const SparseVec* ij = a.product(i, j);
            const SparseVec* ji = a.product(j, i);
            const Vec vij = ij ? to_dense(*ij, a.n) : zero;
            const Vec vji = ji ? to_dense(*ji, a.n) : zero;
            for (int t = 0; t < a.n; ++t)
                if (vij[t] + vji[t] != 0) return false;
        }
    return true;
}

AlgebraTable basis_change(const AlgebraTable& a, const Mat& p) {
    if (p.rows != a.n || p.cols != a.n)
        throw ArgError("base-change matrix must be n x n");
    // New coordinates c of an old-coordinate vector w solve P^T c = w.
    const auto pt_inv = inverse(mat_transpose(p));
    if (!pt_inv) throw DomainError("base-change matrix is singular");
    AlgebraTable out;
    out.n = a.n;
    out.labels = a.labels;
    for (int i = 0; i < a.n; ++i) {
        const Vec bi = p.row(i);
        for (int j = 0; j < a.n; ++j) {
            const Vec w = bracket(a, bi, p.row(j));
            if (vec_is_zero(w)) continue;
            out.set_product(i, j, to_sparse(mat_apply(*pt_inv, w)));
        }
    }
    return out;
}

AlgebraTable direct_sum(const AlgebraTable& a, const AlgebraTable& b) {
    AlgebraTable out;
    out.n = a.n + b.n;
    out.labels = a.labels;
    std::set<std::string> used(a.labels.begin(), a.labels.end());
    for (const std::string& label : b.labels) {
        std::string candidate = label;
        for (int suffix = 2; used.count(candidate); ++suffix)
            candidate = label + "_" + std::to_string(suffix);
        used.insert(candidate);
        out.labels.push_back(candidate);
    }
    for (const auto& [pair, terms] : a.gamma) out.gamma[pair] = terms;
    for (const auto& [pair, terms] : b.gamma) {
        SparseVec shifted;
        for (const auto& [t, c] : terms) shifted.emplace_back(t + a.n, c);
        out.gamma[{pair.first + a.n, pair.second + a.n}] = std::move(shifted);
    }
    return out;
}

Subspace subspace_product(const AlgebraTable& a, const Subspace& u, const Subspace& v) {
    if (u.ambient() != a.n || v.ambient() != a.n)
        throw ArgError("subspace ambient dimension mismatch");
    RowReducer red(a.n);
    for (int r = 0; r < u.dim(); ++r) {
        const Vec ur = u.basis_row(r);
        for (int s = 0; s < v.dim(); ++s)
            red.add_row(bracket(a, ur, v.basis_row(s)));
    }
    return Subspace::from_reducer(red);
}

std::string format_combo(const Vec& v, const std::vector<std::string>& labels) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        Rational coeff = v[i];
        if (out.empty()) {
            if (coeff < 0) {
                out += "-";
                coeff = -coeff;
            }
        } else {
            out += coeff < 0 ? " - " : " + ";
            if (coeff < 0) coeff = -coeff;
        }
        if (coeff != 1) {
            out += rat_str(coeff) + " ";
        }
        out += i < labels.size() ? labels[i] : "b" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

bool is_ideal(const AlgebraTable& a, const Subspace& j) {
    const Subspace full = Subspace::full(a.n);
    return j.contains(subspace_product(a, j, full)) &&
           j.contains(subspace_product(a, full, j));
}

Quotient quotient_algebra(const AlgebraTable& a, const Subspace& j) {
    if (j.ambient() != a.n) throw ArgError("ideal ambient dimension mismatch");
    if (!is_ideal(a, j)) throw DomainError("subspace is not a two-sided ideal");
    const int m = a.n - j.dim();
    // Representatives: standard vectors at the non-pivot columns of J.
    std::vector<int> reps;
    const auto& pivots = j.pivot_cols();
    for (int c = 0; c < a.n; ++c)
        if (!std::binary_search(pivots.begin(), pivots.end(), c)) reps.push_back(c);

    // projection[r][.] reads coordinate reps[r] of the J-reduction of v.
    Mat projection(m, a.n);
    for (int r = 0; r < m; ++r) {
        projection.at(r, reps[r]) = 1;
        for (int row = 0; row < j.dim(); ++row)
            projection.at(r, pivots[row]) = -j.basis().at(row, reps[r]);
    }

    Quotient q;
    q.projection = projection;
    q.rep_columns = reps;
    q.table.n = m;
    for (int r = 0; r < m; ++r) q.table.labels.push_back(a.labels[reps[r]]);
    for (int r = 0; r < m; ++r)
        for (int s = 0; s < m; ++s) {
            const SparseVec* terms = a.product(reps[r], reps[s]);
            if (!terms) continue;
            const Vec w = to_dense(*terms, a.n);
            q.table.set_product(r, s, to_sparse(mat_apply(projection, w)));
        }
    return q;
}

} // namespace leibniz
