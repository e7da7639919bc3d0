#include "structure.hpp"

#include <map>
#include <utility>

#include "errors.hpp"

namespace leibniz {

namespace {

// Runs U_1 = full, U_{m+1} = step(U_m) until the first repeat, keeping the
// strictly decreasing prefix.  Both series below are monotone for any
// bilinear table, so this terminates within dim+1 steps.
template <typename Step>
std::vector<Subspace> descending_series(const AlgebraTable& a, Step step) {
    std::vector<Subspace> series;
    series.push_back(Subspace::full(a.n));
    while (series.back().dim() > 0) {
        Subspace next = step(series.back());
        if (next == series.back()) break;
        series.push_back(std::move(next));
    }
    return series;
}

} // namespace

std::vector<Subspace> lower_central_series(const AlgebraTable& a) {
    Subspace full = Subspace::full(a.n);
    return descending_series(
        a, [&](const Subspace& prev) { return subspace_product(a, prev, full); });
}

std::vector<Subspace> derived_series(const AlgebraTable& a) {
    return descending_series(
        a, [&](const Subspace& prev) { return subspace_product(a, prev, prev); });
}

SeriesProfile series_profile(const AlgebraTable& a) {
    SeriesProfile sp;
    for (const Subspace& s : lower_central_series(a)) {
        sp.lower_central_dims.push_back(s.dim());
    }
    for (const Subspace& s : derived_series(a)) {
        sp.derived_dims.push_back(s.dim());
    }
    sp.nilpotent = sp.lower_central_dims.back() == 0;
    sp.solvable = sp.derived_dims.back() == 0;
    if (sp.nilpotent) {
        // Terms are L^1..L^t with L^t the first zero, so t is the list length.
        sp.nilindex = static_cast<int>(sp.lower_central_dims.size());
    }
    return sp;
}

namespace {

// Builds the constraint matrix whose nullspace is the annihilator: one row
// per (fixed basis element, output coordinate) pair with a nonzero
// structure constant.
Subspace annihilator(const AlgebraTable& a, bool right) {
    std::map<std::pair<int, int>, Vec> rows;
    for (const auto& [key, terms] : a.gamma) {
        // right annihilator: unknown v in [b_fixed, v]; the unknown slot is
        // the second factor.  Left annihilator: unknown in [v, b_fixed].
        int fixed = right ? key.first : key.second;
        int var = right ? key.second : key.first;
        for (const auto& [c, coeff] : terms) {
            auto it = rows.find({fixed, c});
            if (it == rows.end()) {
                it = rows.emplace(std::pair<int, int>{fixed, c}, Vec(a.n, Rational(0))).first;
            }
            it->second[var] = coeff;
        }
    }
    std::vector<Vec> stacked;
    stacked.reserve(rows.size());
    for (auto& [key, row] : rows) {
        stacked.push_back(std::move(row));
    }
    return nullspace(Mat::from_rows(stacked, a.n));
}

} // namespace

Subspace right_annihilator(const AlgebraTable& a) { return annihilator(a, true); }

Subspace left_annihilator(const AlgebraTable& a) { return annihilator(a, false); }

Subspace center(const AlgebraTable& a) {
    return subspace_intersect(right_annihilator(a), left_annihilator(a));
}

Subspace ideal_closure(const AlgebraTable& a, const Subspace& s) {
    Subspace full = Subspace::full(a.n);
    Subspace cur = s;
    while (true) {
        Subspace next = subspace_sum(
            cur, subspace_sum(subspace_product(a, cur, full), subspace_product(a, full, cur)));
        if (next == cur) {
            return cur;
        }
        cur = std::move(next);
    }
}

Subspace squares_ideal(const AlgebraTable& a) {
    std::vector<Vec> gens;
    for (int i = 0; i < a.n; ++i) {
        for (int j = i; j < a.n; ++j) {
            // Diagonal: the square [b_i,b_i].  Off-diagonal: the
            // polarization [b_i,b_j] + [b_j,b_i] = [b_i+b_j, b_i+b_j] minus
            // the two squares.
            Vec v(a.n, Rational(0));
            if (const SparseVec* t = a.product(i, j)) {
                for (const auto& [c, coeff] : *t) v[c] += coeff;
            }
            if (i != j) {
                if (const SparseVec* t = a.product(j, i)) {
                    for (const auto& [c, coeff] : *t) v[c] += coeff;
                }
            }
            if (!vec_is_zero(v)) {
                gens.push_back(std::move(v));
            }
        }
    }
    return ideal_closure(a, Subspace::from_rows(a.n, gens));
}

GeneratorData generator_data(const AlgebraTable& n) {
    Subspace full = Subspace::full(n.n);
    Subspace n2 = subspace_product(n, full, full);

    // Nilpotency without assuming Leibniz: iterate the lower central series.
    {
        Subspace cur = n2;
        while (cur.dim() > 0) {
            Subspace next = subspace_product(n, cur, full);
            if (next == cur) {
                throw DomainError("algebra is not nilpotent");
            }
            cur = std::move(next);
        }
    }

    GeneratorData gd;
    gd.k = n.n - n2.dim();
    for (int i = 0; i < n.n; ++i) {
        Vec e(n.n, Rational(0));
        e[i] = 1;
        if (!n2.contains(e)) {
            gd.generator_indices.push_back(i);
        }
    }
    // The basis vectors always span N/N^2, so exactly k of them lie outside
    // N^2 iff each one is either inside N^2 or a clean quotient-basis image.
    if (static_cast<int>(gd.generator_indices.size()) != gd.k) {
        throw DomainError("basis not adapted: " +
                          std::to_string(gd.generator_indices.size()) +
                          " basis vectors lie outside the square, expected " +
                          std::to_string(gd.k));
    }

    Subspace annr = right_annihilator(n);
    for (int i : gd.generator_indices) {
        Vec e(n.n, Rational(0));
        e[i] = 1;
        if (annr.contains(e)) {
            gd.ann_r_generator_indices.push_back(i);
        } else {
            ++gd.k1;
        }
    }
    return gd;
}

bool verify_nilradical(const AlgebraTable& r, const Subspace& n) {
    if (n.ambient() != r.n) {
        throw ArgError("subspace ambient dimension does not match the algebra");
    }
    if (!is_ideal(r, n)) {
        return false;
    }
    Subspace full = Subspace::full(r.n);
    if (!n.contains(subspace_product(r, full, full))) {
        return false;
    }
    // Lower central series of n as a subalgebra; products stay inside n
    // because n is an ideal.
    Subspace cur = n;
    while (cur.dim() > 0) {
        Subspace next = subspace_product(r, cur, n);
        if (next == cur) {
            return false;
        }
        cur = std::move(next);
    }
    return true;
}

} // namespace leibniz
