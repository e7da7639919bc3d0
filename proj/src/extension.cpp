#include "extension.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "errors.hpp"

namespace leibniz {

bool has_errors(const std::vector<PresDefect>& defects) {
    for (const auto& d : defects) {
        if (d.severity == DefectSeverity::Error) {
            return true;
        }
    }
    return false;
}

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int x, int y) { parent[find(x)] = find(y); }
};

Vec unit_vec(int n, int i) {
    Vec v(n, Rational(0));
    v[i] = 1;
    return v;
}

} // namespace

ComponentSplit detect_components(const AlgebraTable& n) {
    UnionFind uf(n.n);
    for (const auto& [key, terms] : n.gamma) {
        uf.unite(key.first, key.second);
        for (const auto& [c, coeff] : terms) {
            uf.unite(key.first, c);
        }
    }
    std::map<int, std::vector<int>> groups; // root -> members (increasing)
    for (int i = 0; i < n.n; ++i) {
        groups[uf.find(i)].push_back(i);
    }

    ComponentSplit split;
    for (auto& [root, members] : groups) {
        bool has_product = false;
        for (int i : members) {
            for (int j : members) {
                if (n.product(i, j)) {
                    has_product = true;
                }
            }
        }
        if (has_product) {
            split.nonabelian.push_back(std::move(members));
        } else if (members.size() == 1) {
            split.abelian.push_back(members[0]);
        } else {
            // Unreachable through the support graph (an edge implies a
            // product), but the hypothesis matters: the abelian part must
            // split into one-dimensional summands.
            throw DomainError("abelian component of dimension > 1");
        }
    }
    std::sort(split.nonabelian.begin(), split.nonabelian.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return a.front() < b.front();
              });
    std::sort(split.abelian.begin(), split.abelian.end());
    return split;
}

std::vector<PresDefect> validate_presentation(const WordPresentation& p) {
    std::vector<PresDefect> defects;
    const AlgebraTable& nt = p.algebra;
    auto err = [&](std::string m) {
        defects.push_back({DefectSeverity::Error, std::move(m)});
    };
    auto warn = [&](std::string m) {
        defects.push_back({DefectSeverity::Warning, std::move(m)});
    };

    if (!check_leibniz(nt).empty()) {
        err("the algebra does not satisfy the Leibniz identity");
        return defects;
    }

    GeneratorData gd;
    try {
        gd = generator_data(nt);
    } catch (const DomainError& e) {
        err(e.what());
        return defects;
    }

    // Declared generators must be exactly the basis vectors outside N^2.
    std::set<int> declared;
    bool labels_ok = true;
    for (const auto& label : p.generators) {
        int idx = nt.index_of(label);
        if (idx < 0) {
            err("generator label '" + label + "' is not a basis label");
            labels_ok = false;
        } else if (!declared.insert(idx).second) {
            err("generator '" + label + "' is listed twice");
            labels_ok = false;
        }
    }
    std::set<int> actual(gd.generator_indices.begin(), gd.generator_indices.end());
    if (labels_ok && declared != actual) {
        std::string expect;
        for (int i : gd.generator_indices) {
            if (!expect.empty()) expect += ", ";
            expect += nt.labels[i];
        }
        err("declared generators do not match the generator basis elements (" + expect + ")");
    }

    // Every non-generator needs exactly one word over generator labels, of
    // length >= 2, evaluating to it under left-nested brackets.
    for (const auto& [target, word] : p.words) {
        int idx = nt.index_of(target);
        if (idx < 0) {
            err("word target '" + target + "' is not a basis label");
        } else if (actual.count(idx)) {
            err("word target '" + target + "' is a generator");
        }
    }
    for (int i = 0; i < nt.n; ++i) {
        if (actual.count(i)) continue;
        const std::string& label = nt.labels[i];
        auto it = p.words.find(label);
        if (it == p.words.end()) {
            err("missing word for '" + label + "'");
            continue;
        }
        const auto& word = it->second;
        if (word.size() < 2) {
            err("word for '" + label + "' must involve at least two letters");
            continue;
        }
        bool letters_ok = true;
        for (const auto& letter : word) {
            int li = nt.index_of(letter);
            if (li < 0 || !actual.count(li)) {
                err("word for '" + label + "' uses '" + letter + "', which is not a generator");
                letters_ok = false;
            }
        }
        if (!letters_ok) continue;
        Vec value = unit_vec(nt.n, nt.index_of(word[0]));
        for (size_t t = 1; t < word.size(); ++t) {
            value = bracket(nt, value, unit_vec(nt.n, nt.index_of(word[t])));
        }
        if (value != unit_vec(nt.n, i)) {
            err("word for '" + label + "' evaluates to " + format_combo(value, nt.labels) +
                ", expected " + label);
        }
    }

    // Abelian flags: exactly one per 1-dimensional abelian summand
    // generator.  Anything else still builds, so these are warnings.
    ComponentSplit split;
    try {
        split = detect_components(nt);
    } catch (const DomainError& e) {
        err(e.what());
        return defects;
    }
    std::set<int> abelian(split.abelian.begin(), split.abelian.end());
    for (const auto& [label, value] : p.abelian_flags) {
        int idx = nt.index_of(label);
        if (idx < 0) {
            warn("abelian flag for unknown label '" + label + "' is ignored");
            continue;
        }
        if (value != 0 && value != 1) {
            err("abelian flag for '" + label + "' must be 0 or 1");
            continue;
        }
        if (!abelian.count(idx)) {
            warn("flag for '" + label + "' is ignored: the value is forced for "
                 "generators of non-abelian components");
        }
    }
    for (int i : split.abelian) {
        if (!p.abelian_flags.count(nt.labels[i])) {
            warn("no flag for abelian generator '" + nt.labels[i] + "'; defaulting to 1");
        }
    }
    return defects;
}

Mat compute_alpha(const WordPresentation& p, const GeneratorData& gd) {
    const AlgebraTable& nt = p.algebra;
    Mat alpha(nt.n, gd.k);
    std::map<int, int> column; // basis index -> alpha column
    for (int c = 0; c < gd.k; ++c) {
        column[gd.generator_indices[c]] = c;
    }
    for (int i = 0; i < nt.n; ++i) {
        if (auto it = column.find(i); it != column.end()) {
            alpha.at(i, it->second) = 1;
            continue;
        }
        auto wit = p.words.find(nt.labels[i]);
        if (wit == p.words.end()) {
            throw ArgError("missing word for '" + nt.labels[i] + "'");
        }
        for (const auto& letter : wit->second) {
            int li = nt.index_of(letter);
            auto cit = li < 0 ? column.end() : column.find(li);
            if (cit == column.end()) {
                throw ArgError("word letter '" + letter + "' is not a generator");
            }
            alpha.at(i, cit->second) += 1;
        }
    }
    return alpha;
}

std::vector<std::vector<SparseVec>> compute_beta(const WordPresentation& p,
                                                 const GeneratorData& gd,
                                                 const std::vector<int>& b_flags) {
    const AlgebraTable& nt = p.algebra;
    const int k = gd.k;
    if (static_cast<int>(b_flags.size()) != k) {
        throw ArgError("need one resolved b flag per generator");
    }
    std::set<int> generators(gd.generator_indices.begin(), gd.generator_indices.end());

    // [x_j, e_g] = -(1 - b_j) e_g when g is generator j, zero on the others.
    auto base_case = [&](int j, int g) {
        Vec v(nt.n, Rational(0));
        if (gd.generator_indices[j] == g) {
            v[g] = Rational(b_flags[j] - 1);
        }
        return v;
    };

    std::vector<std::vector<SparseVec>> beta(k, std::vector<SparseVec>(nt.n));
    for (int j = 0; j < k; ++j) {
        for (int i = 0; i < nt.n; ++i) {
            Vec xb;
            if (generators.count(i)) {
                xb = base_case(j, i);
            } else {
                const auto& word = p.words.at(nt.labels[i]);
                // Walk the word, maintaining the prefix value pv inside N
                // and xb = [x_j, pv] via
                //   [x_j, [w, e_g]] = [[x_j, w], e_g] - [[x_j, e_g], w].
                int g0 = nt.index_of(word[0]);
                xb = base_case(j, g0);
                Vec pv = unit_vec(nt.n, g0);
                for (size_t t = 1; t < word.size(); ++t) {
                    int gt = nt.index_of(word[t]);
                    Vec next = bracket(nt, xb, unit_vec(nt.n, gt));
                    Vec second = bracket(nt, base_case(j, gt), pv);
                    for (int c = 0; c < nt.n; ++c) {
                        next[c] -= second[c];
                    }
                    xb = std::move(next);
                    pv = bracket(nt, pv, unit_vec(nt.n, gt));
                }
            }
            beta[j][i] = to_sparse(xb);
        }
    }
    return beta;
}

ExtensionResult build_extension(const WordPresentation& p) {
    std::vector<PresDefect> defects = validate_presentation(p);
    if (has_errors(defects)) {
        std::string msg = "invalid presentation:";
        for (const auto& d : defects) {
            if (d.severity == DefectSeverity::Error) {
                msg += "\n  " + d.message;
            }
        }
        throw DomainError(msg);
    }

    const AlgebraTable& nt = p.algebra;
    const int n = nt.n;
    GeneratorData gd = generator_data(nt);
    ComponentSplit split = detect_components(nt);
    const int k = gd.k;

    // Resolve the b flag of every generator.  Non-abelian components force
    // b = 0 outside Ann_r(N) and b = 1 inside; abelian summand generators
    // take the user's flag, defaulting to 1.
    std::set<int> abelian(split.abelian.begin(), split.abelian.end());
    Subspace annr = right_annihilator(nt);
    std::vector<int> b_flags(k, 0);
    for (int j = 0; j < k; ++j) {
        int gi = gd.generator_indices[j];
        if (abelian.count(gi)) {
            auto it = p.abelian_flags.find(nt.labels[gi]);
            b_flags[j] = it == p.abelian_flags.end() ? 1 : it->second;
        } else {
            b_flags[j] = annr.contains(unit_vec(n, gi)) ? 1 : 0;
        }
    }

    Mat alpha = compute_alpha(p, gd);
    auto beta = compute_beta(p, gd, b_flags);

    ExtensionResult result;
    result.alpha = alpha;
    result.beta = beta;
    result.generator_indices = gd.generator_indices;
    result.b_flags = b_flags;
    result.components = split;
    result.defects = std::move(defects);

    AlgebraTable r;
    r.n = n + k;
    r.labels = nt.labels;
    std::set<std::string> taken(nt.labels.begin(), nt.labels.end());
    for (int j = 0; j < k; ++j) {
        std::string label = "x" + std::to_string(j + 1);
        while (taken.count(label)) label += "_";
        taken.insert(label);
        result.partner_labels.push_back(label);
        r.labels.push_back(label);
    }
    r.gamma = nt.gamma;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < k; ++j) {
            if (alpha.at(i, j) != 0) {
                r.set_product(i, n + j, {{i, alpha.at(i, j)}});
            }
        }
    }
    for (int j = 0; j < k; ++j) {
        for (int i = 0; i < n; ++i) {
            if (!beta[j][i].empty()) {
                r.set_product(n + j, i, beta[j][i]);
            }
        }
    }
    // [x_i, x_j] = 0: nothing stored.

    // Certify the construction: the Leibniz identity on R, and the support
    // condition that [x_j, e_i] only meets basis elements whose alpha row
    // matches that of e_i.
    if (!check_leibniz(r).empty()) {
        throw DomainError("constructed extension fails the Leibniz identity; "
                          "the presentation is inconsistent");
    }
    for (int j = 0; j < k; ++j) {
        for (int i = 0; i < n; ++i) {
            for (const auto& [t, coeff] : beta[j][i]) {
                if (alpha.row(t) != alpha.row(i)) {
                    throw DomainError("beta support violates the alpha-row constraint");
                }
            }
        }
    }

    result.table = std::move(r);
    return result;
}

std::vector<ExtensionResult> enumerate_flag_family(const WordPresentation& p) {
    ComponentSplit split = detect_components(p.algebra);
    const int count = static_cast<int>(split.abelian.size());
    std::vector<ExtensionResult> family;
    for (int j = 0; j <= count; ++j) {
        WordPresentation q = p;
        q.abelian_flags.clear();
        for (int t = 0; t < count; ++t) {
            q.abelian_flags[p.algebra.labels[split.abelian[t]]] = t < j ? 1 : 0;
        }
        family.push_back(build_extension(q));
    }
    return family;
}

bool lie_specialize_check(const ExtensionResult& r) { return is_lie(r.table); }

bool verify_isomorphism(const AlgebraTable& a, const AlgebraTable& b, const Mat& p) {
    if (a.n != b.n) {
        throw ArgError("algebras have different dimensions");
    }
    return tables_equal(basis_change(a, p), b);
}

} // namespace leibniz
