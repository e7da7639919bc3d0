#include "catalog.hpp"

#include <utility>

#include "errors.hpp"
#include "rational.hpp"

namespace leibniz {

namespace {

std::vector<std::string> seq_labels(const std::string& prefix, int count,
                                    int start = 1) {
    std::vector<std::string> out;
    out.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i)
        out.push_back(prefix + std::to_string(start + i));
    return out;
}

std::vector<std::string> cat(std::vector<std::string> a,
                             const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

AlgebraTable make_table(std::vector<std::string> labels) {
    AlgebraTable t;
    t.n = static_cast<int>(labels.size());
    t.labels = std::move(labels);
    return t;
}

// Tracks which parameters a builder consumed so leftovers can be rejected.
class Params {
public:
    Params(std::string entry, const std::map<std::string, std::string>& given)
        : m_entry(std::move(entry)), m_left(given) {}

    int require_int(const std::string& name) {
        auto it = m_left.find(name);
        if (it == m_left.end())
            throw ArgError(m_entry + ": missing required parameter '" + name +
                           "'");
        int v = to_int(name, it->second);
        m_left.erase(it);
        return v;
    }

    Rational take_rational(const std::string& name, const Rational& fallback) {
        auto it = m_left.find(name);
        if (it == m_left.end())
            return fallback;
        Rational v;
        try {
            v = rat_parse(it->second);
        } catch (const ParseError&) {
            throw ArgError(m_entry + ": parameter '" + name +
                           "' must be a rational number, got '" + it->second +
                           "'");
        }
        m_left.erase(it);
        return v;
    }

    void finish() const {
        if (m_left.empty())
            return;
        std::string msg = m_entry + ": unknown parameter(s):";
        for (const auto& [key, value] : m_left) {
            (void)value;
            msg += " '" + key + "'";
        }
        throw ArgError(msg);
    }

    const std::string& entry() const { return m_entry; }

private:
    int to_int(const std::string& name, const std::string& text) const {
        try {
            size_t pos = 0;
            int v = std::stoi(text, &pos);
            if (pos != text.size())
                throw std::invalid_argument("trailing characters");
            return v;
        } catch (const ArgError&) {
            throw;
        } catch (...) {
            throw ArgError(m_entry + ": parameter '" + name +
                           "' must be an integer, got '" + text + "'");
        }
    }

    std::string m_entry;
    std::map<std::string, std::string> m_left;
};

[[noreturn]] void domain_error(const std::string& entry,
                               const std::string& what) {
    throw ArgError(entry + ": " + what);
}

// ---------------------------------------------------------------- builders

CatalogInstance build_abelian(Params& p) {
    int n = p.require_int("n");
    if (n < 1)
        domain_error(p.entry(), "n must be at least 1");
    AlgebraTable t = make_table(seq_labels("e", n));
    WordPresentation pres;
    pres.algebra = t;
    pres.generators = t.labels;
    return {"abelian", t, pres};
}

CatalogInstance build_nf(Params& p) {
    int n = p.require_int("n");
    if (n < 2)
        domain_error(p.entry(), "n must be at least 2");
    AlgebraTable t = make_table(seq_labels("e", n));
    for (int i = 1; i <= n - 1; ++i)
        t.set_product(i - 1, 0, {{i, 1}});
    WordPresentation pres;
    pres.algebra = t;
    pres.generators = {"e1"};
    for (int j = 2; j <= n; ++j)
        pres.words["e" + std::to_string(j)] =
            std::vector<std::string>(static_cast<size_t>(j), "e1");
    return {"NF", t, pres};
}

CatalogInstance build_f2(Params& p) {
    int n = p.require_int("n");
    if (n < 4)
        domain_error(p.entry(), "n must be at least 4");
    AlgebraTable t = make_table(seq_labels("e", n));
    t.set_product(0, 0, {{2, 1}});
    for (int i = 3; i <= n - 1; ++i)
        t.set_product(i - 1, 0, {{i, 1}});
    WordPresentation pres;
    pres.algebra = t;
    pres.generators = {"e1", "e2"};
    for (int j = 3; j <= n; ++j)
        pres.words["e" + std::to_string(j)] =
            std::vector<std::string>(static_cast<size_t>(j - 1), "e1");
    return {"F2", t, pres};
}

CatalogInstance build_l1(Params& p) {
    int n = p.require_int("n");
    if (n < 4)
        domain_error(p.entry(), "n must be at least 4");
    AlgebraTable t = make_table(seq_labels("e", n));
    t.set_product(0, 0, {{1, 1}});
    for (int i = 3; i <= n - 1; ++i) {
        t.set_product(i - 1, 0, {{i, 1}});
        t.set_product(0, i - 1, {{i, -1}});
    }
    WordPresentation pres;
    pres.algebra = t;
    pres.generators = {"e1", "e3"};
    pres.words["e2"] = {"e1", "e1"};
    for (int j = 4; j <= n; ++j) {
        std::vector<std::string> w = {"e3"};
        w.insert(w.end(), static_cast<size_t>(j - 3), "e1");
        pres.words["e" + std::to_string(j)] = std::move(w);
    }
    return {"L1", t, pres};
}

CatalogInstance build_q(Params& p) {
    int n = p.require_int("n");
    if (n < 4)
        domain_error(p.entry(), "n must be at least 4");
    // dim n+2; basis e1..en, e_{n+1}, e_{n+2}
    AlgebraTable t = make_table(seq_labels("e", n + 2));
    const int u = n;     // 0-based index of e_{n+1}
    const int v = n + 1; // 0-based index of e_{n+2}
    t.set_product(0, 0, {{1, 1}});
    for (int i = 3; i <= n - 1; ++i) {
        t.set_product(i - 1, 0, {{i, 1}});
        t.set_product(0, i - 1, {{i, -1}});
    }
    t.set_product(0, u, {{0, 1}});
    t.set_product(u, 0, {{0, -1}});
    t.set_product(1, u, {{1, 2}});
    for (int i = 4; i <= n; ++i) {
        t.set_product(i - 1, u, {{i - 1, Rational(i - 3)}});
        t.set_product(u, i - 1, {{i - 1, Rational(3 - i)}});
    }
    t.set_product(0, v, {{0, 1}});
    t.set_product(v, 0, {{0, -1}});
    t.set_product(1, v, {{1, 2}});
    for (int i = 3; i <= n; ++i) {
        t.set_product(i - 1, v, {{i - 1, Rational(i - 2)}});
        t.set_product(v, i - 1, {{i - 1, Rational(2 - i)}});
    }
    return {"q", t, std::nullopt};
}

CatalogInstance build_h1(Params&) {
    AlgebraTable t = make_table(seq_labels("e", 3));
    t.set_product(1, 2, {{0, 1}});
    t.set_product(2, 1, {{0, -1}});
    WordPresentation pres;
    pres.algebra = t;
    pres.generators = {"e2", "e3"};
    pres.words["e1"] = {"e2", "e3"};
    return {"H1", t, pres};
}

CatalogInstance build_g536(Params&) {
    AlgebraTable t = make_table(seq_labels("e", 5));
    t.set_product(1, 2, {{0, 1}});
    t.set_product(2, 1, {{0, -1}});
    t.set_product(0, 3, {{0, 1}});
    t.set_product(3, 0, {{0, -1}});
    t.set_product(1, 3, {{1, 1}});
    t.set_product(3, 1, {{1, -1}});
    t.set_product(1, 4, {{1, -1}});
    t.set_product(4, 1, {{1, 1}});
    t.set_product(2, 4, {{2, 1}});
    t.set_product(4, 2, {{2, -1}});
    return {"g536", t, std::nullopt};
}

CatalogInstance build_g537(Params&) {
    AlgebraTable t = make_table(seq_labels("e", 5));
    t.set_product(1, 2, {{0, 1}});
    t.set_product(2, 1, {{0, -1}});
    t.set_product(0, 3, {{0, 2}});
    t.set_product(3, 0, {{0, -2}});
    t.set_product(1, 3, {{1, 1}});
    t.set_product(3, 1, {{1, -1}});
    t.set_product(2, 3, {{2, 1}});
    t.set_product(3, 2, {{2, -1}});
    t.set_product(1, 4, {{2, -1}});
    t.set_product(4, 1, {{2, 1}});
    t.set_product(2, 4, {{1, 1}});
    t.set_product(4, 2, {{1, -1}});
    return {"g537", t, std::nullopt};
}

// Shared (n,k) domain for the graded nilpotent families and their
// extensions: k >= 1 and n - 2k >= 4.
std::pair<int, int> read_nk(Params& p) {
    int n = p.require_int("n");
    int k = p.require_int("k");
    if (k < 1)
        domain_error(p.entry(), "k must be at least 1");
    if (n - 2 * k < 4)
        domain_error(p.entry(), "n - 2k must be at least 4");
    return {n, k};
}

AlgebraTable mu1_table(int n, int k) {
    const int m = n - 2 * k;
    AlgebraTable t =
        make_table(cat(seq_labels("e", m), seq_labels("f", 2 * k)));
    for (int i = 1; i <= m - 1; ++i)
        t.set_product(i - 1, 0, {{i, 1}});
    for (int j = 1; j <= k; ++j)
        t.set_product(0, m + j - 1, {{m + k + j - 1, 1}});
    return t;
}

CatalogInstance build_mu1(Params& p) {
    auto [n, k] = read_nk(p);
    return {"mu1", mu1_table(n, k), std::nullopt};
}

CatalogInstance build_mu2(Params& p) {
    auto [n, k] = read_nk(p);
    const int m = n - 2 * k;
    AlgebraTable t =
        make_table(cat(seq_labels("e", m), seq_labels("f", 2 * k)));
    for (int i = 1; i <= m - 1; ++i)
        t.set_product(i - 1, 0, {{i, 1}});
    t.set_product(0, m, {{1, 1}, {m + k, 1}});
    for (int i = 2; i <= m - 1; ++i)
        t.set_product(i - 1, m, {{i, 1}});
    for (int j = 2; j <= k; ++j)
        t.set_product(0, m + j - 1, {{m + k + j - 1, 1}});
    return {"mu2", t, std::nullopt};
}

AlgebraTable mu3_table(int n, int k) {
    const int m = n - 2 * k;
    AlgebraTable t =
        make_table(cat(seq_labels("e", m), seq_labels("f", 2 * k)));
    for (int i = 2; i <= m - 1; ++i)
        t.set_product(i - 1, 0, {{i, 1}});
    for (int i = 1; i <= k; ++i)
        t.set_product(1, m + i - 1, {{m + k + i - 1, 1}});
    return t;
}

CatalogInstance build_mu3(Params& p) {
    auto [n, k] = read_nk(p);
    const int m = n - 2 * k;
    AlgebraTable t = mu3_table(n, k);
    WordPresentation pres;
    pres.algebra = t;
    pres.generators = {"e1", "e2"};
    for (int i = 1; i <= k; ++i)
        pres.generators.push_back("f" + std::to_string(i));
    for (int j = 3; j <= m; ++j) {
        std::vector<std::string> w = {"e2"};
        w.insert(w.end(), static_cast<size_t>(j - 2), "e1");
        pres.words["e" + std::to_string(j)] = std::move(w);
    }
    for (int i = 1; i <= k; ++i)
        pres.words["f" + std::to_string(k + i)] = {"e2",
                                                   "f" + std::to_string(i)};
    return {"mu3", t, pres};
}

CatalogInstance build_rmu1(Params& p) {
    auto [n, k] = read_nk(p);
    const int m = n - 2 * k;
    // a[t][j]: coefficient a_{t,j}, t = 2..m, j = 1..k (0 when omitted)
    std::vector<std::vector<Rational>> a(
        static_cast<size_t>(m + 1),
        std::vector<Rational>(static_cast<size_t>(k + 1), Rational(0)));
    for (int t = 2; t <= m; ++t)
        for (int j = 1; j <= k; ++j)
            a[t][j] = p.take_rational(
                "a" + std::to_string(t) + "_" + std::to_string(j),
                Rational(0));
    std::vector<std::vector<Rational>> phi(
        static_cast<size_t>(k + 1),
        std::vector<Rational>(static_cast<size_t>(k + 1), Rational(0)));
    std::vector<std::vector<Rational>> delta(
        static_cast<size_t>(k + 1),
        std::vector<Rational>(static_cast<size_t>(k + 1), Rational(0)));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
            if (i != j)
                phi[i][j] = p.take_rational(
                    "phi" + std::to_string(i) + "_" + std::to_string(j),
                    Rational(0));
            delta[i][j] = p.take_rational(
                "delta" + std::to_string(i) + "_" + std::to_string(j),
                Rational(0));
        }

    AlgebraTable t = mu1_table(n, k);
    t.labels = cat(t.labels, seq_labels("x", k));
    t.n = n + k;
    const auto xi = [&](int i) { return n + i - 1; }; // 0-based index of x_i
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= k; ++j) {
            SparseVec terms;
            for (int tt = i + 1; tt <= m; ++tt) {
                const Rational& c = a[tt - i + 1][j];
                if (c != 0)
                    terms.push_back({tt - 1, c});
            }
            if (!terms.empty())
                t.set_product(i - 1, xi(j), std::move(terms));
        }
    for (int i = 1; i <= k; ++i) {
        t.set_product(m + i - 1, xi(i), {{m + i - 1, 1}});
        t.set_product(m + k + i - 1, xi(i), {{m + k + i - 1, 1}});
        t.set_product(xi(i), m + i - 1, {{m + i - 1, -1}});
    }
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
            if (i != j && phi[i][j] != 0)
                t.set_product(xi(i), m + j - 1, {{m + k + j - 1, phi[i][j]}});
            if (delta[i][j] != 0)
                t.set_product(xi(i), xi(j), {{m - 1, delta[i][j]}});
        }
    return {"Rmu1", t, std::nullopt};
}

CatalogInstance build_r1r2(Params& p, bool with_beta, const char* name) {
    int n = p.require_int("n");
    if (n < 4)
        domain_error(p.entry(), "n must be at least 4");
    AlgebraTable t =
        make_table(cat(seq_labels("e", n), {std::string("x"), std::string("y")}));
    const int x = n, y = n + 1;
    t.set_product(0, 0, {{2, 1}});
    for (int i = 3; i <= n - 1; ++i)
        t.set_product(i - 1, 0, {{i, 1}});
    t.set_product(0, x, {{0, 1}});
    t.set_product(x, 0, {{0, -1}});
    for (int i = 3; i <= n; ++i)
        t.set_product(i - 1, x, {{i - 1, Rational(i - 1)}});
    t.set_product(1, y, {{1, 1}});
    if (with_beta)
        t.set_product(y, 1, {{1, -1}});
    return {name, t, std::nullopt};
}

CatalogInstance build_r1(Params& p) { return build_r1r2(p, true, "R1"); }
CatalogInstance build_r2(Params& p) { return build_r1r2(p, false, "R2"); }

CatalogInstance build_r4(Params&, int b1, int b2, const char* name) {
    AlgebraTable t = make_table({"e1", "e2", "x", "y"});
    t.set_product(0, 2, {{0, 1}});
    t.set_product(1, 3, {{1, 1}});
    if (b1 == 0)
        t.set_product(2, 0, {{0, -1}});
    if (b2 == 0)
        t.set_product(3, 1, {{1, -1}});
    return {name, t, std::nullopt};
}

CatalogInstance build_r41(Params& p) { return build_r4(p, 1, 1, "R41"); }
CatalogInstance build_r42(Params& p) { return build_r4(p, 0, 0, "R42"); }
CatalogInstance build_r43(Params& p) { return build_r4(p, 1, 0, "R43"); }

CatalogInstance build_n54(Params&) {
    AlgebraTable t = make_table(seq_labels("e", 3));
    t.set_product(1, 0, {{2, 1}});
    WordPresentation pres;
    pres.algebra = t;
    pres.generators = {"e1", "e2"};
    pres.words["e3"] = {"e2", "e1"};
    return {"N54", t, pres};
}

CatalogInstance build_r54(Params&) {
    AlgebraTable t = make_table({"e1", "e2", "e3", "x1", "x2"});
    t.set_product(1, 0, {{2, 1}});
    t.set_product(0, 3, {{0, 1}});
    t.set_product(3, 0, {{0, -1}});
    t.set_product(1, 4, {{1, 1}});
    t.set_product(2, 3, {{2, 1}});
    t.set_product(2, 4, {{2, 1}});
    return {"R54", t, std::nullopt};
}

CatalogInstance build_rnf(Params& p) {
    int n = p.require_int("n");
    if (n < 2)
        domain_error(p.entry(), "n must be at least 2");
    AlgebraTable t = make_table(cat(seq_labels("e", n), {std::string("x")}));
    for (int i = 1; i <= n - 1; ++i)
        t.set_product(i - 1, 0, {{i, 1}});
    t.set_product(n, 0, {{0, 1}});
    for (int i = 1; i <= n; ++i)
        t.set_product(i - 1, n, {{i - 1, Rational(-i)}});
    return {"RNF", t, std::nullopt};
}

CatalogInstance build_rmu3(Params& p) {
    auto [n, k] = read_nk(p);
    const int m = n - 2 * k;
    AlgebraTable t = mu3_table(n, k);
    t.labels = cat(t.labels,
                   cat({std::string("y1"), std::string("y2")},
                       seq_labels("x", k)));
    t.n = n + k + 2;
    const int y1 = n, y2 = n + 1;
    const auto xi = [&](int i) { return n + 2 + i - 1; };
    t.set_product(0, y1, {{0, 1}});
    for (int j = 3; j <= m; ++j)
        t.set_product(j - 1, y1, {{j - 1, Rational(j - 2)}});
    t.set_product(y1, 0, {{0, -1}});
    for (int j = 2; j <= m; ++j)
        t.set_product(j - 1, y2, {{j - 1, 1}});
    for (int i = 1; i <= k; ++i)
        t.set_product(m + k + i - 1, y2, {{m + k + i - 1, 1}});
    for (int i = 1; i <= k; ++i) {
        t.set_product(m + i - 1, xi(i), {{m + i - 1, 1}});
        t.set_product(m + k + i - 1, xi(i), {{m + k + i - 1, 1}});
        t.set_product(xi(i), m + i - 1, {{m + i - 1, -1}});
    }
    return {"Rmu3", t, std::nullopt};
}

CatalogInstance build_rh1(Params&) {
    AlgebraTable t = make_table({"e1", "e2", "e3", "x1", "x2"});
    t.set_product(1, 2, {{0, 1}});
    t.set_product(2, 1, {{0, -1}});
    t.set_product(0, 3, {{0, 1}});
    t.set_product(3, 0, {{0, -1}});
    t.set_product(1, 3, {{1, 1}});
    t.set_product(3, 1, {{1, -1}});
    t.set_product(0, 4, {{0, 1}});
    t.set_product(4, 0, {{0, -1}});
    t.set_product(2, 4, {{2, 1}});
    t.set_product(4, 2, {{2, -1}});
    return {"RH1", t, std::nullopt};
}

// ---------------------------------------------------------------- registry

using Builder = CatalogInstance (*)(Params&);

struct EntryDef {
    const char* name;
    const char* summary;
    const char* params_help;
    bool has_presentation;
    Builder build;
};

const EntryDef k_entries[] = {
    {"abelian", "abelian algebra of dimension n", "n (n >= 1)", true,
     build_abelian},
    {"NF", "filiform nilpotent algebra: [e_i,e1] = e_{i+1}", "n (n >= 2)",
     true, build_nf},
    {"F2",
     "two-generator filiform-type nilpotent algebra: [e1,e1] = e3, "
     "[e_i,e1] = e_{i+1}",
     "n (n >= 4)", true, build_f2},
    {"L1",
     "two-generator nilpotent algebra: [e1,e1] = e2, [e_i,e1] = e_{i+1} = "
     "-[e1,e_i]",
     "n (n >= 4)", true, build_l1},
    {"q",
     "solvable algebra of dimension n+2 whose nilradical is L1 of dimension "
     "n",
     "n (n >= 4)", false, build_q},
    {"H1", "three-dimensional Heisenberg Lie algebra", "", true, build_h1},
    {"g536",
     "five-dimensional solvable Lie algebra with Heisenberg nilradical", "",
     false, build_g536},
    {"g537",
     "five-dimensional solvable Lie algebra with Heisenberg nilradical "
     "(rotation action)",
     "", false, build_g537},
    {"mu1", "graded nilpotent family mu1(n,k): [e_i,e1] = e_{i+1}, "
            "[e1,f_j] = f_{k+j}",
     "n, k (k >= 1, n - 2k >= 4)", false, build_mu1},
    {"mu2",
     "graded nilpotent family mu2(n,k) with mixed product [e1,f1] = e2 + "
     "f_{k+1}",
     "n, k (k >= 1, n - 2k >= 4)", false, build_mu2},
    {"mu3", "graded nilpotent family mu3(n,k): [e_i,e1] = e_{i+1}, "
            "[e2,f_i] = f_{k+i}",
     "n, k (k >= 1, n - 2k >= 4)", true, build_mu3},
    {"Rmu1",
     "parametric solvable family of dimension n+k with nilradical mu1(n,k)",
     "n, k (k >= 1, n - 2k >= 4); optional rational a{t}_{j} "
     "(2 <= t <= n-2k, 1 <= j <= k), phi{i}_{j} (i != j), delta{i}_{j} "
     "(default 0)",
     false, build_rmu1},
    {"R1", "solvable extension of F2 with abelian flag 0 on e2",
     "n (n >= 4)", false, build_r1},
    {"R2", "solvable extension of F2 with abelian flag 1 on e2",
     "n (n >= 4)", false, build_r2},
    {"R41", "four-dimensional solvable extension of the abelian plane, "
            "flags (1,1)",
     "", false, build_r41},
    {"R42", "four-dimensional solvable extension of the abelian plane, "
            "flags (0,0)",
     "", false, build_r42},
    {"R43", "four-dimensional solvable extension of the abelian plane, "
            "flags (1,0)",
     "", false, build_r43},
    {"N54", "three-dimensional nilpotent algebra [e2,e1] = e3", "", true,
     build_n54},
    {"R54", "five-dimensional solvable extension of N54", "", false,
     build_r54},
    {"RNF", "solvable extension of NF with one added vector", "n (n >= 2)",
     false, build_rnf},
    {"Rmu3", "solvable extension of mu3(n,k) with k+2 added vectors",
     "n, k (k >= 1, n - 2k >= 4)", false, build_rmu3},
    {"RH1", "five-dimensional solvable Lie extension of the Heisenberg "
            "algebra",
     "", false, build_rh1},
};

} // namespace

const std::vector<CatalogEntryInfo>& catalog_list() {
    static const std::vector<CatalogEntryInfo> list = [] {
        std::vector<CatalogEntryInfo> out;
        for (const EntryDef& e : k_entries)
            out.push_back(
                {e.name, e.summary, e.params_help, e.has_presentation});
        return out;
    }();
    return list;
}

CatalogInstance catalog_get(const std::string& name,
                            const std::map<std::string, std::string>& params) {
    for (const EntryDef& e : k_entries) {
        if (name == e.name) {
            Params p(name, params);
            CatalogInstance inst = e.build(p);
            p.finish();
            return inst;
        }
    }
    std::string msg = "unknown catalog entry '" + name + "'; known entries:";
    for (const EntryDef& e : k_entries)
        msg += std::string(" ") + e.name;
    throw ArgError(msg);
}

} // namespace leibniz
