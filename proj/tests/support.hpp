#ifndef SPECCOVER_TESTS_SUPPORT_HPP
#define SPECCOVER_TESTS_SUPPORT_HPP

// Reference implementations written directly from the definitions, on plain
// nested vectors. They share no code with the library beyond the types used
// to hand values back and forth.

#include <speccover/speccover.hpp>

#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <vector>

namespace oracle {

using Rows = std::vector<std::vector<int>>;

inline bool eval(const Rows& f, const std::vector<int>& t) {
    for (const auto& clause : f) {
        bool sat = false;
        for (std::size_t i = 0; i < clause.size(); ++i)
            if ((clause[i] == 1 && t[i]) || (clause[i] == -1 && !t[i])) sat = true;
        if (!sat) return false;
    }
    return true;
}

inline std::vector<int> bits(std::uint64_t v, std::size_t n) {
    std::vector<int> t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = (v >> (n - 1 - i)) & 1u;
    return t;
}

// Pair i, side a holds clause j iff the clause contains the literal that is
// true when x_i = a.
struct Pairs {
    std::vector<std::vector<std::set<int>>> side;  // side[i][a]
    std::size_t m = 0;
};

inline Pairs pairs_of(const Rows& f) {
    const std::size_t n = f.front().size();
    Pairs p;
    p.m = f.size();
    p.side.assign(n, std::vector<std::set<int>>(2));
    for (std::size_t j = 0; j < f.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) {
            if (f[j][i] == 1) p.side[i][1].insert(static_cast<int>(j));
            if (f[j][i] == -1) p.side[i][0].insert(static_cast<int>(j));
        }
    return p;
}

inline bool covers(const Pairs& p, const std::vector<int>& t) {
    std::set<int> u;
    for (std::size_t i = 0; i < p.side.size(); ++i) u.insert(p.side[i][t[i]].begin(), p.side[i][t[i]].end());
    return u.size() == p.m;
}

inline Rows rows_of(const speccover::CnfMatrix& f) { return f.to_rows(); }

inline std::vector<int> vec(const speccover::BoolTuple& t) {
    std::vector<int> v(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) v[i] = t[i];
    return v;
}

// Every valid n x m CNF matrix: no empty clause, every variable used.
inline std::vector<Rows> all_cnfs(std::size_t n, std::size_t m) {
    std::vector<Rows> out;
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < n * m; ++k) total *= 3;
    for (std::uint64_t code = 0; code < total; ++code) {
        Rows f(m, std::vector<int>(n));
        std::uint64_t c = code;
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t i = 0; i < n; ++i) {
                f[j][i] = static_cast<int>(c % 3) - 1;
                c /= 3;
            }
        bool ok = true;
        for (std::size_t j = 0; j < m && ok; ++j) {
            bool any = false;
            for (std::size_t i = 0; i < n; ++i) any |= f[j][i] != 0;
            ok = any;
        }
        for (std::size_t i = 0; i < n && ok; ++i) {
            bool any = false;
            for (std::size_t j = 0; j < m; ++j) any |= f[j][i] != 0;
            ok = any;
        }
        if (ok) out.push_back(std::move(f));
    }
    return out;
}

// Functions reachable from f under a fixed tuple by single admissible
// changes (remove from an unselected component, add anywhere, move between
// selected components), breadth first. States are CNF cell matrices; a
// state is kept only if it is a valid special decomposition covered by t.
inline std::set<Rows> reachable(const Rows& f, const std::vector<int>& t) {
    const std::size_t n = f.front().size();
    const std::size_t m = f.size();
    auto side_of = [](int cell) { return cell == 1 ? 1 : 0; };
    auto valid = [&](const Rows& g) {
        for (std::size_t i = 0; i < n; ++i) {
            bool any = false;
            for (std::size_t j = 0; j < m; ++j) any |= g[j][i] != 0;
            if (!any) return false;
        }
        for (std::size_t j = 0; j < m; ++j) {
            bool any = false;
            for (std::size_t i = 0; i < n; ++i) any |= g[j][i] != 0;
            if (!any) return false;
        }
        return eval(g, t);
    };
    std::set<Rows> seen{f};
    std::queue<Rows> todo;
    todo.push(f);
    while (!todo.empty()) {
        const Rows g = todo.front();
        todo.pop();
        auto visit = [&](const Rows& next) {
            if (valid(next) && seen.insert(next).second) todo.push(next);
        };
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                const int lit_sel = t[i] ? 1 : -1;
                if (g[j][i] != 0 && side_of(g[j][i]) != t[i]) {
                    Rows r = g;
                    r[j][i] = 0;
                    visit(r);
                }
                if (g[j][i] == 0)
                    for (int v : {-1, 1}) {
                        Rows a = g;
                        a[j][i] = v;
                        visit(a);
                    }
                if (g[j][i] == lit_sel)
                    for (std::size_t k = 0; k < n; ++k) {
                        const int lit_k = t[k] ? 1 : -1;
                        if (k == i || (g[j][k] != 0 && g[j][k] != lit_k)) continue;
                        Rows mv = g;
                        mv[j][i] = 0;
                        mv[j][k] = t[k] ? 1 : -1;
                        visit(mv);
                    }
            }
    }
    return seen;
}

}  // namespace oracle

#endif
