#pragma once
// Independent reference computations for the tests. Each deliberately uses a
// different (slow, naive) method from the library code it checks.

#include <algorithm>
#include <cstddef>
#include <set>
#include <vector>

#include <plumbook/plumbook.hpp>

namespace oracle {

using plumbook::Integer;
using plumbook::IntMatrix;

/// Laplace expansion along the first row.
inline Integer cofactor_det(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Integer d = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j) minor(r - 1, cc++) = m(r, c);
        Integer term = m(0, j) * cofactor_det(minor);
        d += (j % 2 == 0) ? term : Integer(-term);
    }
    return d;
}

inline Integer gcd(Integer a, Integer b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Integer r = a % b;
        a = b;
        b = r;
    }
    return a;
}

inline void choose(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
                   std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < n; ++i) {
        cur.push_back(i);
        choose(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    choose(n, k, 0, cur, out);
    return out;
}

/// Cokernel via determinantal divisors: d_k = gcd of k×k minors, and the
/// invariant factors are d_k / d_{k-1}. Only for small matrices.
inline plumbook::AbelianGroup cokernel_by_minors(const IntMatrix& m) {
    std::vector<Integer> dk{1};
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
        Integer g = 0;
        for (const auto& rs : subsets(m.rows(), k))
            for (const auto& cs : subsets(m.cols(), k)) {
                IntMatrix sub(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rs[i], cs[j]);
                g = gcd(g, cofactor_det(sub));
            }
        if (g == 0) break;
        dk.push_back(g);
    }
    plumbook::AbelianGroup out;
    const std::size_t rank = dk.size() - 1;
    out.free_rank = m.rows() - rank;
    for (std::size_t k = 1; k <= rank; ++k) {
        Integer f = dk[k] / dk[k - 1];
        if (f != 1) out.torsion.push_back(f);
    }
    return out;
}

/// Order of the cokernel of a square matrix: |det|, or 0 when infinite.
inline Integer cokernel_order(const IntMatrix& m) {
    Integer d = cofactor_det(m);
    return d < 0 ? Integer(-d) : d;
}

/// Genus by plain recursion over every maximal path, rediscovered from scratch
/// with brute-force path enumeration (all vertex pairs, BFS paths).
inline std::size_t genus(const plumbook::PlumbingTree& t, std::vector<bool> alive) {
    const std::size_t n = t.size();
    bool any_bad = false;
    for (std::size_t v = 0; v < n; ++v) any_bad = any_bad || (alive[v] && t.is_bad(v));
    if (!any_bad) return 0;
    auto deg = [&](std::size_t v) {
        std::size_t d = 0;
        for (std::size_t w : t.neighbors(v)) d += alive[w] ? 1 : 0;
        return d;
    };
    std::size_t best = n + 1;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            if (!alive[a] || !alive[b] || deg(a) > 1 || deg(b) > 1) continue;
            // path a..b in the alive forest
            std::vector<long> prev(n, -1);
            std::vector<std::size_t> q{a};
            prev[a] = static_cast<long>(a);
            for (std::size_t h = 0; h < q.size(); ++h)
                for (std::size_t w : t.neighbors(q[h]))
                    if (alive[w] && prev[w] < 0) {
                        prev[w] = static_cast<long>(q[h]);
                        q.push_back(w);
                    }
            if (prev[b] < 0) continue;
            if (a == b && deg(a) != 0) continue;
            std::vector<bool> next = alive;
            bool hits = false;
            for (std::size_t x = b;; x = static_cast<std::size_t>(prev[x])) {
                next[x] = false;
                hits = hits || t.is_bad(x);
                if (x == a) break;
            }
            if (hits) best = std::min(best, 1 + genus(t, next));
        }
    return best;
}

inline std::size_t genus(const plumbook::PlumbingTree& t) { return genus(t, std::vector<bool>(t.size(), true)); }

/// Rolled-up linking matrix by literal handle slides: U'_i = U_i + U'_{i-1}
/// along every layout chain, applied as basis changes on the plumbing form.
inline IntMatrix slid_linking(const plumbook::PlumbingTree& t, const plumbook::Layout& lay) {
    IntMatrix A = t.intersection_matrix();
    const std::size_t n = t.size();
    // Columns: basis of slid classes in vertex coordinates.
    std::vector<std::vector<Integer>> cls;
    for (const auto& st : lay.stages) {
        std::vector<Integer> acc(n, 0);
        for (std::size_t v : st.path) {
            acc[v] += 1;
            cls.push_back(acc);
        }
    }
    IntMatrix L(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Integer s = 0;
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q) s += cls[i][p] * A(p, q) * cls[j][q];
            L(i, j) = s;
        }
    return L;
}

/// Every rotation tuple r_v in {-(|n|-2), ..., |n|-2} with r_v ≡ |n| mod 2,
/// by filtering the full box [-|n|, |n|]^k.
inline std::vector<std::vector<long long>> stein_tuples(const plumbook::PlumbingTree& t) {
    std::vector<std::vector<long long>> out{{}};
    for (std::size_t v = 0; v < t.size(); ++v) {
        long long m = t.euler(v) < 0 ? -t.euler(v) : t.euler(v);
        std::vector<std::vector<long long>> next;
        for (const auto& p : out)
            for (long long r = -m; r <= m; ++r) {
                if ((r + m) % 2 != 0 || r < -(m - 2) || r > m - 2) continue;
                auto q = p;
                q.push_back(r);
                next.push_back(std::move(q));
            }
        out = std::move(next);
    }
    return out;
}

/// Evaluates a1 - 1/(a2 - 1/(... - 1/ak)) as an exact fraction (num, den), right to left.
inline std::pair<Integer, Integer> eval_negative_cf(const std::vector<long long>& a) {
    Integer num = a.back(), den = 1;
    for (std::size_t i = a.size() - 1; i-- > 0;) {
        // a_i - den/num
        Integer nn = Integer(a[i]) * num - den;
        den = num;
        num = nn;
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return {num, den};
}

/// H1 as the cokernel of the variation, assembled from single-twist pieces
/// V_c = s·c·cᵀ (cocore basis) by Var(φψ) = Var φ + Var ψ + Var φ·ι·Var ψ,
/// where ι = Jᵀ takes absolute classes to relative ones.
inline plumbook::AbelianGroup monodromy_h1(const plumbook::AbstractOpenBook& b) {
    const std::size_t n = b.dim();
    IntMatrix iota = b.page.intersection_form().transpose();
    IntMatrix V(n, n);
    for (auto it = b.monodromy.rbegin(); it != b.monodromy.rend(); ++it) {
        plumbook::ClassVector c = b.class_of(it->curve);
        c.resize(n, 0);
        IntMatrix Vc(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t k = 0; k < n; ++k) Vc(r, k) = Integer(it->sign) * c[r] * c[k];
        V = Vc + V + Vc * iota * V;
    }
    return plumbook::cokernel(V);
}

}  // namespace oracle
