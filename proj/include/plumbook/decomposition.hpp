#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plumbing_tree.hpp"

namespace plumbook {

/// Subset of a tree's vertices; the induced subgraph is always a forest.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t n, bool full = false) : bits_(n, full) {}
    static VertexSet all(const PlumbingTree& t) { return VertexSet(t.size(), true); }

    [[nodiscard]] std::size_t universe() const noexcept { return bits_.size(); }
    [[nodiscard]] bool contains(std::size_t v) const { return v < bits_.size() && bits_[v]; }
    void insert(std::size_t v) { bits_.at(v) = true; }
    void erase(std::size_t v) { bits_.at(v) = false; }
    [[nodiscard]] std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        for (std::size_t v = 0; v < bits_.size(); ++v)
            if (bits_[v]) out.push_back(v);
        return out;
    }
    [[nodiscard]] bool empty() const { return std::none_of(bits_.begin(), bits_.end(), [](bool b) { return b; }); }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend bool operator<(const VertexSet& a, const VertexSet& b) { return a.bits_ < b.bits_; }

private:
    std::vector<bool> bits_;
};

struct LinearSubtree {
    std::vector<std::size_t> path;
    friend bool operator==(const LinearSubtree&, const LinearSubtree&) = default;
    friend auto operator<=>(const LinearSubtree&, const LinearSubtree&) = default;
};

struct Decomposition {
    std::vector<LinearSubtree> stages;
    std::vector<std::size_t> residual;
};

struct GenusResult {
    std::size_t genus = 0;
    Decomposition witness;
    bool exact = true;
};

class DecompositionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<std::size_t> sub_neighbors(const PlumbingTree& t, const VertexSet& g, std::size_t v) {
    std::vector<std::size_t> out;
    for (std::size_t w : t.neighbors(v))
        if (g.contains(w)) out.push_back(w);
    return out;
}

}  // namespace detail

/// Connected components of the induced forest, ordered by smallest member.
inline std::vector<std::vector<std::size_t>> components(const PlumbingTree& t, const VertexSet& g) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> seen(t.size(), false);
    for (std::size_t s : g.members()) {
        if (seen[s]) continue;
        std::vector<std::size_t> comp, stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            comp.push_back(x);
            for (std::size_t y : detail::sub_neighbors(t, g, x))
                if (!seen[y]) {
                    seen[y] = true;
                    stack.push_back(y);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

/// All maximal paths of the induced forest: isolated vertices and leaf-to-leaf
/// paths, each listed from its smaller leaf. Order: component, then leaf pair.
inline std::vector<LinearSubtree> enumerate_maximal_linear(const PlumbingTree& t, const VertexSet& g) {
    std::vector<LinearSubtree> out;
    for (const auto& comp : components(t, g)) {
        if (comp.size() == 1) {
            out.push_back({{comp[0]}});
            continue;
        }
        std::vector<std::size_t> leaves;
        for (std::size_t v : comp)
            if (detail::sub_neighbors(t, g, v).size() <= 1) leaves.push_back(v);
        for (std::size_t i = 0; i < leaves.size(); ++i) {
            // Parent pointers from leaves[i], reused for every partner leaf.
            std::map<std::size_t, std::size_t> parent;
            std::vector<std::size_t> stack{leaves[i]};
            parent[leaves[i]] = leaves[i];
            while (!stack.empty()) {
                std::size_t x = stack.back();
                stack.pop_back();
                for (std::size_t y : detail::sub_neighbors(t, g, x))
                    if (!parent.count(y)) {
                        parent[y] = x;
                        stack.push_back(y);
                    }
            }
            for (std::size_t j = i + 1; j < leaves.size(); ++j) {
                std::vector<std::size_t> p{leaves[j]};
                while (p.back() != leaves[i]) p.push_back(parent[p.back()]);
                std::reverse(p.begin(), p.end());
                out.push_back({std::move(p)});
            }
        }
    }
    return out;
}

inline std::vector<LinearSubtree> enumerate_maximal_linear(const PlumbingTree& t) {
    return enumerate_maximal_linear(t, VertexSet::all(t));
}

/// True iff the path is a maximal linear subtree of the induced forest g.
inline bool is_maximal_linear(const PlumbingTree& t, const VertexSet& g, const LinearSubtree& s) {
    const auto& p = s.path;
    if (p.empty()) return false;
    std::vector<bool> in(t.size(), false);
    for (std::size_t v : p) {
        if (v >= t.size() || !g.contains(v) || in[v]) return false;
        in[v] = true;
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (!t.adjacent(p[i], p[i + 1])) return false;
    // Extendable iff an endpoint has a neighbour in g outside the path.
    for (std::size_t end : {p.front(), p.back()})
        for (std::size_t w : detail::sub_neighbors(t, g, end))
            if (!in[w]) return false;
    return true;
}

/// g minus the subtree's vertices (and so all edges incident to them).
inline VertexSet residual(const PlumbingTree& t, const VertexSet& g, const LinearSubtree& s) {
    if (s.path.empty()) throw DecompositionError("residual: empty subtree");
    VertexSet out = g;
    for (std::size_t i = 0; i < s.path.size(); ++i) {
        std::size_t v = s.path[i];
        if (!g.contains(v)) throw DecompositionError("residual: subtree not contained in graph");
        if (i + 1 < s.path.size() && !t.adjacent(v, s.path[i + 1]))
            throw DecompositionError("residual: subtree is not a path");
        if (!out.contains(v)) throw DecompositionError("residual: repeated vertex in subtree");
        out.erase(v);
    }
    return out;
}

namespace detail {

inline bool hits_bad(const PlumbingTree& t, const std::vector<std::size_t>& p) {
    return std::any_of(p.begin(), p.end(), [&](std::size_t v) { return t.is_bad(v); });
}

inline bool has_bad(const PlumbingTree& t, const VertexSet& g) {
    for (std::size_t v : g.members())
        if (t.is_bad(v)) return true;
    return false;
}

inline Decomposition finish(const PlumbingTree& t, std::vector<LinearSubtree> stages) {
    VertexSet rem = VertexSet::all(t);
    for (const auto& s : stages) rem = residual(t, rem, s);
    return {std::move(stages), rem.members()};
}

}  // namespace detail

/// Exact minimisation, memoised on the residual vertex set. The witness is the
/// lexicographically least stage sequence among the minimisers.
inline GenusResult genus(const PlumbingTree& t) {
    using Best = std::pair<std::size_t, std::vector<LinearSubtree>>;
    std::map<VertexSet, Best> memo;
    auto go = [&](auto&& self, const VertexSet& rem) -> const Best& {
        auto it = memo.find(rem);
        if (it != memo.end()) return it->second;
        Best best{0, {}};
        if (detail::has_bad(t, rem)) {
            bool found = false;
            for (const auto& p : enumerate_maximal_linear(t, rem)) {
                if (!detail::hits_bad(t, p.path)) continue;
                const Best& sub = self(self, residual(t, rem, p));
                Best cand{sub.first + 1, {p}};
                cand.second.insert(cand.second.end(), sub.second.begin(), sub.second.end());
                if (!found || cand < best) {
                    best = std::move(cand);
                    found = true;
                }
            }
        }
        return memo.emplace(rem, std::move(best)).first->second;
    };
    const Best& b = go(go, VertexSet::all(t));
    return {b.first, detail::finish(t, b.second), true};
}

/// Upper bound: repeatedly take the maximal path covering the most remaining
/// bad vertices; ties go to the smallest sorted vertex list.
inline GenusResult greedy_genus(const PlumbingTree& t) {
    VertexSet rem = VertexSet::all(t);
    std::vector<LinearSubtree> stages;
    while (detail::has_bad(t, rem)) {
        std::optional<std::pair<std::pair<long long, std::vector<std::size_t>>, LinearSubtree>> best;
        for (const auto& p : enumerate_maximal_linear(t, rem)) {
            long long c = std::count_if(p.path.begin(), p.path.end(), [&](std::size_t v) { return t.is_bad(v); });
            if (c == 0) continue;
            auto sorted = p.path;
            std::sort(sorted.begin(), sorted.end());
            std::pair<long long, std::vector<std::size_t>> key{-c, std::move(sorted)};
            if (!best || key < best->first) best.emplace(std::move(key), p);
        }
        stages.push_back(best->second);
        rem = residual(t, rem, best->second);
    }
    std::size_t s = stages.size();
    return {s, detail::finish(t, std::move(stages)), false};
}

/// Checks every decomposition invariant; returns an empty string when valid.
inline std::string validate_decomposition(const PlumbingTree& t, const Decomposition& d) {
    VertexSet rem = VertexSet::all(t);
    for (std::size_t j = 0; j < d.stages.size(); ++j) {
        const auto& s = d.stages[j];
        if (!is_maximal_linear(t, rem, s))
            return "stage " + std::to_string(j + 1) + " is not a maximal linear subtree of the residual";
        if (!detail::hits_bad(t, s.path)) return "stage " + std::to_string(j + 1) + " contains no bad vertex";
        rem = residual(t, rem, s);
    }
    if (detail::has_bad(t, rem)) return "residual contains a bad vertex";
    if (rem.members() != d.residual) return "recorded residual does not match the stages";
    return {};
}

/// Builds a decomposition from explicit stages, validating it.
inline Decomposition make_decomposition(const PlumbingTree& t, std::vector<LinearSubtree> stages) {
    Decomposition d = detail::finish(t, std::move(stages));
    if (auto err = validate_decomposition(t, d); !err.empty()) throw DecompositionError(err);
    return d;
}

}  // namespace plumbook
