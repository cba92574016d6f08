#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "decomposition.hpp"
#include "int_matrix.hpp"
#include "plumbing_tree.hpp"

namespace plumbook {

/// One chain of the rolled-up diagram. Bad stages of the decomposition may be
/// split here where a branch leaves them.
struct LayoutStage {
    std::vector<std::size_t> path;
    std::optional<std::size_t> parent_vertex;  // attachment vertex; none for the root chain
    std::optional<std::size_t> parent_stage;
    bool contains_bad = false;
};

struct Layout {
    std::vector<LayoutStage> stages;  // breadth-first: parents precede children
    /// Stage index and path position of every vertex.
    std::vector<std::pair<std::size_t, std::size_t>> where;
};

/// Chains are grown breadth-first from the first decomposition stage (or the
/// first maximal path when the decomposition is empty). A chain entering a stage
/// keeps following it; elsewhere it follows the lowest-index residual neighbour.
inline Layout make_layout(const PlumbingTree& t, const Decomposition& d) {
    std::vector<LinearSubtree> stages = d.stages;
    if (stages.empty()) stages.push_back(enumerate_maximal_linear(t).front());
    std::vector<std::optional<std::pair<std::size_t, std::size_t>>> stage_of(t.size());
    for (std::size_t s = 0; s < stages.size(); ++s)
        for (std::size_t i = 0; i < stages[s].path.size(); ++i) stage_of[stages[s].path[i]] = {{s, i}};

    std::vector<bool> done(t.size(), false);
    auto grow = [&](std::size_t w) {
        std::vector<std::size_t> path{w};
        done[w] = true;
        std::size_t cur = w;
        for (;;) {
            std::optional<std::size_t> next;
            if (auto so = stage_of[cur]) {
                const auto& g = stages[so->first].path;
                std::size_t i = so->second;
                if (i + 1 < g.size() && !done[g[i + 1]]) next = g[i + 1];
                else if (i > 0 && !done[g[i - 1]]) next = g[i - 1];
            } else {
                for (std::size_t x : t.neighbors(cur))
                    if (!done[x] && !stage_of[x]) {
                        next = x;
                        break;
                    }
            }
            if (!next) break;
            path.push_back(*next);
            done[*next] = true;
            cur = *next;
        }
        return path;
    };

    Layout lay;
    LayoutStage root;
    root.path = stages.front().path;
    for (std::size_t v : root.path) done[v] = true;
    lay.stages.push_back(root);
    for (std::size_t k = 0; k < lay.stages.size(); ++k) {
        std::vector<std::size_t> p = lay.stages[k].path;
        for (std::size_t v : p)
            for (std::size_t w : t.neighbors(v))
                if (!done[w]) {
                    LayoutStage child;
                    child.path = grow(w);
                    child.parent_vertex = v;
                    child.parent_stage = k;
                    lay.stages.push_back(std::move(child));
                }
    }
    lay.where.assign(t.size(), {0, 0});
    for (std::size_t s = 0; s < lay.stages.size(); ++s) {
        auto& st = lay.stages[s];
        st.contains_bad = std::any_of(st.path.begin(), st.path.end(), [&](std::size_t v) { return t.is_bad(v); });
        for (std::size_t i = 0; i < st.path.size(); ++i) lay.where[st.path[i]] = {s, i};
    }
    return lay;
}

enum class HookKind { innermost, nested, zigzag, r1 };

inline const char* hook_name(HookKind k) {
    switch (k) {
        case HookKind::innermost: return "innermost";
        case HookKind::nested: return "nested";
        case HookKind::zigzag: return "zigzag-hook";
        case HookKind::r1: return "r1-hook";
    }
    return "?";
}

/// How a child chain attaches to the component of its parent vertex.
struct Hook {
    std::size_t child_stage;
    std::size_t parent_vertex;
    HookKind kind;   // zigzag or r1
    std::size_t slot;  // zig-zag index at the parent vertex (zigzag hooks only)
};

struct HookBudget {
    std::size_t vertex;
    std::size_t capacity;   // zig-zags available before hooking
    std::size_t zigzag_used;
    std::size_t r1_added;
    [[nodiscard]] std::size_t spare() const { return capacity - zigzag_used; }
};

/// Zig-zags at a vertex: |n+2|, plus the core of the innermost unknot for the
/// first vertex of the root chain.
inline std::size_t zigzag_capacity(const PlumbingTree& t, const Layout& lay, std::size_t v) {
    auto [s, i] = lay.where[v];
    std::size_t cap = static_cast<std::size_t>(std::llabs(t.euler(v) + 2));
    if (s == 0 && i == 0) ++cap;
    return cap;
}

/// First-available assignment; r1 hooks are created only once zig-zags run out.
inline std::vector<Hook> plan_hooks(const PlumbingTree& t, const Layout& lay, std::vector<HookBudget>* budget = nullptr) {
    std::vector<std::vector<std::size_t>> children(t.size());
    for (std::size_t s = 1; s < lay.stages.size(); ++s) children[*lay.stages[s].parent_vertex].push_back(s);
    std::vector<HookBudget> b(t.size());
    for (std::size_t v = 0; v < t.size(); ++v) b[v] = {v, zigzag_capacity(t, lay, v), 0, 0};
    std::vector<Hook> hooks;
    for (const auto& st : lay.stages)
        for (std::size_t v : st.path)
            for (std::size_t c : children[v]) {
                if (b[v].spare() > 0) {
                    hooks.push_back({c, v, HookKind::zigzag, b[v].zigzag_used});
                    ++b[v].zigzag_used;
                } else {
                    hooks.push_back({c, v, HookKind::r1, 0});
                    ++b[v].r1_added;
                }
            }
    if (budget) *budget = std::move(b);
    return hooks;
}

struct RolledComponent {
    std::size_t id;
    std::size_t vertex;
    long long framing;
    HookKind hook;
    std::optional<std::size_t> parent_component;
    std::size_t stage;
    std::size_t position;
};

/// In-stage framings and linking numbers of a single chain, computed by
/// replaying the slides U'_i = U_i + U'_{i-1} on its linking matrix.
struct StageRollup {
    std::vector<long long> framings;
    std::vector<long long> linking;         // l_i = lk(U'_i, U'_j), j > i
    std::vector<long long> shifted_linking; // n_1+...+n_{i-1}+2i-1, reported alongside
};

inline StageRollup roll_up_stage(const std::vector<long long>& eulers) {
    const std::size_t k = eulers.size();
    IntMatrix A(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        A(i, i) = eulers[i];
        if (i + 1 < k) A(i, i + 1) = A(i + 1, i) = 1;
    }
    for (std::size_t i = 1; i < k; ++i) {
        A.add_row(i, i - 1, 1);
        A.add_col(i, i - 1, 1);
    }
    StageRollup r;
    long long prefix = 0;
    for (std::size_t i = 0; i < k; ++i) {
        r.framings.push_back(static_cast<long long>(A(i, i)));
        if (i + 1 < k) {
            for (std::size_t j = i + 2; j < k; ++j)
                if (A(i, j) != A(i, i + 1)) throw std::logic_error("roll_up_stage: non-constant in-stage linking");
            r.linking.push_back(static_cast<long long>(A(i, i + 1)));
            r.shifted_linking.push_back(prefix + 2 * static_cast<long long>(i + 1) - 1);
        }
        prefix += eulers[i];
    }
    return r;
}

struct RolledUpDiagram {
    Layout layout;
    std::vector<RolledComponent> components;  // layout order
    std::vector<Hook> hooks;
    std::vector<HookBudget> budget;           // indexed by vertex
    IntMatrix slide_log;                      // E: columns are components over the vertex basis
    IntMatrix linking_matrix;                 // Eᵀ·A·E
    std::vector<std::size_t> component_of;    // vertex -> component index
};

inline RolledUpDiagram assemble_diagram(const PlumbingTree& t, const Decomposition& d) {
    if (auto err = validate_decomposition(t, d); !err.empty()) throw DecompositionError(err);
    RolledUpDiagram out;
    out.layout = make_layout(t, d);
    out.hooks = plan_hooks(t, out.layout, &out.budget);
    const std::size_t n = t.size();
    out.slide_log = IntMatrix(n, n);
    out.component_of.assign(n, 0);
    std::vector<const Hook*> hook_of(out.layout.stages.size(), nullptr);
    for (const auto& h : out.hooks) hook_of[h.child_stage] = &h;

    std::size_t c = 0;
    for (std::size_t s = 0; s < out.layout.stages.size(); ++s) {
        const auto& st = out.layout.stages[s];
        for (std::size_t i = 0; i < st.path.size(); ++i, ++c) {
            out.component_of[st.path[i]] = c;
            for (std::size_t j = 0; j <= i; ++j) out.slide_log(st.path[j], c) = 1;
        }
    }
    IntMatrix A = t.intersection_matrix();
    out.linking_matrix = out.slide_log.transpose() * A * out.slide_log;

    c = 0;
    for (std::size_t s = 0; s < out.layout.stages.size(); ++s) {
        const auto& st = out.layout.stages[s];
        for (std::size_t i = 0; i < st.path.size(); ++i, ++c) {
            RolledComponent rc{c, st.path[i], static_cast<long long>(out.linking_matrix(c, c)),
                               HookKind::nested, std::nullopt, s, i};
            if (i > 0) {
                rc.parent_component = c - 1;
            } else if (s == 0) {
                rc.hook = HookKind::innermost;
            } else {
                rc.hook = hook_of[s]->kind;
                rc.parent_component = out.component_of[hook_of[s]->parent_vertex];
            }
            out.components.push_back(rc);
        }
    }
    return out;
}

struct LegendrianComponent {
    std::size_t component;
    long long tb;
    std::size_t stabilizations;
    std::vector<long long> rotation_choices;
};

/// Rotation numbers of an unknot stabilised |n|-2 times: -(|n|-2), ..., |n|-2 in steps of 2.
inline std::vector<long long> rotation_choices(long long euler) {
    long long s = std::llabs(euler) - 2;
    std::vector<long long> out;
    for (long long r = -s; r <= s; r += 2) out.push_back(r);
    return out;
}

inline std::vector<LegendrianComponent> legendrian_data(const PlumbingTree& t, const RolledUpDiagram& d) {
    std::vector<LegendrianComponent> out;
    for (const auto& c : d.components) {
        long long n = t.euler(c.vertex);
        out.push_back({c.id, c.framing + 1, static_cast<std::size_t>(std::llabs(n + 2)), rotation_choices(n)});
    }
    return out;
}

inline Integer stein_count(const PlumbingTree& t) {
    Integer p = 1;
    for (std::size_t v = 0; v < t.size(); ++v) p *= Integer(std::llabs(t.euler(v)) - 1);
    return p;
}

/// Visits rotation tuples (DSL vertex order) lexicographically; stops early if f returns false.
inline void for_each_stein(const PlumbingTree& t, const std::function<bool(const std::vector<long long>&)>& f) {
    const std::size_t n = t.size();
    std::vector<std::vector<long long>> choices(n);
    for (std::size_t v = 0; v < n; ++v) choices[v] = rotation_choices(t.euler(v));
    std::vector<std::size_t> idx(n, 0);
    std::vector<long long> tuple(n);
    for (;;) {
        for (std::size_t v = 0; v < n; ++v) tuple[v] = choices[v][idx[v]];
        if (!f(tuple)) return;
        std::size_t v = n;
        while (v > 0) {
            --v;
            if (++idx[v] < choices[v].size()) break;
            idx[v] = 0;
            if (v == 0) return;
        }
        if (n == 0) return;
    }
}

struct SteinEnumeration {
    Integer count;
    std::vector<std::vector<long long>> assignments;  // first `limit` tuples
    bool complete = true;
};

inline SteinEnumeration enumerate_stein(const PlumbingTree& t, std::size_t limit = 100000) {
    SteinEnumeration e{stein_count(t), {}, true};
    for_each_stein(t, [&](const std::vector<long long>& tup) {
        if (e.assignments.size() >= limit) {
            e.complete = false;
            return false;
        }
        e.assignments.push_back(tup);
        return true;
    });
    return e;
}

}  // namespace plumbook
