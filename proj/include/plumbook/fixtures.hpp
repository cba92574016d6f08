#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "decomposition.hpp"
#include "dsl.hpp"
#include "mcg.hpp"
#include "open_book.hpp"
#include "rollup.hpp"
#include "seifert.hpp"

namespace plumbook::fixtures {

struct TreeFixture {
    std::string name;
    std::string dsl;
    /// Stage override (vertex ids); empty means the exact witness.
    std::vector<std::vector<VertexId>> stages;
    /// Builder curve name -> conventional label.
    std::map<std::string, std::string> labels;
};

inline const std::string& e8_dsl() {
    static const std::string s = R"(# E8: seven-chain, branch at the fifth vertex
tree {
  v1:-2 v2:-2 v3:-2 v4:-2 v5:-2 v6:-2 v7:-2 v8:-2
  v1 -- v2
  v2 -- v3
  v3 -- v4
  v4 -- v5
  v5 -- v6
  v6 -- v7
  v5 -- v8
}
)";
    return s;
}

inline const std::string& star4_dsl() {
    static const std::string s = R"(# (-2)-centre with four (-2)-leaves
tree {
  x0:-2 x1:-2 x2:-2 x3:-2 x4:-2
  x0 -- x1
  x0 -- x2
  x0 -- x3
  x0 -- x4
}
)";
    return s;
}

inline const std::string& branched9_dsl() {
    static const std::string s = R"(# nine (-2)-vertices, three of them bad
tree {
  v1:-2 v2:-2 v3:-2 v4:-2 v5:-2
  t:-2 w1:-2 w2:-2 z:-2
  v1 -- v2
  v2 -- v3
  v3 -- v4
  v4 -- v5
  v4 -- t
  v2 -- w1
  w1 -- w2
  w1 -- z
}
)";
    return s;
}

inline TreeFixture e8() { return {"e8", e8_dsl(), {}, {{"s0", "b"}, {"s1", "a"}, {"u1", "c"}}}; }

inline TreeFixture star4() {
    return {"star4", star4_dsl(), {}, {{"s0", "b"}, {"s1", "a2"}, {"s2", "a1"}, {"u1", "c"}}};
}

inline TreeFixture branched9() { return {"branched9", branched9_dsl(), {}, {}}; }

/// Two stages: the five-chain, then z--w1--w2 (a genus-2 page).
inline TreeFixture branched9_two_stage() {
    return {"branched9-two-stage",
            branched9_dsl(),
            {{"v1", "v2", "v3", "v4", "v5"}, {"z", "w1", "w2"}},
            {{"s0", "a1"}, {"s1", "a2"}, {"s2", "a3"}, {"s3", "a4"}, {"u1", "b1"}, {"u2", "c1"}, {"u3", "b2"}}};
}

inline std::vector<TreeFixture> non_positive() {
    return {
        {"single", "tree { v1:-2 }\n", {}, {}},
        {"chain-2x4", "tree { v1:-2 v2:-2 v3:-2 v4:-2 v1--v2 v2--v3 v3--v4 }\n", {}, {}},
        {"chain-3-2-5", "tree { v1:-3 v2:-2 v3:-5 v1--v2 v2--v3 }\n", {}, {}},
        {"star-3", "tree { c:-3 l1:-2 l2:-2 l3:-2 c--l1 c--l2 c--l3 }\n", {}, {}},
        {"star-4", "tree { c:-4 a:-2 b:-3 d:-2 e:-6 c--a c--b c--d c--e }\n", {}, {}},
        {"caterpillar", "tree { p1:-2 p2:-3 p3:-3 p4:-2 q2:-2 q3:-2 p1--p2 p2--p3 p3--p4 p2--q2 p3--q3 }\n", {}, {}},
    };
}

struct SeifertFixture {
    std::string name;
    SeifertInput input;
};

inline std::vector<SeifertFixture> seifert() {
    return {
        {"m(-3;1/2,1/2,1/2)", {-3, {{{1, 2}, {1, 2}, {1, 2}}}}},
        {"m(-3;1/2,2/3,4/5)", {-3, {{{1, 2}, {2, 3}, {4, 5}}}}},
        {"m(-4;1/3,2/5,3/7)", {-4, {{{1, 3}, {2, 5}, {3, 7}}}}},
        {"m(-3;2/7,3/8,5/13)", {-3, {{{2, 7}, {3, 8}, {5, 13}}}}},
    };
}

inline std::vector<TreeFixture> all_trees() {
    std::vector<TreeFixture> out{e8(), star4(), branched9(), branched9_two_stage()};
    for (auto& f : non_positive()) out.push_back(f);
    for (auto& s : seifert()) out.push_back({s.name, to_dsl(seifert_to_tree(s.input)), {}, {}});
    return out;
}

inline PlumbingTree tree(const TreeFixture& f) { return parse_tree(f.dsl); }

inline Decomposition decomposition(const TreeFixture& f) {
    PlumbingTree t = tree(f);
    if (f.stages.empty()) return genus(t).witness;
    std::vector<LinearSubtree> st;
    for (const auto& p : f.stages) {
        LinearSubtree l;
        for (const auto& id : p) l.path.push_back(t.index(id));
        st.push_back(std::move(l));
    }
    return make_decomposition(t, std::move(st));
}

/// Built book and its curve algebra, with curves and letters relabelled.
struct LabelledBook {
    AbstractOpenBook book;
    CurveAlgebra algebra;
    TwistWord word;
};

inline LabelledBook labelled_book(const TreeFixture& f) {
    PlumbingTree t = tree(f);
    Decomposition d = decomposition(f);
    RolledUpDiagram r = assemble_diagram(t, d);
    LabelledBook lb{build_open_book(t, d, r), {}, {}};
    lb.algebra = CurveAlgebra::from_book(lb.book);
    lb.algebra.rename(f.labels);
    for (const auto& l : lb.book.monodromy) {
        auto it = f.labels.find(l.curve);
        lb.word.push_back({it == f.labels.end() ? l.curve : it->second, l.sign});
    }
    return lb;
}

// ------------------------------------------------------------ word identities

/// Reference monodromy words.
inline const char* e8_reference_word() { return "t_a t_c^3 t_b^4 t_b t_a"; }
inline const char* e8_normal_form() { return "t_a^2 t_c^3 t_b^5"; }
inline const char* e8_elliptic_form() { return "(t_b t_a)^5"; }
inline const char* star4_reference_word() { return "t_{a_1} t_{a_2} t_c^2 t_b t_b t_{a_2} t_{a_1}"; }
inline const char* star4_normal_form() { return "t_{a_1}^2 t_{a_2}^2 t_c^2 t_b^2"; }
inline const char* star4_symmetric_form() { return "(t_{a_1} t_{a_2} t_b^2)^2"; }
inline const char* branched9_reference_word() {
    return "t_{a_4} t_{a_3} t_{b_2}^2 t_{c_1}^2 t_{b_1}^2 t_{a_1} t_{a_4} t_{a_3} t_{a_2} t_{a_1}";
}

/// Σ_{1,1} from the built E8 book: c = t_a⁻¹(b), meeting a and b once each.
inline CurveAlgebra e8_algebra() {
    CurveAlgebra a = labelled_book(e8()).algebra;
    a.declare_intersection("c", "a", 1);
    a.declare_intersection("c", "b", 1);
    a.register_relation({"c", parse_word("a"), "b"});
    return a;
}

/// Σ_{1,2} from the built star4 book: c = t_{a2}⁻¹ t_{a1}⁻¹ (b).
inline CurveAlgebra star4_algebra() {
    CurveAlgebra a = labelled_book(star4()).algebra;
    a.register_relation({"c", parse_word("a1 a2"), "b"});
    return a;
}

inline std::vector<RewriteStep> steps(std::initializer_list<std::pair<Rule, std::size_t>> l) {
    std::vector<RewriteStep> out;
    for (auto [r, p] : l) out.push_back({r, p, {}});
    return out;
}

/// Substitute c, then braids and cyclic moves.
inline RewriteScript e8_script() {
    using R = Rule;
    return {"e8",
            parse_word(e8_normal_form()),
            parse_word(e8_elliptic_form()),
            steps({{R::substitute, 2}, {R::cancel, 1}, {R::substitute, 3}, {R::cancel, 2},
                   {R::substitute, 4}, {R::cancel, 3},                    // a b^3 a b^5
                   {R::cyclic, 9},                                        // b a b b b a b^4
                   {R::braid, 0}, {R::braid, 4},                          // a b a b a b a b^3
                   {R::braid, 2}, {R::braid, 5},                          // a b b a b a b a b^2
                   {R::cyclic, 9},                                        // b a b b a b a b a b
                   {R::braid, 0},                                         // (a b)^5
                   {R::cyclic, 9}})};
}

inline RewriteScript star4_script() {
    using R = Rule;
    return {"star4",
            parse_word(star4_normal_form()),
            parse_word(star4_symmetric_form()),
            steps({{R::substitute, 4}, {R::cancel, 3}, {R::commute, 2}, {R::cancel, 1},
                   {R::substitute, 5}, {R::cancel, 4}, {R::cancel, 3}})};
}

inline std::vector<RewriteScript> scripts() { return {e8_script(), star4_script()}; }

}  // namespace plumbook::fixtures
