#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "decomposition.hpp"
#include "int_matrix.hpp"
#include "plumbing_tree.hpp"
#include "ribbon.hpp"
#include "rollup.hpp"

namespace plumbook {

using ClassVector = std::vector<Integer>;

struct NamedCurve {
    std::string name;
    /// Bands traversed with signs; one entry per unit of the class.
    std::vector<std::pair<std::size_t, int>> handle_word;
    ClassVector h1_class;  // over band cores
};

enum class LetterSource { stabilization, surgery };

struct Letter {
    std::string curve;
    int sign = 1;
    LetterSource source = LetterSource::stabilization;
    std::optional<std::size_t> vertex;  // surgery letters only
    friend bool operator==(const Letter& a, const Letter& b) { return a.curve == b.curve && a.sign == b.sign; }
};

enum class BandRole { hopf, planar, genus };

struct BandInfo {
    BandRole role;
    std::optional<std::size_t> vertex;  // vertex whose stabilization created it
    std::string curve;                  // stabilization curve over this band
};

/// The monodromy is written left to right and composed right to left: the last
/// letter acts first.
struct AbstractOpenBook {
    RibbonPage page;
    std::vector<BandInfo> band_info;
    std::vector<NamedCurve> curves;
    std::vector<Letter> monodromy;
    std::vector<std::string> notes;

    [[nodiscard]] std::size_t dim() const { return page.bands(); }

    [[nodiscard]] const NamedCurve* find_curve(const std::string& name) const {
        for (const auto& c : curves)
            if (c.name == name) return &c;
        return nullptr;
    }
    [[nodiscard]] const NamedCurve& curve(const std::string& name) const {
        if (auto* c = find_curve(name)) return *c;
        throw std::out_of_range("unknown curve '" + name + "'");
    }
    /// Class padded to the current page dimension.
    [[nodiscard]] ClassVector class_of(const std::string& name) const {
        ClassVector v = curve(name).h1_class;
        v.resize(dim(), 0);
        return v;
    }
};

inline std::vector<std::pair<std::size_t, int>> handle_word_of(const ClassVector& c) {
    std::vector<std::pair<std::size_t, int>> w;
    for (std::size_t b = 0; b < c.size(); ++b)
        for (Integer k = abs(c[b]); k > 0; --k) w.emplace_back(b, c[b] > 0 ? 1 : -1);
    return w;
}

inline ClassVector unit_class(std::size_t n, std::size_t b) {
    ClassVector v(n, 0);
    v.at(b) = 1;
    return v;
}

namespace detail {

inline std::string add_stab_curve(AbstractOpenBook& book, std::size_t band, BandRole role, std::optional<std::size_t> vertex) {
    std::string name = "s" + std::to_string(book.band_info.size());
    book.band_info.push_back({role, vertex, name});
    book.curves.push_back({name, {{band, 1}}, unit_class(book.dim(), band)});
    for (auto& c : book.curves) c.h1_class.resize(book.dim(), 0);
    book.monodromy.push_back({name, 1, LetterSource::stabilization, vertex});
    return name;
}

}  // namespace detail

/// Annulus page (one band on a disk) with a right-handed twist about its core: S³.
inline AbstractOpenBook base_hopf_book() {
    AbstractOpenBook book;
    std::size_t h = book.page.add_band(0, 0);
    detail::add_stab_curve(book, h, BandRole::hopf, std::nullopt);
    return book;
}

/// Positive stabilization by a band whose feet are adjacent at `position`: the
/// genus is unchanged and one boundary component is added. Returns the new curve.
inline std::string planar_stabilize(AbstractOpenBook& book, std::size_t position,
                                    std::optional<std::size_t> vertex = std::nullopt) {
    if (position > book.page.feet().size()) throw std::out_of_range("planar_stabilize: invalid boundary position");
    std::size_t q = book.page.add_band(position, position);
    return detail::add_stab_curve(book, q, BandRole::planar, vertex);
}

struct StabHookResult {
    std::string gamma;
    ClassVector k_plus;      // [K] + [γ]
    ClassVector k_minus;     // [K] − [γ]; needs a second, negative stabilization
    std::size_t band;
};

/// Stabilization across the rectangle of K at the first foot of band `across`.
/// The new band straddles that foot, so it meets K once.
inline StabHookResult stab_hook(AbstractOpenBook& book, const ClassVector& K, std::size_t across,
                                std::optional<std::size_t> vertex = std::nullopt) {
    if (across >= book.dim() || K.size() > book.dim() || across >= K.size() || K[across] == 0)
        throw std::invalid_argument("stab_hook: curve does not run over the chosen band");
    std::size_t j = book.page.foot(across).first;
    std::size_t g = book.page.add_band(j, j + 1);
    std::string name = detail::add_stab_curve(book, g, BandRole::genus, vertex);
    ClassVector kp = K, km = K;
    kp.resize(book.dim(), 0);
    km.resize(book.dim(), 0);
    kp[g] += 1;
    km[g] -= 1;
    return {name, kp, km, g};
}

inline PageCensus page_census(const AbstractOpenBook& book) { return book.page.census(); }

struct BuildRecord {
    std::vector<std::size_t> surgery_order;  // vertices, layout order
    std::map<std::size_t, std::string> vertex_curve;
    std::size_t genus_stabilizations = 0;
};

/// Innermost chain first: the root chain sits on the Hopf annulus; each vertex
/// stabilises |n+2| times, and each child chain runs over a spare
/// stabilization band of its parent vertex or, when none is left, over a
/// fresh genus-adding band.
inline AbstractOpenBook build_open_book(const PlumbingTree& t, const Decomposition& d, const RolledUpDiagram& rolled,
                                        BuildRecord* record = nullptr) {
    const Layout& lay = rolled.layout;
    if (lay.where.size() != t.size()) throw DecompositionError("build_open_book: diagram does not match tree");
    {
        Layout expect = make_layout(t, d);
        bool same = expect.stages.size() == lay.stages.size();
        for (std::size_t s = 0; same && s < lay.stages.size(); ++s) same = expect.stages[s].path == lay.stages[s].path;
        if (!same) throw DecompositionError("build_open_book: diagram was not rolled up from this decomposition");
    }
    AbstractOpenBook book = base_hopf_book();

    std::vector<std::vector<std::size_t>> slots(t.size());     // free stabilization bands per vertex
    std::vector<std::size_t> base_of(lay.stages.size(), 0);
    std::vector<ClassVector> cls(t.size());
    std::map<std::size_t, const Hook*> hook_of;
    for (const auto& h : rolled.hooks) hook_of[h.child_stage] = &h;
    BuildRecord rec;

    for (std::size_t s = 0; s < lay.stages.size(); ++s) {
        const auto& st = lay.stages[s];
        std::size_t base = base_of[s];
        ClassVector cur = unit_class(book.dim(), base);
        for (std::size_t i = 0; i < st.path.size(); ++i) {
            std::size_t v = st.path[i];
            if (s == 0 && i == 0) slots[v].push_back(base);
            long long holes = std::llabs(t.euler(v) + 2);
            for (long long k = 0; k < holes; ++k) {
                std::size_t at = book.page.foot(base).second + 1;
                planar_stabilize(book, at, v);
                std::size_t q = book.dim() - 1;
                cur.resize(book.dim(), 0);
                cur[q] += 1;
                slots[v].push_back(q);
            }
            cls[v] = cur;
        }
        for (std::size_t i = 0; i < st.path.size(); ++i) {
            std::size_t v = st.path[i];
            for (std::size_t c = s + 1; c < lay.stages.size(); ++c) {
                if (lay.stages[c].parent_vertex != v) continue;
                const Hook* h = hook_of.at(c);
                if (h->kind == HookKind::zigzag) {
                    if (h->slot >= slots[v].size()) throw std::logic_error("build_open_book: hook plan exceeds zig-zags");
                    base_of[c] = slots[v][h->slot];
                } else {
                    // The new band straddles the chain's base band.
                    ClassVector K = cls[v];
                    K.resize(book.dim(), 0);
                    StabHookResult r = stab_hook(book, K, base, v);
                    ++rec.genus_stabilizations;
                    for (std::size_t j = i; j < st.path.size(); ++j) {
                        cls[st.path[j]].resize(book.dim(), 0);
                        cls[st.path[j]][r.band] += 1;
                    }
                    base_of[c] = r.band;
                }
            }
        }
        for (std::size_t v : st.path) rec.surgery_order.push_back(v);
    }

    // Surgery curves reuse the name of an existing curve with the same class.
    std::vector<Letter> surgery;
    std::size_t composite = 0;
    for (std::size_t v : rec.surgery_order) {
        ClassVector c = cls[v];
        c.resize(book.dim(), 0);
        std::string name;
        for (auto& nc : book.curves) {
            nc.h1_class.resize(book.dim(), 0);
            if (nc.h1_class == c) {
                name = nc.name;
                break;
            }
        }
        if (name.empty()) {
            name = "u" + std::to_string(++composite);
            book.curves.push_back({name, handle_word_of(c), c});
        }
        rec.vertex_curve[v] = name;
        surgery.push_back({name, 1, LetterSource::surgery, v});
    }
    // Written word: surgery letters outermost-first, then the stabilizations.
    std::vector<Letter> word(surgery.rbegin(), surgery.rend());
    word.insert(word.end(), book.monodromy.begin(), book.monodromy.end());
    book.monodromy = std::move(word);
    if (record) *record = std::move(rec);
    return book;
}

/// Dot rendering of the page: one disk node, one edge per band labelled with
/// its foot positions.
inline std::string page_dot(const AbstractOpenBook& book) {
    std::string out = "graph page {\n  disk [shape=circle,label=\"D\"];\n";
    for (std::size_t b = 0; b < book.dim(); ++b) {
        auto [f1, f2] = book.page.foot(b);
        out += "  disk -- disk [label=\"" + book.band_info[b].curve + " (" + std::to_string(f1) + "," +
               std::to_string(f2) + ")\"];\n";
    }
    return out + "}\n";
}

}  // namespace plumbook
