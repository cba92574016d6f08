#pragma once

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "export.hpp"
#include "fixtures.hpp"
#include "mcg.hpp"
#include "verify.hpp"

namespace plumbook {

inline json to_json(const Integer& x) {
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return static_cast<long long>(x);
    return x.str();
}

inline json to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json to_json(const AbelianGroup& g) {
    json t = json::array();
    for (const auto& x : g.torsion) t.push_back(to_json(x));
    return {{"free_rank", g.free_rank}, {"torsion", t}, {"text", g.str()}};
}

inline json ids(const PlumbingTree& t, const std::vector<std::size_t>& vs) {
    json a = json::array();
    for (std::size_t v : vs) a.push_back(t.id(v));
    return a;
}

inline json genus_json(const PlumbingTree& t, const GenusResult& g, bool with_witness = true) {
    json j;
    j["genus"] = g.genus;
    j["method"] = g.exact ? "exact" : "greedy";
    if (!g.exact) j["advisory"] = "greedy upper bound";
    if (with_witness) {
        json st = json::array();
        for (const auto& s : g.witness.stages) st.push_back(ids(t, s.path));
        j["stages"] = st;
        j["residual"] = ids(t, g.witness.residual);
    }
    return j;
}

inline json rollup_json(const PlumbingTree& t, const RolledUpDiagram& d, bool verbose = false) {
    json comps = json::array();
    for (const auto& c : d.components) {
        json jc = {{"id", c.id}, {"vertex", t.id(c.vertex)}, {"framing", c.framing}, {"hook", hook_name(c.hook)}};
        if (c.parent_component) jc["parent"] = *c.parent_component;
        comps.push_back(std::move(jc));
    }
    json j = {{"components", comps}, {"linking_matrix", to_json(d.linking_matrix)}, {"slide_log", to_json(d.slide_log)}};
    if (verbose) {
        json chains = json::array();
        for (const auto& st : d.layout.stages) {
            std::vector<long long> eul;
            for (std::size_t v : st.path) eul.push_back(t.euler(v));
            StageRollup r = roll_up_stage(eul);
            json jc = {{"path", ids(t, st.path)}, {"framings", r.framings}, {"linking", r.linking},
                       {"linking_shifted_formula", r.shifted_linking}};
            if (st.parent_vertex) jc["attached_to"] = t.id(*st.parent_vertex);
            chains.push_back(std::move(jc));
        }
        j["chains"] = chains;
        json hooks = json::array();
        for (const auto& b : d.budget)
            hooks.push_back({{"vertex", t.id(b.vertex)},
                             {"zigzags", b.capacity},
                             {"zigzags_spare", b.spare()},
                             {"r1_moves", b.r1_added}});
        j["hook_budget"] = hooks;
        json leg = json::array();
        for (const auto& l : legendrian_data(t, d))
            leg.push_back({{"component", l.component},
                           {"tb", l.tb},
                           {"stabilizations", l.stabilizations},
                           {"rotation_choices", l.rotation_choices}});
        j["legendrian"] = leg;
    }
    return j;
}

inline const char* role_name(BandRole r) {
    switch (r) {
        case BandRole::hopf: return "hopf";
        case BandRole::planar: return "planar";
        case BandRole::genus: return "genus";
    }
    return "?";
}

inline json openbook_json(const PlumbingTree& t, const AbstractOpenBook& b) {
    PageCensus c = page_census(b);
    json curves = json::array();
    for (const auto& cv : b.curves) {
        json h = json::array();
        for (const auto& x : b.class_of(cv.name)) h.push_back(to_json(x));
        curves.push_back({{"name", cv.name}, {"h1", h}});
    }
    json word = json::array();
    for (const auto& l : b.monodromy) {
        json jl = {{"curve", l.curve}, {"sign", l.sign}};
        if (l.source == LetterSource::surgery) jl["provenance"] = "surgery(" + t.id(*l.vertex) + ")";
        else jl["provenance"] = "stabilization";
        word.push_back(std::move(jl));
    }
    json bands = json::array();
    for (std::size_t i = 0; i < b.dim(); ++i) {
        auto [f1, f2] = b.page.foot(i);
        json jb = {{"curve", b.band_info[i].curve}, {"role", role_name(b.band_info[i].role)}, {"feet", {f1, f2}}};
        if (b.band_info[i].vertex) jb["vertex"] = t.id(*b.band_info[i].vertex);
        bands.push_back(std::move(jb));
    }
    return {{"page", {{"genus", c.genus}, {"boundary", c.boundary}, {"h1_rank", c.h1_rank}, {"euler_characteristic", c.euler_characteristic}}},
            {"bands", bands},
            {"curves", curves},
            {"monodromy", word},
            {"word", format_twists(to_twist_word(b.monodromy))}};
}

inline json certificate_json(const Certificate& c) {
    return {{"h1", {{"plumbing", to_json(c.plumbing)}, {"linking", to_json(c.linking)}, {"open_book", to_json(c.open_book)}}},
            {"h1_agree", c.h1_agree()},
            {"congruence", {{"identity", c.congruence.identity}, {"det_slide_log", to_json(c.congruence.det_e)}}},
            {"page", {{"genus", c.census.genus}, {"boundary", c.census.boundary}}},
            {"tree_genus", c.genus},
            {"stages", c.stages},
            {"bad_stages", c.bad_stages},
            {"genus_law", c.genus_law()},
            {"positive", c.positive},
            {"curve_classes", c.curve_classes},
            {"ok", c.ok()}};
}

inline json trace_json(const TwistWord& start, const std::vector<TraceEntry>& trace) {
    json steps = json::array();
    for (const auto& e : trace) {
        json s = {{"rule", rule_name(e.step.rule)}, {"pos", e.step.pos}, {"word", format_word(e.word)}};
        if (!e.step.arg.empty()) s["arg"] = e.step.arg;
        steps.push_back(std::move(s));
    }
    return {{"start", format_word(start)}, {"steps", steps}};
}

/// A rewrite script file: either a named fixture algebra or an explicit one,
/// start and target words, and optional steps (absent: automatic proving).
struct ScriptFile {
    CurveAlgebra algebra;
    RewriteScript script;
    bool has_steps = false;
};

inline ScriptFile parse_script_json(const json& j) {
    ScriptFile f;
    try {
        if (j.contains("fixture")) {
            std::string fx = j.at("fixture").get<std::string>();
            if (fx == "e8") f.algebra = fixtures::e8_algebra();
            else if (fx == "star4") f.algebra = fixtures::star4_algebra();
            else throw AlgebraError("unknown fixture algebra '" + fx + "'");
        } else {
            const json& a = j.at("algebra");
            const json& form = a.at("form");
            IntMatrix J(form.size(), form.size());
            for (std::size_t r = 0; r < form.size(); ++r) {
                if (form[r].size() != form.size()) throw AlgebraError("intersection form must be square");
                for (std::size_t c = 0; c < form.size(); ++c) J(r, c) = form[r][c].get<long long>();
            }
            f.algebra = CurveAlgebra(J);
            for (const auto& [name, cls] : a.at("curves").items()) {
                ClassVector v;
                for (const auto& x : cls) v.emplace_back(x.get<long long>());
                f.algebra.add_curve(name, v);
            }
            if (a.contains("intersections"))
                for (const auto& e : a.at("intersections"))
                    f.algebra.declare_intersection(e.at(0).get<std::string>(), e.at(1).get<std::string>(), e.at(2).get<int>());
            if (a.contains("relations"))
                for (const auto& r : a.at("relations"))
                    f.algebra.register_relation({r.at("curve").get<std::string>(),
                                                 parse_word(r.at("conjugator").get<std::string>()),
                                                 r.at("target").get<std::string>()});
        }
        f.script.name = j.value("name", std::string("script"));
        f.script.start = parse_word(j.at("start").get<std::string>());
        f.script.target = parse_word(j.at("target").get<std::string>());
        if (j.contains("steps")) {
            f.has_steps = true;
            for (const auto& s : j.at("steps"))
                f.script.steps.push_back({parse_rule(s.at("rule").get<std::string>()), s.at("pos").get<std::size_t>(),
                                          s.value("arg", std::string())});
        }
    } catch (const nlohmann::json::exception& e) {
        throw AlgebraError(std::string("script: ") + e.what());
    }
    return f;
}

inline json script_to_json(const std::string& fixture, const RewriteScript& s) {
    json steps = json::array();
    for (const auto& st : s.steps) {
        json js = {{"rule", rule_name(st.rule)}, {"pos", st.pos}};
        if (!st.arg.empty()) js["arg"] = st.arg;
        steps.push_back(std::move(js));
    }
    return {{"name", s.name}, {"fixture", fixture}, {"start", format_word(s.start)}, {"target", format_word(s.target)}, {"steps", steps}};
}

}  // namespace plumbook
