// plumbook: plumbing trees to rolled-up diagrams, open books and H1 certificates.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <plumbook/plumbook.hpp>

namespace pb = plumbook;

namespace {

enum Exit { ok = 0, usage = 1, io = 2, parse = 3, validation = 4, mismatch = 5, internal = 6 };

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read '" + path + "'");
    return {std::istreambuf_iterator<char>(in), {}};
}

struct Input {
    std::string file;
    std::string inline_dsl;
    std::string stages;  // "a b c; d e"
    bool greedy = false;
};

void add_input(CLI::App* c, Input& in, bool with_stages = true) {
    c->add_option("file", in.file, "tree file (DSL or JSON; '-' for stdin)");
    c->add_option("--inline", in.inline_dsl, "tree given inline in the DSL");
    if (with_stages) {
        c->add_option("--stages", in.stages, "explicit decomposition: a stages file, or ids separated by spaces or commas with stages split by ';'");
        c->add_flag("--greedy", in.greedy, "use the greedy witness instead of the exact one");
    }
}

pb::PlumbingTree load_tree(const Input& in) {
    std::string text;
    std::string origin;
    if (!in.inline_dsl.empty()) {
        text = in.inline_dsl;
        origin = "<inline>";
    } else if (!in.file.empty()) {
        text = slurp(in.file);
        origin = in.file;
    } else {
        throw CLI::ValidationError("input", "a tree file or --inline is required");
    }
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return pb::import_json(text);
    try {
        return pb::parse_tree(text);
    } catch (const pb::ParseError& e) {
        throw pb::ParseError(origin + ":" + e.what(), e.line(), e.column());
    }
}

std::optional<std::vector<pb::LinearSubtree>> load_stages(const pb::PlumbingTree& t, const std::string& arg) {
    if (arg.empty()) return std::nullopt;
    std::string text = arg;
    char sep = ';';
    if (std::ifstream probe(arg); probe) {
        // stages file: one stage per line, '#' comments
        text.clear();
        for (std::string ln; std::getline(probe, ln);)
            text += ln.substr(0, ln.find('#')) + "\n";
        sep = '\n';
    }
    std::vector<pb::LinearSubtree> out;
    std::stringstream ss(text);
    std::string chunk;
    while (std::getline(ss, chunk, sep)) {
        for (char& c : chunk)
            if (c == ',') c = ' ';
        std::stringstream cs(chunk);
        pb::LinearSubtree s;
        std::string id;
        while (cs >> id) s.path.push_back(t.index(id));
        if (!s.path.empty()) out.push_back(std::move(s));
    }
    return out;
}

pb::Pipeline pipeline(const Input& in) {
    pb::PlumbingTree t = load_tree(in);
    return pb::run_pipeline(t, in.greedy, load_stages(t, in.stages));
}

void print(const pb::json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_parse(const Input& in, bool as_json) {
    pb::PlumbingTree t = load_tree(in);
    auto ann = pb::annotate(t);
    if (as_json) {
        pb::json vs = pb::json::array();
        for (std::size_t v = 0; v < t.size(); ++v)
            vs.push_back({{"id", ann[v].vertex}, {"euler", t.euler(v)}, {"degree", ann[v].degree}, {"bad", ann[v].is_bad}});
        print({{"vertices", vs}, {"edges", t.edges().size()}, {"non_positive", t.non_positive()}});
        return ok;
    }
    std::cout << t.size() << " vertices, " << t.edges().size() << " edges, "
              << (t.non_positive() ? "non-positive" : "has bad vertices") << "\n";
    for (std::size_t v = 0; v < t.size(); ++v)
        std::cout << "  " << ann[v].vertex << "  n=" << t.euler(v) << "  d=" << ann[v].degree
                  << (ann[v].is_bad ? "  bad" : "") << "\n";
    return ok;
}

int cmd_rollup(const Input& in, bool as_json, bool verbose) {
    pb::Pipeline p = pipeline(in);
    if (as_json) {
        print(pb::rollup_json(p.tree, p.diagram, verbose));
        return ok;
    }
    for (const auto& c : p.diagram.components) {
        std::cout << "U" << c.id << "  vertex " << p.tree.id(c.vertex) << "  framing " << c.framing << "  "
                  << pb::hook_name(c.hook);
        if (c.parent_component) std::cout << " (U" << *c.parent_component << ")";
        std::cout << "\n";
    }
    if (verbose) {
        for (const auto& st : p.diagram.layout.stages) {
            std::vector<long long> eul;
            for (std::size_t v : st.path) eul.push_back(p.tree.euler(v));
            auto r = pb::roll_up_stage(eul);
            std::cout << "chain";
            for (std::size_t v : st.path) std::cout << " " << p.tree.id(v);
            std::cout << "\n  l_i (slides):";
            for (auto x : r.linking) std::cout << " " << x;
            std::cout << "\n  l_i (n_1+..+n_{i-1}+2i-1):";
            for (auto x : r.shifted_linking) std::cout << " " << x;
            std::cout << "\n";
        }
    }
    std::cout << "linking matrix " << p.diagram.linking_matrix << "\n";
    return ok;
}

int cmd_stein(const Input& in, bool count, bool list, std::size_t limit) {
    pb::PlumbingTree t = load_tree(in);
    if (!count && !list) count = true;
    if (count) std::cout << pb::stein_count(t) << "\n";
    if (list) {
        auto e = pb::enumerate_stein(t, limit);
        for (const auto& tup : e.assignments) {
            for (std::size_t i = 0; i < tup.size(); ++i) std::cout << (i ? " " : "") << tup[i];
            std::cout << "\n";
        }
        if (!e.complete) std::cerr << "truncated after " << limit << " tuples\n";
    }
    return ok;
}

int cmd_openbook(const Input& in, bool as_json, bool dot) {
    pb::Pipeline p = pipeline(in);
    if (dot) {
        std::cout << pb::page_dot(p.book);
        return ok;
    }
    if (as_json) {
        print(pb::openbook_json(p.tree, p.book));
        return ok;
    }
    auto c = pb::page_census(p.book);
    std::cout << "page: genus " << c.genus << ", " << c.boundary << " boundary components\n";
    for (const auto& cv : p.book.curves) {
        std::cout << "  " << cv.name << " =";
        for (const auto& x : p.book.class_of(cv.name)) std::cout << " " << x;
        std::cout << "\n";
    }
    std::cout << "monodromy: " << pb::format_twists(pb::to_twist_word(p.book.monodromy)) << "\n";
    return ok;
}

int cmd_verify(const Input& in, bool as_json) {
    pb::Pipeline p = pipeline(in);
    pb::Certificate c = pb::certify(p);
    if (as_json) {
        print(pb::certificate_json(c));
    } else {
        std::cout << "H1 plumbing   " << c.plumbing.str() << "\n"
                  << "H1 linking    " << c.linking.str() << "\n"
                  << "H1 open book  " << c.open_book.str() << "\n"
                  << "agreement     " << (c.h1_agree() ? "yes" : "NO") << "\n"
                  << "congruence    " << (c.congruence.ok() ? "yes" : "NO") << " (det E = " << c.congruence.det_e << ")\n"
                  << "page          genus " << c.census.genus << ", boundary " << c.census.boundary << "\n"
                  << "genus law     " << (c.genus_law() ? "yes" : "NO") << "\n"
                  << "positive      " << (c.positive ? "yes" : "NO") << "\n";
    }
    return c.ok() ? ok : mismatch;
}

int cmd_prove(const std::string& file, std::optional<std::size_t> budget) {
    pb::json j;
    try {
        j = pb::json::parse(slurp(file));
    } catch (const pb::json::parse_error& e) {
        throw pb::AlgebraError(std::string("script: ") + e.what());
    }
    pb::ScriptFile sf = pb::parse_script_json(j);
    pb::json out = {{"name", sf.script.name}, {"target", pb::format_word(sf.script.target)}};
    if (sf.has_steps) {
        pb::ReplayResult r = pb::replay(sf.script.start, sf.script.steps, sf.algebra);
        bool reached = r.ok && r.final_word == sf.script.target;
        out["verdict"] = reached ? pb::verdict_name(pb::Verdict::proved_equal) : "failed";
        out["trace"] = pb::trace_json(sf.script.start, r.trace);
        if (!r.ok) out["error"] = r.error;
        else if (!reached) out["error"] = "script ends at " + pb::format_word(r.final_word);
        print(out);
        return reached ? ok : mismatch;
    }
    pb::EquivalenceResult e = pb::words_equivalent(sf.script.start, sf.script.target, sf.algebra, pb::fixtures::scripts(), budget);
    out["verdict"] = pb::verdict_name(e.verdict);
    out["method"] = e.method;
    out["trace"] = pb::trace_json(e.start, e.trace);
    print(out);
    return e.verdict == pb::Verdict::proved_equal ? ok : mismatch;
}

int cmd_seifert(long long e0, const std::vector<std::string>& r, const std::string& format) {
    pb::SeifertInput in{e0, {pb::parse_rational(r.at(0)), pb::parse_rational(r.at(1)), pb::parse_rational(r.at(2))}};
    pb::PlumbingTree t = pb::seifert_to_tree(in);
    if (format == "json") std::cout << pb::export_json(t);
    else if (format == "dot") std::cout << pb::export_dot(t);
    else std::cout << pb::to_dsl(t);
    return ok;
}

int cmd_fixtures() {
    namespace fx = pb::fixtures;
    bool all = true;
    auto line = [&](bool pass, const std::string& what) {
        all = all && pass;
        std::cout << (pass ? "ok    " : "FAIL  ") << what << "\n";
    };
    for (const auto& f : fx::all_trees()) {
        pb::PlumbingTree t = fx::tree(f);
        std::optional<std::vector<pb::LinearSubtree>> st;
        if (!f.stages.empty()) st = fx::decomposition(f).stages;
        pb::Certificate c = pb::certify(pb::run_pipeline(t, false, st));
        line(c.ok(), f.name + ": g=" + std::to_string(c.genus) + ", page (" + std::to_string(c.census.genus) + "," +
                         std::to_string(c.census.boundary) + "), H1 " + c.open_book.str());
    }
    struct Ref {
        pb::fixtures::TreeFixture f;
        const char* word;
    };
    for (const auto& [f, ref] : {Ref{fx::e8(), fx::e8_reference_word()}, Ref{fx::star4(), fx::star4_reference_word()},
                                 Ref{fx::branched9_two_stage(), fx::branched9_reference_word()}}) {
        auto lb = fx::labelled_book(f);
        pb::TwistWord r = pb::parse_word(ref);
        std::string built = pb::format_twists(lb.word);
        if (lb.word == r) {
            std::cout << "      " << f.name << ": word " << built << " (matches reference)\n";
        } else {
            std::cout << "      " << f.name << ": word " << built << "\n"
                      << "      " << f.name << ": reference " << pb::format_twists(r) << " differs; it presents H1 "
                      << pb::variation_h1(lb.algebra, r).cokernel().str() << "\n";
        }
    }
    std::vector<pb::CurveAlgebra> algs{fx::e8_algebra(), fx::star4_algebra()};
    auto scripts = fx::scripts();
    for (std::size_t i = 0; i < scripts.size(); ++i) {
        auto r = pb::replay(scripts[i].start, scripts[i].steps, algs[i]);
        line(r.ok && r.final_word == scripts[i].target,
             scripts[i].name + ": " + pb::format_twists(scripts[i].start) + " = " + pb::format_twists(scripts[i].target) +
                 " in " + std::to_string(r.trace.size()) + " steps");
    }
    return all ? ok : mismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"plumbing trees to rolled-up surgery diagrams, open books and H1 certificates"};
    app.require_subcommand(1);

    Input in;
    bool as_json = false, verbose = false, dot = false, count = false, list = false;
    bool exact = false, greedy_flag = false, witness = false, tree_flag = false;
    std::string format = "json";
    std::size_t limit = 1000;

    auto* c_parse = app.add_subcommand("parse", "validate a tree and annotate its vertices");
    add_input(c_parse, in, false);
    c_parse->add_flag("--json", as_json, "JSON output");

    auto* c_export = app.add_subcommand("export", "serialize a tree");
    add_input(c_export, in, false);
    c_export->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

    auto* c_genus = app.add_subcommand("genus", "genus of the tree with a witness decomposition");
    add_input(c_genus, in, false);
    c_genus->add_flag("--exact", exact, "exact minimisation (default)");
    c_genus->add_flag("--greedy", greedy_flag, "greedy upper bound");
    c_genus->add_flag("--witness", witness, "include the witness stages and residual");

    auto* c_rollup = app.add_subcommand("rollup", "rolled-up surgery diagram");
    add_input(c_rollup, in);
    c_rollup->add_flag("--json", as_json, "JSON output");
    c_rollup->add_flag("--verbose", verbose, "per-chain linking data, hook budget, Legendrian data");

    auto* c_stein = app.add_subcommand("stein", "Stein structures from rotation numbers");
    add_input(c_stein, in, false);
    c_stein->add_flag("--count", count, "print the count");
    c_stein->add_flag("--list", list, "list rotation tuples in vertex order");
    c_stein->add_option("--limit", limit, "maximum tuples to list");

    auto* c_ob = app.add_subcommand("openbook", "abstract open book with monodromy");
    add_input(c_ob, in);
    c_ob->add_flag("--json", as_json, "JSON output");
    c_ob->add_flag("--dot", dot, "DOT rendering of the page");

    auto* c_verify = app.add_subcommand("verify", "three-way H1 agreement certificate");
    add_input(c_verify, in);
    c_verify->add_flag("--tree", tree_flag, "input is a tree file (the default)");
    c_verify->add_flag("--json", as_json, "JSON output");

    auto* c_mcg = app.add_subcommand("mcg", "Dehn twist word tools");
    auto* c_prove = c_mcg->add_subcommand("prove", "replay or search a rewrite script");
    std::string script;
    std::optional<std::size_t> budget;
    c_prove->add_option("--script", script, "script file (JSON)")->required();
    c_prove->add_option("--budget", budget, "search budget (overrides PLUMBOOK_REWRITE_BUDGET)");
    c_mcg->require_subcommand(1);

    auto* c_seifert = app.add_subcommand("seifert", "star-shaped tree of M(e0; r1, r2, r3), e0 <= -3");
    long long e0 = 0;
    std::vector<std::string> ratios;
    std::string sformat = "dsl";
    c_seifert->add_option("e0", e0, "central euler number")->required()->allow_extra_args(false);
    c_seifert->add_option("ratios", ratios, "three ratios p/q in (0,1)")->required()->expected(3);
    c_seifert->add_option("--format", sformat, "dsl, json or dot")->check(CLI::IsMember({"dsl", "json", "dot"}));
    c_seifert->positionals_at_end(false);

    auto* c_fixtures = app.add_subcommand("fixtures", "replay the built-in fixtures end to end");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : usage;
    }

    try {
        if (*c_parse) return cmd_parse(in, as_json);
        if (*c_export) {
            pb::PlumbingTree t = load_tree(in);
            std::cout << (format == "dot" ? pb::export_dot(t) : pb::export_json(t));
            return ok;
        }
        if (*c_genus) {
            if (exact && greedy_flag) throw CLI::ValidationError("genus", "--exact and --greedy are exclusive");
            pb::PlumbingTree t = load_tree(in);
            print(pb::genus_json(t, greedy_flag ? pb::greedy_genus(t) : pb::genus(t), witness));
            return ok;
        }
        if (*c_rollup) return cmd_rollup(in, as_json, verbose);
        if (*c_stein) return cmd_stein(in, count, list, limit);
        if (*c_ob) return cmd_openbook(in, as_json, dot);
        if (*c_verify) return cmd_verify(in, as_json);
        if (*c_prove) return cmd_prove(script, budget);
        if (*c_seifert) return cmd_seifert(e0, ratios, sformat);
        if (*c_fixtures) return cmd_fixtures();
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return usage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return io;
    } catch (const pb::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return parse;
    } catch (const pb::WordSyntaxError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return parse;
    } catch (const pb::ValidationError& e) {
        std::cerr << "invalid: " << e.what() << "\n";
        return validation;
    } catch (const pb::DecompositionError& e) {
        std::cerr << "invalid: " << e.what() << "\n";
        return validation;
    } catch (const pb::AlgebraError& e) {
        std::cerr << "invalid: " << e.what() << "\n";
        return validation;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return internal;
    }
    return usage;
}
