#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "oracles.hpp"

using namespace plumbook;

namespace {

std::string read(const std::string& name) {
    std::ifstream in(std::string(PLUMBOOK_FIXTURE_DIR) + "/" + name);
    EXPECT_TRUE(in) << name;
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(Fixtures, TreeFilesMatchEmbedded) {
    for (const auto& f : fixtures::all_trees()) {
        if (f.name.rfind("m(", 0) == 0 || !f.stages.empty()) continue;
        EXPECT_EQ(parse_tree(read(f.name + ".tree")), fixtures::tree(f)) << f.name;
    }
}

TEST(Fixtures, SeifertFileMatchesEmbedded) {
    std::stringstream ss(read("seifert.txt"));
    std::vector<SeifertInput> rows;
    for (std::string line; std::getline(ss, line);) {
        if (line.empty() || line[0] == '#') continue;
        std::stringstream ls(line);
        SeifertInput in;
        std::string r[3];
        ls >> in.e0 >> r[0] >> r[1] >> r[2];
        for (int i = 0; i < 3; ++i) in.ratios[i] = parse_rational(r[i]);
        rows.push_back(in);
    }
    auto emb = fixtures::seifert();
    ASSERT_EQ(rows.size(), emb.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        EXPECT_EQ(seifert_to_tree(rows[i]), seifert_to_tree(emb[i].input)) << emb[i].name;
}

TEST(Fixtures, StagesFileMatchesEmbedded) {
    std::stringstream ss(read("branched9.stages"));
    std::vector<std::vector<VertexId>> stages;
    for (std::string line; std::getline(ss, line);) {
        if (line.empty() || line[0] == '#') continue;
        std::stringstream ls(line);
        std::vector<VertexId> st;
        for (std::string id; ls >> id;) st.push_back(id);
        stages.push_back(st);
    }
    EXPECT_EQ(stages, fixtures::branched9_two_stage().stages);
}

TEST(Fixtures, ScriptFilesMatchEmbedded) {
    auto scripts = fixtures::scripts();
    const char* files[] = {"e8.script.json", "star4.script.json"};
    for (std::size_t i = 0; i < 2; ++i) {
        ScriptFile f = parse_script_json(json::parse(read(files[i])));
        ASSERT_TRUE(f.has_steps);
        EXPECT_EQ(f.script.start, scripts[i].start);
        EXPECT_EQ(f.script.target, scripts[i].target);
        ASSERT_EQ(f.script.steps.size(), scripts[i].steps.size());
        for (std::size_t k = 0; k < f.script.steps.size(); ++k) {
            EXPECT_EQ(f.script.steps[k].rule, scripts[i].steps[k].rule);
            EXPECT_EQ(f.script.steps[k].pos, scripts[i].steps[k].pos);
        }
        // and the serializer writes back the same script
        std::string fx = i == 0 ? "e8" : "star4";
        ScriptFile back = parse_script_json(script_to_json(fx, scripts[i]));
        EXPECT_EQ(back.script.start, scripts[i].start);
    }
    ScriptFile torus = parse_script_json(json::parse(read("torus.script.json")));
    EXPECT_FALSE(torus.has_steps);
    EXPECT_EQ(torus.algebra.dim(), 2u);
    EXPECT_THROW((void)parse_script_json(json::parse(R"({"fixture":"nope","start":"a","target":"a"})")), AlgebraError);
    EXPECT_THROW((void)parse_script_json(json::parse(R"({"fixture":"e8"})")), AlgebraError);
}

TEST(Schemas, GenusRollupOpenBookCertificate) {
    Pipeline p = run_pipeline(fixtures::tree(fixtures::e8()));
    json g = genus_json(p.tree, p.genus);
    EXPECT_EQ(g["genus"], 1);
    EXPECT_EQ(g["stages"].size(), 1u);
    EXPECT_TRUE(g["residual"].is_array());
    EXPECT_EQ(genus_json(p.tree, greedy_genus(p.tree))["method"], "greedy");

    json r = rollup_json(p.tree, p.diagram, true);
    EXPECT_EQ(r["components"].size(), 8u);
    EXPECT_EQ(r["linking_matrix"].size(), 8u);
    for (const char* k : {"chains", "hook_budget", "legendrian"}) EXPECT_TRUE(r.contains(k)) << k;
    EXPECT_FALSE(rollup_json(p.tree, p.diagram).contains("chains"));

    json o = openbook_json(p.tree, p.book);
    EXPECT_EQ(o["page"]["genus"], 1);
    EXPECT_EQ(o["page"]["boundary"], 1);
    EXPECT_EQ(o["monodromy"].size(), 10u);
    EXPECT_EQ(o["monodromy"][0]["provenance"].get<std::string>().rfind("surgery(", 0), 0u);
    EXPECT_EQ(o["monodromy"][9]["provenance"], "stabilization");

    json c = certificate_json(certify(p));
    EXPECT_EQ(c["ok"], true);
    EXPECT_EQ(c["h1"]["plumbing"]["text"], "0");
}
