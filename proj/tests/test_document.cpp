#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "heartfan/cli.hpp"
#include "heartfan/dataset.hpp"
#include "heartfan/document.hpp"
#include "heartfan/errors.hpp"
#include "heartfan/heartfan.hpp"
#include "heartfan/render.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace heartfan;
using nlohmann::json;

namespace {

using V = LatticeVector;
namespace fs = std::filesystem;

const fs::path root = HEARTFAN_SOURCE_DIR;

CategoryModel load(const std::string& name) { return load_model_file(root / "data" / "datasets" / (name + ".json")); }

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

FanMetadata meta_for(const CategoryModel& m, const std::string& kind) {
    FanMetadata meta;
    meta.kind = kind;
    meta.source = m.name();
    meta.complete_expected = kind == "heartfan" && !m.approximate();
    return meta;
}

FamilySpec spec(FamilyKind k, int depth) {
    FamilySpec s;
    s.kind = k;
    s.depth = depth;
    return s;
}

struct Ran {
    int code;
    std::string out;
    std::string err;
};

Ran run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<FanDocument> sample_documents() {
    std::vector<FanDocument> docs;
    for (const char* name : {"a2", "semisimple2", "tube2_depth4", "kronecker2_depth3"}) {
        auto m = load(name);
        docs.push_back(FanDocument::of(heart_fan(m), meta_for(m, "heartfan")));
        docs.push_back(FanDocument::of(stability_fan(m), meta_for(m, "stabilityfan")));
    }
    for (auto k : {FamilyKind::projective_line, FamilyKind::kronecker, FamilyKind::tube_rank2,
                   FamilyKind::semisimple_Z, FamilyKind::elliptic_rational})
        docs.push_back(family_document(family_fan(spec(k, 3))));
    auto wild = spec(FamilyKind::kronecker, 5);
    wild.arrows = 3;
    docs.push_back(family_document(family_fan(wild)));
    return docs;
}

}  // namespace

TEST_CASE("documents survive a JSON round trip unchanged") {
    for (const auto& d : sample_documents()) {
        auto j = document_to_json(d);
        auto back = document_from_json(j);
        CHECK(back == d);
        CHECK(back.noncanonical.empty());
        CHECK(serialize(back) == serialize(d));
        CHECK(serialize(d).back() == '\n');
    }
}

TEST_CASE("irrational limits keep their exact data") {
    auto wild = spec(FamilyKind::kronecker, 6);
    wild.arrows = 3;
    auto d = family_document(family_fan(wild));
    auto j = document_to_json(d);
    auto back = document_from_json(j);
    REQUIRE(back.meta.limits.size() == 2);
    for (const auto& l : back.meta.limits) CHECK(l.radicand == 5);
    CHECK(back.meta.sequence == std::vector<Integer>{0, 1, 3, 8, 21, 55});
}

TEST_CASE("schema errors") {
    auto a2 = load("a2");
    auto j = document_to_json(FanDocument::of(heart_fan(a2), meta_for(a2, "heartfan")));

    auto bad = j;
    bad["format"] = "something-else";
    CHECK_THROWS_AS(document_from_json(bad), SchemaError);

    bad = j;
    bad["colour"] = "blue";
    CHECK_THROWS_AS(document_from_json(bad), SchemaError);

    bad = j;
    bad.erase("cones");
    CHECK_THROWS_AS(document_from_json(bad), SchemaError);

    bad = j;
    bad["cones"][3]["rays"][0] = json::array({1, 2, 3});
    CHECK_THROWS_AS(document_from_json(bad), SchemaError);

    bad = j;
    bad["edges"][0] = json::array({0, 999});
    CHECK_THROWS_AS(document_from_json(bad), SchemaError);

    CHECK_THROWS_AS(read_document(root / "data" / "fixtures" / "no_such_file.json"), Error);
}

TEST_CASE("stored rays that are not canonical are reported") {
    auto a2 = load("a2");
    auto j = document_to_json(FanDocument::of(heart_fan(a2), meta_for(a2, "heartfan")));
    for (auto& c : j["cones"])
        if (c["rays"] == json::array({json::array({0, 1})})) c["rays"] = json::array({json::array({0, 3})});
    auto d = document_from_json(j);
    CHECK(d.noncanonical.size() == 1);
    CHECK_FALSE(verify_document(d, 10).ok());
}

TEST_CASE("verify accepts computed fans and names the broken pair in a corrupted one") {
    auto good = read_document(root / "data" / "fixtures" / "a2_heartfan.json");
    auto r = verify_document(good);
    CHECK(r.ok());
    CHECK(r.completeness_checked);
    CHECK(r.samples == 1000);

    auto bad = read_document(root / "data" / "fixtures" / "a2_heartfan_corrupted.json");
    auto rb = verify_document(bad);
    CHECK_FALSE(rb.ok());
    bool named = false;
    for (const auto& v : rb.violations)
        named = named || (v.find("cone{[-1,0],[-1,2]}") != std::string::npos &&
                          v.find("cone{[-1,1],[0,1]}") != std::string::npos);
    CHECK(named);
}

TEST_CASE("truncated family documents skip the completeness check") {
    for (auto k : {FamilyKind::projective_line, FamilyKind::kronecker, FamilyKind::elliptic_rational}) {
        auto d = family_document(family_fan(spec(k, 3)));
        CHECK(d.fan.truncated());
        auto r = verify_document(d);
        CHECK(r.ok());
        CHECK_FALSE(r.completeness_checked);
    }
    auto tube = family_document(family_fan(spec(FamilyKind::tube_rank2, 1)));
    auto r = verify_document(tube, 300);
    CHECK(r.ok());
}

TEST_CASE("style config") {
    CHECK(style_from_json(json::object()) == RenderStyle{});
    CHECK(style_from_json(style_to_json(RenderStyle{})) == RenderStyle{});
    auto s = read_style(root / "data" / "fixtures" / "style_small.json");
    CHECK(s.size == 200);
    CHECK(s.digits == 1);
    CHECK(s.ray_color == RenderStyle{}.ray_color);
    CHECK_THROWS_AS(style_from_json(json{{"sise", 10}}), SchemaError);
    CHECK_THROWS_AS(style_from_json(json{{"size", "big"}}), SchemaError);
}

TEST_CASE("rendering") {
    SUBCASE("rank 3 is data only") {
        Fan f(3);
        f.add_with_faces(RatCone::from_generators(3, {V{1, 0, 0}, V{0, 1, 0}, V{0, 0, 1}}));
        auto d = FanDocument::of(f, {});
        CHECK_THROWS_AS(render_svg(d), UnsupportedRank);
        CHECK_NOTHROW(serialize(d));
    }
    SUBCASE("an empty fan is a blank canvas with axes") {
        auto svg = render_svg(FanDocument::of(Fan(2), {}));
        CHECK(svg.find("<line") != std::string::npos);
        CHECK(svg.find("<path") == std::string::npos);
    }
    SUBCASE("one sector per full cone, dashed limits, truncation label") {
        auto wild = spec(FamilyKind::kronecker, 4);
        wild.arrows = 3;
        auto d = family_document(family_fan(wild));
        auto svg = render_svg(d);
        std::size_t sectors = 0;
        for (auto p = svg.find("<path"); p != std::string::npos; p = svg.find("<path", p + 1)) ++sectors;
        CHECK(sectors == d.fan.full_cones().size());
        CHECK(svg.find("stroke-dasharray=\"6,4\"") != std::string::npos);
        CHECK(svg.find("truncated") != std::string::npos);
    }
    SUBCASE("style changes the output") {
        auto d = read_document(root / "data" / "fixtures" / "a2_heartfan.json");
        auto small = render_svg(d, read_style(root / "data" / "fixtures" / "style_small.json"));
        CHECK(small != render_svg(d));
        CHECK(small.find("width=\"220\"") != std::string::npos);
    }
}

TEST_CASE("golden SVGs") {
    auto a2 = read_document(root / "data" / "fixtures" / "a2_heartfan.json");
    auto p1 = family_document(family_fan(spec(FamilyKind::projective_line, 3)));
    auto a2_svg = render_svg(a2);
    auto p1_svg = render_svg(p1);
    CHECK(a2_svg == slurp(root / "tests" / "golden" / "a2.svg"));
    CHECK(p1_svg == slurp(root / "tests" / "golden" / "p1_depth3.svg"));
    // recomputing from the dataset gives the same bytes as the stored document
    auto m = load("a2");
    CHECK(render_svg(FanDocument::of(heart_fan(m), meta_for(m, "heartfan"))) == a2_svg);
    for (int i = 0; i < 3; ++i) CHECK(render_svg(p1) == p1_svg);
}

TEST_CASE("cli exit codes") {
    CHECK(run({}).code == cli::usage_error);
    CHECK(run({"bogus"}).code == cli::usage_error);
    CHECK(run({"compute", "heartfan"}).code == cli::usage_error);
    CHECK(run({"compute", "family", "--kind", "nope"}).code == cli::usage_error);
    CHECK(run({"query", "semistable", "--dataset", "a2", "--v", "x,y"}).code == cli::usage_error);
    CHECK(run({"compute", "heartfan", "--dataset", "no_such_dataset"}).code == cli::domain_error);
    CHECK(run({"query", "semistable", "--dataset", "a2", "--v", "1,2,3"}).code == cli::domain_error);
    CHECK(run({"compute", "heartfan", "--dataset", "a2_bad_additivity"}).code == cli::domain_error);

    auto ok = run({"compute", "heartfan", "--dataset", "a2"});
    CHECK(ok.code == cli::ok);
    CHECK(ok.out == slurp(root / "data" / "fixtures" / "a2_heartfan.json"));

    auto bad = run({"verify", (root / "data" / "fixtures" / "a2_heartfan_corrupted.json").string()});
    CHECK(bad.code == cli::domain_error);
    CHECK(json::parse(bad.out)["pass"] == false);
}

TEST_CASE("cli queries") {
    auto ss = run({"query", "semistable", "--dataset", "a2", "--v=-1,1"});
    REQUIRE(ss.code == cli::ok);
    CHECK(json::parse(ss.out)["semistable"] == json::array({"E"}));

    auto slice = run({"query", "slice", "--dataset", "a2", "--charge=-1,0;0,1"});
    REQUIRE(slice.code == cli::ok);
    CHECK(json::parse(slice.out)["entries"].size() == 2);

    auto render = run({"render", (root / "data" / "fixtures" / "a2_heartfan.json").string()});
    CHECK(render.code == cli::ok);
    CHECK(render.out == slurp(root / "tests" / "golden" / "a2.svg"));
}

TEST_CASE("datasets resolve through HEARTFAN_DATA") {
    auto dir = fs::temp_directory_path() / "heartfan_test_data";
    fs::create_directories(dir);
    fs::copy_file(root / "data" / "datasets" / "semisimple2.json", dir / "mine.json",
                  fs::copy_options::overwrite_existing);
    ::setenv("HEARTFAN_DATA", dir.c_str(), 1);
    CHECK(cli::resolve_dataset("mine") == dir / "mine.json");
    CHECK(run({"compute", "heartfan", "--dataset", "mine"}).code == cli::ok);
    // bundled datasets are still found
    CHECK(run({"compute", "heartfan", "--dataset", "a2"}).code == cli::ok);
    ::unsetenv("HEARTFAN_DATA");
    CHECK(run({"compute", "heartfan", "--dataset", "mine"}).code == cli::domain_error);
    fs::remove_all(dir);
}
