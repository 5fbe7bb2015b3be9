#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "category_oracle.hpp"
#include "heartfan/dataset.hpp"
#include "heartfan/errors.hpp"

#include <random>

using namespace heartfan;

namespace {

using V = LatticeVector;
using Ids = std::set<std::string>;

std::filesystem::path dataset(const std::string& name) {
    return std::filesystem::path(HEARTFAN_SOURCE_DIR) / "data" / "datasets" / (name + ".json");
}

CategoryModel load(const std::string& name) { return load_model_file(dataset(name)); }

DualVector random_dual(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<long> num(-5, 5), den(1, 3);
    std::vector<Rational> c(n);
    for (auto& x : c) {
        x = Rational(num(rng), den(rng));
        x.canonicalize();
    }
    return DualVector(c);
}

bool subset(const Ids& a, const Ids& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

std::vector<oracle::BrutePair> as_brute(const std::vector<TorsionPair>& tps) {
    std::vector<oracle::BrutePair> out;
    for (const auto& tp : tps) out.push_back({tp.torsion.ids, tp.torsionfree.ids});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("loading datasets") {
    auto a2 = load("a2");
    CHECK(a2.size() == 3);
    CHECK(a2.sequences().size() == 1);
    CHECK(a2.ids() == std::vector<std::string>{"E", "S1", "S2"});
    auto tube = load("tube2_depth4");
    CHECK(tube.size() == 8);
    CHECK(!tube.approximate());
    CHECK(load("kronecker2_depth3").approximate());
    CHECK_THROWS_AS(load("a2_bad_additivity"), AdditivityError);

    auto doc = read_json_file(dataset("a2"));
    auto broken = doc;
    broken["ses"][0]["mid"] = "X";
    CHECK_THROWS_AS(load_model(broken), SchemaError);
    broken = doc;
    broken["indecs"]["E"]["class"] = {1.0, 1};
    CHECK_THROWS_AS(load_model(broken), SchemaError);
    broken = doc;
    broken["rank"] = 3;
    CHECK_THROWS_AS(load_model(broken), SchemaError);
    broken = doc;
    broken["hom"].erase(0);
    CHECK_THROWS_AS(load_model(broken), InvariantError);
    broken = doc;
    broken["colour"] = "red";
    CHECK_THROWS_AS(load_model(broken), SchemaError);
    // round trip through the document form
    CHECK(dataset_to_json(parse_dataset(doc)) == dataset_to_json(parse_dataset(dataset_to_json(parse_dataset(doc)))));
}

TEST_CASE("sub and quotient classes") {
    auto a2 = load("a2");
    CHECK(quotient_classes(a2, "E") == std::set<V>{V{0, 0}, V{1, 1}, V{0, 1}});
    CHECK(sub_classes(a2, "E") == std::set<V>{V{0, 0}, V{1, 1}, V{1, 0}});
    CHECK(sub_classes(a2, "S1") == std::set<V>{V{0, 0}, V{1, 0}});
    auto tube = load("tube2_depth4");
    // uniserial of length 4 with top S1: quotients are the top segments
    CHECK(quotient_classes(tube, "U1_4") == std::set<V>{V{0, 0}, V{1, 0}, V{1, 1}, V{2, 1}, V{2, 2}});
    CHECK(sub_classes(tube, "U1_4") == std::set<V>{V{0, 0}, V{0, 1}, V{1, 1}, V{1, 2}, V{2, 2}});
}

TEST_CASE("torsion pairs of the A2 quiver") {
    auto tps = torsion_pairs(load("a2"));
    REQUIRE(tps.size() == 5);
    CHECK(tps[0].torsion.ids.empty());
    CHECK(tps[0].torsionfree.ids == Ids{"E", "S1", "S2"});
    CHECK(tps[1].torsion.ids == Ids{"S1"});
    CHECK(tps[1].torsionfree.ids == Ids{"S2"});
    CHECK(tps[2].torsion.ids == Ids{"S2"});
    CHECK(tps[2].torsionfree.ids == Ids{"E", "S1"});
    CHECK(tps[3].torsion.ids == Ids{"E", "S2"});
    CHECK(tps[3].torsionfree.ids == Ids{"S1"});
    CHECK(tps[4].torsion.ids == Ids{"E", "S1", "S2"});
    CHECK(tps[4].torsionfree.ids.empty());
}

TEST_CASE("torsion pair counts") {
    CHECK(torsion_pairs(load("semisimple2")).size() == 4);
    CHECK(torsion_pairs(load("tube2_depth4")).size() == 6);
    CHECK(torsion_pairs(load("kronecker2_depth3")).size() == 13);
}

TEST_CASE("torsion pairs agree with exhaustive search") {
    for (auto name : {"a2", "semisimple2", "tube2_depth4", "kronecker2_depth3"}) {
        auto m = load(name);
        CHECK(as_brute(torsion_pairs(m)) == oracle::brute_torsion_pairs(m.data()));
    }
}

TEST_CASE("every object decomposes for every enumerated pair") {
    for (auto name : {"a2", "semisimple2", "tube2_depth4", "kronecker2_depth3"}) {
        auto m = load(name);
        for (const auto& tp : torsion_pairs(m)) {
            CHECK(torsion_pair_violations(m, m.mask_of(tp.torsion.ids), m.mask_of(tp.torsionfree.ids)).empty());
            Ids both = tp.torsion.ids;
            both.insert(tp.torsionfree.ids.begin(), tp.torsionfree.ids.end());
            for (const auto& id : m.ids()) {
                if (both.count(id)) continue;
                bool split = false;
                for (const auto& s : m.data().ses) {
                    if (s.mid != id) continue;
                    bool ok = true;
                    for (const auto& x : s.sub) ok = ok && tp.torsion.ids.count(x);
                    for (const auto& x : s.quot) ok = ok && tp.torsionfree.ids.count(x);
                    split = split || ok;
                }
                CHECK_MESSAGE(split, id);
            }
        }
    }
}

TEST_CASE("torsion pairs do not depend on dataset order") {
    auto doc = read_json_file(dataset("tube2_depth4"));
    auto reference = torsion_pairs(load_model(doc));
    std::mt19937_64 rng(5);
    for (int t = 0; t < 5; ++t) {
        auto shuffled = doc;
        std::vector<nlohmann::json> ses(doc["ses"].begin(), doc["ses"].end());
        std::vector<nlohmann::json> hom(doc["hom"].begin(), doc["hom"].end());
        std::shuffle(ses.begin(), ses.end(), rng);
        std::shuffle(hom.begin(), hom.end(), rng);
        shuffled["ses"] = ses;
        shuffled["hom"] = hom;
        CHECK(torsion_pairs(load_model(shuffled)) == reference);
    }
}

TEST_CASE("numerical torsion pairs") {
    auto a2 = load("a2");
    auto all = Ids{"E", "S1", "S2"};
    auto p = numerical_tp(a2, DualVector{2, 1});
    CHECK(p.lower.torsion.ids == all);
    CHECK(p.lower.torsionfree.ids.empty());
    CHECK(p.upper.torsion.ids == all);
    CHECK(p.upper.torsionfree.ids.empty());
    auto w = numerical_tp(a2, DualVector{-1, 1});
    CHECK(w.lower.torsion.ids == Ids{"S2"});
    CHECK(w.upper.torsion.ids == Ids{"E", "S2"});
    CHECK(w.upper.torsionfree.ids == Ids{"S1"});
    CHECK(w.lower.torsionfree.ids == Ids{"E", "S1"});
    auto z = numerical_tp(a2, DualVector{0, 0});
    CHECK(z.lower.torsion.ids.empty());
    CHECK(z.upper.torsion.ids == all);
}

TEST_CASE("semistable objects") {
    auto a2 = load("a2");
    auto e = semistable(a2, DualVector{-1, 1});
    CHECK(e.objects.ids == Ids{"E"});
    CHECK(e.stable == Ids{"E"});
    CHECK(semistable(a2, DualVector{1, -1}).objects.ids.empty());
    auto s1 = semistable(a2, DualVector{0, 1});
    CHECK(s1.objects.ids == Ids{"S1"});
    CHECK(s1.stable == Ids{"S1"});
    auto everything = semistable(a2, DualVector{0, 0});
    CHECK(everything.objects.ids == Ids{"E", "S1", "S2"});
    CHECK(everything.stable == Ids{"S1", "S2"});
    // on the tube, v = [1,-1] keeps the objects with socle S2 and equal composition factors
    auto tube = load("tube2_depth4");
    auto t = semistable(tube, DualVector{1, -1});
    CHECK(t.objects.ids == Ids{"F", "U1_4"});
    CHECK(t.stable == Ids{"F"});
}

TEST_CASE("numerical pairs: properties on samples") {
    std::mt19937_64 rng(77);
    for (auto name : {"a2", "semisimple2", "tube2_depth4", "kronecker2_depth3"}) {
        auto m = load(name);
        for (int s = 0; s < 500; ++s) {
            DualVector v = random_dual(rng, 2);
            auto p = numerical_tp(m, v);
            CHECK(subset(p.lower.torsion.ids, p.upper.torsion.ids));
            CHECK(subset(p.upper.torsionfree.ids, p.lower.torsionfree.ids));
            Ids meet;
            std::set_intersection(p.upper.torsion.ids.begin(), p.upper.torsion.ids.end(),
                                  p.lower.torsionfree.ids.begin(), p.lower.torsionfree.ids.end(),
                                  std::inserter(meet, meet.begin()));
            CHECK(semistable(m, v).objects.ids == meet);
            if (!m.approximate()) {
                for (const auto& tp : {p.lower, p.upper})
                    CHECK(torsion_pair_violations(m, m.mask_of(tp.torsion.ids), m.mask_of(tp.torsionfree.ids)).empty());
            }
        }
    }
}

TEST_CASE("face subcategories") {
    auto f = face_subcats(load("a2"));
    REQUIRE(f.size() == 4);
    std::set<Ids> got;
    for (const auto& [cone, s] : f) got.insert(s.ids);
    CHECK(got == std::set<Ids>{{}, {"S1"}, {"S2"}, {"E", "S1", "S2"}});
    CHECK(face_subcats(load("semisimple2")).size() == 4);

    ModelData d;
    d.name = "with_null";
    d.rank = 2;
    d.simples = {"A", "B", "Z"};
    d.classes = {{"A", V{1, 0}}, {"B", V{0, 1}}, {"Z", V{0, 0}}};
    d.hom = {{"A", "A"}, {"B", "B"}, {"Z", "Z"}};
    CategoryModel m(d);
    for (const auto& [cone, s] : face_subcats(m)) CHECK(s.ids.count("Z"));
    CHECK(null_subcat(m).ids == Ids{"Z"});
    CHECK(null_subcat(load("a2")).ids.empty());
}

TEST_CASE("null witnesses from metadata") {
    auto m = load("mixed_p1_null");
    CHECK(null_subcat(m).ids.empty());
    REQUIRE(m.data().null_witnesses.size() == 1);
    const auto& [a, b] = m.data().null_witnesses.front();
    CHECK((m.cls(a) + m.cls(b)).is_zero());
}

TEST_CASE("restriction to a subcategory") {
    auto tube = load("tube2_depth4");
    auto ss = semistable(tube, DualVector{1, -1}).objects.ids;
    auto r = restrict_model(tube, ss);
    CHECK(r.size() == 2);
    // U1_4 is a self-extension of F
    CHECK(r.sequences().size() == 1);
    CHECK(r.data().simples == std::vector<std::string>{"F"});
    CHECK(torsion_pairs(r).size() == 2);
}
