#include "heartfan/document.hpp"

#include "heartfan/dataset.hpp"
#include "heartfan/errors.hpp"

#include <algorithm>
#include <random>

namespace heartfan {

using nlohmann::json;

namespace {

constexpr const char* format_tag = "heartfan-fan/1";

const json& need(const json& j, const std::string& key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw SchemaError(where + ": missing field '" + key + "'");
    return j.at(key);
}

void only_fields(const json& j, const std::set<std::string>& allowed, const std::string& where) {
    if (!j.is_object()) throw SchemaError(where + ": expected an object");
    for (const auto& [k, v] : j.items())
        if (!allowed.count(k)) throw SchemaError(where + ": unknown field '" + k + "'");
}

bool get_bool(const json& j, const std::string& where) {
    if (!j.is_boolean()) throw SchemaError(where + ": expected a boolean");
    return j.get<bool>();
}

long get_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw SchemaError(where + ": expected an integer");
    return j.get<long>();
}

std::string get_string(const json& j, const std::string& where) {
    if (!j.is_string()) throw SchemaError(where + ": expected a string");
    return j.get<std::string>();
}

Integer get_integer(const json& j, const std::string& where) {
    return json_to_vector(json::array({j}), where)[0];
}

json integer_json(const Integer& x) { return vector_to_json(LatticeVector(std::vector<Integer>{x}))[0]; }

std::vector<LatticeVector> vectors(const json& j, const std::string& where) {
    if (!j.is_array()) throw SchemaError(where + ": expected an array of integer arrays");
    std::vector<LatticeVector> out;
    for (const auto& x : j) out.push_back(json_to_vector(x, where));
    return out;
}

json vectors_json(const std::vector<LatticeVector>& vs) {
    json out = json::array();
    for (const auto& v : vs) out.push_back(vector_to_json(v));
    return out;
}

json limit_json(const LimitRay& l) {
    return json{{"base", vector_to_json(l.base)}, {"root", vector_to_json(l.root)},
                {"radicand", integer_json(l.radicand)}, {"rational", l.rational},
                {"in_fan", l.in_fan}, {"label", l.str()}};
}

LimitRay limit_from_json(const json& j) {
    const std::string where = "limit ray";
    only_fields(j, {"base", "root", "radicand", "rational", "in_fan", "label"}, where);
    LimitRay l;
    l.base = json_to_vector(need(j, "base", where), where);
    l.root = json_to_vector(need(j, "root", where), where);
    l.radicand = get_integer(need(j, "radicand", where), where);
    l.rational = get_bool(need(j, "rational", where), where);
    l.in_fan = get_bool(need(j, "in_fan", where), where);
    if (l.base.rank() != l.root.rank()) throw SchemaError(where + ": base and root differ in length");
    return l;
}

}  // namespace

bool operator==(const LimitRay& a, const LimitRay& b) {
    return a.base == b.base && a.root == b.root && a.radicand == b.radicand && a.rational == b.rational &&
           a.in_fan == b.in_fan;
}

FanDocument FanDocument::of(const Fan& f, FanMetadata meta) {
    FanDocument d;
    d.fan = f;
    d.edges = f.face_edges();
    d.meta = std::move(meta);
    return d;
}

FanDocument family_document(const FamilyFan& ff) {
    FanMetadata m;
    m.kind = "family";
    m.source = to_string(ff.spec.kind);
    m.family = to_string(ff.spec.kind);
    m.depth = ff.spec.depth;
    if (ff.spec.kind == FamilyKind::kronecker) m.arrows = ff.spec.arrows;
    m.limits = ff.limits;
    m.sequence = ff.sequence;
    m.dense_region = ff.dense_region;
    m.complete_expected = ff.spec.kind == FamilyKind::tube_rank2;
    return FanDocument::of(ff.fan, std::move(m));
}

json document_to_json(const FanDocument& doc) {
    json cones = json::array();
    for (const auto& [c, t] : doc.fan.entries()) {
        json tags{{"full", c.is_full()}, {"dual_face", t.dual_face}, {"truncated", t.truncated},
                  {"hearts", std::vector<std::string>(t.hearts.begin(), t.hearts.end())}};
        cones.push_back({{"rays", vectors_json(c.rays())}, {"lineality", vectors_json(c.lineality())}, {"tags", tags}});
    }
    json edges = json::array();
    for (const auto& [a, b] : doc.edges) edges.push_back({a, b});
    json meta{{"kind", doc.meta.kind}, {"source", doc.meta.source}, {"complete_expected", doc.meta.complete_expected},
              {"dense_region", doc.meta.dense_region}};
    if (doc.meta.family) meta["family"] = *doc.meta.family;
    if (doc.meta.depth) meta["depth"] = *doc.meta.depth;
    if (doc.meta.arrows) meta["arrows"] = *doc.meta.arrows;
    json limits = json::array();
    for (const auto& l : doc.meta.limits) limits.push_back(limit_json(l));
    meta["limit_rays"] = limits;
    json seq = json::array();
    for (const auto& a : doc.meta.sequence) seq.push_back(integer_json(a));
    meta["sequence"] = seq;
    return json{{"format", format_tag},
                {"rank", doc.fan.rank()},
                {"truncated", doc.fan.truncated()},
                {"cones", cones},
                {"edges", edges},
                {"metadata", meta}};
}

FanDocument document_from_json(const json& j) {
    const std::string where = "fan document";
    only_fields(j, {"format", "rank", "truncated", "cones", "edges", "metadata"}, where);
    if (get_string(need(j, "format", where), where + " format") != format_tag)
        throw SchemaError(where + ": unsupported format, expected " + format_tag);
    long rank = get_int(need(j, "rank", where), where + " rank");
    if (rank < 0) throw SchemaError(where + ": negative rank");
    FanDocument d;
    d.fan = Fan(static_cast<std::size_t>(rank));
    d.fan.set_truncated(get_bool(need(j, "truncated", where), where + " truncated"));

    const json& cones = need(j, "cones", where);
    if (!cones.is_array()) throw SchemaError(where + ": cones must be an array");
    std::vector<RatCone> listed;
    for (std::size_t i = 0; i < cones.size(); ++i) {
        const std::string cw = where + " cone " + std::to_string(i);
        const json& c = cones[i];
        only_fields(c, {"rays", "lineality", "tags"}, cw);
        auto rays = vectors(need(c, "rays", cw), cw + " rays");
        auto lin = vectors(need(c, "lineality", cw), cw + " lineality");
        for (const auto* vs : {&rays, &lin})
            for (const auto& v : *vs)
                if (v.rank() != d.fan.rank()) throw SchemaError(cw + ": vector " + v.str() + " has the wrong length");
        RatCone cone = RatCone::from_generators(d.fan.rank(), rays, lin);
        if (cone.rays() != rays || cone.lineality() != lin)
            d.noncanonical.push_back("cone " + std::to_string(i) + " is stored as rays " + vectors_json(rays).dump() +
                                     " but its canonical form is " + cone.str());
        const json& t = need(c, "tags", cw);
        only_fields(t, {"full", "dual_face", "truncated", "hearts"}, cw + " tags");
        ConeTags tags;
        tags.dual_face = get_bool(need(t, "dual_face", cw), cw + " dual_face");
        tags.truncated = get_bool(need(t, "truncated", cw), cw + " truncated");
        const json& hearts = need(t, "hearts", cw);
        if (!hearts.is_array()) throw SchemaError(cw + ": hearts must be an array");
        for (const auto& h : hearts) tags.hearts.insert(get_string(h, cw + " heart"));
        if (get_bool(need(t, "full", cw), cw + " full") != cone.is_full())
            d.noncanonical.push_back("cone " + std::to_string(i) + " " + cone.str() + " has a wrong full tag");
        if (d.fan.contains(cone)) d.noncanonical.push_back("cone " + cone.str() + " is listed twice");
        d.fan.add(cone, tags);
        listed.push_back(cone);
    }
    if (!std::is_sorted(listed.begin(), listed.end()))
        d.noncanonical.push_back("cones are not in canonical order");

    const json& edges = need(j, "edges", where);
    if (!edges.is_array()) throw SchemaError(where + ": edges must be an array");
    for (const auto& e : edges) {
        if (!e.is_array() || e.size() != 2) throw SchemaError(where + ": edges are index pairs");
        long a = get_int(e[0], where + " edge"), b = get_int(e[1], where + " edge");
        if (a < 0 || b < 0 || static_cast<std::size_t>(std::max(a, b)) >= cones.size())
            throw SchemaError(where + ": edge index out of range");
        d.edges.emplace_back(a, b);
    }

    const json& m = need(j, "metadata", where);
    const std::string mw = where + " metadata";
    only_fields(m, {"kind", "source", "family", "depth", "arrows", "limit_rays", "sequence", "dense_region",
                    "complete_expected"},
                mw);
    d.meta.kind = get_string(need(m, "kind", mw), mw + " kind");
    d.meta.source = get_string(need(m, "source", mw), mw + " source");
    d.meta.complete_expected = get_bool(need(m, "complete_expected", mw), mw + " complete_expected");
    d.meta.dense_region = get_string(need(m, "dense_region", mw), mw + " dense_region");
    if (m.contains("family")) d.meta.family = get_string(m["family"], mw + " family");
    if (m.contains("depth")) d.meta.depth = static_cast<int>(get_int(m["depth"], mw + " depth"));
    if (m.contains("arrows")) d.meta.arrows = static_cast<int>(get_int(m["arrows"], mw + " arrows"));
    const json& limits = need(m, "limit_rays", mw);
    if (!limits.is_array()) throw SchemaError(mw + ": limit_rays must be an array");
    for (const auto& l : limits) d.meta.limits.push_back(limit_from_json(l));
    const json& seq = need(m, "sequence", mw);
    if (!seq.is_array()) throw SchemaError(mw + ": sequence must be an array");
    for (const auto& a : seq) d.meta.sequence.push_back(get_integer(a, mw + " sequence"));
    return d;
}

FanDocument read_document(const std::filesystem::path& path) { return document_from_json(read_json_file(path)); }

std::string serialize(const FanDocument& doc) { return document_to_json(doc).dump(2) + "\n"; }

json cofan_to_json(const Cofan& c) {
    json cones = json::array();
    for (const auto& s : c.cones()) {
        bool maximal = std::any_of(c.maximal().begin(), c.maximal().end(),
                                   [&](const IntCone& m) { return m.hull() == s.hull() && m == s; });
        auto gens = s.generators();
        std::sort(gens.begin(), gens.end());
        cones.push_back({{"generators", vectors_json(gens)}, {"maximal", maximal}});
    }
    return json{{"format", "heartfan-cofan/1"}, {"rank", c.rank()}, {"cones", cones}};
}

VerifyReport verify_document(const FanDocument& doc, std::size_t samples, unsigned long seed) {
    VerifyReport r;
    r.violations = doc.noncanonical;
    auto fr = check_fan(doc.fan);
    r.violations.insert(r.violations.end(), fr.violations.begin(), fr.violations.end());

    auto computed = doc.fan.face_edges();
    auto cones = doc.fan.cones();
    for (const auto& e : doc.edges)
        if (std::find(computed.begin(), computed.end(), e) == computed.end())
            r.violations.push_back("listed edge " + cones[e.first].str() + " < " + cones[e.second].str() +
                                   " is not a codimension-one face relation");
    for (const auto& e : computed)
        if (std::find(doc.edges.begin(), doc.edges.end(), e) == doc.edges.end())
            r.violations.push_back("missing edge " + cones[e.first].str() + " < " + cones[e.second].str());

    if (doc.meta.complete_expected && !doc.fan.truncated()) {
        r.completeness_checked = true;
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
        for (std::size_t i = 0; i < samples; ++i) {
            std::vector<Rational> c(doc.fan.rank());
            for (auto& x : c) {
                x = Rational(num(rng), den(rng));
                x.canonicalize();
            }
            DualVector v(c);
            ++r.samples;
            if (!support_query(doc.fan, v).cone) {
                r.violations.push_back("sample " + v.str() + " lies outside the fan");
                break;
            }
        }
    }
    return r;
}

}  // namespace heartfan
