#include "heartfan/cli.hpp"

#include "heartfan/dataset.hpp"
#include "heartfan/document.hpp"
#include "heartfan/errors.hpp"
#include "heartfan/families.hpp"
#include "heartfan/heartfan.hpp"
#include "heartfan/render.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#ifndef HEARTFAN_DEFAULT_DATA
#define HEARTFAN_DEFAULT_DATA "data/datasets"
#endif

namespace heartfan::cli {

using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string dataset;
    std::string document;
    std::string family_kind;
    int depth = 3;
    int arrows = 2;
    int slope_bound = 3;
    std::string v;
    std::string charge;
    std::string object;
    std::string style;
    std::string output;
    std::size_t samples = 0;   // 0: command default
    unsigned long seed = 0;
    bool vectors = false;
};

json ids_json(const std::set<std::string>& ids) { return std::vector<std::string>(ids.begin(), ids.end()); }

json cone_json(const RatCone& c) {
    json rays = json::array(), lin = json::array();
    for (const auto& r : c.rays()) rays.push_back(vector_to_json(r));
    for (const auto& l : c.lineality()) lin.push_back(vector_to_json(l));
    return json{{"cone", c.str()}, {"rays", rays}, {"lineality", lin}, {"dim", c.dim()}};
}

json pair_json(const TorsionPair& tp) {
    return json{{"id", tp.id()}, {"torsion", ids_json(tp.torsion.ids)}, {"torsionfree", ids_json(tp.torsionfree.ids)}};
}

CategoryModel need_model(const Options& o) {
    if (o.dataset.empty()) throw UsageError("--dataset is required");
    return load_model_file(resolve_dataset(o.dataset));
}

DualVector need_v(const Options& o, std::size_t rank) {
    if (o.v.empty()) throw UsageError("--v is required");
    std::vector<Rational> c;
    try {
        c = parse_rational_list(o.v);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--v: ") + e.what());
    }
    if (c.size() != rank)
        throw DimensionError("--v has " + std::to_string(c.size()) + " entries, the lattice has rank " +
                             std::to_string(rank));
    return DualVector(c);
}

FamilySpec family_from(const Options& o) {
    if (o.family_kind.empty()) throw UsageError("--kind is required");
    FamilySpec s;
    try {
        s.kind = parse_family_kind(o.family_kind);
    } catch (const SpecError& e) {
        throw UsageError(std::string("--kind: ") + e.what());
    }
    s.depth = o.depth;
    s.arrows = o.arrows;
    s.slope_bound = o.slope_bound;
    return s;
}

FanMetadata dataset_meta(const CategoryModel& m, const std::string& kind) {
    FanMetadata meta;
    meta.kind = kind;
    meta.source = m.name();
    if (m.family()) {
        meta.family = m.family()->kind;
        if (m.family()->depth) meta.depth = m.family()->depth;
        if (m.family()->arrows) meta.arrows = m.family()->arrows;
    }
    meta.complete_expected = kind == "heartfan" && !m.approximate();
    return meta;
}

json walls_json(const WallChamberReport& r) {
    json spaces = json::array(), walls = json::array(), chambers = json::array();
    for (const auto& s : r.spaces) {
        json j = cone_json(s.cone);
        j["object"] = s.id;
        j["codim"] = s.codim;
        spaces.push_back(j);
    }
    for (const auto& w : r.walls) walls.push_back(cone_json(w));
    for (const auto& c : r.chambers) {
        json j = cone_json(c.cone);
        j["hearts"] = ids_json(c.hearts);
        chambers.push_back(j);
    }
    return json{{"stability_spaces", spaces}, {"walls", walls},     {"chambers", chambers},
                {"samples", r.samples},       {"sample_failures", r.sample_failures},
                {"truncated", r.truncated}};
}

void emit(const std::string& text, const Options& o, std::ostream& out) {
    if (o.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.output, std::ios::binary);
    if (!f) throw SchemaError("cannot write " + o.output);
    f << text;
}

void emit(const json& j, const Options& o, std::ostream& out) { emit(j.dump(2) + "\n", o, out); }

int compute(const std::string& kind, const Options& o, std::ostream& out) {
    if (kind == "family") {
        emit(serialize(family_document(family_fan(family_from(o)))), o, out);
        return ok;
    }
    auto m = need_model(o);
    if (kind == "heartfan") {
        emit(serialize(FanDocument::of(heart_fan(m), dataset_meta(m, kind))), o, out);
    } else if (kind == "cofan") {
        emit(cofan_to_json(heart_cofan(m)), o, out);
    } else if (kind == "gfan") {
        auto g = virtual_gfan(m);
        if (!o.vectors) {
            emit(serialize(FanDocument::of(g.fan, dataset_meta(m, kind))), o, out);
            return ok;
        }
        json cones = json::array();
        for (const auto& c : g.cones) {
            json j = cone_json(c.cone);
            j["heart"] = c.heart;
            json cv = json::array(), gv = json::array();
            for (const auto& x : c.c_vectors) cv.push_back(vector_to_json(x));
            for (const auto& x : c.g_vectors) gv.push_back(vector_to_json(x));
            j["c_vectors"] = cv;
            j["g_vectors"] = gv;
            cones.push_back(j);
        }
        emit(json{{"dataset", m.name()}, {"g_cones", cones}}, o, out);
    } else if (kind == "stabilityfan") {
        emit(serialize(FanDocument::of(stability_fan(m), dataset_meta(m, kind))), o, out);
    } else if (kind == "walls") {
        json j = walls_json(walls_and_chambers(m, o.samples ? o.samples : 40, o.seed));
        j["dataset"] = m.name();
        emit(j, o, out);
    } else {
        throw UsageError("unknown compute kind '" + kind + "'");
    }
    return ok;
}

int query(const std::string& kind, const Options& o, std::ostream& out, std::ostream& err) {
    if (kind == "support") {
        Fan f;
        if (!o.document.empty()) f = read_document(o.document).fan;
        else if (!o.family_kind.empty()) f = family_fan(family_from(o)).fan;
        else f = heart_fan(need_model(o));
        auto v = need_v(o, f.rank());
        auto hit = support_query(f, v);
        json containing = json::array();
        for (const auto& [c, t] : f.entries())
            if (c.contains(v)) {
                json j = cone_json(c);
                j["hearts"] = ids_json(t.hearts);
                containing.push_back(j);
            }
        json j{{"v", v.str()},
               {"in_support", hit.cone.has_value()},
               {"lowest_cone", hit.cone ? json(hit.cone->str()) : json(nullptr)},
               {"minimal", hit.minimal},
               {"containing", containing},
               {"truncated", hit.truncated}};
        emit(j, o, out);
        if (!hit.cone) {
            err << "heartfan: " << v.str() << " lies outside the support" << (hit.truncated ? " (truncated fan)" : "")
                << "\n";
            return domain_error;
        }
        return ok;
    }
    auto m = need_model(o);
    if (kind == "semistable") {
        auto v = need_v(o, m.rank());
        auto ss = semistable(m, v);
        emit(json{{"v", v.str()}, {"semistable", ids_json(ss.objects.ids)}, {"stable", ids_json(ss.stable)}}, o, out);
    } else if (kind == "dkp") {
        auto v = need_v(o, m.rank());
        auto kp = distinguished_kernel_pair(m, v);
        json j{{"v", v.str()},
               {"heart", pair_json(kp.heart.pair)},
               {"heart_cone", kp.heart.heart_cone.str()},
               {"kernel", ids_json(kp.kernel.ids)},
               {"shifted", ids_json(kp.shifted)}};
        emit(j, o, out);
    } else if (kind == "hearts") {
        auto v = need_v(o, m.rank());
        auto hs = hearts_containing(m, v);
        json list = json::array();
        for (const auto& h : hs) {
            json j = pair_json(h.pair);
            j["heart_cone"] = h.heart_cone.str();
            j["algebraic"] = h.algebraic;
            list.push_back(j);
        }
        emit(json{{"v", v.str()},
                  {"count", hs.size()},
                  {"semistable_torsion_pairs", semistable_torsion_pair_count(m, v)},
                  {"hearts", list}},
             o, out);
    } else if (kind == "slice") {
        if (o.charge.empty()) throw UsageError("--charge is required");
        auto s = phase_slice(m, parse_charge(o.charge));
        json entries = json::array();
        for (const auto& e : s.entries)
            entries.push_back({{"phase", e.phase.str()},
                               {"direction", to_string(e.phase.re) + "+" + to_string(e.phase.im) + "i"},
                               {"witness", e.witness.str()},
                               {"semistable", ids_json(e.objects.objects.ids)},
                               {"stable", ids_json(e.objects.stable)}});
        emit(json{{"charge", o.charge}, {"entries", entries}}, o, out);
    } else if (kind == "stabspace") {
        if (o.object.empty()) throw UsageError("--object is required");
        if (!m.has(o.object)) throw SchemaError(m.name() + " has no object '" + o.object + "'");
        RatCone d = stability_space(m, o.object);
        json j = cone_json(d);
        j["object"] = o.object;
        j["codim"] = m.rank() - d.dim();
        emit(j, o, out);
    } else if (kind == "thick") {
        auto v = need_v(o, m.rank());
        auto l = thick_label(m, v);
        emit(json{{"v", v.str()}, {"generators", ids_json(l.generators.ids)}, {"shifted", ids_json(l.shifted)}}, o,
             out);
    } else {
        throw UsageError("unknown query kind '" + kind + "'");
    }
    return ok;
}

int verify(const std::string& path, const Options& o, std::ostream& out) {
    auto doc = read_document(path);
    auto r = verify_document(doc, o.samples ? o.samples : 1000, o.seed);
    json j{{"document", path},
           {"pass", r.ok()},
           {"violations", r.violations},
           {"completeness_checked", r.completeness_checked},
           {"samples", r.samples},
           {"truncated", doc.fan.truncated()}};
    emit(j, o, out);
    return r.ok() ? ok : domain_error;
}

int render(const std::string& path, const Options& o, std::ostream& out) {
    auto doc = read_document(path);
    RenderStyle style = o.style.empty() ? RenderStyle{} : read_style(o.style);
    emit(render_svg(doc, style), o, out);
    return ok;
}

}  // namespace

std::filesystem::path resolve_dataset(const std::string& name_or_path) {
    std::filesystem::path p(name_or_path);
    if (std::filesystem::is_regular_file(p)) return p;
    std::vector<std::filesystem::path> dirs;
    if (const char* env = std::getenv("HEARTFAN_DATA"); env && *env) dirs.emplace_back(env);
    dirs.emplace_back(HEARTFAN_DEFAULT_DATA);
    for (const auto& d : dirs) {
        auto candidate = d / (name_or_path + ".json");
        if (std::filesystem::is_regular_file(candidate)) return candidate;
    }
    throw SchemaError("dataset '" + name_or_path + "' not found");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Heart fans, stability spaces and phase slices of finite category datasets", "heartfan"};
    app.require_subcommand(1);
    Options o;
    std::string kind, path;

    auto add_common = [&](CLI::App* s) {
        s->add_option("-o,--output", o.output, "write to a file instead of stdout");
    };
    auto add_family = [&](CLI::App* s) {
        s->add_option("--kind", o.family_kind,
                      "family: projective_line, kronecker, tube_rank2, semisimple_Z, elliptic_rational");
        s->add_option("--depth", o.depth, "cones per side of the truncation");
        s->add_option("--arrows", o.arrows, "number of Kronecker arrows");
        s->add_option("--slope-bound", o.slope_bound, "largest slope denominator (elliptic)");
    };

    auto* compute_cmd = app.add_subcommand("compute", "compute a fan, cofan or wall-and-chamber report");
    compute_cmd->add_option("what", kind, "heartfan | cofan | gfan | stabilityfan | walls | family")
        ->required()
        ->check(CLI::IsMember({"heartfan", "cofan", "gfan", "stabilityfan", "walls", "family"}));
    compute_cmd->add_option("--dataset", o.dataset, "dataset name or path");
    compute_cmd->add_option("--samples", o.samples, "samples per chamber (walls)");
    compute_cmd->add_option("--seed", o.seed, "sampling seed");
    compute_cmd->add_flag("--vectors", o.vectors, "gfan: report c- and g-vectors instead of the fan");
    add_family(compute_cmd);
    add_common(compute_cmd);

    auto* query_cmd = app.add_subcommand("query", "answer a pointwise question about a dataset");
    query_cmd->add_option("what", kind, "support | semistable | dkp | hearts | slice | stabspace | thick")
        ->required()
        ->check(CLI::IsMember({"support", "semistable", "dkp", "hearts", "slice", "stabspace", "thick"}));
    query_cmd->add_option("--dataset", o.dataset, "dataset name or path");
    query_cmd->add_option("--document", o.document, "fan document (support)");
    query_cmd->add_option("--v", o.v, "dual vector, comma separated rationals");
    query_cmd->add_option("--charge", o.charge, "charge as 're-row;im-row'");
    query_cmd->add_option("--object", o.object, "object id (stabspace)");
    add_family(query_cmd);
    add_common(query_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "check the fan axioms of a fan document");
    verify_cmd->add_option("document", path, "fan document")->required();
    verify_cmd->add_option("--samples", o.samples, "completeness samples");
    verify_cmd->add_option("--seed", o.seed, "sampling seed");
    add_common(verify_cmd);

    auto* render_cmd = app.add_subcommand("render", "draw a rank-2 fan document as SVG");
    render_cmd->add_option("document", path, "fan document")->required();
    render_cmd->add_option("--style", o.style, "style configuration (JSON)");
    add_common(render_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "heartfan: " << e.what() << "\n";
        return usage_error;
    }

    try {
        if (compute_cmd->parsed()) return compute(kind, o, out);
        if (query_cmd->parsed()) return query(kind, o, out, err);
        if (verify_cmd->parsed()) return verify(path, o, out);
        if (render_cmd->parsed()) return render(path, o, out);
    } catch (const UsageError& e) {
        err << "heartfan: " << e.what() << "\n";
        return usage_error;
    } catch (const std::exception& e) {
        err << "heartfan: " << e.what() << "\n";
        return domain_error;
    }
    return usage_error;
}

}  // namespace heartfan::cli
