#include "heartfan/dataset.hpp"

#include "heartfan/errors.hpp"

#include <fstream>

namespace heartfan {

namespace {

using nlohmann::json;

const json& field(const json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(where + ": missing field '" + key + "'");
    return *it;
}

std::string as_string(const json& j, const std::string& what) {
    if (!j.is_string()) throw SchemaError(what + ": expected a string");
    return j.get<std::string>();
}

std::vector<std::string> as_strings(const json& j, const std::string& what) {
    if (!j.is_array()) throw SchemaError(what + ": expected an array of ids");
    std::vector<std::string> out;
    for (const auto& x : j) out.push_back(as_string(x, what));
    return out;
}

long as_int(const json& j, const std::string& what) {
    if (!j.is_number_integer()) throw SchemaError(what + ": expected an integer");
    return j.get<long>();
}

std::pair<std::string, std::string> as_pair(const json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 2) throw SchemaError(what + ": expected a pair of ids");
    return {as_string(j[0], what), as_string(j[1], what)};
}

}  // namespace

LatticeVector json_to_vector(const json& j, const std::string& what) {
    if (!j.is_array()) throw SchemaError(what + ": expected an integer array");
    std::vector<Integer> c;
    for (const auto& x : j) {
        if (x.is_number_integer()) c.emplace_back(x.get<long>());
        else if (x.is_string()) {
            try {
                c.emplace_back(x.get<std::string>(), 10);
            } catch (const std::invalid_argument&) {
                throw SchemaError(what + ": '" + x.get<std::string>() + "' is not an integer");
            }
        } else {
            throw SchemaError(what + ": entries must be integers");
        }
    }
    return LatticeVector(std::move(c));
}

json vector_to_json(const LatticeVector& v) {
    json out = json::array();
    for (const auto& x : v.coords()) {
        if (x.fits_slong_p()) out.push_back(x.get_si());
        else out.push_back(x.get_str());
    }
    return out;
}

ModelData parse_dataset(const json& doc) {
    if (!doc.is_object()) throw SchemaError("dataset: expected a JSON object");
    static const std::set<std::string> known{"name", "rank", "simples", "indecs", "ses", "hom",
                                             "approximate", "family", "null_witnesses", "description"};
    for (const auto& [k, v] : doc.items())
        if (!known.count(k)) throw SchemaError("dataset: unknown field '" + k + "'");
    ModelData d;
    d.name = as_string(field(doc, "name", "dataset"), "name");
    const std::string where = "dataset " + d.name;
    long rank = as_int(field(doc, "rank", where), where + " rank");
    if (rank <= 0) throw SchemaError(where + ": rank must be positive");
    d.rank = static_cast<std::size_t>(rank);
    d.simples = as_strings(field(doc, "simples", where), where + " simples");
    const json& indecs = field(doc, "indecs", where);
    if (!indecs.is_object()) throw SchemaError(where + ": indecs must be an object");
    for (const auto& [id, obj] : indecs.items()) {
        if (!obj.is_object()) throw SchemaError(where + ": indec " + id + " must be an object");
        d.classes.emplace(id, json_to_vector(field(obj, "class", where + " indec " + id), where + " class of " + id));
    }
    const json& ses = field(doc, "ses", where);
    if (!ses.is_array()) throw SchemaError(where + ": ses must be an array");
    for (const auto& e : ses) {
        if (!e.is_object()) throw SchemaError(where + ": ses entries must be objects");
        d.ses.push_back({as_strings(field(e, "sub", where + " ses"), where + " ses sub"),
                         as_string(field(e, "mid", where + " ses"), where + " ses mid"),
                         as_strings(field(e, "quot", where + " ses"), where + " ses quot")});
    }
    const json& hom = field(doc, "hom", where);
    if (!hom.is_array()) throw SchemaError(where + ": hom must be an array");
    for (const auto& h : hom) d.hom.push_back(as_pair(h, where + " hom"));
    if (auto it = doc.find("approximate"); it != doc.end()) {
        if (!it->is_boolean()) throw SchemaError(where + ": approximate must be a boolean");
        d.approximate = it->get<bool>();
    }
    if (auto it = doc.find("family"); it != doc.end()) {
        FamilyTag f;
        f.kind = as_string(field(*it, "kind", where + " family"), where + " family kind");
        if (it->contains("arrows")) f.arrows = static_cast<int>(as_int((*it)["arrows"], where + " family arrows"));
        if (it->contains("depth")) f.depth = static_cast<int>(as_int((*it)["depth"], where + " family depth"));
        d.family = f;
    }
    if (auto it = doc.find("null_witnesses"); it != doc.end()) {
        if (!it->is_array()) throw SchemaError(where + ": null_witnesses must be an array");
        for (const auto& p : *it) d.null_witnesses.push_back(as_pair(p, where + " null_witnesses"));
    }
    return d;
}

json dataset_to_json(const ModelData& d) {
    json doc;
    doc["name"] = d.name;
    doc["rank"] = d.rank;
    doc["simples"] = d.simples;
    json indecs = json::object();
    for (const auto& [id, c] : d.classes) indecs[id] = {{"class", vector_to_json(c)}};
    doc["indecs"] = indecs;
    json ses = json::array();
    for (const auto& e : d.ses) ses.push_back({{"sub", e.sub}, {"mid", e.mid}, {"quot", e.quot}});
    doc["ses"] = ses;
    json hom = json::array();
    for (const auto& [a, b] : d.hom) hom.push_back({a, b});
    doc["hom"] = hom;
    if (d.approximate) doc["approximate"] = true;
    if (d.family) doc["family"] = {{"kind", d.family->kind}, {"arrows", d.family->arrows}, {"depth", d.family->depth}};
    if (!d.null_witnesses.empty()) {
        json w = json::array();
        for (const auto& [a, b] : d.null_witnesses) w.push_back({a, b});
        doc["null_witnesses"] = w;
    }
    return doc;
}

CategoryModel load_model(const json& doc) { return CategoryModel(parse_dataset(doc)); }

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError(path.string() + ": " + e.what());
    }
}

CategoryModel load_model_file(const std::filesystem::path& path) { return load_model(read_json_file(path)); }

}  // namespace heartfan
