#pragma once

#include "heartfan/families.hpp"
#include "heartfan/fan.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>
#include "json.hpp"

namespace heartfan {

struct FanMetadata {
    std::string kind;     // heartfan, gfan, stabilityfan, family, ...
    std::string source;   // dataset name or family description
    std::optional<std::string> family;
    std::optional<int> depth;
    std::optional<int> arrows;
    std::vector<LimitRay> limits;
    std::vector<Integer> sequence;
    std::string dense_region;
    bool complete_expected = false;   // verify samples completeness when set and not truncated
    friend bool operator==(const FanMetadata&, const FanMetadata&) = default;
};

bool operator==(const LimitRay& a, const LimitRay& b);

// A fan with its face edges and metadata, in canonical order.
struct FanDocument {
    Fan fan;
    std::vector<std::pair<std::size_t, std::size_t>> edges;   // as stored; computed on construction
    FanMetadata meta;
    // Entries whose stored rays or lineality differ from the canonical form of the cone they define.
    std::vector<std::string> noncanonical;

    static FanDocument of(const Fan& f, FanMetadata meta);
    friend bool operator==(const FanDocument& a, const FanDocument& b) {
        return a.fan == b.fan && a.edges == b.edges && a.meta == b.meta;
    }
};

FanDocument family_document(const FamilyFan& ff);

nlohmann::json document_to_json(const FanDocument& doc);
FanDocument document_from_json(const nlohmann::json& j);   // throws SchemaError
FanDocument read_document(const std::filesystem::path& path);
std::string serialize(const FanDocument& doc);             // pretty JSON with trailing newline

nlohmann::json cofan_to_json(const Cofan& c);

struct VerifyReport {
    std::vector<std::string> violations;
    std::size_t samples = 0;
    bool completeness_checked = false;
    bool ok() const { return violations.empty(); }
};

VerifyReport verify_document(const FanDocument& doc, std::size_t samples = 1000, unsigned long seed = 0);

}  // namespace heartfan
