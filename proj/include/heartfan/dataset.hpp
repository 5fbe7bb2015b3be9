#pragma once

#include "heartfan/category.hpp"

#include <filesystem>
#include "json.hpp"

namespace heartfan {

// Dataset documents: JSON with keys name, rank, simples, indecs ({id: {class: [..]}}),
// ses ([{sub, mid, quot}]), hom ([[a, b], ..]) and optionally approximate, family,
// null_witnesses, description. Integers only.
ModelData parse_dataset(const nlohmann::json& doc);
nlohmann::json dataset_to_json(const ModelData& data);

CategoryModel load_model(const nlohmann::json& doc);
CategoryModel load_model_file(const std::filesystem::path& path);

nlohmann::json read_json_file(const std::filesystem::path& path);

// Integer vectors from JSON arrays; rejects floats and non-numbers.
LatticeVector json_to_vector(const nlohmann::json& j, const std::string& what);
nlohmann::json vector_to_json(const LatticeVector& v);

}  // namespace heartfan
