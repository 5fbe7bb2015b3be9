#pragma once

#include "heartfan/document.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace heartfan {

struct RenderStyle {
    int size = 400;     // side of the square plot area in pixels
    int margin = 20;
    std::string background = "#ffffff";
    std::vector<std::string> sector_fills{"#e6e6e6", "#d9d9d9", "#cccccc", "#bfbfbf", "#d4d4d4", "#c4c4c4"};
    std::string ray_color = "#000000";
    double ray_width = 1.5;
    double maximal_ray_width = 4.0;   // rays that are not a face of a full cone
    std::string axis_color = "#b0b0b0";
    double axis_width = 0.5;
    std::string limit_color = "#c0007a";
    std::string limit_dash = "6,4";
    int digits = 2;   // decimals in coordinates

    friend bool operator==(const RenderStyle&, const RenderStyle&) = default;
};

// Keys as in RenderStyle; missing keys keep their defaults, unknown keys are schema errors.
RenderStyle style_from_json(const nlohmann::json& j);
RenderStyle read_style(const std::filesystem::path& path);
nlohmann::json style_to_json(const RenderStyle& s);

// Rank-2 fans only (UnsupportedRank otherwise). Output is a pure function of its inputs.
std::string render_svg(const FanDocument& doc, const RenderStyle& style = {});

}  // namespace heartfan
