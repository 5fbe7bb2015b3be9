#include "heartfan/render.hpp"

#include "heartfan/dataset.hpp"
#include "heartfan/errors.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace heartfan {

using nlohmann::json;

RenderStyle style_from_json(const json& j) {
    if (!j.is_object()) throw SchemaError("style: expected an object");
    RenderStyle s;
    auto num = [&](const json& v, const std::string& k) {
        if (!v.is_number()) throw SchemaError("style: " + k + " must be a number");
        return v.get<double>();
    };
    auto integer = [&](const json& v, const std::string& k) {
        if (!v.is_number_integer()) throw SchemaError("style: " + k + " must be an integer");
        return v.get<int>();
    };
    auto str = [&](const json& v, const std::string& k) {
        if (!v.is_string()) throw SchemaError("style: " + k + " must be a string");
        return v.get<std::string>();
    };
    for (const auto& [k, v] : j.items()) {
        if (k == "size") s.size = integer(v, k);
        else if (k == "margin") s.margin = integer(v, k);
        else if (k == "background") s.background = str(v, k);
        else if (k == "sector_fills") {
            if (!v.is_array() || v.empty()) throw SchemaError("style: sector_fills must be a nonempty array");
            s.sector_fills.clear();
            for (const auto& x : v) s.sector_fills.push_back(str(x, k));
        } else if (k == "ray_color") s.ray_color = str(v, k);
        else if (k == "ray_width") s.ray_width = num(v, k);
        else if (k == "maximal_ray_width") s.maximal_ray_width = num(v, k);
        else if (k == "axis_color") s.axis_color = str(v, k);
        else if (k == "axis_width") s.axis_width = num(v, k);
        else if (k == "limit_color") s.limit_color = str(v, k);
        else if (k == "limit_dash") s.limit_dash = str(v, k);
        else if (k == "digits") s.digits = integer(v, k);
        else throw SchemaError("style: unknown key '" + k + "'");
    }
    if (s.size <= 0 || s.margin < 0) throw SchemaError("style: size must be positive and margin nonnegative");
    if (s.digits < 0 || s.digits > 6) throw SchemaError("style: digits must be between 0 and 6");
    return s;
}

RenderStyle read_style(const std::filesystem::path& path) { return style_from_json(read_json_file(path)); }

json style_to_json(const RenderStyle& s) {
    return json{{"size", s.size},
                {"margin", s.margin},
                {"background", s.background},
                {"sector_fills", s.sector_fills},
                {"ray_color", s.ray_color},
                {"ray_width", s.ray_width},
                {"maximal_ray_width", s.maximal_ray_width},
                {"axis_color", s.axis_color},
                {"axis_width", s.axis_width},
                {"limit_color", s.limit_color},
                {"limit_dash", s.limit_dash},
                {"digits", s.digits}};
}

namespace {

struct Point {
    Rational x, y;
};

Integer cross(const LatticeVector& a, const LatticeVector& b) { return a[0] * b[1] - a[1] * b[0]; }

// Where the ray through d leaves the box [-1,1]^2.
Point on_box(const LatticeVector& d) {
    Integer t = std::max(abs(d[0]), abs(d[1]));
    return {Rational(d[0], t), Rational(d[1], t)};
}

std::string fmt(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    std::string s = buf;
    if (s.find('.') != std::string::npos) {
        while (s.back() == '0') s.pop_back();
        if (s.back() == '.') s.pop_back();
    }
    if (s == "-0") s = "0";
    return s;
}

class Canvas {
public:
    explicit Canvas(const RenderStyle& s) : s_(s) {}

    std::string x(const Rational& v) const {
        Rational p = Rational(s_.margin) + (v + 1) / 2 * s_.size;
        p.canonicalize();
        return format_fixed(p, s_.digits);
    }
    std::string y(const Rational& v) const {
        Rational p = Rational(s_.margin) + (1 - v) / 2 * s_.size;
        p.canonicalize();
        return format_fixed(p, s_.digits);
    }
    std::string xy(const Point& p) const { return x(p.x) + " " + y(p.y); }
    std::string xd(double v) const { return fmt(s_.margin + (v + 1) / 2 * s_.size, s_.digits); }
    std::string yd(double v) const { return fmt(s_.margin + (1 - v) / 2 * s_.size, s_.digits); }

private:
    const RenderStyle& s_;
};

const std::vector<LatticeVector> corners{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}};

std::string escape(const std::string& t) {
    std::string out;
    for (char c : t) {
        if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else if (c == '&') out += "&amp;";
        else out += c;
    }
    return out;
}

std::string sector_path(const RatCone& c, const Canvas& cv) {
    const Point origin{0, 0};
    if (c.lineality().size() == 2) {
        std::string p = "M " + cv.xy({1, 1});
        for (std::size_t i = 1; i < 4; ++i) p += " L " + cv.xy(on_box(corners[i]));
        return p + " Z";
    }
    LatticeVector start, end;
    bool half = false;
    if (c.lineality().size() == 1) {
        half = true;
        const auto& l = c.lineality()[0];
        start = cross(l, c.rays().at(0)) > 0 ? l : -l;
        end = -start;
    } else {
        start = c.rays().at(0);
        end = c.rays().at(1);
        if (cross(start, end) < 0) std::swap(start, end);
    }
    std::string p = "M " + cv.xy(origin) + " L " + cv.xy(on_box(start));
    // corners in counterclockwise order starting after start
    std::size_t first = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& a = corners[i];
        const auto& prev = corners[(i + 3) % 4];
        if (cross(prev, start) >= 0 && cross(start, a) > 0) first = i;
    }
    for (std::size_t k = 0; k < 4; ++k) {
        const auto& cr = corners[(first + k) % 4];
        bool inside = cross(start, cr) > 0 && (half || cross(cr, end) > 0);
        if (!inside) break;
        p += " L " + cv.xy(on_box(cr));
    }
    p += " L " + cv.xy(on_box(end)) + " Z";
    return p;
}

}  // namespace

std::string render_svg(const FanDocument& doc, const RenderStyle& style) {
    if (doc.fan.rank() != 2)
        throw UnsupportedRank("rendering needs a rank-2 fan, got rank " + std::to_string(doc.fan.rank()));
    Canvas cv(style);
    const int total = style.size + 2 * style.margin;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << total << "\" height=\"" << total
        << "\" viewBox=\"0 0 " << total << " " << total << "\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << total << "\" height=\"" << total << "\" fill=\"" << style.background
        << "\"/>\n";
    out << "<g stroke=\"" << style.axis_color << "\" stroke-width=\"" << fmt(style.axis_width, 2) << "\">\n";
    out << "<line x1=\"" << cv.x(-1) << "\" y1=\"" << cv.y(0) << "\" x2=\"" << cv.x(1) << "\" y2=\"" << cv.y(0)
        << "\"/>\n";
    out << "<line x1=\"" << cv.x(0) << "\" y1=\"" << cv.y(-1) << "\" x2=\"" << cv.x(0) << "\" y2=\"" << cv.y(1)
        << "\"/>\n";
    out << "</g>\n";

    std::size_t k = 0;
    out << "<g stroke=\"none\">\n";
    for (const auto& [c, t] : doc.fan.entries()) {
        if (!c.is_full()) continue;
        out << "<path d=\"" << sector_path(c, cv) << "\" fill=\"" << style.sector_fills[k % style.sector_fills.size()]
            << "\">";
        std::string title = c.str();
        for (const auto& h : t.hearts) title += " " + h;
        out << "<title>" << escape(title) << "</title></path>\n";
        ++k;
    }
    out << "</g>\n";

    auto maximal = doc.fan.maximal();
    out << "<g stroke=\"" << style.ray_color << "\" stroke-linecap=\"round\">\n";
    for (const auto& c : doc.fan.cones()) {
        if (c.dim() != 1) continue;
        bool bold = std::find(maximal.begin(), maximal.end(), c) != maximal.end();
        std::string w = fmt(bold ? style.maximal_ray_width : style.ray_width, 2);
        LatticeVector a = c.rays().empty() ? c.lineality()[0] : c.rays()[0];
        Point from = c.rays().empty() ? on_box(-a) : Point{0, 0};
        Point to = on_box(a);
        out << "<line x1=\"" << cv.x(from.x) << "\" y1=\"" << cv.y(from.y) << "\" x2=\"" << cv.x(to.x) << "\" y2=\""
            << cv.y(to.y) << "\" stroke-width=\"" << w << "\"/>\n";
    }
    out << "</g>\n";

    bool any_limit = false;
    for (const auto& l : doc.meta.limits) any_limit = any_limit || !l.in_fan;
    if (any_limit) {
        out << "<g stroke=\"" << style.limit_color << "\" stroke-dasharray=\"" << style.limit_dash
            << "\" stroke-width=\"" << fmt(style.ray_width, 2) << "\">\n";
        for (const auto& l : doc.meta.limits) {
            if (l.in_fan) continue;
            double r = std::sqrt(l.radicand.get_d());
            double dx = l.base[0].get_d() + l.root[0].get_d() * r;
            double dy = l.base[1].get_d() + l.root[1].get_d() * r;
            double t = std::max(std::fabs(dx), std::fabs(dy));
            out << "<line x1=\"" << cv.x(0) << "\" y1=\"" << cv.y(0) << "\" x2=\"" << cv.xd(dx / t) << "\" y2=\""
                << cv.yd(dy / t) << "\"><title>limit " << escape(l.str()) << "</title></line>\n";
        }
        out << "</g>\n";
    }
    if (doc.fan.truncated())
        out << "<text x=\"" << style.margin << "\" y=\"" << total - style.margin / 4
            << "\" font-family=\"sans-serif\" font-size=\"10\">truncated</text>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace heartfan
