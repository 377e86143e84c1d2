#pragma once

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vec2.hpp"

namespace elastica::io {

// All numeric output goes through this: 15 significant digits, locale-free.
inline std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

inline std::string num(int v) { return std::to_string(v); }
inline std::string num(std::size_t v) { return std::to_string(v); }

// Minimal JSON emitter; enough for the flat records this project produces.
class JsonWriter {
  public:
    JsonWriter& begin() { return raw("{"); }
    JsonWriter& end() {
        out_ += "}";
        return *this;
    }
    JsonWriter& field(const std::string& key, double v) { return kv(key, num(v)); }
    JsonWriter& field(const std::string& key, int v) { return kv(key, num(v)); }
    JsonWriter& field(const std::string& key, bool v) { return kv(key, v ? "true" : "false"); }
    JsonWriter& field(const std::string& key, const std::string& v) {
        return kv(key, "\"" + v + "\"");
    }
    JsonWriter& field_raw(const std::string& key, const std::string& v) { return kv(key, v); }
    const std::string& str() const { return out_; }

  private:
    JsonWriter& raw(const std::string& s) {
        out_ += s;
        first_ = true;
        return *this;
    }
    JsonWriter& kv(const std::string& key, const std::string& v) {
        if (!first_) out_ += ",";
        first_ = false;
        out_ += "\"" + key + "\":" + v;
        return *this;
    }
    std::string out_;
    bool first_ = true;
};

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    os << content;
    if (!os) throw std::runtime_error("write failed: " + path);
}

// Fixed 800x600 canvas with margins and 5 labeled ticks per axis.
class SvgCanvas {
  public:
    SvgCanvas(double x_min, double x_max, double y_min, double y_max)
        : x0_(x_min), x1_(x_max), y0_(y_min), y1_(y_max) {
        body_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
                 "viewBox=\"0 0 800 600\">\n";
        body_ += "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
        axes();
    }

    void polyline(const std::vector<Vec2>& pts, const std::string& stroke,
                  double width) {
        body_ += "<polyline fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" +
                 num(width) + "\" points=\"";
        for (const auto& p : pts) body_ += num(px(p.x)) + "," + num(py(p.y)) + " ";
        body_ += "\"/>\n";
    }

    void circle(const Vec2& c, double r_px, const std::string& fill) {
        body_ += "<circle cx=\"" + num(px(c.x)) + "\" cy=\"" + num(py(c.y)) +
                 "\" r=\"" + num(r_px) + "\" fill=\"" + fill + "\"/>\n";
    }

    std::string finish() const { return body_ + "</svg>\n"; }

    double height_px() const { return kH - 2 * kM; }

  private:
    static constexpr double kW = 800.0, kH = 600.0, kM = 60.0;
    double px(double x) const { return kM + (x - x0_) / (x1_ - x0_) * (kW - 2 * kM); }
    double py(double y) const { return kH - kM - (y - y0_) / (y1_ - y0_) * (kH - 2 * kM); }

    void axes() {
        body_ += "<rect x=\"" + num(kM) + "\" y=\"" + num(kM) + "\" width=\"" +
                 num(kW - 2 * kM) + "\" height=\"" + num(kH - 2 * kM) +
                 "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
        for (int i = 0; i < 5; ++i) {
            const double fx = x0_ + (x1_ - x0_) * i / 4.0;
            const double fy = y0_ + (y1_ - y0_) * i / 4.0;
            body_ += "<line x1=\"" + num(px(fx)) + "\" y1=\"" + num(kH - kM) + "\" x2=\"" +
                     num(px(fx)) + "\" y2=\"" + num(kH - kM + 6) +
                     "\" stroke=\"black\" stroke-width=\"1\"/>\n";
            body_ += "<text x=\"" + num(px(fx)) + "\" y=\"" + num(kH - kM + 22) +
                     "\" font-size=\"13\" text-anchor=\"middle\">" + label(fx) + "</text>\n";
            body_ += "<line x1=\"" + num(kM - 6) + "\" y1=\"" + num(py(fy)) + "\" x2=\"" +
                     num(kM) + "\" y2=\"" + num(py(fy)) +
                     "\" stroke=\"black\" stroke-width=\"1\"/>\n";
            body_ += "<text x=\"" + num(kM - 10) + "\" y=\"" + num(py(fy) + 4) +
                     "\" font-size=\"13\" text-anchor=\"end\">" + label(fy) + "</text>\n";
        }
    }

    static std::string label(double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.4g", v);
        return buf;
    }

    double x0_, x1_, y0_, y1_;
    std::string body_;
};

}  // namespace elastica::io
