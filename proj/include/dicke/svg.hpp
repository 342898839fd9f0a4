// svg.hpp — dependency-free SVG line plots (time on x, channels on y).
// Deterministic output: fixed canvas, fixed number formatting, no
// timestamps.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "dicke/errors.hpp"

namespace dicke {

struct SvgSeries {
    std::string label;
    const std::vector<double>* x = nullptr;
    const std::vector<double>* y = nullptr;
    bool dashed = false;
    std::string color = "#1f3d7a";
};

class SvgPlot {
  public:
    SvgPlot(std::string title, std::string x_label, std::string y_label)
        : title_(std::move(title)), x_label_(std::move(x_label)), y_label_(std::move(y_label)) {}

    void add_series(const SvgSeries& s) { series_.push_back(s); }

    void write(const std::string& path) const {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw IoError("svg: cannot open '" + path + "' for writing");
        f << render();
        if (!f) throw IoError("svg: write failure on '" + path + "'");
    }

    std::string render() const {
        constexpr double W = 900.0, H = 480.0;
        constexpr double ml = 70.0, mr = 20.0, mt = 40.0, mb = 50.0;
        double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
        bool first = true;
        for (const auto& s : series_) {
            for (std::size_t i = 0; i < s.x->size(); ++i) {
                const double xv = (*s.x)[i], yv = (*s.y)[i];
                if (first) {
                    xmin = xmax = xv;
                    ymin = ymax = yv;
                    first = false;
                }
                xmin = std::min(xmin, xv);
                xmax = std::max(xmax, xv);
                ymin = std::min(ymin, yv);
                ymax = std::max(ymax, yv);
            }
        }
        if (xmax == xmin) xmax = xmin + 1.0;
        if (ymax == ymin) ymax = ymin + 1.0;
        const double yr = ymax - ymin;
        ymin -= 0.05 * yr;
        ymax += 0.05 * yr;

        auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (W - ml - mr); };
        auto py = [&](double y) { return H - mb - (y - ymin) / (ymax - ymin) * (H - mt - mb); };
        auto num = [](double v) {
            char b[32];
            std::snprintf(b, sizeof(b), "%.6g", v);
            return std::string(b);
        };

        std::string out;
        out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"900\" height=\"480\" "
               "viewBox=\"0 0 900 480\">\n";
        out += "<rect x=\"0\" y=\"0\" width=\"900\" height=\"480\" fill=\"white\"/>\n";
        out += "<text x=\"450\" y=\"24\" text-anchor=\"middle\" font-size=\"16\" "
               "font-family=\"sans-serif\">" + title_ + "</text>\n";
        // axes box
        char buf[256];
        std::snprintf(buf, sizeof(buf),
                      "<rect x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\" "
                      "fill=\"none\" stroke=\"black\"/>\n",
                      ml, mt, W - ml - mr, H - mt - mb);
        out += buf;
        out += "<text x=\"" + num(ml) + "\" y=\"470\" font-size=\"12\" "
               "font-family=\"sans-serif\">" + num(xmin) + "</text>\n";
        out += "<text x=\"" + num(W - mr) + "\" y=\"470\" text-anchor=\"end\" "
               "font-size=\"12\" font-family=\"sans-serif\">" + num(xmax) + "</text>\n";
        out += "<text x=\"8\" y=\"" + num(H - mb) + "\" font-size=\"12\" "
               "font-family=\"sans-serif\">" + num(ymin) + "</text>\n";
        out += "<text x=\"8\" y=\"" + num(mt + 10) + "\" font-size=\"12\" "
               "font-family=\"sans-serif\">" + num(ymax) + "</text>\n";
        out += "<text x=\"450\" y=\"474\" text-anchor=\"middle\" font-size=\"13\" "
               "font-family=\"sans-serif\">" + x_label_ + "</text>\n";
        out += "<text x=\"16\" y=\"240\" transform=\"rotate(-90 16 240)\" "
               "text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\">" +
               y_label_ + "</text>\n";

        double ly = mt + 16.0;
        for (const auto& s : series_) {
            out += "<polyline fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"1.2\"";
            if (s.dashed) out += " stroke-dasharray=\"6,4\"";
            out += " points=\"";
            for (std::size_t i = 0; i < s.x->size(); ++i) {
                std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", px((*s.x)[i]), py((*s.y)[i]));
                out += buf;
            }
            out += "\"/>\n";
            out += "<text x=\"" + num(ml + 10) + "\" y=\"" + num(ly) +
                   "\" font-size=\"12\" font-family=\"sans-serif\" fill=\"" + s.color +
                   "\">" + s.label + (s.dashed ? " (dashed)" : "") + "</text>\n";
            ly += 16.0;
        }
        out += "</svg>\n";
        return out;
    }

  private:
    std::string title_, x_label_, y_label_;
    std::vector<SvgSeries> series_;
};

} // namespace dicke
