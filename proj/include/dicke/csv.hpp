// csv.hpp — deterministic CSV emission and parsing for TimeSeries.
// Floating point is serialized with 17 significant digits ("%.17g") so
// values round-trip bit-exactly; comma separator, LF line endings, no
// locale dependence.

#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dicke/errors.hpp"
#include "dicke/timeseries.hpp"

namespace dicke {

inline std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string to_csv(const TimeSeries& series) {
    if (series.size() == 0) throw IoError("emit_csv: empty series");
    std::string out;
    const auto& names = series.channel_names();
    for (std::size_t c = 0; c < names.size(); ++c) {
        if (c) out += ',';
        out += names[c];
    }
    out += '\n';
    std::vector<const std::vector<double>*> cols;
    cols.reserve(names.size());
    for (const auto& n : names) cols.push_back(&series.channel(n));
    for (std::size_t r = 0; r < series.size(); ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const double v = (*cols[c])[r];
            if (!std::isfinite(v))
                throw IoError("emit_csv: non-finite value in channel '" + names[c] + "'");
            if (c) out += ',';
            out += format_double(v);
        }
        out += '\n';
    }
    return out;
}

inline void emit_csv(const TimeSeries& series, const std::string& path) {
    const std::string body = to_csv(series);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("emit_csv: cannot open '" + path + "' for writing");
    f << body;
    if (!f) throw IoError("emit_csv: write failure on '" + path + "'");
}

inline TimeSeries read_csv(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("read_csv: cannot open '" + path + "'");
    std::string line;
    if (!std::getline(f, line)) throw IoError("read_csv: empty file '" + path + "'");
    std::vector<std::string> names;
    {
        std::stringstream ss(line);
        std::string tok;
        while (std::getline(ss, tok, ',')) names.push_back(tok);
    }
    TimeSeries series(names);
    std::size_t t_col = names.size();
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == "t") t_col = i;
    double t_index = 0.0;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string tok;
        while (std::getline(ss, tok, ',')) row.push_back(std::stod(tok));
        if (row.size() != names.size())
            throw IoError("read_csv: ragged row in '" + path + "'");
        const double t = t_col < names.size() ? row[t_col] : t_index;
        series.push_sample(t, row);
        t_index += 1.0;
    }
    return series;
}

} // namespace dicke
