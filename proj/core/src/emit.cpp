#include "qcent/emit.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "qcent/errors.hpp"

namespace qcent {

namespace {

void require_rows(const EntropySeries& s) {
    if (s.size() == 0)
        throw ValidationError("emit.empty", "series has no samples");
}

void write_file(const std::string& text, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("emit.open", "cannot open " + path);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out) throw IoError("emit.write", "short write to " + path);
}

// Tick spacing of roughly range/6, snapped to 1/2/5 decades.
double nice_step(double range) {
    const double raw = range / 6.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double r = raw / mag;
    if (r < 1.5) return mag;
    if (r < 3.0) return 2.0 * mag;
    if (r < 7.0) return 5.0 * mag;
    return 10.0 * mag;
}

std::string fixed2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

}  // namespace

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string csv_string(const EntropySeries& s) {
    require_rows(s);
    std::string out = "t,S_L_q,S_V_q,S_L_cl,S_V_cl,norm_drift,energy_drift,oor_frac\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += format_double(s.times[i]);
        out += ',';
        out += format_double(s.sl_quantum[i]);
        out += ',';
        out += format_double(s.sv_quantum[i]);
        out += ',';
        out += format_double(s.sl_classical[i]);
        out += ',';
        out += format_double(s.sv_classical[i]);
        out += ',';
        out += format_double(s.norm_drift[i]);
        out += ',';
        out += format_double(
            std::max(s.energy_drift_quantum[i], s.energy_drift_classical[i]));
        out += ',';
        out += format_double(s.oor_fraction[i]);
        out += '\n';
    }
    return out;
}

void write_csv(const EntropySeries& s, const std::string& path) {
    write_file(csv_string(s), path);
}

std::string svg_string(const EntropySeries& s, const std::string& title) {
    require_rows(s);
    const double width = 960, height = 600;
    const double ml = 70, mr = 24, mt = 42, mb = 52;
    const double pw = width - ml - mr, ph = height - mt - mb;

    const auto& curves = {&s.sl_quantum, &s.sv_quantum, &s.sl_classical,
                          &s.sv_classical};
    double ylo = 0.0, yhi = 1e-12;
    for (const auto* c : curves)
        for (const double v : *c) {
            ylo = std::min(ylo, v);
            yhi = std::max(yhi, v);
        }
    const double pad = 0.05 * (yhi - ylo);
    ylo -= pad;
    yhi += pad;
    const double xhi = std::max(s.times.back(), 1e-12);

    const auto px = [&](double t) { return ml + pw * t / xhi; };
    const auto py = [&](double v) {
        return mt + ph * (1.0 - (v - ylo) / (yhi - ylo));
    };

    std::string svg =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"960\" height=\"600\" "
        "viewBox=\"0 0 960 600\" font-family=\"sans-serif\">\n"
        "<rect width=\"960\" height=\"600\" fill=\"white\"/>\n";
    svg += "<text x=\"" + fixed2(ml) + "\" y=\"26\" font-size=\"17\">" + title +
           "</text>\n";

    // Gridlines and tick labels.
    const double ystep = nice_step(yhi - ylo);
    for (double v = std::ceil(ylo / ystep) * ystep; v <= yhi + 1e-12 * ystep;
         v += ystep) {
        const double y = py(v);
        svg += "<line x1=\"" + fixed2(ml) + "\" y1=\"" + fixed2(y) + "\" x2=\"" +
               fixed2(ml + pw) + "\" y2=\"" + fixed2(y) +
               "\" stroke=\"#dddddd\"/>\n";
        svg += "<text x=\"" + fixed2(ml - 8) + "\" y=\"" + fixed2(y + 4) +
               "\" font-size=\"12\" text-anchor=\"end\">" + tick_label(v) +
               "</text>\n";
    }
    const double xstep = nice_step(xhi);
    for (double t = 0.0; t <= xhi + 1e-12 * xstep; t += xstep) {
        const double x = px(t);
        svg += "<line x1=\"" + fixed2(x) + "\" y1=\"" + fixed2(mt) + "\" x2=\"" +
               fixed2(x) + "\" y2=\"" + fixed2(mt + ph) +
               "\" stroke=\"#dddddd\"/>\n";
        svg += "<text x=\"" + fixed2(x) + "\" y=\"" + fixed2(mt + ph + 18) +
               "\" font-size=\"12\" text-anchor=\"middle\">" + tick_label(t) +
               "</text>\n";
    }
    svg += "<rect x=\"" + fixed2(ml) + "\" y=\"" + fixed2(mt) + "\" width=\"" +
           fixed2(pw) + "\" height=\"" + fixed2(ph) +
           "\" fill=\"none\" stroke=\"#333333\"/>\n";
    svg += "<text x=\"" + fixed2(ml + pw / 2) + "\" y=\"" +
           fixed2(height - 14) +
           "\" font-size=\"14\" text-anchor=\"middle\">t</text>\n";
    svg += "<text x=\"20\" y=\"" + fixed2(mt + ph / 2) +
           "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 "
           "20 " +
           fixed2(mt + ph / 2) + ")\">entropy</text>\n";

    struct Line {
        const std::vector<double>* data;
        const char* color;
        const char* label;
    };
    const Line lines[] = {
        {&s.sv_quantum, "#111111", "S_V quantum"},
        {&s.sl_quantum, "#1f77b4", "S_L quantum"},
        {&s.sv_classical, "#d62728", "S_V classical"},
        {&s.sl_classical, "#ff7f0e", "S_L classical"},
    };
    for (const Line& ln : lines) {
        svg += "<polyline fill=\"none\" stroke=\"";
        svg += ln.color;
        svg += "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.size(); ++i) {
            svg += fixed2(px(s.times[i]));
            svg += ',';
            svg += fixed2(py((*ln.data)[i]));
            svg += ' ';
        }
        svg += "\"/>\n";
    }
    double ly = mt + 16;
    for (const Line& ln : lines) {
        svg += "<line x1=\"" + fixed2(ml + 12) + "\" y1=\"" + fixed2(ly - 4) +
               "\" x2=\"" + fixed2(ml + 40) + "\" y2=\"" + fixed2(ly - 4) +
               "\" stroke=\"";
        svg += ln.color;
        svg += "\" stroke-width=\"1.5\"/>\n";
        svg += "<text x=\"" + fixed2(ml + 46) + "\" y=\"" + fixed2(ly) +
               "\" font-size=\"12\">";
        svg += ln.label;
        svg += "</text>\n";
        ly += 17;
    }
    svg += "</svg>\n";
    return svg;
}

void write_plot(const EntropySeries& s, const std::string& title,
                const std::string& path) {
    write_file(svg_string(s, title), path);
}

}  // namespace qcent
