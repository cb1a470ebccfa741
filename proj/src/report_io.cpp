#include "dagtopo/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include "dagtopo/errors.hpp"

namespace dagtopo {

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

bool parse_scale(const std::string& text, AxisScale& x, AxisScale& y) {
    auto dash = text.find('-');
    if (dash == std::string::npos) return false;
    auto one = text.substr(0, dash);
    auto two = text.substr(dash + 1);
    auto parse_axis = [](const std::string& s, AxisScale& a) {
        if (s == "lin") a = AxisScale::Lin;
        else if (s == "log") a = AxisScale::Log;
        else return false;
        return true;
    };
    return parse_axis(one, x) && parse_axis(two, y);
}

void write_histogram_csv(const Histogram& h, std::ostream& out) {
    out << "value,count,ccdf\n";
    auto cc = h.ccdf();
    std::size_t i = 0;
    for (const auto& [v, c] : h.counts()) {
        out << v << ',' << c << ',' << cc[i++].second << '\n';
    }
}

Histogram read_histogram_csv(std::istream& in) {
    Histogram h;
    std::string line;
    if (!std::getline(in, line)) return h;  // empty file -> empty histogram
    std::uint64_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        unsigned long long value = 0, count = 0;
        if (std::sscanf(line.c_str(), "%llu,%llu", &value, &count) != 2)
            throw FormatError("bad histogram CSV line " + std::to_string(line_no));
        h.add(value, count);
    }
    return h;
}

void write_sweep_csv(const AlphaSweep& sweep, std::ostream& out) {
    out << "dmin,alpha,ntail\n";
    for (const auto& e : sweep.entries) {
        out << e.d_min << ',';
        if (e.defined()) out << format_real(e.alpha);
        out << ',' << e.n_tail << '\n';
    }
}

AlphaSweep read_sweep_csv(std::istream& in) {
    AlphaSweep sweep;
    std::string line;
    if (!std::getline(in, line)) return sweep;
    std::uint64_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto c1 = line.find(',');
        auto c2 = line.find(',', c1 == std::string::npos ? c1 : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw FormatError("bad sweep CSV line " + std::to_string(line_no));
        AlphaEntry e;
        e.d_min = std::stoull(line.substr(0, c1));
        std::string alpha = line.substr(c1 + 1, c2 - c1 - 1);
        e.alpha = alpha.empty() ? std::nan("") : std::stod(alpha);
        e.n_tail = std::stoull(line.substr(c2 + 1));
        sweep.entries.push_back(e);
    }
    return sweep;
}

void write_weighted_csv(const WeightedDistribution& d, std::ostream& out) {
    out << "value,weight\n";
    for (const auto& [v, w] : d.weights())
        out << v << ',' << format_real(w) << '\n';
}

WeightedDistribution read_weighted_csv(std::istream& in) {
    WeightedDistribution d;
    std::string line;
    if (!std::getline(in, line)) return d;
    std::uint64_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        unsigned long long value = 0;
        double weight = 0.0;
        if (std::sscanf(line.c_str(), "%llu,%lf", &value, &weight) != 2)
            throw FormatError("bad weighted CSV line " + std::to_string(line_no));
        d.add(value, weight);
    }
    return d;
}

// ---------------------------------------------------------------------------
// SVG plots
// ---------------------------------------------------------------------------

namespace {

constexpr int kWidth = 720, kHeight = 480;
constexpr int kMarginL = 70, kMarginR = 20, kMarginT = 40, kMarginB = 55;

struct AxisMap {
    AxisScale scale;
    double lo, hi;       // data range (already padded, log-safe)
    double px0, px1;     // pixel range

    double operator()(double v) const {
        double t;
        if (scale == AxisScale::Log) {
            t = (std::log10(v) - std::log10(lo)) /
                (std::log10(hi) - std::log10(lo));
        } else {
            t = (v - lo) / (hi - lo);
        }
        return px0 + t * (px1 - px0);
    }
};

void xml_escape(std::ostream& out, const std::string& s) {
    for (char c : s) {
        switch (c) {
            case '<': out << "&lt;"; break;
            case '>': out << "&gt;"; break;
            case '&': out << "&amp;"; break;
            default: out << c;
        }
    }
}

// Tick positions: powers of ten on log axes, ~6 even steps on linear ones.
std::vector<double> make_ticks(AxisScale scale, double lo, double hi) {
    std::vector<double> ticks;
    if (scale == AxisScale::Log) {
        int e0 = static_cast<int>(std::floor(std::log10(lo)));
        int e1 = static_cast<int>(std::ceil(std::log10(hi)));
        for (int e = e0; e <= e1; ++e) {
            double t = std::pow(10.0, e);
            if (t >= lo * 0.999 && t <= hi * 1.001) ticks.push_back(t);
        }
        if (ticks.empty()) ticks = {lo, hi};
    } else {
        double span = hi - lo;
        if (span <= 0) return {lo};
        double step = std::pow(10.0, std::floor(std::log10(span / 5.0)));
        while (span / step > 8) step *= 2;
        double start = std::ceil(lo / step) * step;
        for (double t = start; t <= hi + step * 0.01; t += step) ticks.push_back(t);
    }
    return ticks;
}

std::string tick_label(double v) {
    if (v != 0.0 && (std::abs(v) >= 1e5 || std::abs(v) < 1e-3)) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "1e%d",
                      static_cast<int>(std::round(std::log10(std::abs(v)))));
        return buf;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

void begin_svg(std::ostream& out, const std::string& title) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
        << kHeight << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!title.empty()) {
        out << "<text x=\"" << kWidth / 2
            << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"16\">";
        xml_escape(out, title);
        out << "</text>\n";
    }
}

void draw_axes(std::ostream& out, const AxisMap& xm, const AxisMap& ym,
               const PlotOptions& opts) {
    out << "<line x1=\"" << kMarginL << "\" y1=\"" << kHeight - kMarginB
        << "\" x2=\"" << kWidth - kMarginR << "\" y2=\"" << kHeight - kMarginB
        << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << kMarginL << "\" y1=\"" << kMarginT << "\" x2=\""
        << kMarginL << "\" y2=\"" << kHeight - kMarginB
        << "\" stroke=\"black\"/>\n";
    for (double t : make_ticks(xm.scale, xm.lo, xm.hi)) {
        double px = xm(t);
        out << "<line x1=\"" << px << "\" y1=\"" << kHeight - kMarginB
            << "\" x2=\"" << px << "\" y2=\"" << kHeight - kMarginB + 5
            << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << px << "\" y=\"" << kHeight - kMarginB + 18
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"11\">"
            << tick_label(t) << "</text>\n";
    }
    for (double t : make_ticks(ym.scale, ym.lo, ym.hi)) {
        double py = ym(t);
        out << "<line x1=\"" << kMarginL - 5 << "\" y1=\"" << py << "\" x2=\""
            << kMarginL << "\" y2=\"" << py << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << kMarginL - 8 << "\" y=\"" << py + 4
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
               "font-size=\"11\">"
            << tick_label(t) << "</text>\n";
    }
    out << "<text x=\"" << (kMarginL + kWidth - kMarginR) / 2 << "\" y=\""
        << kHeight - 12
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"13\">";
    xml_escape(out, opts.x_label);
    out << "</text>\n";
    out << "<text x=\"18\" y=\"" << (kMarginT + kHeight - kMarginB) / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"13\" transform=\"rotate(-90 18 "
        << (kMarginT + kHeight - kMarginB) / 2 << ")\">";
    xml_escape(out, opts.y_label);
    out << "</text>\n";
}

AxisMap make_x_map(AxisScale scale, double lo, double hi) {
    if (scale == AxisScale::Log && lo <= 0) lo = 0.5;  // keep 0 plottable
    if (hi <= lo) hi = lo + 1;
    return {scale, lo, hi, double(kMarginL), double(kWidth - kMarginR)};
}

AxisMap make_y_map(AxisScale scale, double lo, double hi) {
    if (scale == AxisScale::Log && lo <= 0) lo = 0.5;
    if (scale == AxisScale::Lin) lo = std::min(lo, 0.0);
    if (hi <= lo) hi = lo + 1;
    return {scale, lo, hi, double(kHeight - kMarginB), double(kMarginT)};
}

}  // namespace

void write_histogram_svg(const Histogram& h, const PlotOptions& opts,
                         std::ostream& out) {
    begin_svg(out, opts.title);
    if (h.empty()) {
        out << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight / 2
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\">empty "
               "histogram</text>\n</svg>\n";
        return;
    }
    auto cc = h.ccdf();
    double xlo = static_cast<double>(h.min_key());
    double xhi = static_cast<double>(h.max_key());
    double yhi = static_cast<double>(h.total());
    AxisMap xm = make_x_map(opts.x, xlo, xhi);
    AxisMap ym = make_y_map(opts.y, 1.0, yhi);
    draw_axes(out, xm, ym, opts);

    auto clamp_x = [&](double v) {
        return std::max(xm.lo, std::min(xm.hi, v));
    };
    // CCDF as a step line.
    out << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" "
           "points=\"";
    double prev_y = -1;
    for (const auto& [v, n] : cc) {
        double px = xm(clamp_x(static_cast<double>(v)));
        double py = ym(static_cast<double>(n));
        if (prev_y >= 0) out << px << ',' << prev_y << ' ';
        out << px << ',' << py << ' ';
        prev_y = py;
    }
    out << "\"/>\n";
    // Raw histogram as points.
    for (const auto& [v, c] : h.counts()) {
        double px = xm(clamp_x(static_cast<double>(v)));
        double py = ym(static_cast<double>(c));
        out << "<circle cx=\"" << px << "\" cy=\"" << py
            << "\" r=\"2.2\" fill=\"#d62728\"/>\n";
    }
    out << "<text x=\"" << kWidth - kMarginR - 8 << "\" y=\"" << kMarginT + 14
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\" "
           "fill=\"#d62728\">raw</text>\n";
    out << "<text x=\"" << kWidth - kMarginR - 8 << "\" y=\"" << kMarginT + 30
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\" "
           "fill=\"#1f77b4\">ccdf</text>\n";
    out << "</svg>\n";
}

void write_sweep_svg(const AlphaSweep& sweep, const PlotOptions& opts,
                     std::ostream& out) {
    begin_svg(out, opts.title);
    std::vector<const AlphaEntry*> defined;
    for (const auto& e : sweep.entries)
        if (e.defined()) defined.push_back(&e);
    if (defined.empty()) {
        out << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight / 2
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\">no "
               "defined estimates</text>\n</svg>\n";
        return;
    }
    double xlo = static_cast<double>(defined.front()->d_min);
    double xhi = static_cast<double>(defined.back()->d_min);
    double ylo = defined.front()->alpha, yhi = ylo;
    for (const auto* e : defined) {
        ylo = std::min(ylo, e->alpha);
        yhi = std::max(yhi, e->alpha);
    }
    AxisMap xm = make_x_map(opts.x, xlo, xhi);
    AxisMap ym = make_y_map(opts.y, ylo - 0.1, yhi + 0.1);
    draw_axes(out, xm, ym, opts);
    out << "<polyline fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"1.5\" "
           "points=\"";
    for (const auto* e : defined)
        out << xm(static_cast<double>(e->d_min)) << ',' << ym(e->alpha) << ' ';
    out << "\"/>\n";
    for (const auto* e : defined)
        out << "<circle cx=\"" << xm(static_cast<double>(e->d_min)) << "\" cy=\""
            << ym(e->alpha) << "\" r=\"2.2\" fill=\"#2ca02c\"/>\n";
    out << "</svg>\n";
}

namespace {

template <typename Fn>
void save_to(const std::string& path, Fn&& fn) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write " + path);
    fn(out);
    out.close();
    if (!out) throw FormatError("short write to " + path);
}

}  // namespace

void save_histogram_csv(const Histogram& h, const std::string& path) {
    save_to(path, [&](std::ostream& o) { write_histogram_csv(h, o); });
}
void save_sweep_csv(const AlphaSweep& s, const std::string& path) {
    save_to(path, [&](std::ostream& o) { write_sweep_csv(s, o); });
}
void save_weighted_csv(const WeightedDistribution& d, const std::string& path) {
    save_to(path, [&](std::ostream& o) { write_weighted_csv(d, o); });
}
void save_histogram_svg(const Histogram& h, const PlotOptions& opts,
                        const std::string& path) {
    save_to(path, [&](std::ostream& o) { write_histogram_svg(h, opts, o); });
}
void save_sweep_svg(const AlphaSweep& s, const PlotOptions& opts,
                    const std::string& path) {
    save_to(path, [&](std::ostream& o) { write_sweep_svg(s, opts, o); });
}

}  // namespace dagtopo
