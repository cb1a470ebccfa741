#pragma once

#include <iosfwd>
#include <string>

#include "dagtopo/fit.hpp"
#include "dagtopo/histogram.hpp"

namespace dagtopo {

// Axis scale hints for plots; reals in text formats carry >= 12 significant
// digits so counts round-trip exactly.
enum class AxisScale { Lin, Log };

struct PlotOptions {
    AxisScale x = AxisScale::Lin;
    AxisScale y = AxisScale::Lin;
    std::string title;
    std::string x_label = "value";
    std::string y_label = "count";
};

// Parses "lin-lin", "log-lin", "lin-log", "log-log" (x-y order).
bool parse_scale(const std::string& text, AxisScale& x, AxisScale& y);

std::string format_real(double v);  // %.12g

// CSV: header `value,count,ccdf`, ascending values.
void write_histogram_csv(const Histogram& h, std::ostream& out);
Histogram read_histogram_csv(std::istream& in);  // ccdf column ignored

// CSV: header `dmin,alpha,ntail`; undefined alpha is an empty cell.
void write_sweep_csv(const AlphaSweep& sweep, std::ostream& out);
AlphaSweep read_sweep_csv(std::istream& in);

// CSV: header `value,weight`.
void write_weighted_csv(const WeightedDistribution& d, std::ostream& out);
WeightedDistribution read_weighted_csv(std::istream& in);

// Self-contained SVG: raw histogram (points) plus CCDF (step line).
void write_histogram_svg(const Histogram& h, const PlotOptions& opts,
                         std::ostream& out);

// Self-contained SVG of an alpha sweep; log-lin is the conventional scale.
void write_sweep_svg(const AlphaSweep& sweep, const PlotOptions& opts,
                     std::ostream& out);

// Convenience wrappers writing to a path (FormatError on failure).
void save_histogram_csv(const Histogram& h, const std::string& path);
void save_sweep_csv(const AlphaSweep& sweep, const std::string& path);
void save_weighted_csv(const WeightedDistribution& d, const std::string& path);
void save_histogram_svg(const Histogram& h, const PlotOptions& opts,
                        const std::string& path);
void save_sweep_svg(const AlphaSweep& sweep, const PlotOptions& opts,
                    const std::string& path);

}  // namespace dagtopo
