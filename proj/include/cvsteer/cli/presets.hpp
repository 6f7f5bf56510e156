// presets.hpp: figure parameter sets, stored as plain data rows

#pragma once

#include "cvsteer/channels.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace cvsteer::cli {

/// Swept axis. T is the decoherence fraction 1 - exp(-2 rate t) (rate = kappa, or g for gain).
enum class SweepVariable { Time, KappaTime, GainTime, Nbar, Squeezing, Fraction };

const char* to_string(SweepVariable v);
/// Accepts a, b, two.
Side parse_side(const std::string& token);
/// Accepts t, kt, gt, nbar, r, T. Throws InvalidArgument otherwise.
SweepVariable parse_sweep_variable(const std::string& token);

/// One curve of a figure.
struct SeriesRow {
    const char* channel; ///< loss, gain, thermal, laser, phase-sensitive
    const char* side;    ///< a, b, two
    double g;
    double kappa;
    double nbar;
    double M;
    double r;
};

struct FigurePreset {
    std::string id;
    std::string caption;
    SweepVariable variable;
    double from;
    double to;
    int points;
    std::vector<SeriesRow> series;
};

/// Figure 1 is a surface over (nbar, r) of exp(2 kappa t_c) for the thermal channel.
struct SurfacePreset {
    std::string id;
    std::string caption;
    double nbar_from, nbar_to;
    int nbar_points;
    double r_from, r_to;
    int r_points;
    double kappa;
};

const std::vector<FigurePreset>& figure_presets();
const SurfacePreset& figure1_preset();

/// nullptr when the id is unknown (figure 1 is not in this list).
const FigurePreset* find_preset(const std::string& id);

ChannelFamily family_of(const SeriesRow& row);
std::string series_label(const SeriesRow& row);

nlohmann::json to_json(const FigurePreset& p);
nlohmann::json to_json(const SurfacePreset& p);
/// Every preset, figure 1 first.
nlohmann::json presets_json();

} // namespace cvsteer::cli
