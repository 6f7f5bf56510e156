// sweep.hpp: one-dimensional parameter sweeps and the figure-1 surface

#pragma once

#include "cvsteer/channels.hpp"
#include "cvsteer/cli/presets.hpp"
#include "cvsteer/measures.hpp"
#include "cvsteer/thresholds.hpp"

#include <json.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace cvsteer::cli {

struct SweepSpec {
    std::string series;                 ///< label copied into every record
    std::optional<ChannelFamily> family; ///< empty = identity channel
    double r = 0.0;
    double t = 0.0; ///< fixed time when sweeping nbar or r
    SweepVariable variable = SweepVariable::Time;
    double from = 0.0;
    double to = 0.0;
    int points = 2; ///< >= 2, or 1 when from == to
};

struct Record {
    double x = 0.0;
    std::string series;
    double t = 0.0;
    double r = 0.0;
    SteeringReport report;
};

/// kappa, or g for the gain channel (laser: kappa unless zero). Unit of kt / gt / T columns.
double natural_rate(const ChannelFamily& family);

/// Evolution time for a value of a time-like sweep variable.
double time_for(SweepVariable v, double x, const std::optional<ChannelFamily>& family);

/// Evenly spaced values; throws InvalidArgument for non-finite ranges or too few points.
std::vector<double> sweep_values(double from, double to, int points);

std::vector<Record> run_sweep(const SweepSpec& spec);
std::vector<Record> run_figure(const FigurePreset& preset);

/// Column order: variable, series, t, r, report quantities, verdict flags.
std::vector<std::string> record_columns(SweepVariable v);
void write_csv(std::ostream& os, SweepVariable v, const std::vector<Record>& records);
nlohmann::json records_json(SweepVariable v, const std::vector<Record>& records);

struct SurfaceRow {
    double nbar = 0.0;
    double r = 0.0;
    ThresholdTime one_side_AtoB = ThresholdTime::unbounded();
    ThresholdTime one_side_BtoA = ThresholdTime::unbounded();
    ThresholdTime two_side = ThresholdTime::unbounded();
};

/// Closed-form thermal thresholds (kappa t) on the figure-1 grid.
std::vector<SurfaceRow> run_surface(const SurfacePreset& preset);
/// Columns nbar, r, exp2kt_AtoB_one_side, exp2kt_BtoA_one_side, exp2kt_two_side ("inf" when unbounded).
void write_surface_csv(std::ostream& os, const std::vector<SurfaceRow>& rows);
nlohmann::json surface_json(const std::vector<SurfaceRow>& rows);

} // namespace cvsteer::cli
