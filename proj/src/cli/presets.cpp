// presets.cpp: figure parameter tables

#include "cvsteer/cli/presets.hpp"

#include "cvsteer/cli/format.hpp"
#include "cvsteer/errors.hpp"

#include <cmath>
#include <numbers>

namespace cvsteer::cli {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

// clang-format off
const std::vector<FigurePreset> kPresets = {
    {"2a", "thermal (incl. loss) channel, steerability vs T = 1 - exp(-2 kappa t)",
     SweepVariable::Fraction, 0.0, 0.99, 100,
     {
         // channel    side   g    kappa nbar M    r
         {"thermal", "b",   0.0, 1.0, 0.0, 0.0, 0.5},
         {"thermal", "two", 0.0, 1.0, 0.0, 0.0, 0.5},
         {"thermal", "b",   0.0, 1.0, 0.0, 0.0, 0.88},
         {"thermal", "two", 0.0, 1.0, 0.0, 0.0, 0.88},
         {"thermal", "b",   0.0, 1.0, 0.1, 0.0, 0.5},
         {"thermal", "two", 0.0, 1.0, 0.1, 0.0, 0.5},
         {"thermal", "b",   0.0, 1.0, 0.1, 0.0, 0.88},
         {"thermal", "two", 0.0, 1.0, 0.1, 0.0, 0.88},
     }},
    {"2b", "gain channel, steerability vs 1 - 1/R = 1 - exp(-2 g t)",
     SweepVariable::Fraction, 0.0, 0.99, 100,
     {
         {"gain", "b",   1.0, 0.0, 0.0, 0.0, 0.5},
         {"gain", "two", 1.0, 0.0, 0.0, 0.0, 0.5},
         {"gain", "b",   1.0, 0.0, 0.0, 0.0, 0.88},
         {"gain", "two", 1.0, 0.0, 0.0, 0.0, 0.88},
     }},
    {"3", "laser channel, r = 0.5, gamma = g/kappa in {0.5, 1, 2}, steerability vs kappa t",
     SweepVariable::KappaTime, 0.0, 1.0, 201,
     {
         {"laser", "b",   0.5, 1.0, 0.0, 0.0, 0.5},
         {"laser", "two", 0.5, 1.0, 0.0, 0.0, 0.5},
         {"laser", "b",   1.0, 1.0, 0.0, 0.0, 0.5},
         {"laser", "two", 1.0, 1.0, 0.0, 0.0, 0.5},
         {"laser", "b",   2.0, 1.0, 0.0, 0.0, 0.5},
         {"laser", "two", 2.0, 1.0, 0.0, 0.0, 0.5},
     }},
    {"4", "two-side phase-sensitive bath, nbar = 1, M in {0, 1, sqrt2}, vs 1 - T = 1 - exp(-2 kappa t)",
     SweepVariable::Fraction, 0.0, 0.99, 100,
     {
         {"phase-sensitive", "two", 0.0, 1.0, 1.0, 0.0,    0.3},
         {"phase-sensitive", "two", 0.0, 1.0, 1.0, 1.0,    0.3},
         {"phase-sensitive", "two", 0.0, 1.0, 1.0, kSqrt2, 0.3},
         {"phase-sensitive", "two", 0.0, 1.0, 1.0, 0.0,    0.6},
         {"phase-sensitive", "two", 0.0, 1.0, 1.0, 1.0,    0.6},
         {"phase-sensitive", "two", 0.0, 1.0, 1.0, kSqrt2, 0.6},
     }},
    {"5", "one-side (mode B) phase-sensitive bath, nbar = 1, M in {0, 1, sqrt2}, vs 1 - T",
     SweepVariable::Fraction, 0.0, 0.99, 100,
     {
         {"phase-sensitive", "b", 0.0, 1.0, 1.0, 0.0,    0.3},
         {"phase-sensitive", "b", 0.0, 1.0, 1.0, 1.0,    0.3},
         {"phase-sensitive", "b", 0.0, 1.0, 1.0, kSqrt2, 0.3},
         {"phase-sensitive", "b", 0.0, 1.0, 1.0, 0.0,    0.6},
         {"phase-sensitive", "b", 0.0, 1.0, 1.0, 1.0,    0.6},
         {"phase-sensitive", "b", 0.0, 1.0, 1.0, kSqrt2, 0.6},
     }},
};

const SurfacePreset kFigure1 = {
    "1", "thermal channel, exp(2 kappa t_c) over (nbar, r) for one-side (A->B, B->A) and two-side steering",
    0.0, 2.0, 21,
    0.1, 1.5, 15,
    1.0,
};
// clang-format on

} // namespace

Side parse_side(const std::string& s)
{
    if (s == "a") return Side::A;
    if (s == "b") return Side::B;
    if (s == "two") return Side::Both;
    throw InvalidArgument("unknown side '" + s + "' (expected a, b or two)");
}

const char* to_string(SweepVariable v)
{
    switch (v) {
    case SweepVariable::Time: return "t";
    case SweepVariable::KappaTime: return "kt";
    case SweepVariable::GainTime: return "gt";
    case SweepVariable::Nbar: return "nbar";
    case SweepVariable::Squeezing: return "r";
    case SweepVariable::Fraction: return "T";
    }
    return "?";
}

SweepVariable parse_sweep_variable(const std::string& token)
{
    for (SweepVariable v : {SweepVariable::Time, SweepVariable::KappaTime, SweepVariable::GainTime,
                            SweepVariable::Nbar, SweepVariable::Squeezing, SweepVariable::Fraction}) {
        if (token == to_string(v)) return v;
    }
    throw InvalidArgument("unknown sweep variable '" + token + "' (expected t, kt, gt, nbar, r or T)");
}

const std::vector<FigurePreset>& figure_presets() { return kPresets; }

const SurfacePreset& figure1_preset() { return kFigure1; }

const FigurePreset* find_preset(const std::string& id)
{
    for (const auto& p : kPresets) {
        if (p.id == id) return &p;
    }
    return nullptr;
}

ChannelFamily family_of(const SeriesRow& row)
{
    const std::string ch = row.channel;
    const Side side = parse_side(row.side);
    if (ch == "loss") return ChannelFamily::loss(row.kappa, side);
    if (ch == "gain") return ChannelFamily::gain(row.g, side);
    if (ch == "thermal") return ChannelFamily::thermal(row.kappa, row.nbar, side);
    if (ch == "laser") return ChannelFamily::laser(row.g, row.kappa, side);
    if (ch == "phase-sensitive") return ChannelFamily::phase_sensitive(row.kappa, row.nbar, row.M, side);
    throw InvalidArgument("unknown channel '" + ch + "'");
}

std::string series_label(const SeriesRow& row)
{
    return "r=" + format_number(row.r) + ";" + family_of(row).describe();
}

nlohmann::json to_json(const FigurePreset& p)
{
    nlohmann::json series = nlohmann::json::array();
    for (const auto& row : p.series) {
        series.push_back({{"channel", row.channel},
                          {"side", row.side},
                          {"g", row.g},
                          {"kappa", row.kappa},
                          {"nbar", row.nbar},
                          {"M", row.M},
                          {"r", row.r},
                          {"label", series_label(row)}});
    }
    return {{"figure", p.id},
            {"caption", p.caption},
            {"variable", to_string(p.variable)},
            {"from", p.from},
            {"to", p.to},
            {"points", p.points},
            {"series", series}};
}

nlohmann::json to_json(const SurfacePreset& p)
{
    return {{"figure", p.id},
            {"caption", p.caption},
            {"nbar", {{"from", p.nbar_from}, {"to", p.nbar_to}, {"points", p.nbar_points}}},
            {"r", {{"from", p.r_from}, {"to", p.r_to}, {"points", p.r_points}}},
            {"kappa", p.kappa}};
}

nlohmann::json presets_json()
{
    nlohmann::json all = nlohmann::json::array();
    all.push_back(to_json(kFigure1));
    for (const auto& p : kPresets) all.push_back(to_json(p));
    return all;
}

} // namespace cvsteer::cli
