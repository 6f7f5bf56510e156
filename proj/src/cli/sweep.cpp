// sweep.cpp: sweep evaluation and tabular output

#include "cvsteer/cli/sweep.hpp"

#include "cvsteer/cli/format.hpp"
#include "cvsteer/errors.hpp"

#include <cmath>

namespace cvsteer::cli {

namespace {

ChannelFamily with_nbar(ChannelFamily f, double nbar)
{
    if (f.kind == ChannelFamily::Kind::Thermal) return ChannelFamily::thermal(f.kappa, nbar, f.side);
    if (f.kind == ChannelFamily::Kind::PhaseSensitive) {
        return ChannelFamily::phase_sensitive(f.kappa, nbar, f.M, f.side);
    }
    throw InvalidArgument("nbar sweeps need a thermal or phase-sensitive channel");
}

Record evaluate(const SweepSpec& spec, double x)
{
    Record rec;
    rec.x = x;
    rec.series = spec.series;
    rec.r = spec.r;
    std::optional<ChannelFamily> family = spec.family;
    switch (spec.variable) {
    case SweepVariable::Nbar:
        if (!family) throw InvalidArgument("nbar sweeps need a channel");
        family = with_nbar(*family, x);
        rec.t = spec.t;
        break;
    case SweepVariable::Squeezing:
        rec.r = x;
        rec.t = spec.t;
        break;
    default: rec.t = time_for(spec.variable, x, family); break;
    }
    GaussianState state = make_tmsv(rec.r);
    if (family) state = family->evolve(state, rec.t);
    rec.report = steering_report(state);
    return rec;
}

const char* flag(bool b) { return b ? "1" : "0"; }

} // namespace

double natural_rate(const ChannelFamily& f)
{
    switch (f.kind) {
    case ChannelFamily::Kind::Gain: return f.g;
    case ChannelFamily::Kind::Laser: return f.kappa > 0.0 ? f.kappa : f.g;
    default: return f.kappa;
    }
}

double time_for(SweepVariable v, double x, const std::optional<ChannelFamily>& family)
{
    auto need = [&](double rate, const char* what) {
        if (!(rate > 0.0)) throw InvalidArgument(std::string("sweep variable needs a positive ") + what);
        return rate;
    };
    switch (v) {
    case SweepVariable::Time: return x;
    case SweepVariable::KappaTime:
        if (!family) return x;
        return x / need(family->kappa, "kappa");
    case SweepVariable::GainTime:
        if (!family) return x;
        return x / need(family->g, "g");
    case SweepVariable::Fraction:
        if (!(x >= 0.0 && x < 1.0)) throw InvalidArgument("decoherence fraction T must lie in [0, 1)");
        if (!family) return 0.0;
        return -std::log1p(-x) / (2.0 * need(natural_rate(*family), "rate"));
    default: throw InvalidArgument("not a time-like sweep variable");
    }
}

std::vector<double> sweep_values(double from, double to, int points)
{
    if (!std::isfinite(from) || !std::isfinite(to)) {
        throw InvalidArgument("sweep range must be finite");
    }
    if (from == to) return {from};
    if (points < 2) throw InvalidArgument("sweep needs at least 2 points");
    std::vector<double> xs(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        xs[static_cast<std::size_t>(i)] = i + 1 == points ? to : from + (to - from) * i / (points - 1);
    }
    return xs;
}

std::vector<Record> run_sweep(const SweepSpec& spec)
{
    std::vector<Record> out;
    for (double x : sweep_values(spec.from, spec.to, spec.points)) out.push_back(evaluate(spec, x));
    return out;
}

std::vector<Record> run_figure(const FigurePreset& preset)
{
    std::vector<Record> out;
    for (const auto& row : preset.series) {
        SweepSpec spec;
        spec.series = series_label(row);
        spec.family = family_of(row);
        spec.r = row.r;
        spec.variable = preset.variable;
        spec.from = preset.from;
        spec.to = preset.to;
        spec.points = preset.points;
        auto recs = run_sweep(spec);
        out.insert(out.end(), recs.begin(), recs.end());
    }
    return out;
}

std::vector<std::string> record_columns(SweepVariable v)
{
    return {to_string(v), "series", "time", "r", "reid_AtoB", "reid_BtoA", "entropic_AtoB", "entropic_BtoA",
            "G_AtoB", "G_BtoA", "E_N", "steerable_AtoB", "steerable_BtoA", "separable"};
}

void write_csv(std::ostream& os, SweepVariable v, const std::vector<Record>& records)
{
    const auto cols = record_columns(v);
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
    os << '\n';
    for (const auto& rec : records) {
        const auto& rp = rec.report;
        os << format_number(rec.x) << ',' << '"' << rec.series << '"' << ',' << format_number(rec.t) << ','
           << format_number(rec.r) << ',' << format_number(rp.reid_AtoB) << ',' << format_number(rp.reid_BtoA)
           << ',' << format_number(rp.entropic_AtoB) << ',' << format_number(rp.entropic_BtoA) << ','
           << format_number(rp.g_AtoB) << ',' << format_number(rp.g_BtoA) << ',' << format_number(rp.e_n) << ','
           << flag(rp.steerable_AtoB) << ',' << flag(rp.steerable_BtoA) << ',' << flag(!rp.entangled) << '\n';
    }
}

nlohmann::json records_json(SweepVariable v, const std::vector<Record>& records)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& rec : records) {
        const auto& rp = rec.report;
        rows.push_back({{to_string(v), rec.x},
                        {"series", rec.series},
                        {"time", rec.t},
                        {"r", rec.r},
                        {"reid_AtoB", rp.reid_AtoB},
                        {"reid_BtoA", rp.reid_BtoA},
                        {"entropic_AtoB", rp.entropic_AtoB},
                        {"entropic_BtoA", rp.entropic_BtoA},
                        {"G_AtoB", rp.g_AtoB},
                        {"G_BtoA", rp.g_BtoA},
                        {"E_N", rp.e_n},
                        {"steerable_AtoB", rp.steerable_AtoB},
                        {"steerable_BtoA", rp.steerable_BtoA},
                        {"separable", !rp.entangled}});
    }
    return {{"schema", "cvsteer.sweep/1"},
            {"variable", to_string(v)},
            {"columns", record_columns(v)},
            {"records", rows}};
}

std::vector<SurfaceRow> run_surface(const SurfacePreset& p)
{
    std::vector<SurfaceRow> rows;
    for (double nbar : sweep_values(p.nbar_from, p.nbar_to, p.nbar_points)) {
        for (double r : sweep_values(p.r_from, p.r_to, p.r_points)) {
            const ChannelFamily f = ChannelFamily::thermal(p.kappa, nbar, Side::B);
            const double g = f.effective_g();
            const double k = f.effective_kappa();
            SurfaceRow row;
            row.nbar = nbar;
            row.r = r;
            row.one_side_AtoB = closed_form::one_side_AtoB(g, k, r);
            row.one_side_BtoA = closed_form::one_side_BtoA(g, k);
            row.two_side = closed_form::two_way_laser(g, k, r);
            rows.push_back(row);
        }
    }
    return rows;
}

namespace {

std::string exp2(const ThresholdTime& t, double kappa)
{
    if (!t.is_finite()) return "inf";
    return format_number(std::exp(2.0 * kappa * t.value()));
}

} // namespace

void write_surface_csv(std::ostream& os, const std::vector<SurfaceRow>& rows)
{
    const double kappa = figure1_preset().kappa;
    os << "nbar,r,exp2kt_AtoB_one_side,exp2kt_BtoA_one_side,exp2kt_two_side\n";
    for (const auto& row : rows) {
        os << format_number(row.nbar) << ',' << format_number(row.r) << ',' << exp2(row.one_side_AtoB, kappa) << ','
           << exp2(row.one_side_BtoA, kappa) << ',' << exp2(row.two_side, kappa) << '\n';
    }
}

nlohmann::json surface_json(const std::vector<SurfaceRow>& rows)
{
    const double kappa = figure1_preset().kappa;
    auto val = [kappa](const ThresholdTime& t) -> nlohmann::json {
        if (!t.is_finite()) return "inf";
        return std::exp(2.0 * kappa * t.value());
    };
    nlohmann::json out = nlohmann::json::array();
    for (const auto& row : rows) {
        out.push_back({{"nbar", row.nbar},
                       {"r", row.r},
                       {"exp2kt_AtoB_one_side", val(row.one_side_AtoB)},
                       {"exp2kt_BtoA_one_side", val(row.one_side_BtoA)},
                       {"exp2kt_two_side", val(row.two_side)}});
    }
    return {{"schema", "cvsteer.surface/1"}, {"records", out}};
}

} // namespace cvsteer::cli
