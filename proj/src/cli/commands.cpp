// commands.cpp: eval / sweep / threshold / verify subcommands

#include "cvsteer/cli/app.hpp"

#include "cvsteer/channels.hpp"
#include "cvsteer/cli/format.hpp"
#include "cvsteer/cli/presets.hpp"
#include "cvsteer/cli/sweep.hpp"
#include "cvsteer/cli/verify.hpp"
#include "cvsteer/errors.hpp"
#include "cvsteer/measures.hpp"
#include "cvsteer/thresholds.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

namespace cvsteer::cli {

namespace {

constexpr const char* kVersion = "1.0.0";

struct Options {
    // state and channel
    double r = 0.0;
    std::string channel = "none";
    std::string side = "two";
    std::optional<double> g;
    std::optional<double> kappa;
    double nbar = 0.0;
    std::string M = "0";
    std::optional<double> t;
    std::optional<double> kt;
    std::optional<double> gt;
    // output
    std::string format;
    std::string out;
    bool provenance = false;
    // sweep
    std::string figure;
    bool explain = false;
    std::string var;
    std::optional<double> from;
    std::optional<double> to;
    int points = 101;
    // threshold
    std::string quantity = "all";
    std::optional<double> t_max;
    // verify
    std::string suite = "all";
};

std::complex<double> parse_complex(std::string s)
{
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    auto bad = [&] { return InvalidArgument("cannot parse M='" + s + "' (expected a, a+bi or bi)"); };
    if (s.empty()) throw bad();
    try {
        if (s.back() != 'i') {
            std::size_t used = 0;
            const double re = std::stod(s, &used);
            if (used != s.size()) throw bad();
            return {re, 0.0};
        }
        const std::string body = s.substr(0, s.size() - 1);
        std::size_t split = std::string::npos;
        for (std::size_t i = body.size(); i-- > 1;) {
            if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
                split = i;
                break;
            }
        }
        auto num = [&](const std::string& part) {
            if (part.empty() || part == "+") return 1.0;
            if (part == "-") return -1.0;
            std::size_t used = 0;
            const double v = std::stod(part, &used);
            if (used != part.size()) throw bad();
            return v;
        };
        if (split == std::string::npos) return {0.0, num(body)};
        const std::string re_part = body.substr(0, split);
        std::size_t used = 0;
        const double re = std::stod(re_part, &used);
        if (used != re_part.size()) throw bad();
        return {re, num(body.substr(split))};
    } catch (const std::logic_error&) {
        throw bad();
    }
}

std::optional<ChannelFamily> build_family(const Options& o)
{
    if (o.channel == "none") return std::nullopt;
    const Side side = parse_side(o.side);
    const double kappa = o.kappa.value_or(1.0);
    if (o.channel == "loss") return ChannelFamily::loss(kappa, side);
    if (o.channel == "gain") return ChannelFamily::gain(o.g.value_or(1.0), side);
    if (o.channel == "thermal") return ChannelFamily::thermal(kappa, o.nbar, side);
    if (o.channel == "laser") return ChannelFamily::laser(o.g.value_or(0.0), kappa, side);
    if (o.channel == "phase-sensitive") {
        return ChannelFamily::phase_sensitive(kappa, o.nbar, parse_complex(o.M), side);
    }
    throw InvalidArgument("unknown channel '" + o.channel + "'");
}

double resolve_time(const Options& o, const std::optional<ChannelFamily>& f)
{
    if (o.t) return *o.t;
    if (o.kt) return time_for(SweepVariable::KappaTime, *o.kt, f);
    if (o.gt) return time_for(SweepVariable::GainTime, *o.gt, f);
    return 0.0;
}

std::string join_args(const std::vector<std::string>& args)
{
    std::string s;
    for (const auto& a : args) s += (s.empty() ? "" : " ") + a;
    return s;
}

// Writes to --out (relative paths resolved against CVSTEER_OUTPUT_DIR) or to `out`.
void emit(const Options& o, const std::string& text, std::ostream& out)
{
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::filesystem::path path(o.out);
    if (const char* dir = std::getenv("CVSTEER_OUTPUT_DIR"); dir && *dir && path.is_relative()) {
        path = std::filesystem::path(dir) / path;
    }
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + path.string());
    f << text;
}

std::string csv_header(const Options& o, const std::vector<std::string>& args)
{
    if (!o.provenance) return {};
    return fmt::format("# cvsteer {}\n# command: {}\n", kVersion, join_args(args));
}

void add_json_provenance(const Options& o, const std::vector<std::string>& args, nlohmann::json& j)
{
    if (o.provenance) j["provenance"] = {{"tool", "cvsteer"}, {"version", kVersion}, {"command", join_args(args)}};
}

void add_state_options(CLI::App* sub, Options& o)
{
    sub->add_option("--r", o.r, "two-mode squeezing r >= 0")->capture_default_str();
    sub->add_option("--channel", o.channel, "none, loss, gain, thermal, laser, phase-sensitive")
        ->check(CLI::IsMember({"none", "loss", "gain", "thermal", "laser", "phase-sensitive"}))
        ->capture_default_str();
    sub->add_option("--side", o.side, "modes the channel acts on: a, b, two")
        ->check(CLI::IsMember({"a", "b", "two"}))
        ->capture_default_str();
    sub->add_option("--g", o.g, "gain rate (default 1 for gain, 0 for laser)");
    sub->add_option("--kappa", o.kappa, "loss rate (default 1)");
    sub->add_option("--nbar", o.nbar, "thermal occupation")->capture_default_str();
    sub->add_option("--M", o.M, "bath squeezing, real or complex like 1+0.5i")->capture_default_str();
    auto* t = sub->add_option("--t", o.t, "evolution time");
    auto* kt = sub->add_option("--kt", o.kt, "evolution time as kappa t");
    auto* gt = sub->add_option("--gt", o.gt, "evolution time as g t");
    t->excludes(kt)->excludes(gt);
    kt->excludes(gt);
}

void add_output_options(CLI::App* sub, Options& o, const char* default_format)
{
    sub->add_option("--format", o.format, std::string("csv or json (default ") + default_format + ")")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", o.out, "output file (relative paths go under $CVSTEER_OUTPUT_DIR)");
    sub->add_flag("--provenance", o.provenance, "prepend a tool/command header");
}

int cmd_eval(const Options& o, const std::vector<std::string>& args, std::ostream& out)
{
    const auto family = build_family(o);
    const double t = resolve_time(o, family);
    GaussianState state = make_tmsv(o.r);
    if (family) state = family->evolve(state, t);
    const SteeringReport rep = steering_report(state);

    if (o.format == "csv") {
        Record rec{t, family ? family->describe() : "none", t, o.r, rep};
        std::ostringstream os;
        os << csv_header(o, args);
        write_csv(os, SweepVariable::Time, {rec});
        emit(o, os.str(), out);
        return kOk;
    }
    nlohmann::json j;
    j["schema"] = "cvsteer.report/1";
    add_json_provenance(o, args, j);
    j["input"] = {{"r", o.r}, {"channel", family ? family->describe() : "none"}, {"t", t}};
    j["state"] = to_json(state);
    j["report"] = report_json(state, rep);
    emit(o, j.dump(2) + "\n", out);
    return kOk;
}

int cmd_sweep(const Options& o, const std::vector<std::string>& args, std::ostream& out)
{
    if (o.explain) {
        nlohmann::json j;
        if (o.figure.empty()) j = presets_json();
        else if (o.figure == "1") j = to_json(figure1_preset());
        else if (const auto* p = find_preset(o.figure)) j = to_json(*p);
        else throw InvalidArgument("unknown figure preset '" + o.figure + "'");
        out << j.dump(2) << "\n";
        return kOk;
    }

    std::ostringstream os;
    if (o.figure == "1") {
        const auto rows = run_surface(figure1_preset());
        if (o.format == "json") {
            auto j = surface_json(rows);
            add_json_provenance(o, args, j);
            os << j.dump(2) << "\n";
        } else {
            os << csv_header(o, args);
            write_surface_csv(os, rows);
        }
        emit(o, os.str(), out);
        return kOk;
    }

    SweepVariable var;
    std::vector<Record> records;
    if (!o.figure.empty()) {
        const auto* preset = find_preset(o.figure);
        if (!preset) throw InvalidArgument("unknown figure preset '" + o.figure + "'");
        var = preset->variable;
        records = run_figure(*preset);
    } else {
        if (o.var.empty() || !o.from || !o.to) {
            throw InvalidArgument("sweep needs --figure or all of --var, --from, --to");
        }
        SweepSpec spec;
        spec.family = build_family(o);
        spec.series = spec.family ? spec.family->describe() : "none";
        spec.r = o.r;
        spec.variable = parse_sweep_variable(o.var);
        spec.t = resolve_time(o, spec.family);
        spec.from = *o.from;
        spec.to = *o.to;
        spec.points = o.points;
        var = spec.variable;
        records = run_sweep(spec);
    }
    if (o.format == "json") {
        auto j = records_json(var, records);
        add_json_provenance(o, args, j);
        os << j.dump(2) << "\n";
    } else {
        os << csv_header(o, args);
        write_csv(os, var, records);
    }
    emit(o, os.str(), out);
    return kOk;
}

std::vector<Quantity> parse_quantities(const std::string& s, Side side)
{
    if (s == "all") {
        if (side == Side::Both) return {Quantity::SteerTwoWay, Quantity::Inseparability};
        return {Quantity::SteerAtoB, Quantity::SteerBtoA, Quantity::SteerTwoWay, Quantity::Inseparability};
    }
    for (Quantity q : {Quantity::SteerAtoB, Quantity::SteerBtoA, Quantity::SteerTwoWay, Quantity::Inseparability}) {
        if (s == to_string(q)) return {q};
    }
    throw InvalidArgument("unknown quantity '" + s + "'");
}

int cmd_threshold(const Options& o, const std::vector<std::string>& args, std::ostream& out)
{
    const auto family = build_family(o);
    if (!family) throw InvalidArgument("threshold needs --channel");
    const double rate = natural_rate(*family);
    std::vector<ThresholdResult> results;
    for (Quantity q : parse_quantities(o.quantity, family->side)) {
        if (family->kind == ChannelFamily::Kind::Thermal && family->side == Side::Both &&
            q == Quantity::SteerTwoWay && !o.t_max) {
            results.push_back(two_way_thermal_threshold(family->nbar, o.r, family->kappa));
        } else {
            results.push_back(threshold(*family, o.r, q, o.t_max));
        }
    }

    std::ostringstream os;
    if (o.format == "json") {
        nlohmann::json j;
        j["schema"] = "cvsteer.threshold/1";
        add_json_provenance(o, args, j);
        j["results"] = nlohmann::json::array();
        for (const auto& res : results) j["results"].push_back(to_json(res, rate));
        os << j.dump(2) << "\n";
    } else {
        auto t = [](const std::optional<ThresholdTime>& x) { return x ? x->to_string() : std::string("na"); };
        auto scaled = [rate](const std::optional<ThresholdTime>& x) -> std::string {
            if (!x) return "na";
            if (!x->is_finite()) return "inf";
            return format_number(rate * x->value());
        };
        os << csv_header(o, args);
        os << "channel,quantity,r,rate,t_closed,t_numeric,rate_t_closed,rate_t_numeric,agreement,positive_tail,status\n";
        for (const auto& res : results) {
            os << '"' << res.channel << '"' << ',' << to_string(res.quantity) << ',' << format_number(res.r) << ','
               << format_number(rate) << ',' << t(res.closed) << ',' << res.numeric.to_string() << ','
               << scaled(res.closed) << ',' << scaled(res.numeric) << ','
               << (std::isnan(res.agreement) ? std::string("na") : format_number(res.agreement)) << ','
               << (res.positive_tail ? 1 : 0) << ',' << res.status << '\n';
        }
    }
    emit(o, os.str(), out);
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err)
{
    const auto results = run_verify(o.suite);
    bool ok = true;
    for (const auto& s : results) {
        out << fmt::format("{:<11} max_dev={:<12.3e} tol={:<8.1e} checks={:<5} {}\n", s.name, s.max_deviation,
                           s.tolerance, s.checks, s.pass() ? "PASS" : "FAIL");
        if (!s.pass()) {
            ok = false;
            err << "verify " << s.name << ": worst case " << s.worst << "\n";
        }
    }
    return ok ? kOk : kFailure;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"EPR steering and entanglement of decohered two-mode Gaussian states", "cvsteer"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    Options o;
    auto* eval = app.add_subcommand("eval", "steering report for one state (JSON by default)");
    add_state_options(eval, o);

    auto* sweep = app.add_subcommand("sweep", "parameter sweep or figure preset");
    add_state_options(sweep, o);
    sweep->add_option("--figure", o.figure, "figure preset: 1, 2a, 2b, 3, 4, 5")
        ->check(CLI::IsMember({"1", "2a", "2b", "3", "4", "5"}));
    sweep->add_flag("--explain", o.explain, "print preset definitions and exit");
    sweep->add_option("--var", o.var, "swept variable: t, kt, gt, nbar, r, T");
    sweep->add_option("--from", o.from, "first value");
    sweep->add_option("--to", o.to, "last value");
    sweep->add_option("--points,--steps", o.points, "number of points (>= 2)")->capture_default_str();

    auto* thr = app.add_subcommand("threshold", "closed-form and bisected threshold times");
    add_state_options(thr, o);
    thr->add_option("--quantity", o.quantity, "steer-AtoB, steer-BtoA, steer-two-way, inseparability or all")
        ->capture_default_str();
    thr->add_option("--t-max", o.t_max, "bisection horizon (absolute time)");

    auto* ver = app.add_subcommand("verify", "compare closed forms against the numerical oracle");
    ver->add_option("suite", o.suite, "pdf, entropy, inferred, moments, symplectic, thresholds or all")
        ->capture_default_str();

    add_output_options(eval, o, "json");
    add_output_options(sweep, o, "csv");
    add_output_options(thr, o, "csv");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (eval->parsed()) return cmd_eval(o, args, out);
        if (sweep->parsed()) return cmd_sweep(o, args, out);
        if (thr->parsed()) return cmd_threshold(o, args, out);
        if (ver->parsed()) return cmd_verify(o, out, err);
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kUsage;
}

} // namespace cvsteer::cli
