// format.cpp: deterministic text and JSON rendering

#include "cvsteer/cli/format.hpp"

#include "cvsteer/criteria.hpp"

#include <fmt/format.h>

#include <cmath>

namespace cvsteer::cli {

std::string format_number(double v)
{
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    return fmt::format("{:.12g}", v);
}

nlohmann::json to_json(const ThresholdTime& t)
{
    if (!t.is_finite()) return "inf";
    return t.value();
}

nlohmann::json to_json(const GaussianState& state)
{
    nlohmann::json mean = nlohmann::json::array();
    nlohmann::json cm = nlohmann::json::array();
    for (int i = 0; i < 4; ++i) {
        mean.push_back(state.mean()(i));
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < 4; ++j) row.push_back(state.cm()(i, j));
        cm.push_back(row);
    }
    return {{"mean", mean}, {"cm", cm}};
}

nlohmann::json report_json(const GaussianState& state, const SteeringReport& rep)
{
    auto margins = [&](Criterion c) {
        return nlohmann::json{{"AtoB", is_steerable(state, Direction::AtoB, c).margin},
                              {"BtoA", is_steerable(state, Direction::BtoA, c).margin}};
    };
    nlohmann::json j;
    j["reid"] = {{"AtoB", rep.reid_AtoB}, {"BtoA", rep.reid_BtoA}};
    j["entropic"] = {{"AtoB", rep.entropic_AtoB}, {"BtoA", rep.entropic_BtoA}};
    j["margins"] = {{"reid", margins(Criterion::Reid)}, {"entropic", margins(Criterion::Entropic)}};
    j["steerability"] = {{"AtoB", rep.g_AtoB}, {"BtoA", rep.g_BtoA}};
    j["log_negativity"] = rep.e_n;
    j["verdicts"] = {{"steerable_AtoB", rep.steerable_AtoB},
                     {"steerable_BtoA", rep.steerable_BtoA},
                     {"entangled", rep.entangled},
                     {"separable", !rep.entangled}};
    return j;
}

nlohmann::json to_json(const ThresholdResult& res, double rate)
{
    auto scaled = [rate](const ThresholdTime& t) -> nlohmann::json {
        if (!t.is_finite()) return "inf";
        return rate * t.value();
    };
    nlohmann::json j;
    j["channel"] = res.channel;
    j["quantity"] = to_string(res.quantity);
    j["r"] = res.r;
    j["rate"] = rate;
    j["t_closed"] = res.closed ? to_json(*res.closed) : nlohmann::json(nullptr);
    j["t_numeric"] = to_json(res.numeric);
    j["rate_t_closed"] = res.closed ? scaled(*res.closed) : nlohmann::json(nullptr);
    j["rate_t_numeric"] = scaled(res.numeric);
    j["agreement"] = std::isnan(res.agreement) ? nlohmann::json(nullptr) : nlohmann::json(res.agreement);
    j["positive_tail"] = res.positive_tail;
    j["status"] = res.status;
    return j;
}

} // namespace cvsteer::cli
