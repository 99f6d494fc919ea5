#include "qaoa/serialize.hpp"

#include <fstream>
#include <stdexcept>

namespace qaoa {

json to_json(const IsingInstance& instance) {
    json edges = json::array();
    for (const Edge& e : instance.edges) edges.push_back({e.i, e.j, e.coupling});
    return {{"n_qubits", instance.n_qubits},
            {"edges", edges},
            {"offset", instance.offset},
            {"label", instance.label}};
}

IsingInstance instance_from_json(const json& j) {
    IsingInstance instance;
    instance.n_qubits = j.at("n_qubits").get<int>();
    for (const auto& e : j.at("edges"))
        instance.edges.push_back(
            {e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<double>()});
    instance.offset = j.at("offset").get<double>();
    instance.label = j.value("label", std::string{});
    validate(instance);
    return instance;
}

json to_json(const LinearParams& lp) {
    return {{"gamma_slope", lp.gamma_slope},
            {"gamma_intcp", lp.gamma_intcp},
            {"beta_slope", lp.beta_slope},
            {"beta_intcp", lp.beta_intcp}};
}

LinearParams linear_params_from_json(const json& j) {
    return {j.at("gamma_slope").get<double>(), j.at("gamma_intcp").get<double>(),
            j.at("beta_slope").get<double>(), j.at("beta_intcp").get<double>()};
}

json to_json(const Schedule& schedule) {
    return {{"gammas", schedule.gammas}, {"betas", schedule.betas}};
}

Schedule schedule_from_json(const json& j) {
    Schedule schedule;
    schedule.gammas = j.at("gammas").get<std::vector<double>>();
    schedule.betas = j.at("betas").get<std::vector<double>>();
    if (schedule.gammas.size() != schedule.betas.size() || schedule.gammas.empty())
        throw std::invalid_argument("schedule vectors must be non-empty and equal length");
    return schedule;
}

json to_json(const LinearFit& fit) {
    return {{"slope", fit.slope},
            {"intercept", fit.intercept},
            {"r_squared", fit.r_squared}};
}

json to_json(const GroundTruth& gt) {
    std::string bits(gt.config.size(), '0');
    for (std::size_t q = 0; q < gt.config.size(); ++q)
        if (gt.config[q] < 0) bits[q] = '1';
    json j = {{"energy", gt.energy},
              {"config", bits},
              {"method", gt.method == GroundTruth::Method::exhaustive ? "exhaustive"
                                                                      : "annealing"}};
    if (gt.method == GroundTruth::Method::exhaustive) j["degeneracy"] = gt.degeneracy;
    return j;
}

json to_json(const StrategyReport& report) {
    return {{"name", report.name},
            {"schedule", to_json(report.schedule)},
            {"expectation", report.expectation},
            {"ratio", report.ratio},
            {"e_ref", report.e_ref},
            {"eval_count", report.eval_count},
            {"wall_seconds", report.wall_seconds}};
}

json landscape_metadata(const LandscapeGrid& grid, const std::string& instance_label,
                        const std::string& normalization) {
    return {{"plane", grid.plane == Plane::gamma_plane ? "gamma" : "beta"},
            {"fixed_other", to_json(grid.fixed)},
            {"p", grid.p},
            {"instance", instance_label},
            {"normalization", normalization},
            {"slope_axis", grid.slope_axis},
            {"intcp_axis", grid.intcp_axis}};
}

IsingInstance load_instance(const std::string& path) {
    return instance_from_json(load_json(path));
}

void save_json(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

}  // namespace qaoa
