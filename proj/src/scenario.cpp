#include "fsocap/scenario.hpp"

namespace fsocap::scenario {

Scenario make_scenario_cn2(const std::string& name,
                           const link::LinkGeometry& geom, double rytov,
                           double pointing_cn2) {
    Scenario s;
    s.name = name;
    s.geometry = geom;
    s.rytov = rytov;
    s.pointing_cn2 = pointing_cn2;
    s.turbulence = link::turbulence_from_rytov(rytov, geom);
    s.pointing = link::derive_pointing_state(geom, pointing_cn2);
    return s;
}

Scenario make_scenario(const std::string& name, const link::LinkGeometry& geom,
                       double rytov) {
    return make_scenario_cn2(name, geom, rytov, link::cn2_from_rytov(rytov, geom));
}

link::LinkGeometry default_geometry() { return link::LinkGeometry{}; }

std::vector<Scenario> default_scenarios() {
    auto geom = default_geometry();
    return {
        make_scenario("weak", geom, 0.8),
        make_scenario("moderate", geom, 2.0),
        make_scenario_cn2("strong", geom, 6.0, 1e-13),
    };
}

}  // namespace fsocap::scenario
