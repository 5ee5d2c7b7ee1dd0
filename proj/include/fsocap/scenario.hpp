#pragma once

#include <string>
#include <vector>

#include "fsocap/channel.hpp"
#include "fsocap/linkmodel.hpp"

namespace fsocap::scenario {

// One named turbulence scenario over a fixed link geometry. The Gamma-Gamma
// shape parameters follow from the Rytov variance; the pointing parameters
// follow from the structure parameter `pointing_cn2`, which is normally
// cn2_from_rytov(rytov) but can be pinned independently.
struct Scenario {
    std::string name;
    link::LinkGeometry geometry;
    double rytov = 0.0;
    double pointing_cn2 = 0.0;
    link::TurbulenceState turbulence;
    link::PointingState pointing;

    channel::ChannelModel gg_only(double gain_scale = 1.0) const {
        return channel::ChannelModel::gg_only(turbulence.a, turbulence.b,
                                              gain_scale);
    }
    channel::ChannelModel gg_pointing() const {
        return channel::ChannelModel::gg_pointing(turbulence.a, turbulence.b,
                                                  pointing.xi, pointing.A0);
    }
};

Scenario make_scenario(const std::string& name, const link::LinkGeometry& geom,
                       double rytov);
Scenario make_scenario_cn2(const std::string& name,
                           const link::LinkGeometry& geom, double rytov,
                           double pointing_cn2);

// The stock 1550 nm / 1.8 km terrestrial link.
link::LinkGeometry default_geometry();

// Built-in weak / moderate / strong presets over the default geometry.
// The strong preset pins pointing_cn2 = 1e-13 m^(-2/3): its published jitter
// parameters correspond to that round structure-parameter value (Rytov
// variance 5.85, quoted as 6), while its (a, b) pair matches Rytov 6.
std::vector<Scenario> default_scenarios();

}  // namespace fsocap::scenario
