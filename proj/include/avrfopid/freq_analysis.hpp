#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "avrfopid/avr_plant.hpp"

namespace avrfopid {

/// Gain/phase margin record extracted from an effective open loop.
///
/// wgc is the unity-gain crossing (|G| falling through 1) with the smallest
/// phase margin; pm_deg = 180 + unwrapped phase there, wrapped into
/// (-180, 180] so that loops whose effective open loop winds through a
/// 1 - G_cl singularity report the margin of the reported crossing rather
/// than an accumulated winding. wpc/gm_db come from the crossing of the
/// unwrapped phase through -180 - k*360 with the smallest gain margin;
/// gm_db = +inf when the phase never reaches such a level.
struct Margins {
    double wgc = 0.0;
    double pm_deg = 0.0;
    std::optional<double> wpc;
    double gm_db = std::numeric_limits<double>::infinity();
    bool multiple_crossings = false;
};

struct MarginScanConfig {
    double wmin = 1e-4;
    double wmax = 1e4;
    int grid_points = 2048;  // floor of 2000 enforced
};

/// Throws NoGainCrossoverError when |G| never falls through 1 in the band.
Margins find_margins(const LoopResponse& loop, const MarginScanConfig& cfg = {});

std::optional<Margins> try_find_margins(const LoopResponse& loop,
                                        const MarginScanConfig& cfg = {});

struct BodePoint {
    double omega_rad_s;
    double mag_db;
    double phase_deg;  // continuously unwrapped
};

std::vector<BodePoint> bode_data(const LoopResponse& loop, double wmin, double wmax,
                                 int points_per_decade);

}  // namespace avrfopid
