#pragma once

#include <optional>
#include <string>
#include <vector>

#include "avrfopid/avr_plant.hpp"
#include "avrfopid/frac_ops.hpp"
#include "avrfopid/rational_tf.hpp"

namespace avrfopid {

/// Controllable-canonical realization of a proper RationalTF.
struct StateSpace {
    int n = 0;                   // state dimension = den degree
    std::vector<double> a;       // n*n, row-major
    std::vector<double> b;       // n
    std::vector<double> c;       // n
    double d = 0.0;

    double& A(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    double A(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

/// Throws ImproperSystemError when num degree exceeds den degree.
StateSpace to_statespace(const RationalTF& tf);

struct StepResult {
    std::vector<double> t;
    std::vector<double> y;
    double y_final = 0.0;                    // DC gain of the realized TF
    double overshoot = 0.0;                  // max(y)/y_final - 1, stable cases
    std::optional<double> settling_time_2pct;
    bool stable = false;                     // pole AND trajectory verdicts
    bool pole_stable = false;
    bool trajectory_stable = false;
    double max_pole_real = 0.0;
};

/// Classic fixed-step RK4 on x' = Ax + B, y = Cx + D (unit step input).
/// Throws StepTooLargeError when dt * max|pole| exceeds the RK4 bound.
StepResult step_response(const StateSpace& ss, const RationalTF& tf, double t_end = 8.0,
                         double dt = 1e-4);

StepResult simulate_step(const RationalTF& closed_loop, double t_end = 8.0, double dt = 1e-4);

struct SweepEntry {
    double multiplier;
    StepResult result;
    std::string error;  // nonempty when this entry failed
};

/// Loop-gain robustness scenario: scale the exciter gain by each multiplier,
/// rebuild the rational closed loop (sensor in feedback), simulate a unit
/// step. Entries that fail record the error; the sweep never aborts.
std::vector<SweepEntry> robustness_sweep(const FopidParams& controller, const AvrParams& p,
                                         const std::vector<double>& multipliers = {1, 3, 5, 8, 12, 17},
                                         const OustaloupConfig& cfg = {}, double t_end = 8.0,
                                         double dt = 1e-4);

}  // namespace avrfopid
