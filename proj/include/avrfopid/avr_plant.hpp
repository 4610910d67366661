#pragma once

#include <complex>
#include <functional>
#include <optional>

#include "avrfopid/rational_tf.hpp"

namespace avrfopid {

/// First-order gains/time-constants of the four AVR loop blocks.
struct AvrParams {
    double ka = 10.0, tau_a = 0.1;   // amplifier
    double ke = 1.0, tau_e = 0.4;    // exciter
    double kg = 1.0, tau_g = 1.0;    // generator
    double ks = 1.0, tau_s = 0.01;   // sensor

    static AvrParams nominal() { return {}; }
    bool valid() const;
};

struct PlantBlocks {
    RationalTF amplifier, exciter, generator, sensor;
};

PlantBlocks build_blocks(const AvrParams& p);

/// How the sensor enters the loop when forming the unity-feedback-equivalent
/// open loop. SensorInFeedback is the default (it reproduces the published
/// margin tables); LiteralUnityFeedback keeps the plain forward path and is
/// retained for comparison runs.
enum class LoopTopology {
    SensorInFeedback,      // G_cl = L/(1+L*S), G_ol_eff = L/(1+L*(S-1))
    LiteralUnityFeedback,  // G_cl = L/(1+L),   G_ol_eff = L
};

/// A frequency-response evaluator for the effective open loop, with the
/// rational realization attached when the controller was rational.
struct LoopResponse {
    std::function<std::complex<double>(double)> eval;
    std::optional<RationalTF> rational;

    std::complex<double> operator()(double omega) const { return eval(omega); }
};

using ControllerResponse = std::function<std::complex<double>(double)>;

/// Compose controller + plant into the effective open loop evaluator.
/// Throws SingularResponseError from the evaluator at isolated omega where
/// 1 - G_cl vanishes (grid scanners catch and sidestep those points).
LoopResponse effective_open_loop(ControllerResponse controller, const AvrParams& p,
                                 LoopTopology topology = LoopTopology::SensorInFeedback);

/// Same loop, composed symbolically from a rational controller. Used for
/// pole-based stability checks and time simulation.
RationalTF rational_effective_open_loop(const RationalTF& controller, const AvrParams& p,
                                        LoopTopology topology = LoopTopology::SensorInFeedback);

/// Closed loop G_cl (reference -> terminal voltage) from a rational
/// controller, sensor in the feedback path.
RationalTF rational_closed_loop(const RationalTF& controller, const AvrParams& p);

/// Wrap a rational TF as a LoopResponse (evaluator + attached realization).
LoopResponse loop_from_rational(RationalTF tf);

}  // namespace avrfopid
