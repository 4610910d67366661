#include "avrfopid/avr_plant.hpp"

#include <cmath>
#include <utility>

#include "avrfopid/errors.hpp"

namespace avrfopid {

bool AvrParams::valid() const {
    return ka > 0 && tau_a > 0 && ke > 0 && tau_e > 0 && kg > 0 && tau_g > 0 && ks > 0 &&
           tau_s > 0;
}

namespace {

RationalTF first_order_lag(double gain, double tau) {
    return {Polynomial{gain}, Polynomial{1.0, tau}};
}

}  // namespace

PlantBlocks build_blocks(const AvrParams& p) {
    if (!p.valid()) throw ConfigError("AvrParams: gains and time constants must be positive");
    return {first_order_lag(p.ka, p.tau_a), first_order_lag(p.ke, p.tau_e),
            first_order_lag(p.kg, p.tau_g), first_order_lag(p.ks, p.tau_s)};
}

LoopResponse effective_open_loop(ControllerResponse controller, const AvrParams& p,
                                 LoopTopology topology) {
    if (!p.valid()) throw ConfigError("AvrParams: gains and time constants must be positive");
    auto eval = [controller = std::move(controller), p, topology](double w) {
        const std::complex<double> jw(0.0, w);
        const std::complex<double> a = p.ka / (1.0 + p.tau_a * jw);
        const std::complex<double> e = p.ke / (1.0 + p.tau_e * jw);
        const std::complex<double> g = p.kg / (1.0 + p.tau_g * jw);
        const std::complex<double> l = controller(w) * a * e * g;
        if (topology == LoopTopology::LiteralUnityFeedback) return l;
        const std::complex<double> s = p.ks / (1.0 + p.tau_s * jw);
        const std::complex<double> denom = 1.0 + l * (s - 1.0);
        if (denom == std::complex<double>(0.0, 0.0))
            throw SingularResponseError("effective_open_loop: 1 - G_cl vanishes at omega");
        return l / denom;
    };
    return {std::move(eval), std::nullopt};
}

RationalTF rational_effective_open_loop(const RationalTF& controller, const AvrParams& p,
                                        LoopTopology topology) {
    const PlantBlocks blocks = build_blocks(p);
    const RationalTF l =
        series(series(controller, blocks.amplifier), series(blocks.exciter, blocks.generator));
    if (topology == LoopTopology::LiteralUnityFeedback) return l;
    // L / (1 + L*(S-1)) with S = num_S/den_S.
    const Polynomial& ns = blocks.sensor.num;
    const Polynomial& ds = blocks.sensor.den;
    Polynomial num = l.num * ds;
    Polynomial den = l.den * ds + l.num * (ns - ds);
    if (den.is_zero()) throw DegenerateLoopError("rational_effective_open_loop: degenerate loop");
    return {std::move(num), std::move(den)};
}

RationalTF rational_closed_loop(const RationalTF& controller, const AvrParams& p) {
    const PlantBlocks blocks = build_blocks(p);
    const RationalTF l =
        series(series(controller, blocks.amplifier), series(blocks.exciter, blocks.generator));
    return feedback(l, blocks.sensor);
}

LoopResponse loop_from_rational(RationalTF tf) {
    LoopResponse out;
    out.rational = std::move(tf);
    out.eval = [tf = *out.rational](double w) { return tf.eval_jw(w); };
    return out;
}

}  // namespace avrfopid
