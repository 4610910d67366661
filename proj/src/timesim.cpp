#include "avrfopid/timesim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "avrfopid/errors.hpp"

namespace avrfopid {

StateSpace to_statespace(const RationalTF& tf) {
    if (!tf.proper()) throw ImproperSystemError("to_statespace: numerator degree exceeds denominator");
    const Polynomial den = tf.den.monic();
    const Polynomial num = tf.num * (1.0 / tf.den.leading());
    const int n = den.degree();

    StateSpace ss;
    ss.n = n;
    if (n == 0) {
        ss.d = num.coeffs()[0];
        return ss;
    }
    ss.a.assign(static_cast<std::size_t>(n) * n, 0.0);
    ss.b.assign(static_cast<std::size_t>(n), 0.0);
    ss.c.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i + 1 < n; ++i) ss.A(i, i + 1) = 1.0;
    for (int j = 0; j < n; ++j) ss.A(n - 1, j) = -den.coeffs()[static_cast<std::size_t>(j)];
    ss.b[static_cast<std::size_t>(n) - 1] = 1.0;

    ss.d = num.degree() == n ? num.coeffs().back() : 0.0;
    for (int j = 0; j < n; ++j) {
        const double nj = j <= num.degree() ? num.coeffs()[static_cast<std::size_t>(j)] : 0.0;
        ss.c[static_cast<std::size_t>(j)] = nj - ss.d * den.coeffs()[static_cast<std::size_t>(j)];
    }
    return ss;
}

namespace {

// x' = Ax + b (unit step input already folded into b), y = c·x + d.
void deriv(const StateSpace& ss, const std::vector<double>& x, std::vector<double>& dx) {
    const int n = ss.n;
    for (int i = 0; i < n; ++i) {
        double acc = ss.b[static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j) acc += ss.A(i, j) * x[static_cast<std::size_t>(j)];
        dx[static_cast<std::size_t>(i)] = acc;
    }
}

double output(const StateSpace& ss, const std::vector<double>& x) {
    double y = ss.d;
    for (int j = 0; j < ss.n; ++j) y += ss.c[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
    return y;
}

}  // namespace

StepResult step_response(const StateSpace& ss, const RationalTF& tf, double t_end, double dt) {
    if (dt <= 0.0 || t_end <= 0.0) throw ConfigError("step_response: dt and t_end must be positive");

    const PolesResult pr = poles(tf);
    double max_abs = 0.0, max_re = -std::numeric_limits<double>::infinity();
    for (const auto& p : pr.roots) {
        max_abs = std::max(max_abs, std::abs(p));
        max_re = std::max(max_re, p.real());
    }
    if (ss.n > 0 && dt * max_abs >= 2.5)
        throw StepTooLargeError("step_response: dt too large for RK4 stability");

    StepResult out;
    out.max_pole_real = ss.n > 0 ? max_re : -std::numeric_limits<double>::infinity();
    out.pole_stable = ss.n == 0 || max_re < 0.0;

    const auto steps = static_cast<std::size_t>(std::llround(t_end / dt));
    out.t.reserve(steps + 1);
    out.y.reserve(steps + 1);

    std::vector<double> x(static_cast<std::size_t>(ss.n), 0.0);
    std::vector<double> k1(x.size()), k2(x.size()), k3(x.size()), k4(x.size()), tmp(x.size());
    out.t.push_back(0.0);
    out.y.push_back(output(ss, x));

    bool overflowed = false;
    for (std::size_t s = 1; s <= steps; ++s) {
        deriv(ss, x, k1);
        for (std::size_t i = 0; i < x.size(); ++i) tmp[i] = x[i] + 0.5 * dt * k1[i];
        deriv(ss, tmp, k2);
        for (std::size_t i = 0; i < x.size(); ++i) tmp[i] = x[i] + 0.5 * dt * k2[i];
        deriv(ss, tmp, k3);
        for (std::size_t i = 0; i < x.size(); ++i) tmp[i] = x[i] + dt * k3[i];
        deriv(ss, tmp, k4);
        for (std::size_t i = 0; i < x.size(); ++i)
            x[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        const double y = output(ss, x);
        out.t.push_back(static_cast<double>(s) * dt);
        out.y.push_back(y);
        if (!std::isfinite(y) || std::abs(y) > 1e12) {
            overflowed = true;
            break;
        }
    }

    out.y_final = tf.dc_gain();

    // Trajectory verdict: bounded near the final value and no growing
    // envelope over the last quarter of the horizon.
    double amp_a = 0.0, amp_b = 0.0, y_abs_max_tail = 0.0;
    const double t_half = 0.5 * t_end, t_quart = 0.75 * t_end;
    for (std::size_t i = 0; i < out.t.size(); ++i) {
        const double dev = std::abs(out.y[i] - out.y_final);
        if (out.t[i] >= t_half && out.t[i] < t_quart) amp_a = std::max(amp_a, dev);
        if (out.t[i] >= t_quart) {
            amp_b = std::max(amp_b, dev);
            y_abs_max_tail = std::max(y_abs_max_tail, std::abs(out.y[i]));
        }
    }
    const double yref = std::max(std::abs(out.y_final), 1e-9);
    out.trajectory_stable = !overflowed && y_abs_max_tail <= 10.0 * std::max(yref, 1.0) &&
                            amp_b <= amp_a * 1.2 + 1e-9 * yref;
    out.stable = out.pole_stable && out.trajectory_stable;

    if (out.stable && out.y_final != 0.0) {
        const double ymax = *std::max_element(out.y.begin(), out.y.end());
        out.overshoot = ymax / out.y_final - 1.0;
        const double band = 0.02 * std::abs(out.y_final);
        std::size_t last_out = 0;
        bool ever_out = false;
        for (std::size_t i = 0; i < out.y.size(); ++i) {
            if (std::abs(out.y[i] - out.y_final) > band) {
                last_out = i;
                ever_out = true;
            }
        }
        if (!ever_out)
            out.settling_time_2pct = 0.0;
        else if (last_out + 1 < out.t.size())
            out.settling_time_2pct = out.t[last_out + 1];
        // else: never settles inside the horizon; leave empty
    }
    return out;
}

StepResult simulate_step(const RationalTF& closed_loop, double t_end, double dt) {
    return step_response(to_statespace(closed_loop), closed_loop, t_end, dt);
}

std::vector<SweepEntry> robustness_sweep(const FopidParams& controller, const AvrParams& p,
                                         const std::vector<double>& multipliers,
                                         const OustaloupConfig& cfg, double t_end, double dt) {
    const RationalTF c = fopid_to_rational(controller, cfg);
    std::vector<SweepEntry> out;
    out.reserve(multipliers.size());
    for (double m : multipliers) {
        SweepEntry entry;
        entry.multiplier = m;
        try {
            if (m <= 0.0) throw ConfigError("robustness_sweep: multipliers must be positive");
            AvrParams scaled = p;
            scaled.ke *= m;
            entry.result = simulate_step(rational_closed_loop(c, scaled), t_end, dt);
        } catch (const std::exception& e) {
            entry.error = e.what();
        }
        out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace avrfopid
