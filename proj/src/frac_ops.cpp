#include "avrfopid/frac_ops.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "avrfopid/errors.hpp"

namespace avrfopid {

std::complex<double> frac_pow_jw(double alpha, double omega) {
    if (omega <= 0.0) throw std::invalid_argument("frac_pow_jw: omega must be positive");
    const double mag = std::pow(omega, alpha);
    const double arg = alpha * std::numbers::pi / 2.0;
    return {mag * std::cos(arg), mag * std::sin(arg)};
}

RationalTF oustaloup(double alpha, const OustaloupConfig& cfg) {
    if (!cfg.valid()) throw ConfigError("oustaloup: invalid config");
    if (std::abs(alpha) > 2.0) throw std::invalid_argument("oustaloup: |alpha| > 2 unsupported");

    const long n_int = std::lround(alpha);
    const double frac = alpha - static_cast<double>(n_int);

    Polynomial num{1.0}, den{1.0};
    if (std::abs(frac) > 1e-12) {
        const int n = cfg.order;
        const double ratio = cfg.wh / cfg.wb;
        const double span = 2.0 * n + 1.0;
        for (int k = -n; k <= n; ++k) {
            const double wk = cfg.wb * std::pow(ratio, (k + n + 0.5 + frac / 2.0) / span);
            const double wkp = cfg.wb * std::pow(ratio, (k + n + 0.5 - frac / 2.0) / span);
            assert(wk > 0.0 && wkp > 0.0);  // ladder stays real negative (-wk, -wkp)
            num = num * Polynomial{wkp, 1.0};
            den = den * Polynomial{wk, 1.0};
        }
        num = num * std::pow(cfg.wh, frac);
    }
    if (n_int > 0) num = num.shifted_up(static_cast<int>(n_int));
    if (n_int < 0) den = den.shifted_up(static_cast<int>(-n_int));
    return {std::move(num), std::move(den)};
}

std::complex<double> fopid_freq_exact(const FopidParams& p, double omega) {
    std::complex<double> out(p.kp, 0.0);
    if (p.ki != 0.0) out += p.lambda == 0.0 ? std::complex<double>(p.ki, 0.0)
                                            : p.ki * frac_pow_jw(-p.lambda, omega);
    if (p.kd != 0.0) out += p.mu == 0.0 ? std::complex<double>(p.kd, 0.0)
                                        : p.kd * frac_pow_jw(p.mu, omega);
    return out;
}

RationalTF fopid_to_rational(const FopidParams& p, const OustaloupConfig& cfg) {
    RationalTF integ = RationalTF::constant(1.0);
    RationalTF deriv = RationalTF::constant(1.0);
    const bool has_i = p.ki != 0.0;
    const bool has_d = p.kd != 0.0;
    if (has_i && p.lambda != 0.0) integ = oustaloup(-p.lambda, cfg);
    if (has_d && p.mu != 0.0) deriv = oustaloup(p.mu, cfg);

    // Kp + Ki*integ + Kd*deriv over the common denominator.
    Polynomial den = integ.den * deriv.den;
    Polynomial num = den * p.kp;
    if (has_i) num = num + integ.num * deriv.den * p.ki;
    if (has_d) num = num + deriv.num * integ.den * p.kd;
    return {std::move(num), std::move(den)};
}

}  // namespace avrfopid
