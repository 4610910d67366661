#pragma once

#include <complex>

#include "avrfopid/rational_tf.hpp"

namespace avrfopid {

/// The five-gene controller genome of C(s) = Kp + Ki/s^lambda + Kd*s^mu.
/// An integer PID is the lambda = mu = 1 restriction.
struct FopidParams {
    double kp = 0.0;
    double ki = 0.0;
    double kd = 0.0;
    double lambda = 1.0;
    double mu = 1.0;

    bool is_pid() const { return lambda == 1.0 && mu == 1.0; }
};

/// Search-space bounds: gains in [0,10], orders in [0,2].
inline constexpr double kGainLo = 0.0, kGainHi = 10.0;
inline constexpr double kOrderLo = 0.0, kOrderHi = 2.0;

/// Band-limited rational approximation settings for s^alpha.
struct OustaloupConfig {
    int order = 5;      // N; the ladder has 2N+1 zero/pole pairs
    double wb = 1e-2;   // rad/s, lower band edge
    double wh = 1e2;    // rad/s, upper band edge

    bool valid() const { return order >= 1 && wb > 0.0 && wb < wh; }
};

/// Exact (jw)^alpha on the principal branch:
/// w^alpha * (cos(alpha*pi/2) + j sin(alpha*pi/2)). Requires w > 0.
std::complex<double> frac_pow_jw(double alpha, double omega);

/// Rational approximation of s^alpha. The fractional part is realized as the
/// recursive zero/pole ladder
///   wh^f * prod_{k=-N..N} (s + w'_k)/(s + w_k),
///   w_k  = wb*(wh/wb)^((k+N+0.5+f/2)/(2N+1)),
///   w'_k = wb*(wh/wb)^((k+N+0.5-f/2)/(2N+1)),
/// and the integer part as exact powers of s. alpha is split as n + f with n
/// the NEAREST integer, so |f| <= 0.5; this keeps the ladder error small and
/// realizes near-integer orders (s^1.84, s^-0.55) with exact integrator /
/// differentiator factors. Ladder zeros and poles are all real negative.
RationalTF oustaloup(double alpha, const OustaloupConfig& cfg = {});

/// Exact irrational controller response Kp + Ki*(jw)^-lambda + Kd*(jw)^mu.
/// Corner rules: a zero gain drops its branch; a zero order turns the branch
/// into a pure gain added to Kp.
std::complex<double> fopid_freq_exact(const FopidParams& p, double omega);

/// Rational controller: the two fractional branches are replaced by their
/// Oustaloup realizations and combined over a common denominator. For
/// lambda = mu = 1 this reduces to the exact PID (Kd s^2 + Kp s + Ki)/s.
RationalTF fopid_to_rational(const FopidParams& p, const OustaloupConfig& cfg = {});

}  // namespace avrfopid
