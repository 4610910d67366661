#include "avrfopid/freq_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "avrfopid/errors.hpp"

namespace avrfopid {

namespace {

constexpr double kRad2Deg = 180.0 / std::numbers::pi;

double wrap_delta_deg(double d) {
    while (d > 180.0) d -= 360.0;
    while (d <= -180.0) d += 360.0;
    return d;
}

// pm normalized into (-180, 180]; identity whenever the unwrapped phase at
// the crossing already sits in (-360, 0].
double wrap_pm_deg(double pm) { return wrap_delta_deg(pm); }

struct ScanPoint {
    double w;
    double mag;
    double pv_deg;   // principal-value phase
    double unw_deg;  // continuously unwrapped phase
};

// Evaluates the loop, sidestepping isolated singular frequencies by nudging
// omega a few ppb upward.
std::complex<double> eval_nudged(const LoopResponse& loop, double w) {
    for (int attempt = 0; attempt < 4; ++attempt) {
        try {
            return loop(w);
        } catch (const SingularResponseError&) {
            w *= 1.0 + 1e-9;
        } catch (const PoleOnAxisError&) {
            w *= 1.0 + 1e-9;
        }
    }
    return loop(w);
}

double safe_log_mag(std::complex<double> h) {
    const double m = std::abs(h);
    return std::log(std::max(m, 1e-300));
}

class LoopScan {
public:
    LoopScan(const LoopResponse& loop, double wmin, double wmax, int n) : loop_(loop) {
        points_.reserve(static_cast<std::size_t>(n) + 64);
        const double lmin = std::log(wmin), lmax = std::log(wmax);
        ScanPoint first = probe(wmin);
        first.unw_deg = first.pv_deg;  // principal value anchors the unwrap
        points_.push_back(first);
        for (int i = 1; i < n; ++i) {
            const double w = std::exp(lmin + (lmax - lmin) * i / (n - 1));
            append(probe(w), 0);
        }
    }

    const std::vector<ScanPoint>& points() const { return points_; }
    const LoopResponse& loop() const { return loop_; }

    ScanPoint probe(double w) const {
        const std::complex<double> h = eval_nudged(loop_, w);
        return {w, std::abs(h), std::atan2(h.imag(), h.real()) * kRad2Deg, 0.0};
    }

    // Unwrapped phase at w inside the cell anchored at `anchor`, reached by
    // marching a few unwrap sub-steps (handles bisection points that are not
    // on the grid).
    double unwrapped_at(const ScanPoint& anchor, double w, int substeps = 8) const {
        double unw = anchor.unw_deg;
        double pv_prev = anchor.pv_deg;
        const double l0 = std::log(anchor.w), l1 = std::log(w);
        for (int i = 1; i <= substeps; ++i) {
            const ScanPoint p = probe(std::exp(l0 + (l1 - l0) * i / substeps));
            unw += wrap_delta_deg(p.pv_deg - pv_prev);
            pv_prev = p.pv_deg;
        }
        return unw;
    }

private:
    // Appends p, densifying the segment when the phase step is too large to
    // unwrap reliably. A true +-180 jump (axis pole of the effective loop)
    // stays large at any depth; past the depth cap the wrapped delta is
    // accepted as-is.
    void append(const ScanPoint& p, int depth) {
        const ScanPoint& prev = points_.back();
        const double d = wrap_delta_deg(p.pv_deg - prev.pv_deg);
        if (std::abs(d) > 170.0 && depth < 24 && points_.size() < 200000) {
            append(probe(std::sqrt(prev.w * p.w)), depth + 1);
            append(p, depth + 1);
            return;
        }
        ScanPoint q = p;
        q.unw_deg = prev.unw_deg + d;
        points_.push_back(q);
    }

    const LoopResponse& loop_;
    std::vector<ScanPoint> points_;
};

struct Crossing {
    double w;
    double pm_deg;
    bool falling;
};

// Bisection in log-omega for |G| = 1 inside [lo, hi]; lo side has
// log|G| > 0 iff falling.
double refine_unity(const LoopScan& scan, double wl, double wr, bool falling) {
    for (int i = 0; i < 100 && (wr - wl) > 1e-12 * wl; ++i) {
        const double wm = std::sqrt(wl * wr);
        const bool above = safe_log_mag(eval_nudged(scan.loop(), wm)) > 0.0;
        if (above == falling)
            wl = wm;
        else
            wr = wm;
    }
    return std::sqrt(wl * wr);
}

// Bisection for unwrapped phase = level inside one scan cell.
double refine_phase_level(const LoopScan& scan, const ScanPoint& left, double wr_init,
                          double level) {
    double wl = left.w, wr = wr_init;
    const bool left_above = left.unw_deg > level;
    for (int i = 0; i < 80 && (wr - wl) > 1e-12 * wl; ++i) {
        const double wm = std::sqrt(wl * wr);
        const double ph = scan.unwrapped_at(left, wm, 4);
        if ((ph > level) == left_above)
            wl = wm;
        else
            wr = wm;
    }
    return std::sqrt(wl * wr);
}

}  // namespace

Margins find_margins(const LoopResponse& loop, const MarginScanConfig& cfg) {
    const int n = std::max(cfg.grid_points, 2000);
    const LoopScan scan(loop, cfg.wmin, cfg.wmax, n);
    const auto& pts = scan.points();

    std::vector<Crossing> crossings;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double l0 = std::log(std::max(pts[i].mag, 1e-300));
        const double l1 = std::log(std::max(pts[i + 1].mag, 1e-300));
        const bool falling = l0 > 0.0 && l1 <= 0.0;
        const bool rising = l0 < 0.0 && l1 >= 0.0;
        if (!falling && !rising) continue;
        const double wgc = refine_unity(scan, pts[i].w, pts[i + 1].w, falling);
        const double unw = scan.unwrapped_at(pts[i], wgc);
        crossings.push_back({wgc, wrap_pm_deg(180.0 + unw), falling});
    }

    Margins out;
    out.multiple_crossings = crossings.size() > 1;

    bool have = false;
    for (const Crossing& c : crossings) {
        if (!c.falling) continue;  // gain crossover = |G| falling through 1
        if (!have || c.pm_deg < out.pm_deg) {
            out.wgc = c.w;
            out.pm_deg = c.pm_deg;
            have = true;
        }
    }
    if (!have) throw NoGainCrossoverError("find_margins: |G| never falls through 1 in band");

    // Phase crossovers: every level -180 + 360k reached by the unwrapped
    // phase counts; the smallest gain margin wins.
    double unw_min = pts[0].unw_deg, unw_max = pts[0].unw_deg;
    for (const auto& p : pts) {
        unw_min = std::min(unw_min, p.unw_deg);
        unw_max = std::max(unw_max, p.unw_deg);
    }
    const int k_lo = static_cast<int>(std::ceil((unw_min + 180.0) / 360.0));
    const int k_hi = static_cast<int>(std::floor((unw_max + 180.0) / 360.0));
    for (int k = k_lo; k <= k_hi; ++k) {
        const double level = -180.0 + 360.0 * k;
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            const double a = pts[i].unw_deg - level, b = pts[i + 1].unw_deg - level;
            if (a == 0.0 || (a > 0) == (b > 0)) continue;
            const double wpc = refine_phase_level(scan, pts[i], pts[i + 1].w, level);
            const double gm = -20.0 * std::log10(std::max(std::abs(eval_nudged(loop, wpc)), 1e-300));
            if (!out.wpc || gm < out.gm_db) {
                out.wpc = wpc;
                out.gm_db = gm;
            }
        }
    }
    return out;
}

std::optional<Margins> try_find_margins(const LoopResponse& loop, const MarginScanConfig& cfg) {
    try {
        return find_margins(loop, cfg);
    } catch (const NoGainCrossoverError&) {
        return std::nullopt;
    } catch (const SingularResponseError&) {
        return std::nullopt;
    } catch (const PoleOnAxisError&) {
        return std::nullopt;
    }
}

std::vector<BodePoint> bode_data(const LoopResponse& loop, double wmin, double wmax,
                                 int points_per_decade) {
    if (points_per_decade < 1) throw ConfigError("bode_data: points_per_decade must be >= 1");
    const double decades = std::log10(wmax / wmin);
    const int n = std::max(2, static_cast<int>(std::lround(decades * points_per_decade)) + 1);

    std::vector<BodePoint> out;
    out.reserve(static_cast<std::size_t>(n));
    double pv_prev = 0.0, unw = 0.0;
    for (int i = 0; i < n; ++i) {
        const double w = wmin * std::pow(10.0, decades * i / (n - 1));
        const std::complex<double> h = eval_nudged(loop, w);
        const double pv = std::atan2(h.imag(), h.real()) * kRad2Deg;
        if (i == 0)
            unw = pv;
        else
            unw += wrap_delta_deg(pv - pv_prev);
        pv_prev = pv;
        out.push_back({w, 20.0 * std::log10(std::max(std::abs(h), 1e-300)), unw});
    }
    return out;
}

}  // namespace avrfopid
