#pragma once

#include <string>
#include <vector>

#include "avrfopid/frac_ops.hpp"
#include "avrfopid/freq_analysis.hpp"

namespace avrfopid {

/// Shortest decimal string that round-trips the double (std::to_chars).
std::string format_double(double v);

/// One Pareto-front row in table column order:
/// J1_wgc_rad_s, J2_pm_deg, Kp, Ki, Kd, lambda, mu.
struct FrontRow {
    double j1 = 0.0;
    double j2 = 0.0;
    FopidParams params;
    std::string label;  // optional leading "solution" column when present
};

void write_front_csv(const std::string& path, const std::vector<FrontRow>& rows);

/// Reads a front/table CSV. Accepts an optional leading "solution" column;
/// PID tables may omit lambda/mu (restored as 1). Throws ConfigError on a
/// missing file or malformed rows.
std::vector<FrontRow> read_front_csv(const std::string& path);

void write_bode_csv(const std::string& path, const std::vector<BodePoint>& points);

void write_step_csv(const std::string& path, const std::vector<double>& t,
                    const std::vector<double>& y);

}  // namespace avrfopid
