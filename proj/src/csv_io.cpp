#include "avrfopid/csv_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "avrfopid/errors.hpp"

namespace avrfopid {

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) {
        while (!field.empty() && (field.back() == '\r' || field.back() == ' ')) field.pop_back();
        std::size_t start = 0;
        while (start < field.size() && field[start] == ' ') ++start;
        out.push_back(field.substr(start));
    }
    return out;
}

double parse_double(const std::string& s, const std::string& path) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw ConfigError(path + ": malformed numeric field '" + s + "'");
    return v;
}

}  // namespace

void write_front_csv(const std::string& path, const std::vector<FrontRow>& rows) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open for writing: " + path);
    out << "J1_wgc_rad_s,J2_pm_deg,Kp,Ki,Kd,lambda,mu\n";
    for (const auto& r : rows) {
        out << format_double(r.j1) << ',' << format_double(r.j2) << ','
            << format_double(r.params.kp) << ',' << format_double(r.params.ki) << ','
            << format_double(r.params.kd) << ',' << format_double(r.params.lambda) << ','
            << format_double(r.params.mu) << '\n';
    }
}

std::vector<FrontRow> read_front_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open table file: " + path);
    std::string line;
    if (!std::getline(in, line)) throw ConfigError(path + ": empty file");

    const std::vector<std::string> header = split_csv_line(line);
    const bool has_label = !header.empty() && header[0] == "solution";
    const std::size_t base = has_label ? 1 : 0;
    if (header.size() < base + 5) throw ConfigError(path + ": expected at least 5 data columns");
    const bool has_orders = header.size() >= base + 7;

    std::vector<FrontRow> rows;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        const std::vector<std::string> f = split_csv_line(line);
        if (f.size() < base + 5) throw ConfigError(path + ": short row '" + line + "'");
        FrontRow r;
        if (has_label) r.label = f[0];
        r.j1 = parse_double(f[base + 0], path);
        r.j2 = parse_double(f[base + 1], path);
        r.params.kp = parse_double(f[base + 2], path);
        r.params.ki = parse_double(f[base + 3], path);
        r.params.kd = parse_double(f[base + 4], path);
        r.params.lambda = has_orders && f.size() > base + 5 ? parse_double(f[base + 5], path) : 1.0;
        r.params.mu = has_orders && f.size() > base + 6 ? parse_double(f[base + 6], path) : 1.0;
        rows.push_back(std::move(r));
    }
    if (rows.empty()) throw ConfigError(path + ": no data rows");
    return rows;
}

void write_bode_csv(const std::string& path, const std::vector<BodePoint>& points) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open for writing: " + path);
    out << "omega_rad_s,mag_db,phase_deg\n";
    for (const auto& p : points)
        out << format_double(p.omega_rad_s) << ',' << format_double(p.mag_db) << ','
            << format_double(p.phase_deg) << '\n';
}

void write_step_csv(const std::string& path, const std::vector<double>& t,
                    const std::vector<double>& y) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open for writing: " + path);
    out << "t_s,y_pu\n";
    for (std::size_t i = 0; i < t.size(); ++i)
        out << format_double(t[i]) << ',' << format_double(y[i]) << '\n';
}

}  // namespace avrfopid
