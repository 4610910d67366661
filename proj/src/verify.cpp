#include "avrfopid/verify.hpp"

#include <cmath>

#include "avrfopid/avr_plant.hpp"

namespace avrfopid {

std::string to_string(ControllerRep rep) {
    return rep == ControllerRep::Exact ? "exact" : "oustaloup";
}

TableReport verify_rows(const std::vector<FrontRow>& rows, const AvrParams& plant,
                        LoopTopology topology, ControllerRep rep, double tol_j1_rel,
                        double tol_j2_abs, const OustaloupConfig& ocfg,
                        const MarginScanConfig& mcfg) {
    TableReport report;
    report.tol_j1_rel = tol_j1_rel;
    report.tol_j2_abs = tol_j2_abs;
    report.rows.reserve(rows.size());

    for (const FrontRow& row : rows) {
        RowCheck check;
        check.row = row;
        ControllerResponse ctrl;
        if (rep == ControllerRep::Exact) {
            ctrl = [p = row.params](double w) { return fopid_freq_exact(p, w); };
        } else {
            ctrl = [tf = fopid_to_rational(row.params, ocfg)](double w) { return tf.eval_jw(w); };
        }
        const LoopResponse loop = effective_open_loop(std::move(ctrl), plant, topology);
        if (const auto m = try_find_margins(loop, mcfg)) {
            check.evaluated = true;
            check.j1_calc = m->wgc;
            check.j2_calc = m->pm_deg;
            check.j1_rel_err = std::abs(m->wgc - row.j1) / std::abs(row.j1);
            check.j2_abs_err = std::abs(m->pm_deg - row.j2);
            check.multiple_crossings = m->multiple_crossings;
            check.pass = check.j1_rel_err <= tol_j1_rel && check.j2_abs_err <= tol_j2_abs;
        }
        report.n_pass += check.pass;
        report.rows.push_back(std::move(check));
    }
    report.pass_rate = rows.empty() ? 0.0 : static_cast<double>(report.n_pass) / rows.size();
    return report;
}

std::vector<FrontRow> dedupe_rows(const std::vector<FrontRow>& rows) {
    std::vector<FrontRow> out;
    for (const FrontRow& r : rows) {
        bool dup = false;
        for (const FrontRow& kept : out) {
            if (kept.params.kp == r.params.kp && kept.params.ki == r.params.ki &&
                kept.params.kd == r.params.kd && kept.params.lambda == r.params.lambda &&
                kept.params.mu == r.params.mu) {
                dup = true;
                break;
            }
        }
        if (!dup) out.push_back(r);
    }
    return out;
}

std::vector<DominatedPair> dominated_pairs(const std::vector<FrontRow>& rows) {
    std::vector<DominatedPair> out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (i == j) continue;
            const bool ge = rows[i].j1 >= rows[j].j1 && rows[i].j2 >= rows[j].j2;
            const bool gt = rows[i].j1 > rows[j].j1 || rows[i].j2 > rows[j].j2;
            if (ge && gt) out.push_back({i, j});
        }
    }
    return out;
}

}  // namespace avrfopid
