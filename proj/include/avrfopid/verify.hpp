#pragma once

#include <string>
#include <vector>

#include "avrfopid/csv_io.hpp"
#include "avrfopid/freq_analysis.hpp"
#include "avrfopid/frac_ops.hpp"

namespace avrfopid {

enum class ControllerRep { Exact, Oustaloup };

std::string to_string(ControllerRep rep);

struct RowCheck {
    FrontRow row;
    bool evaluated = false;   // margins existed
    double j1_calc = 0.0;
    double j2_calc = 0.0;
    double j1_rel_err = 0.0;
    double j2_abs_err = 0.0;
    bool multiple_crossings = false;
    bool pass = false;
};

struct TableReport {
    std::vector<RowCheck> rows;
    int n_pass = 0;
    double pass_rate = 0.0;
    double tol_j1_rel = 0.0;
    double tol_j2_abs = 0.0;
};

/// Re-evaluates every row's genome at the given plant/topology with the
/// chosen controller representation and compares against the stated (J1,J2).
TableReport verify_rows(const std::vector<FrontRow>& rows, const AvrParams& plant,
                        LoopTopology topology, ControllerRep rep, double tol_j1_rel,
                        double tol_j2_abs, const OustaloupConfig& ocfg = {},
                        const MarginScanConfig& mcfg = {});

/// Drops duplicated genomes, keeping first occurrences in order.
std::vector<FrontRow> dedupe_rows(const std::vector<FrontRow>& rows);

struct DominatedPair {
    std::size_t winner, loser;
};

/// All (i,j) where row i dominates row j under maximization of (J1, J2).
std::vector<DominatedPair> dominated_pairs(const std::vector<FrontRow>& rows);

}  // namespace avrfopid
