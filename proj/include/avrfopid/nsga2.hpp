#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "avrfopid/avr_plant.hpp"
#include "avrfopid/chaos.hpp"
#include "avrfopid/freq_analysis.hpp"

namespace avrfopid {

using Genome = std::vector<double>;

enum class GenomeKind { Pid, Fopid };  // 3 genes (lambda=mu=1) or 5 genes

std::string to_string(GenomeKind kind);
GenomeKind genome_kind_from_string(const std::string& s);

struct GeneBounds {
    double lo, hi;
};

std::vector<GeneBounds> default_bounds(GenomeKind kind);

struct Individual {
    Genome genome;
    std::vector<double> objectives;  // maximized
    bool feasible = false;
    bool evaluated = false;
    int rank = 0;            // 1 = non-dominated
    double crowding = 0.0;   // +inf at front boundaries
};

enum class EvalMode { Serial, OpenMP };

struct Nsga2Config {
    GenomeKind kind = GenomeKind::Fopid;
    int pop_size = 200;
    int generations = 150;
    int elite_count = 30;
    double crossover_fraction = 0.8;   // Cr; mutation fraction is 1 - Cr
    double mutation_sigma = 0.1;       // fraction of the mutated gene's range
    double pareto_fraction = 0.35;     // final rank-1 truncation
    SourceKind source = SourceKind::Henon;
    std::uint64_t seed = 0;
    std::vector<GeneBounds> bounds;    // empty -> default_bounds(kind)
    double penalty = 1e6;
    LoopTopology topology = LoopTopology::SensorInFeedback;
    MarginScanConfig margins;
    bool normalized_crowding = false;  // classical range-normalized variant
    EvalMode eval_mode = EvalMode::OpenMP;

    void validate() const;  // throws ConfigError
};

struct EvalContext {
    GenomeKind kind = GenomeKind::Fopid;
    AvrParams plant;
    LoopTopology topology = LoopTopology::SensorInFeedback;
    MarginScanConfig margins;
    double penalty = 1e6;
};

struct EvalResult {
    std::vector<double> objectives;
    bool feasible = false;
};

/// Penalized objective evaluation: (wgc, pm) when a crossover exists with
/// pm > 0 and gm > 0 (or gm = +inf), else (-penalty, -penalty). Margin
/// failures are never allowed to escape as exceptions.
EvalResult evaluate_genome(const Genome& genome, const EvalContext& ctx);

/// Evaluate every not-yet-evaluated member. The OpenMP path parallelizes
/// over individuals; evaluation is pure, so both modes give identical
/// results. The serial path is the reference kept for testing/benchmarks.
void evaluate_population(std::vector<Individual>& pop, const EvalContext& ctx, EvalMode mode);

/// a dominates b under maximization: >= everywhere, > somewhere.
bool dominates(const std::vector<double>& a, const std::vector<double>& b);

/// Iterative non-dominated peeling; assigns ranks starting at 1.
void non_dominated_sort(std::vector<Individual>& pop);

/// Crowding distances within each rank front. Raw objective gaps by default
/// (no range normalization); boundary members get +inf.
void crowding_distance(std::vector<Individual>& pop, bool normalized = false);

/// Crowded-comparison: lower rank wins, then larger crowding, then lower
/// population index (deterministic tie-break).
bool crowded_better(const Individual& a, const Individual& b, std::size_t ia, std::size_t ib);

std::pair<Genome, Genome> intermediate_crossover(const Genome& p1, const Genome& p2,
                                                 ChaoticSource& source,
                                                 const std::vector<GeneBounds>& bounds);

Genome gaussian_mutation(const Genome& g, ChaoticSource& source, double sigma_frac,
                         const std::vector<GeneBounds>& bounds);

struct GenerationStats {
    int generation;
    double best_j1;  // best feasible J1 so far in the population
    double best_j2;
    int feasible_count;
};

struct RunResult {
    std::vector<Individual> front;          // rank-1, crowding-truncated
    std::vector<GenerationStats> history;
    double wall_seconds = 0.0;
};

RunResult run(const Nsga2Config& cfg, const AvrParams& plant);

}  // namespace avrfopid
