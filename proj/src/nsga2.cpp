#include "avrfopid/nsga2.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>

#include "avrfopid/errors.hpp"
#include "avrfopid/frac_ops.hpp"

namespace avrfopid {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

FopidParams params_from_genome(const Genome& g, GenomeKind kind) {
    FopidParams p;
    p.kp = g[0];
    p.ki = g[1];
    p.kd = g[2];
    if (kind == GenomeKind::Fopid) {
        p.lambda = g[3];
        p.mu = g[4];
    }
    return p;
}

}  // namespace

std::string to_string(GenomeKind kind) {
    return kind == GenomeKind::Pid ? "pid" : "fopid";
}

GenomeKind genome_kind_from_string(const std::string& s) {
    if (s == "pid") return GenomeKind::Pid;
    if (s == "fopid") return GenomeKind::Fopid;
    throw ConfigError("unknown controller kind: " + s);
}

std::vector<GeneBounds> default_bounds(GenomeKind kind) {
    std::vector<GeneBounds> b{{kGainLo, kGainHi}, {kGainLo, kGainHi}, {kGainLo, kGainHi}};
    if (kind == GenomeKind::Fopid) {
        b.push_back({kOrderLo, kOrderHi});
        b.push_back({kOrderLo, kOrderHi});
    }
    return b;
}

void Nsga2Config::validate() const {
    if (pop_size < 2) throw ConfigError("pop_size must be >= 2");
    if (generations < 0) throw ConfigError("generations must be >= 0");
    if (elite_count < 0 || elite_count >= pop_size)
        throw ConfigError("elite_count must satisfy 0 <= elite_count < pop_size");
    if (crossover_fraction < 0.0 || crossover_fraction > 1.0)
        throw ConfigError("crossover_fraction must be in [0,1]");
    if (mutation_sigma < 0.0) throw ConfigError("mutation_sigma must be >= 0");
    if (pareto_fraction <= 0.0 || pareto_fraction > 1.0)
        throw ConfigError("pareto_fraction must be in (0,1]");
    if (penalty <= 0.0) throw ConfigError("penalty must be positive");
    const std::size_t genes = kind == GenomeKind::Pid ? 3 : 5;
    if (!bounds.empty() && bounds.size() != genes)
        throw ConfigError("bounds must list one [lo,hi] pair per gene");
    for (const auto& b : bounds)
        if (!(b.lo < b.hi)) throw ConfigError("each gene bound needs lo < hi");
    if (margins.wmin <= 0 || margins.wmin >= margins.wmax)
        throw ConfigError("margin scan band needs 0 < wmin < wmax");
}

EvalResult evaluate_genome(const Genome& genome, const EvalContext& ctx) {
    const FopidParams p = params_from_genome(genome, ctx.kind);
    const LoopResponse loop = effective_open_loop(
        [p](double w) { return fopid_freq_exact(p, w); }, ctx.plant, ctx.topology);
    const std::optional<Margins> m = try_find_margins(loop, ctx.margins);
    if (m && m->pm_deg > 0.0 && m->gm_db > 0.0)
        return {{m->wgc, m->pm_deg}, true};
    return {{-ctx.penalty, -ctx.penalty}, false};
}

void evaluate_population(std::vector<Individual>& pop, const EvalContext& ctx, EvalMode mode) {
    const auto n = static_cast<std::ptrdiff_t>(pop.size());
    if (mode == EvalMode::OpenMP) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            if (pop[i].evaluated) continue;
            const EvalResult r = evaluate_genome(pop[i].genome, ctx);
            pop[i].objectives = r.objectives;
            pop[i].feasible = r.feasible;
            pop[i].evaluated = true;
        }
    } else {
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            if (pop[i].evaluated) continue;
            const EvalResult r = evaluate_genome(pop[i].genome, ctx);
            pop[i].objectives = r.objectives;
            pop[i].feasible = r.feasible;
            pop[i].evaluated = true;
        }
    }
}

bool dominates(const std::vector<double>& a, const std::vector<double>& b) {
    bool strict = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return false;
        if (a[i] > b[i]) strict = true;
    }
    return strict;
}

void non_dominated_sort(std::vector<Individual>& pop) {
    std::vector<std::size_t> pool(pop.size());
    std::iota(pool.begin(), pool.end(), 0u);
    int rank = 0;
    while (!pool.empty()) {
        ++rank;
        std::vector<std::size_t> front, rest;
        for (std::size_t i : pool) {
            bool dominated = false;
            for (std::size_t j : pool) {
                if (i != j && dominates(pop[j].objectives, pop[i].objectives)) {
                    dominated = true;
                    break;
                }
            }
            (dominated ? rest : front).push_back(i);
        }
        for (std::size_t i : front) pop[i].rank = rank;
        pool = std::move(rest);
    }
}

void crowding_distance(std::vector<Individual>& pop, bool normalized) {
    if (pop.empty()) return;
    const std::size_t n_obj = pop[0].objectives.size();
    int max_rank = 0;
    for (const auto& ind : pop) max_rank = std::max(max_rank, ind.rank);

    for (int r = 1; r <= max_rank; ++r) {
        std::vector<std::size_t> front;
        for (std::size_t i = 0; i < pop.size(); ++i)
            if (pop[i].rank == r) front.push_back(i);
        if (front.empty()) continue;
        for (std::size_t i : front) pop[i].crowding = 0.0;
        for (std::size_t k = 0; k < n_obj; ++k) {
            std::stable_sort(front.begin(), front.end(), [&](std::size_t a, std::size_t b) {
                if (pop[a].objectives[k] != pop[b].objectives[k])
                    return pop[a].objectives[k] < pop[b].objectives[k];
                return a < b;
            });
            pop[front.front()].crowding = kInf;
            pop[front.back()].crowding = kInf;
            const double range = pop[front.back()].objectives[k] - pop[front.front()].objectives[k];
            const double denom = normalized && range > 0.0 ? range : 1.0;
            for (std::size_t j = 1; j + 1 < front.size(); ++j) {
                if (std::isinf(pop[front[j]].crowding)) continue;
                pop[front[j]].crowding +=
                    (pop[front[j + 1]].objectives[k] - pop[front[j - 1]].objectives[k]) / denom;
            }
        }
    }
}

bool crowded_better(const Individual& a, const Individual& b, std::size_t ia, std::size_t ib) {
    if (a.rank != b.rank) return a.rank < b.rank;
    if (a.crowding != b.crowding) return a.crowding > b.crowding;
    return ia < ib;
}

std::pair<Genome, Genome> intermediate_crossover(const Genome& p1, const Genome& p2,
                                                 ChaoticSource& source,
                                                 const std::vector<GeneBounds>& bounds) {
    Genome c1 = p1, c2 = p2;
    for (std::size_t g = 0; g < p1.size(); ++g) {
        const double u = source.next_uniform();
        c1[g] = std::clamp(p1[g] + u * (p2[g] - p1[g]), bounds[g].lo, bounds[g].hi);
        c2[g] = std::clamp(p2[g] + u * (p1[g] - p2[g]), bounds[g].lo, bounds[g].hi);
    }
    return {std::move(c1), std::move(c2)};
}

Genome gaussian_mutation(const Genome& g, ChaoticSource& source, double sigma_frac,
                         const std::vector<GeneBounds>& bounds) {
    Genome out = g;
    const auto n = static_cast<double>(g.size());
    const auto idx = std::min(static_cast<std::size_t>(source.next_uniform() * n), g.size() - 1);
    const double range = bounds[idx].hi - bounds[idx].lo;
    out[idx] = std::clamp(out[idx] + gaussian_from(source, 0.0, sigma_frac * range),
                          bounds[idx].lo, bounds[idx].hi);
    return out;
}

namespace {

std::size_t tournament(const std::vector<Individual>& pop, ChaoticSource& source) {
    const auto n = static_cast<double>(pop.size());
    const auto i = std::min(static_cast<std::size_t>(source.next_uniform() * n), pop.size() - 1);
    const auto j = std::min(static_cast<std::size_t>(source.next_uniform() * n), pop.size() - 1);
    return crowded_better(pop[i], pop[j], i, j) ? i : j;
}

}  // namespace

RunResult run(const Nsga2Config& cfg, const AvrParams& plant) {
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();

    const std::vector<GeneBounds> bounds =
        cfg.bounds.empty() ? default_bounds(cfg.kind) : cfg.bounds;
    const EvalContext ctx{cfg.kind, plant, cfg.topology, cfg.margins, cfg.penalty};
    std::unique_ptr<ChaoticSource> source = make_source(cfg.source, cfg.seed);

    std::vector<Individual> pop(static_cast<std::size_t>(cfg.pop_size));
    for (auto& ind : pop) {
        ind.genome.resize(bounds.size());
        for (std::size_t g = 0; g < bounds.size(); ++g)
            ind.genome[g] = bounds[g].lo + (bounds[g].hi - bounds[g].lo) * source->next_uniform();
    }

    RunResult result;
    for (int gen = 0; gen <= cfg.generations; ++gen) {
        evaluate_population(pop, ctx, cfg.eval_mode);
        non_dominated_sort(pop);
        crowding_distance(pop, cfg.normalized_crowding);

        GenerationStats stats{gen, -kInf, -kInf, 0};
        for (const auto& ind : pop) {
            if (!ind.feasible) continue;
            ++stats.feasible_count;
            stats.best_j1 = std::max(stats.best_j1, ind.objectives[0]);
            stats.best_j2 = std::max(stats.best_j2, ind.objectives[1]);
        }
        result.history.push_back(stats);
        if (gen == cfg.generations) break;

        // Elites pass unchanged; children fill the rest, Cr of them by
        // crossover of tournament parents, the remainder by mutation of
        // tournament winners. All draws happen here, sequentially.
        std::vector<std::size_t> order(pop.size());
        std::iota(order.begin(), order.end(), 0u);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return crowded_better(pop[a], pop[b], a, b);
        });

        std::vector<Individual> next;
        next.reserve(pop.size());
        for (int e = 0; e < cfg.elite_count; ++e) next.push_back(pop[order[static_cast<std::size_t>(e)]]);

        const int n_children = cfg.pop_size - cfg.elite_count;
        const int n_cross = static_cast<int>(std::lround(cfg.crossover_fraction * n_children));
        while (static_cast<int>(next.size()) < cfg.elite_count + n_cross) {
            const Genome& p1 = pop[tournament(pop, *source)].genome;
            const Genome& p2 = pop[tournament(pop, *source)].genome;
            auto [c1, c2] = intermediate_crossover(p1, p2, *source, bounds);
            Individual child;
            child.genome = std::move(c1);
            next.push_back(std::move(child));
            if (static_cast<int>(next.size()) < cfg.elite_count + n_cross) {
                Individual child2;
                child2.genome = std::move(c2);
                next.push_back(std::move(child2));
            }
        }
        while (static_cast<int>(next.size()) < cfg.pop_size) {
            Individual child;
            child.genome =
                gaussian_mutation(pop[tournament(pop, *source)].genome, *source, cfg.mutation_sigma, bounds);
            next.push_back(std::move(child));
        }
        pop = std::move(next);
    }

    // Rank-1 set, truncated to ceil(pareto_fraction * pop) by descending
    // crowding distance, reported in ascending J1 order.
    std::vector<std::size_t> front_idx;
    for (std::size_t i = 0; i < pop.size(); ++i)
        if (pop[i].rank == 1) front_idx.push_back(i);
    std::sort(front_idx.begin(), front_idx.end(), [&](std::size_t a, std::size_t b) {
        if (pop[a].crowding != pop[b].crowding) return pop[a].crowding > pop[b].crowding;
        return a < b;
    });
    const auto cap = static_cast<std::size_t>(
        std::ceil(cfg.pareto_fraction * static_cast<double>(cfg.pop_size)));
    if (front_idx.size() > cap) front_idx.resize(cap);

    for (std::size_t i : front_idx) result.front.push_back(pop[i]);
    std::sort(result.front.begin(), result.front.end(), [](const Individual& a, const Individual& b) {
        if (a.objectives[0] != b.objectives[0]) return a.objectives[0] < b.objectives[0];
        return a.objectives[1] < b.objectives[1];
    });

    result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

}  // namespace avrfopid
