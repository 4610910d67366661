#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>

namespace avrfopid {

/// Deterministic stream of uniforms in [0,1]. Single-consumer: the optimizer
/// owns one source per run and draws only from its sequential variation
/// phase. Not safe for concurrent draws.
class ChaoticSource {
public:
    virtual ~ChaoticSource() = default;
    virtual double next_uniform() = 0;
    virtual std::unique_ptr<ChaoticSource> clone() const = 0;
    virtual std::string kind() const = 0;
};

/// Henon map x' = y + 1 - a*x^2, y' = b*x with a=1.4, b=0.3, started from
/// (0,0). The emitted uniform is the new y affinely scaled from the
/// attractor range [-0.3854, 0.3819] into [0,1] and clamped. `skip` discards
/// that many initial draws (seed mechanism); 0 keeps the raw transient.
class HenonSource final : public ChaoticSource {
public:
    explicit HenonSource(std::uint64_t skip = 0);

    double next_uniform() override;
    std::unique_ptr<ChaoticSource> clone() const override;
    std::string kind() const override { return "henon"; }

    double x() const { return x_; }
    double y() const { return y_; }

    static constexpr double kA = 1.4;
    static constexpr double kB = 0.3;
    static constexpr double kYMin = -0.3854;
    static constexpr double kYMax = 0.3819;

private:
    double x_ = 0.0;
    double y_ = 0.0;
};

/// Logistic map x' = a*x*(1-x) with a = 4, x0 = 0.2027. If rounding lands on
/// a fixed point or an exact preimage of one ({0, .25, .5, .75, 1}), the
/// state is nudged by 1e-9 and the event counted.
class LogisticSource final : public ChaoticSource {
public:
    explicit LogisticSource(std::uint64_t skip = 0);

    double next_uniform() override;
    std::unique_ptr<ChaoticSource> clone() const override;
    std::string kind() const override { return "logistic"; }

    double x() const { return x_; }
    std::uint64_t perturbations() const { return perturbations_; }

    static constexpr double kA = 4.0;
    static constexpr double kX0 = 0.2027;

private:
    double x_ = kX0;
    std::uint64_t perturbations_ = 0;
};

/// Conventional seeded baseline for the original-NSGA-II comparison arm.
class UniformSource final : public ChaoticSource {
public:
    explicit UniformSource(std::uint64_t seed = 0) : eng_(seed) {}

    double next_uniform() override;
    std::unique_ptr<ChaoticSource> clone() const override;
    std::string kind() const override { return "uniform"; }

private:
    std::mt19937_64 eng_;
};

enum class SourceKind { Henon, Logistic, Uniform };

std::string to_string(SourceKind kind);
SourceKind source_kind_from_string(const std::string& s);

/// For the chaotic maps, seed k discards 1000*k initial draws; for the
/// uniform baseline it seeds the engine directly.
std::unique_ptr<ChaoticSource> make_source(SourceKind kind, std::uint64_t seed);

/// Box-Muller deviate from two consecutive uniforms; u1 is floored at 1e-12.
double gaussian_from(ChaoticSource& source, double mean, double sigma);

}  // namespace avrfopid
