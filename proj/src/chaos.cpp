#include "avrfopid/chaos.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "avrfopid/errors.hpp"

namespace avrfopid {

HenonSource::HenonSource(std::uint64_t skip) {
    for (std::uint64_t i = 0; i < skip; ++i) next_uniform();
}

double HenonSource::next_uniform() {
    if (std::abs(x_) > 10.0)
        throw DivergenceError("HenonSource: state left the attractor basin");
    const double xn = y_ + 1.0 - kA * x_ * x_;
    const double yn = kB * x_;
    x_ = xn;
    y_ = yn;
    return std::clamp((yn - kYMin) / (kYMax - kYMin), 0.0, 1.0);
}

std::unique_ptr<ChaoticSource> HenonSource::clone() const {
    return std::make_unique<HenonSource>(*this);
}

LogisticSource::LogisticSource(std::uint64_t skip) {
    for (std::uint64_t i = 0; i < skip; ++i) next_uniform();
}

double LogisticSource::next_uniform() {
    double xn = kA * x_ * (1.0 - x_);
    // Exact fixed points / preimages of 0 collapse the orbit; nudge and count.
    if (xn <= 0.0 || xn >= 1.0 || xn == 0.25 || xn == 0.5 || xn == 0.75) {
        xn = std::clamp(xn, 0.0, 1.0 - 1e-9) + 1e-9;
        if (xn >= 1.0) xn = 1.0 - 1e-9;
        ++perturbations_;
    }
    x_ = xn;
    return xn;
}

std::unique_ptr<ChaoticSource> LogisticSource::clone() const {
    return std::make_unique<LogisticSource>(*this);
}

double UniformSource::next_uniform() {
    return std::uniform_real_distribution<double>(0.0, 1.0)(eng_);
}

std::unique_ptr<ChaoticSource> UniformSource::clone() const {
    return std::make_unique<UniformSource>(*this);
}

std::string to_string(SourceKind kind) {
    switch (kind) {
        case SourceKind::Henon: return "henon";
        case SourceKind::Logistic: return "logistic";
        case SourceKind::Uniform: return "uniform";
    }
    return "henon";
}

SourceKind source_kind_from_string(const std::string& s) {
    if (s == "henon") return SourceKind::Henon;
    if (s == "logistic") return SourceKind::Logistic;
    if (s == "uniform") return SourceKind::Uniform;
    throw ConfigError("unknown source kind: " + s);
}

std::unique_ptr<ChaoticSource> make_source(SourceKind kind, std::uint64_t seed) {
    switch (kind) {
        case SourceKind::Henon: return std::make_unique<HenonSource>(seed * 1000);
        case SourceKind::Logistic: return std::make_unique<LogisticSource>(seed * 1000);
        case SourceKind::Uniform: return std::make_unique<UniformSource>(seed);
    }
    throw ConfigError("unknown source kind");
}

double gaussian_from(ChaoticSource& source, double mean, double sigma) {
    if (sigma < 0.0) throw ConfigError("gaussian_from: sigma must be nonnegative");
    const double u1 = std::max(source.next_uniform(), 1e-12);
    const double u2 = source.next_uniform();
    return mean + sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace avrfopid
