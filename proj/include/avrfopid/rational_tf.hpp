#pragma once

#include <complex>
#include <vector>

#include "avrfopid/polynomial.hpp"

namespace avrfopid {

/// Ratio of two real-coefficient polynomials in s. No pole-zero cancellation
/// is ever attempted; compositions are exact polynomial products.
struct RationalTF {
    Polynomial num;
    Polynomial den;

    RationalTF() : num{0.0}, den{1.0} {}
    RationalTF(Polynomial n, Polynomial d);

    static RationalTF constant(double k) { return {Polynomial::constant(k), Polynomial::constant(1.0)}; }
    static RationalTF one() { return constant(1.0); }

    /// H(jw). Throws PoleOnAxisError when |den(jw)| is below a
    /// machine-scaled threshold.
    std::complex<double> eval_jw(double omega) const;
    std::complex<double> eval(std::complex<double> s) const;

    bool proper() const { return num.degree() <= den.degree(); }
    /// num(0)/den(0); +-inf on a pole at the origin.
    double dc_gain() const;
};

RationalTF series(const RationalTF& a, const RationalTF& b);
RationalTF parallel(const RationalTF& a, const RationalTF& b);
RationalTF scale(const RationalTF& a, double k);

/// forward/(1 + forward*back). Throws DegenerateLoopError when the closed
/// denominator collapses to the zero polynomial.
RationalTF feedback(const RationalTF& forward, const RationalTF& back);

struct PolesResult {
    std::vector<std::complex<double>> roots;
    double max_residual;  // max |den_monic(root)| / max(1,|root|)^deg
};

/// All denominator roots via the monic companion matrix (Eigen eigensolver).
/// Throws ConvergenceFailureError if the worst scaled residual exceeds tol.
PolesResult poles(const RationalTF& tf, double residual_tol = 1e-6);

}  // namespace avrfopid
