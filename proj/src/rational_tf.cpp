#include "avrfopid/rational_tf.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>

#include "avrfopid/errors.hpp"

namespace avrfopid {

RationalTF::RationalTF(Polynomial n, Polynomial d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw DegenerateLoopError("RationalTF: zero denominator polynomial");
}

namespace {

// Scale for "den(jw) is numerically zero": largest term magnitude of the
// Horner evaluation at |s| = max(1, |w|).
double denominator_scale(const Polynomial& den, double omega) {
    const double r = std::max(1.0, std::abs(omega));
    double scale = 0.0, p = 1.0;
    for (double c : den.coeffs()) {
        scale = std::max(scale, std::abs(c) * p);
        p *= r;
    }
    return scale;
}

}  // namespace

std::complex<double> RationalTF::eval_jw(double omega) const {
    const std::complex<double> s(0.0, omega);
    const std::complex<double> d = den.eval(s);
    if (std::abs(d) < 1e-14 * denominator_scale(den, omega))
        throw PoleOnAxisError("RationalTF::eval_jw: denominator vanishes at omega");
    return num.eval(s) / d;
}

std::complex<double> RationalTF::eval(std::complex<double> s) const {
    return num.eval(s) / den.eval(s);
}

double RationalTF::dc_gain() const {
    const double n0 = num.coeffs()[0], d0 = den.coeffs()[0];
    if (d0 == 0.0) {
        if (n0 == 0.0) return std::numeric_limits<double>::quiet_NaN();
        return n0 > 0 ? std::numeric_limits<double>::infinity()
                      : -std::numeric_limits<double>::infinity();
    }
    return n0 / d0;
}

RationalTF series(const RationalTF& a, const RationalTF& b) {
    return {a.num * b.num, a.den * b.den};
}

RationalTF parallel(const RationalTF& a, const RationalTF& b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
}

RationalTF scale(const RationalTF& a, double k) {
    return {a.num * k, a.den};
}

RationalTF feedback(const RationalTF& forward, const RationalTF& back) {
    Polynomial num = forward.num * back.den;
    Polynomial den = forward.den * back.den + forward.num * back.num;
    if (den.is_zero()) throw DegenerateLoopError("feedback: closed-loop denominator is zero");
    return {std::move(num), std::move(den)};
}

PolesResult poles(const RationalTF& tf, double residual_tol) {
    const Polynomial monic = tf.den.monic();
    const int n = monic.degree();
    if (n < 1) return {{}, 0.0};

    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -monic.coeffs()[static_cast<std::size_t>(i)];

    const Eigen::VectorXcd eig = companion.eigenvalues();
    PolesResult out;
    out.roots.reserve(static_cast<std::size_t>(n));
    out.max_residual = 0.0;
    for (int i = 0; i < n; ++i) {
        const std::complex<double> r = eig(i);
        out.roots.push_back(r);
        const double scale = std::pow(std::max(1.0, std::abs(r)), n);
        out.max_residual = std::max(out.max_residual, std::abs(monic.eval(r)) / scale);
    }
    if (out.max_residual > residual_tol)
        throw ConvergenceFailureError("poles: companion eigenvalue residual exceeds tolerance");
    return out;
}

}  // namespace avrfopid
