#include "avrfopid/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace avrfopid {

Polynomial::Polynomial(std::initializer_list<double> coeffs)
    : coeffs_(coeffs) {
    normalize();
}

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

void Polynomial::normalize() {
    if (coeffs_.empty()) {
        coeffs_ = {0.0};
        return;
    }
    for (double c : coeffs_) {
        if (!std::isfinite(c)) throw std::invalid_argument("Polynomial: non-finite coefficient");
    }
    while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
}

Polynomial Polynomial::from_roots(const std::vector<std::complex<double>>& roots, double leading) {
    std::vector<std::complex<double>> c{leading};
    for (const auto& r : roots) {
        c.push_back(0.0);
        for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] - r * c[i];
        c[0] = -r * c[0];
    }
    std::vector<double> real(c.size());
    std::transform(c.begin(), c.end(), real.begin(), [](auto z) { return z.real(); });
    return Polynomial(std::move(real));
}

double Polynomial::eval(double s) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + *it;
    return acc;
}

std::complex<double> Polynomial::eval(std::complex<double> s) const {
    std::complex<double> acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + *it;
    return acc;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    std::vector<double> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    return *this + rhs * -1.0;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return Polynomial{};
    std::vector<double> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(double k) const {
    std::vector<double> out = coeffs_;
    for (double& c : out) c *= k;
    return Polynomial(std::move(out));
}

Polynomial Polynomial::shifted_up(int k) const {
    if (k < 0) throw std::invalid_argument("Polynomial::shifted_up: negative shift");
    if (is_zero()) return *this;
    std::vector<double> out(coeffs_.size() + static_cast<std::size_t>(k), 0.0);
    std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + k);
    return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) throw std::invalid_argument("Polynomial::monic: zero polynomial");
    return *this * (1.0 / coeffs_.back());
}

}  // namespace avrfopid
