#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace avrfopid {

/// Real-coefficient polynomial in s, stored as an ascending-power dense
/// coefficient list. The zero polynomial is represented as {0}; any other
/// polynomial has a nonzero trailing (highest-order) coefficient.
class Polynomial {
public:
    Polynomial() : coeffs_{0.0} {}
    Polynomial(std::initializer_list<double> coeffs);
    explicit Polynomial(std::vector<double> coeffs);

    static Polynomial constant(double c) { return Polynomial{c}; }
    static Polynomial variable() { return Polynomial{0.0, 1.0}; }
    /// Real polynomial with the given roots (complex roots must come in
    /// conjugate pairs; imaginary residue is discarded after pairing).
    static Polynomial from_roots(const std::vector<std::complex<double>>& roots,
                                 double leading = 1.0);

    const std::vector<double>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }
    double leading() const { return coeffs_.back(); }

    double eval(double s) const;
    std::complex<double> eval(std::complex<double> s) const;

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(double k) const;
    /// Multiply by s^k.
    Polynomial shifted_up(int k) const;

    Polynomial monic() const;

    bool operator==(const Polynomial& rhs) const = default;

private:
    void normalize();
    std::vector<double> coeffs_;
};

inline Polynomial operator*(double k, const Polynomial& p) { return p * k; }

}  // namespace avrfopid
