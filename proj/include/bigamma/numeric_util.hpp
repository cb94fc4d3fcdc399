#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "bigamma/types.hpp"

namespace bigamma {

/// Neumaier-compensated accumulator; works for double and Complex.
template <typename T>
class KahanSum {
  public:
    void add(const T& term) {
        T t = sum_ + term;
        if (std::abs(sum_) >= std::abs(term))
            comp_ += (sum_ - t) + term;
        else
            comp_ += (term - t) + sum_;
        sum_ = t;
    }
    T total() const { return sum_ + comp_; }

  private:
    T sum_{};
    T comp_{};
};

/// w^n for integer n by binary powering; n < 0 takes the reciprocal.
inline Complex cpow_int(Complex w, int n) {
    if (n < 0) return 1.0 / cpow_int(w, -n);
    Complex acc(1.0, 0.0);
    while (n > 0) {
        if (n & 1) acc *= w;
        w *= w;
        n >>= 1;
    }
    return acc;
}

/// log(1+q) - q without cancellation for small |q|.
inline Complex log1p_minus(Complex q) {
    if (std::abs(q) > 0.25) return std::log(1.0 + q) - q;
    // sum_{k>=2} (-1)^{k-1} q^k / k
    Complex acc(0.0, 0.0);
    Complex p = -q * q;  // (-1)^{k-1} q^k at k = 2 -> -q^2
    for (int k = 2; k < 64; ++k) {
        Complex term = p / double(k);
        acc += term;
        if (std::abs(term) < 1e-18 * (std::abs(acc) + 1e-300)) break;
        p *= -q;
    }
    return acc;
}

/// q - log(1+q) for real q > -1, stable for small q.
inline double rlog1p(double q) {
    if (std::fabs(q) > 0.25) return q - std::log1p(q);
    double acc = 0.0;
    double p = q * q;  // q^k at k = 2, with sign handled below
    double sign = 1.0;
    for (int k = 2; k < 64; ++k) {
        double term = sign * p / double(k);
        acc += term;
        if (std::fabs(term) < 1e-18 * (std::fabs(acc) + 1e-300)) break;
        p *= q;
        sign = -sign;
    }
    return acc;
}

/// If v is within tol of an integer, report that integer.
inline bool near_integer(Complex v, double tol, long long* out) {
    if (std::fabs(v.imag()) > tol) return false;
    double r = std::round(v.real());
    if (std::fabs(v.real() - r) > tol) return false;
    if (out) *out = static_cast<long long>(r);
    return true;
}

/// Canonical uniform double in [0,1); bit-stable across platforms for a
/// given mt19937_64 stream, unlike std::uniform_real_distribution.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double rel_residual(Complex a, Complex b) {
    double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) / scale;
}

}  // namespace bigamma
