#pragma once
// Shared small utilities: complex alias, compensated summation, seed mixing,
// lossless float formatting.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace zml {

using cplx = std::complex<double>;

inline constexpr double PI = 3.14159265358979323846264338327950288;
inline constexpr double EULER_GAMMA = 0.57721566490153286060651209008240243;

// Neumaier variant of Kahan summation.  Used for every sum over the 1e5-zero
// dataset so results are reproducible and cancellation-safe.
class CompensatedSum {
public:
    void add(double x) {
        double t = s_ + x;
        if (std::abs(s_) >= std::abs(x))
            c_ += (s_ - t) + x;
        else
            c_ += (x - t) + s_;
        s_ = t;
    }
    double value() const { return s_ + c_; }

private:
    double s_ = 0.0, c_ = 0.0;
};

class CompensatedCplxSum {
public:
    void add(cplx z) { re_.add(z.real()); im_.add(z.imag()); }
    cplx value() const { return {re_.value(), im_.value()}; }

private:
    CompensatedSum re_, im_;
};

// splitmix64 finalizer; the basis of all per-index seed derivation.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// 17 significant digits: shortest representation that round-trips a double.
std::string fmt17(double x);
std::string fmt17(cplx z);

}  // namespace zml
