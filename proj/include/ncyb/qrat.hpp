// Exact rational scalars and deterministic random sampling helpers.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace ncyb {

using Int = boost::multiprecision::cpp_int;
using QRat = boost::multiprecision::cpp_rational;

inline QRat qrat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("qrat: zero denominator");
    if (den < 0) { // the boost constructor requires a positive denominator
        num = -num;
        den = -den;
    }
    return QRat(Int(num), Int(den));
}

inline std::string to_string(const QRat& x) { return x.str(); }

// Deterministic RNG for reproducible sampling across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // Uniform integer in [lo, hi].
    long uniform(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(eng_);
    }

    // Random nonzero rational with numerator and denominator in [-9,9] \ {0}.
    QRat small_rational() {
        long num = nonzero_digit();
        long den = uniform(1, 9);
        return qrat(num, den);
    }

    // Random rational in the same range, zero allowed for the numerator.
    QRat small_rational_or_zero() {
        long num = uniform(-9, 9);
        long den = uniform(1, 9);
        return qrat(num, den);
    }

private:
    long nonzero_digit() {
        long v = uniform(-9, 8);
        if (v >= 0) ++v;
        return v;
    }
    std::mt19937_64 eng_;
};

} // namespace ncyb
