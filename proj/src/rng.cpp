#include "micdt/rng.hpp"

#include <cmath>
#include <numbers>

#include "micdt/errors.hpp"

namespace micdt {

NoiseFamily noise_family_from_string(const std::string& name) {
    if (name == "laplace") return NoiseFamily::Laplace;
    if (name == "uniform") return NoiseFamily::Uniform;
    if (name == "gaussian") return NoiseFamily::Gaussian;
    throw ParseError("unknown noise family '" + name + "' (expected laplace|uniform|gaussian)");
}

std::string to_string(NoiseFamily family) {
    switch (family) {
        case NoiseFamily::Laplace: return "laplace";
        case NoiseFamily::Uniform: return "uniform";
        case NoiseFamily::Gaussian: return "gaussian";
    }
    return "laplace";
}

double NoiseSampler::uniform01() {
    return static_cast<double>(generator_() >> 11) * 0x1.0p-53;
}

double NoiseSampler::draw() {
    switch (family_) {
        case NoiseFamily::Laplace: {
            // Inverse CDF of Laplace(b) with b = 1/sqrt(2), i.e. unit variance.
            const double v = uniform01() - 0.5;
            const double mag = std::max(1.0 - 2.0 * std::abs(v), 1e-300);
            const double sign = v < 0.0 ? -1.0 : 1.0;
            return -sign * std::log(mag) / std::numbers::sqrt2;
        }
        case NoiseFamily::Uniform:
            // U(-sqrt(3), sqrt(3)) has unit variance.
            return std::sqrt(3.0) * (2.0 * uniform01() - 1.0);
        case NoiseFamily::Gaussian: {
            if (has_spare_) {
                has_spare_ = false;
                return spare_;
            }
            const double u1 = std::max(uniform01(), 1e-300);
            const double u2 = uniform01();
            const double r = std::sqrt(-2.0 * std::log(u1));
            const double theta = 2.0 * std::numbers::pi * u2;
            spare_ = r * std::sin(theta);
            has_spare_ = true;
            return r * std::cos(theta);
        }
    }
    return 0.0;
}

}  // namespace micdt
