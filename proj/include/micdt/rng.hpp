#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace micdt {

enum class NoiseFamily { Laplace, Uniform, Gaussian };

NoiseFamily noise_family_from_string(const std::string& name);
std::string to_string(NoiseFamily family);

// Unit-standard-deviation variates from explicit inverse-CDF / Box-Muller
// transforms over mt19937_64 output, so a seed pins the stream bit-for-bit
// independent of the standard library's distribution implementations.
class NoiseSampler {
public:
    NoiseSampler(NoiseFamily family, std::uint64_t seed)
        : generator_(seed), family_(family) {}

    double draw();

private:
    double uniform01();  // [0, 1), 53-bit resolution

    std::mt19937_64 generator_;
    NoiseFamily family_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace micdt
