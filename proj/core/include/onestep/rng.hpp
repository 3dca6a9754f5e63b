#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>

#include "onestep/tensor.hpp"

namespace onestep {

/// Deterministic random stream. Normal deviates use the Box-Muller cosine
/// form so the stream has no hidden distribution state and serializes as the
/// bare engine state.
class RngStream {
public:
    explicit RngStream(uint64_t seed = 0) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform() {
        return std::generate_canonical<double, 53>(engine_);
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return d(engine_);
    }

    double normal() {
        // u1 in (0,1], u2 in [0,1)
        double u1 = 1.0 - uniform();
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    Tensor normal_tensor(std::vector<int> shape) {
        Tensor t(std::move(shape));
        for (int64_t i = 0; i < t.numel(); ++i) t[i] = normal();
        return t;
    }

    Tensor uniform_tensor(std::vector<int> shape, double lo, double hi) {
        Tensor t(std::move(shape));
        for (int64_t i = 0; i < t.numel(); ++i) t[i] = uniform(lo, hi);
        return t;
    }

    /// Derive a fresh seed from this stream (for child components).
    uint64_t next_seed() { return engine_(); }

    std::string serialize() const {
        std::ostringstream os;
        os << engine_;
        return os.str();
    }

    static RngStream deserialize(const std::string& s) {
        RngStream r;
        std::istringstream is(s);
        is >> r.engine_;
        if (!is) throw std::invalid_argument("RngStream: bad serialized state");
        return r;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace onestep
