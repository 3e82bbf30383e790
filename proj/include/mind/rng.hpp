#pragma once

#include <cstdint>

namespace mind {

// Counter-based splittable random source. Every draw is a pure hash of
// (state, counter), so identical seeds give identical streams on any
// platform, and split() derives statistically independent child streams
// without sharing state with the parent.
class Rng {
public:
    explicit Rng(uint64_t seed);

    // Child stream addressed by `stream`. Children with distinct stream ids
    // are independent of each other and of this generator's future output.
    Rng split(uint64_t stream) const;

    uint64_t next_u64();
    double uniform();                 // [0, 1)
    double uniform(double lo, double hi);
    double normal();                  // standard normal, Box-Muller
    double normal(double mean, double stddev);
    int uniform_int(int lo, int hi);  // inclusive on both ends

private:
    Rng(uint64_t state, uint64_t counter) : state_(state), counter_(counter) {}

    uint64_t state_;
    uint64_t counter_;
};

}  // namespace mind
