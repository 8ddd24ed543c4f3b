#pragma once

#include <random>
#include <string>
#include <vector>

#include "rmc/machine.hpp"
#include "rmc/memory.hpp"
#include "rmc/term.hpp"
#include "rmc/value.hpp"

namespace rmc {

/// Seeded generators for property suites. All draws are deterministic
/// functions of the seed.
class Gen {
public:
    explicit Gen(uint64_t seed) : rng_(seed) {}

    size_t below(size_t n) { return n == 0 ? 0 : rng_() % n; }
    bool chance(double p) { return std::uniform_real_distribution<>(0, 1)(rng_) < p; }

    struct TermOpts {
        size_t size = 12;           // approximate node budget
        size_t value_depth = 2;
        bool allow_star = false;
        bool allow_sum = true;
        bool allow_new = true;
        bool closed = false;        // close over leftover free variables
        std::vector<std::string> locations = {kDefaultLoc};
        std::vector<std::string> free_pool = {"X", "Y", "Z"};
        std::vector<std::pair<std::string, size_t>> signature = {
            {"c", 0}, {"d", 0}, {"f", 1}, {"g", 2}};
    };

    ValuePtr value(const TermOpts& o, const std::vector<std::string>& vars, size_t depth);
    TermPtr term(const TermOpts& o);
    Memory memory(const TermOpts& o, size_t max_depth, bool closed_values);

    /// Sampler for machine-equivalence checks; emits open memories over the
    /// given locations, including the empty memory.
    MemorySampler memory_sampler(const TermOpts& o, size_t max_depth = 3,
                                 bool closed_values = false);

    std::mt19937_64& rng() { return rng_; }

private:
    TermPtr term_rec(const TermOpts& o, size_t& budget, std::vector<std::string>& scope);
    std::mt19937_64 rng_;
};

}  // namespace rmc
