#pragma once

#include <cstdint>
#include <random>

#include "nilrev/jordan.hpp"
#include "nilrev/matrix.hpp"

namespace nilrev {

// Deterministic random source. Bounded draws use masking with rejection on
// top of mt19937_64, so streams are identical across platforms (the
// standard distributions are not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }
    // Uniform in [0, bound), bound >= 1.
    long below(long bound);
    // Uniform in [lo, hi] inclusive.
    long range(long lo, long hi) { return lo + below(hi - lo + 1); }
    bool coin() { return below(2) == 1; }

private:
    std::mt19937_64 eng_;
};

// Stable per-trial seed derivation (splitmix64 step over base ^ index).
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index);

// Numerator in [-9, 9], denominator in [1, 9]: small heights keep exact
// elimination fast.
Rational random_rational(Rng& rng);
Scalar random_scalar(Ring ring, Rng& rng);
Scalar random_nonzero_scalar(Ring ring, Rng& rng);

struct NilpotentDraw {
    bool star = false;    // resample the superdiagonal until nonzero
    bool nonzero = false; // resample the matrix until nonzero (needs n >= 2)
    int sparsity_pct = 0; // chance to zero each entry above the superdiagonal
};

NilpotentUpper random_nilpotent(Ring ring, int n, Rng& rng, const NilpotentDraw& draw = {});

// All-plus diagonal, nonzero superdiagonal, random entries above.
SignedUnipotent random_unipotent_star(Ring ring, int n, Rng& rng);
// Random +-1 diagonal and random upper entries.
SignedUnipotent random_signed_unipotent(Ring ring, int n, Rng& rng);

// Random partition of n, uniform over a simple stick-breaking draw,
// resampled until it has at least min_distinct distinct part sizes.
Partition random_partition(int n, Rng& rng, int min_distinct = 1);

}  // namespace nilrev
