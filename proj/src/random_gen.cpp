#include "nilrev/random_gen.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <vector>

#include "nilrev/errors.hpp"

namespace nilrev {

long Rng::below(long bound) {
    const std::uint64_t b = static_cast<std::uint64_t>(bound);
    const std::uint64_t mask = std::bit_ceil(b) - 1;
    for (;;) {
        const std::uint64_t r = next() & mask;
        if (r < b) return static_cast<long>(r);
    }
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Rational random_rational(Rng& rng) {
    return Rational(rng.range(-9, 9), rng.range(1, 9));
}

Scalar random_scalar(Ring ring, Rng& rng) {
    std::array<Rational, 4> c;
    for (int i = 0; i < ring_dim(ring); ++i) c[static_cast<std::size_t>(i)] = random_rational(rng);
    return Scalar::from_components(ring, c);
}

Scalar random_nonzero_scalar(Ring ring, Rng& rng) {
    for (;;) {
        Scalar s = random_scalar(ring, rng);
        if (!s.is_zero()) return s;
    }
}

NilpotentUpper random_nilpotent(Ring ring, int n, Rng& rng, const NilpotentDraw& draw) {
    if (draw.nonzero && n < 2)
        throw DimensionMismatchError("no nonzero strictly upper matrix exists for n < 2");
    for (;;) {
        Matrix m(ring, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (j > i + 1 && draw.sparsity_pct > 0 && rng.below(100) < draw.sparsity_pct)
                    continue;
                m(i, j) = random_scalar(ring, rng);
            }
        if (draw.star)
            for (int i = 0; i + 1 < n; ++i) m(i, i + 1) = random_nonzero_scalar(ring, rng);
        if (draw.nonzero && m.is_zero()) continue;
        return NilpotentUpper(m);
    }
}

SignedUnipotent random_unipotent_star(Ring ring, int n, Rng& rng) {
    Matrix m = random_nilpotent(ring, n, rng, {.star = true}).matrix();
    for (int i = 0; i < n; ++i) m(i, i) = Scalar::one(ring);
    return SignedUnipotent(m);
}

SignedUnipotent random_signed_unipotent(Ring ring, int n, Rng& rng) {
    Matrix m = random_nilpotent(ring, n, rng).matrix();
    for (int i = 0; i < n; ++i) m(i, i) = Scalar::integer(ring, rng.coin() ? 1 : -1);
    return SignedUnipotent(m);
}

Partition random_partition(int n, Rng& rng, int min_distinct) {
    if (min_distinct > 1 && n < 3)
        throw DimensionMismatchError("partitions of n < 3 have a single distinct part size");
    for (;;) {
        std::vector<int> parts;
        int rem = n;
        while (rem > 0) {
            const int p = static_cast<int>(rng.range(1, rem));
            parts.push_back(p);
            rem -= p;
        }
        std::sort(parts.begin(), parts.end(), std::greater<int>());
        Partition out;
        for (int p : parts) {
            if (!out.parts.empty() && out.parts.back().first == p)
                ++out.parts.back().second;
            else
                out.parts.emplace_back(p, 1);
        }
        if (out.distinct() >= min_distinct) return out;
    }
}

}  // namespace nilrev
