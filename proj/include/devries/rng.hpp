#pragma once

#include <cstdint>
#include <vector>

#include "devries/domain.hpp"

namespace devries {

/// Deterministic generator. splitmix64 core, so reports are byte-identical
/// across standard libraries (std distributions are not portable).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Roughly uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return n <= 1 ? 0 : next() % n; }

    long range(long lo, long hi) { // inclusive bounds
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(unsigned num, unsigned den) { return below(den) < num; }

private:
    std::uint64_t state_;
};

/// Scalar sampler for the configured domain instance. Integer mode keeps
/// denominators at 1; rational mode uses small denominators so products
/// stay readable in counterexamples.
DomainValue sample_scalar(Rng& rng, DomainKind kind);

/// Strictly increasing scalars, distinct, sorted.
std::vector<DomainValue> sample_scalar_chain(Rng& rng, DomainKind kind, int count);

/// Random rational in [0,1] with a bounded denominator.
Rat sample_unit_rat(Rng& rng);

} // namespace devries
