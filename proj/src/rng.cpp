#include "devries/rng.hpp"

#include <algorithm>

namespace devries {

DomainValue sample_scalar(Rng& rng, DomainKind kind) {
    if (kind == DomainKind::integers) return DomainValue(rng.range(-9, 9));
    long den = rng.range(1, 6);
    long num = rng.range(-12, 12);
    return DomainValue(make_rat(num, den));
}

std::vector<DomainValue> sample_scalar_chain(Rng& rng, DomainKind kind, int count) {
    std::vector<DomainValue> vals;
    while (static_cast<int>(vals.size()) < count) {
        DomainValue v = sample_scalar(rng, kind);
        bool dup = false;
        for (const auto& w : vals) dup = dup || w == v;
        if (!dup) vals.push_back(v);
    }
    std::sort(vals.begin(), vals.end());
    return vals;
}

Rat sample_unit_rat(Rng& rng) {
    long den = rng.range(2, 24);
    long num = rng.range(0, den);
    return make_rat(num, den);
}

} // namespace devries
