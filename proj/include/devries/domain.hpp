#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "devries/rational.hpp"

namespace devries {

/// Which totally ordered integral domain the scalars are drawn from.
/// Only samplers and parsers care; no operation ever divides scalars.
enum class DomainKind { integers, rationals };

/// An exact scalar of the ordered domain. Rationals are kept in lowest
/// terms with positive denominator by the underlying representation.
class DomainValue {
public:
    DomainValue() = default;
    explicit DomainValue(Rat v) : v_(std::move(v)) {}
    DomainValue(long n) : v_(n) {}

    static DomainValue from_fraction(long p, long q) { return DomainValue(make_rat(p, q)); }

    const Rat& value() const { return v_; }
    bool is_integer() const { return is_integral(v_); }

    DomainValue operator+(const DomainValue& o) const { return DomainValue(v_ + o.v_); }
    DomainValue operator-(const DomainValue& o) const { return DomainValue(v_ - o.v_); }
    DomainValue operator*(const DomainValue& o) const { return DomainValue(v_ * o.v_); }
    DomainValue operator-() const { return DomainValue(-v_); }

    friend bool operator==(const DomainValue& a, const DomainValue& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const DomainValue& a, const DomainValue& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ == b.v_) return std::strong_ordering::equal;
        return std::strong_ordering::greater;
    }

    bool is_zero() const { return v_ == 0; }

private:
    Rat v_{};
};

inline DomainValue dv_min(const DomainValue& a, const DomainValue& b) { return a <= b ? a : b; }
inline DomainValue dv_max(const DomainValue& a, const DomainValue& b) { return a <= b ? b : a; }
inline DomainValue dv_abs(const DomainValue& a) { return a < DomainValue(0) ? -a : a; }

enum class Cmp { less, equal, greater };
inline Cmp dv_compare(const DomainValue& a, const DomainValue& b) {
    auto c = a <=> b;
    if (c < 0) return Cmp::less;
    if (c == 0) return Cmp::equal;
    return Cmp::greater;
}

inline std::string to_string(const DomainValue& v) { return rat_to_string(v.value()); }
DomainValue parse_domain_value(std::string_view text);

} // namespace devries
