#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "devries/report.hpp"
#include "devries/rng.hpp"

namespace devries {

using Mask = std::uint32_t;

/// Powerset algebra on atom_count atoms; an element is the bitset of the
/// atoms below it.
struct FiniteBooleanAlgebra {
    int atom_count = 1;

    explicit FiniteBooleanAlgebra(int atoms);

    Mask bottom() const { return 0; }
    Mask top() const { return (Mask{1} << atom_count) - 1; }
    Mask meet(Mask a, Mask b) const { return a & b; }
    Mask join(Mask a, Mask b) const { return a | b; }
    Mask complement(Mask a) const { return top() & ~a; }
    bool leq(Mask a, Mask b) const { return (a & ~b) == 0; }
    std::size_t size() const { return std::size_t{1} << atom_count; }

    std::vector<Mask> elements() const;
    std::vector<Mask> atoms() const;

    std::string element_to_string(Mask a) const; // atom-bitstring, atom 0 first
    Mask parse_element(std::string_view bits) const;

    friend bool operator==(const FiniteBooleanAlgebra&, const FiniteBooleanAlgebra&) = default;
};

/// Decidable binary relation on a finite Boolean algebra: the Boolean order
/// by default, or an explicit pair set (used by the axiom checkers and the
/// fault-injection tests).
class FiniteProximity {
public:
    static FiniteProximity boolean_order();
    static FiniteProximity explicit_pairs(std::set<std::pair<Mask, Mask>> pairs);

    bool rel(const FiniteBooleanAlgebra& ba, Mask a, Mask b) const;
    bool is_boolean_order() const { return !pairs_.has_value(); }

private:
    std::optional<std::set<std::pair<Mask, Mask>>> pairs_;
};

/// DV1-DV7 with the first counterexample per axiom.
CheckReport check_devries_axioms(const FiniteBooleanAlgebra& ba, const FiniteProximity& prox);

/// Proper or improper ideals I with I = down-down I (every member well inside
/// another member). Finite Boolean ideals are principal, so each is returned
/// as its member list, generators in ascending mask order.
std::vector<std::vector<Mask>> round_ideals(const FiniteBooleanAlgebra& ba,
                                            const FiniteProximity& prox);

bool is_ideal(const FiniteBooleanAlgebra& ba, const std::set<Mask>& members);
bool is_round_ideal(const FiniteBooleanAlgebra& ba, const FiniteProximity& prox,
                    const std::set<Mask>& members);

/// Maximal proper round ideals, each as its principal generator.
std::vector<Mask> ends(const FiniteBooleanAlgebra& ba, const FiniteProximity& prox);

/// The finite dual space: one point per end, basis O(a) = {I : not-a in I}.
struct FiniteEndSpace {
    int atom_count = 0;
    std::vector<Mask> end_generators;     // end i is the principal ideal of gen i
    std::vector<std::uint32_t> basis;     // basis[a] = point bitmask of O(a)
    std::vector<std::uint32_t> opens;     // every open set of the generated topology

    int point_count() const { return static_cast<int>(end_generators.size()); }
    bool is_discrete() const;
};

/// Builds the end space and verifies the generated topology is compact
/// Hausdorff and a |-> O(a) embeds the algebra into its regular opens.
/// Throws std::logic_error when the embedding check fails.
FiniteEndSpace end_space(const FiniteBooleanAlgebra& ba, const FiniteProximity& prox);

/// M1-M4 for a table map sigma between finite proximity algebras.
CheckReport check_devries_morphism(const std::vector<Mask>& sigma,
                                   const FiniteBooleanAlgebra& src, const FiniteProximity& psrc,
                                   const FiniteBooleanAlgebra& dst, const FiniteProximity& pdst);

/// (rho * sigma)(a) = join { rho(sigma(b)) : b prox a }.
std::vector<Mask> compose_devries(const std::vector<Mask>& rho, const std::vector<Mask>& sigma,
                                  const FiniteBooleanAlgebra& src, const FiniteProximity& psrc,
                                  const FiniteBooleanAlgebra& mid_or_dst);

std::vector<Mask> identity_devries(const FiniteBooleanAlgebra& ba);

/// Every table map src -> dst passing M1-M4 (small algebras only).
std::vector<std::vector<Mask>> enumerate_devries_morphisms(const FiniteBooleanAlgebra& src,
                                                           const FiniteBooleanAlgebra& dst);

struct RigidityReport {
    std::uint64_t relations_scanned = 0;
    std::uint64_t passing = 0;
    bool only_boolean_order_passes = false;
};

/// Enumerates every sub-relation of the Boolean order on algebras with at
/// most two atoms and counts the DV1-DV7 survivors (exactly the order).
RigidityReport finite_proximity_rigidity(const FiniteBooleanAlgebra& ba);

bool is_zero_dimensional(const FiniteBooleanAlgebra& ba, const FiniteProximity& prox);
bool is_extremally_disconnected(const FiniteBooleanAlgebra& ba, const FiniteProximity& prox);

// --- File format ---------------------------------------------------------------
// "atoms: n" then optionally "prox: explicit" followed by lines "BITS < BITS"
// (also accepts the unicode relation sign). Default proximity is the order.
struct FiniteAlgebraSpec {
    FiniteBooleanAlgebra ba;
    FiniteProximity prox;
};
FiniteAlgebraSpec parse_finite_algebra(std::string_view text);

} // namespace devries
