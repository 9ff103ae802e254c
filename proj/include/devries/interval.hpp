#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "devries/rational.hpp"
#include "devries/rng.hpp"

namespace devries {

// ---------------------------------------------------------------------------
// Point sets of the carrier space [0,1].
//
// The space is [0,1] with the subspace topology, so a set touching 0 or 1 is
// relatively open there. A regular open set stores its connected components
// as endpoint pairs lo < hi; the component is (lo,hi) as a real interval,
// closed at 0 when lo == 0 and at 1 when hi == 1. Under that convention the
// relative interior of [lo,hi] is again the component (lo,hi), so interior
// and closure are endpoint bookkeeping.
// ---------------------------------------------------------------------------

/// One component of a regular open set; see the convention above.
struct RoPiece {
    Rat lo, hi;
    friend bool operator==(const RoPiece&, const RoPiece&) = default;
};

/// An arbitrary interval of [0,1] with explicit endpoint inclusion, plus
/// degenerate single points (lo == hi, both inclusive). Raw parser output
/// and the exact representation of level sets.
struct Seg {
    Rat lo, hi;
    bool lo_in = false, hi_in = false;
    friend bool operator==(const Seg&, const Seg&) = default;

    bool is_point() const { return lo == hi; }
    bool contains(const Rat& x) const {
        if (x < lo || hi < x) return false;
        if (x == lo && !lo_in) return false;
        if (x == hi && !hi_in) return false;
        return true;
    }
};

class ClosedIntervalSet;
class PointSet;

/// Canonical finite union of rational-endpoint regular open subsets of [0,1].
class RegularOpenSet {
public:
    RegularOpenSet() = default;

    static RegularOpenSet empty() { return RegularOpenSet(); }
    static RegularOpenSet full();

    /// Int(Cl(union of raw intervals)). Endpoints must lie in [0,1].
    static RegularOpenSet canonicalize(const std::vector<Seg>& raw);

    /// Assumes the pieces already form a canonical list (checked).
    static RegularOpenSet from_pieces(std::vector<RoPiece> pieces);

    const std::vector<RoPiece>& pieces() const { return pieces_; }
    bool is_empty() const { return pieces_.empty(); }
    bool is_full() const;

    bool contains(const Rat& x) const;

    ClosedIntervalSet closure() const;
    PointSet as_point_set() const;

    friend bool operator==(const RegularOpenSet&, const RegularOpenSet&) = default;

private:
    std::vector<RoPiece> pieces_; // sorted, hi_i < lo_{i+1}
};

/// Finite union of closed rational intervals of [0,1]; components merged,
/// degenerate points allowed.
class ClosedIntervalSet {
public:
    ClosedIntervalSet() = default;
    static ClosedIntervalSet from_intervals(std::vector<std::pair<Rat, Rat>> raw);

    const std::vector<std::pair<Rat, Rat>>& components() const { return comps_; }
    bool is_empty() const { return comps_.empty(); }
    bool contains(const Rat& x) const;

    /// Relative interior: degenerate components vanish.
    RegularOpenSet interior() const;

    friend bool operator==(const ClosedIntervalSet&, const ClosedIntervalSet&) = default;

private:
    std::vector<std::pair<Rat, Rat>> comps_; // sorted, disjoint, non-touching
};

/// Exact finite union of arbitrary intervals and isolated points. Canonical
/// (merged, sorted), so equality is structural.
class PointSet {
public:
    PointSet() = default;
    static PointSet from_segs(std::vector<Seg> raw);
    static PointSet full();

    const std::vector<Seg>& segs() const { return segs_; }
    bool is_empty() const { return segs_.empty(); }
    bool contains(const Rat& x) const;

    ClosedIntervalSet closure() const;
    PointSet unite(const PointSet& other) const;
    PointSet subtract_closed(const ClosedIntervalSet& c) const;

    /// True when every point of this set lies in `other`.
    bool subset_of(const PointSet& other) const;

    /// The complement is a finite point set (the set is dense open);
    /// returns those points, or nullopt when some gap has positive length.
    std::optional<std::vector<Rat>> dense_open_complement() const;

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    std::vector<Seg> segs_;
};

bool closed_subset_of_point_set(const ClosedIntervalSet& c, const PointSet& s);

// --- Boolean algebra and proximity of the canonical regular open sets -----

RegularOpenSet ro_meet(const RegularOpenSet& a, const RegularOpenSet& b);
RegularOpenSet ro_join(const RegularOpenSet& a, const RegularOpenSet& b);
RegularOpenSet ro_complement(const RegularOpenSet& a);
bool ro_leq(const RegularOpenSet& a, const RegularOpenSet& b);

/// Cl(a) contained in b.
bool ro_proximity(const RegularOpenSet& a, const RegularOpenSet& b);

/// A canonical witness with a well inside w well inside b. Pre: a prox b.
RegularOpenSet ro_interpolate(const RegularOpenSet& a, const RegularOpenSet& b);

/// Nonempty witness well inside a (middle third of the widest component).
/// Pre: a nonempty.
RegularOpenSet ro_below(const RegularOpenSet& a);

/// U belongs to the end at x iff x is outside Cl(U).
bool end_member(const Rat& point, const RegularOpenSet& u);

/// Well inside itself, i.e. clopen. On [0,1] only empty and full qualify.
bool ro_is_clopen(const RegularOpenSet& u);

/// Searches shrinkings and the trivial elements for a clopen c with
/// a prox c prox b. Pre: a prox b.
std::optional<RegularOpenSet> clopen_interpolant(const RegularOpenSet& a,
                                                 const RegularOpenSet& b);

/// Verdicts for the carrier, decided through witness elements: a proper
/// proximal pair without a clopen interpolant refutes zero-dimensionality,
/// and a proper set with U <= U but not U prox U refutes extremal
/// disconnectedness.
bool interval_is_zero_dimensional();
bool interval_is_extremally_disconnected();

// --- Piecewise-linear self-maps of [0,1] ----------------------------------

/// Continuous piecewise-affine map [0,1] -> [0,1] through rational vertices.
class PLMap {
public:
    /// Vertices (x_i, y_i), x strictly increasing from 0 to 1, y in [0,1].
    static PLMap through(std::vector<std::pair<Rat, Rat>> vertices);
    static PLMap identity();
    static PLMap constant(const Rat& y);

    Rat apply(const Rat& x) const;
    const std::vector<std::pair<Rat, Rat>>& vertices() const { return verts_; }

    friend bool operator==(const PLMap&, const PLMap&) = default;

private:
    std::vector<std::pair<Rat, Rat>> verts_;
};

/// Int(Cl(preimage of u)): the de Vries dual action on regular opens.
RegularOpenSet pl_hat(const PLMap& phi, const RegularOpenSet& u);

PLMap compose(const PLMap& outer, const PLMap& inner); // x -> outer(inner(x))

// --- Textual syntax --------------------------------------------------------

/// Strict canonical syntax: "[0,1/2) u (3/4,7/8)", "empty", "[0,1]".
RegularOpenSet parse_regular_open(std::string_view text);
std::string to_string(const RegularOpenSet& u);

/// Any bracket combination, for canonicalize input: "(0,1/4)", "[1/3,1/2]".
std::vector<Seg> parse_raw_intervals(std::string_view text);

/// "(0,0) (1/2,1/4) (1,1)" — vertex list.
PLMap parse_plmap(std::string_view text);
std::string to_string(const PLMap& m);

// --- Sampling ---------------------------------------------------------------

RegularOpenSet sample_regular_open(Rng& rng, int max_pieces = 3);

/// Nonempty proper set (not empty, not the whole space).
RegularOpenSet sample_proper_regular_open(Rng& rng);

/// Some w with prox(w, u) and w strictly shrunk on non-boundary ends.
RegularOpenSet ro_shrink(const RegularOpenSet& u);

} // namespace devries
