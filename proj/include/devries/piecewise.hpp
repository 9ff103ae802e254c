#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "devries/domain.hpp"
#include "devries/interval.hpp"
#include "devries/report.hpp"

namespace devries {

// ---------------------------------------------------------------------------
// Finitely valued functions [0,1] -> A given by rational breakpoints.
//
// breakpoints 0 = x_0 < ... < x_k = 1; piece i carries the value on the open
// interval (x_{i-1}, x_i), with the carrier convention that 0 belongs to the
// first piece and 1 to the last; interior breakpoints carry their own value.
// Canonical form drops removable breakpoints (point value equal to both
// neighbouring piece values).
// ---------------------------------------------------------------------------
class PiecewiseFunction {
public:
    PiecewiseFunction() : PiecewiseFunction(DomainValue(0)) {}
    explicit PiecewiseFunction(DomainValue constant);

    /// breakpoints.size() == piece_values.size() + 1 == point_values.size() + 2.
    static PiecewiseFunction make(std::vector<Rat> breakpoints,
                                  std::vector<DomainValue> piece_values,
                                  std::vector<DomainValue> point_values);

    /// Characteristic function of an arbitrary segment set (need not be
    /// regular open): 1 on the set, 0 elsewhere.
    static PiecewiseFunction indicator(const PointSet& where);
    static PiecewiseFunction indicator(const RegularOpenSet& where);

    const std::vector<Rat>& breakpoints() const { return xs_; }
    const std::vector<DomainValue>& piece_values() const { return piece_vals_; }
    const std::vector<DomainValue>& point_values() const { return point_vals_; }

    DomainValue operator()(const Rat& x) const;
    bool is_constant() const;

    /// Attained values, sorted, distinct.
    std::vector<DomainValue> values() const;

    /// Exact level set {x : f(x) >= a}.
    PointSet upset_level(const DomainValue& a) const;

    friend bool operator==(const PiecewiseFunction&, const PiecewiseFunction&) = default;

private:
    struct raw_tag {};
    explicit PiecewiseFunction(raw_tag) {}

    std::vector<Rat> xs_;
    std::vector<DomainValue> piece_vals_;
    std::vector<DomainValue> point_vals_;
};

/// Every upper level set is regular open.
bool is_normal(const PiecewiseFunction& f);

/// Int(Cl(f^{-1}(up a))); equals the exact level set when f is normal.
RegularOpenSet upset_level_ro(const PiecewiseFunction& f, const DomainValue& a);

/// Replace each level set by the interior of its closure and reassemble.
/// Idempotent; the image shrinks into the image of f.
PiecewiseFunction normalize(const PiecewiseFunction& f);

/// The function valued vals[i] on chain[i] - chain[i+1], for a decreasing
/// chain of regular opens with chain[0] the whole space.
PiecewiseFunction assemble_from_chain(const std::vector<DomainValue>& vals,
                                      const std::vector<RegularOpenSet>& chain);

// Pointwise operations (the oracle side; results need not be normal).
PiecewiseFunction pw_add(const PiecewiseFunction& f, const PiecewiseFunction& g);
PiecewiseFunction pw_mul(const PiecewiseFunction& f, const PiecewiseFunction& g);
PiecewiseFunction pw_min(const PiecewiseFunction& f, const PiecewiseFunction& g);
PiecewiseFunction pw_max(const PiecewiseFunction& f, const PiecewiseFunction& g);
PiecewiseFunction pw_negate(const PiecewiseFunction& f);
PiecewiseFunction pw_scalar(const DomainValue& a, const PiecewiseFunction& f);
PiecewiseFunction pw_abs(const PiecewiseFunction& f);

PiecewiseFunction pw_binary(const PiecewiseFunction& f, const PiecewiseFunction& g,
                            const std::function<DomainValue(const DomainValue&, const DomainValue&)>& op);

// Lifted operations on normal functions: normalize after the pointwise op.
// Meet is already pointwise.
PiecewiseFunction nf_add(const PiecewiseFunction& f, const PiecewiseFunction& g);
PiecewiseFunction nf_mul(const PiecewiseFunction& f, const PiecewiseFunction& g);
PiecewiseFunction nf_meet(const PiecewiseFunction& f, const PiecewiseFunction& g);
PiecewiseFunction nf_join(const PiecewiseFunction& f, const PiecewiseFunction& g);
PiecewiseFunction nf_negate(const PiecewiseFunction& f);
PiecewiseFunction nf_scalar(const DomainValue& a, const PiecewiseFunction& f);
PiecewiseFunction nf_abs(const PiecewiseFunction& f);

bool pw_leq(const PiecewiseFunction& f, const PiecewiseFunction& g);

/// The de Vries power proximity: Cl(f^{-1}(up a)) inside g^{-1}(up a) for
/// every threshold (the merged value grid suffices).
bool nf_prox(const PiecewiseFunction& f, const PiecewiseFunction& g);

/// Interpolation witness for f prox g (levelwise regular open witnesses,
/// intersected to a decreasing chain).
PiecewiseFunction nf_interpolate(const PiecewiseFunction& f, const PiecewiseFunction& g);

/// Open dense set where the normal function f is continuous.
PointSet continuity_domain(const PiecewiseFunction& f);

/// Unique normal extension of f restricted to the open dense set d whose
/// complement is finite. Throws when f is not locally constant on d.
PiecewiseFunction extend_from_dense(const PiecewiseFunction& f, const PointSet& d);

enum class LevelFormula { sum, product, scalar, scalar_shift, negation };

/// Evaluates both sides of the chosen level-set identity over the relevant
/// finite threshold grid and reports equality per threshold.
CheckReport level_formula_check(const PiecewiseFunction& f, const PiecewiseFunction& g,
                                LevelFormula kind, const DomainValue& scalar);

// --- Textual step-function syntax -------------------------------------------
// "0 on [0,1/4); 2 on (1/4,1/2); 1 at 1/2; 0 on (1/2,1]" or "... ; 0 elsewhere".
PiecewiseFunction parse_step_function(std::string_view text);
std::string to_string(const PiecewiseFunction& f);

// --- Sampling -----------------------------------------------------------------

/// Random normal function: decreasing chain of regular opens with ascending
/// values.
PiecewiseFunction sample_normal_function(Rng& rng, DomainKind kind, int max_levels = 3);

/// Random finitely valued function (generally not normal).
PiecewiseFunction sample_piecewise(Rng& rng, DomainKind kind);

/// A pair f prox g with f derived from g by levelwise shrinking.
std::pair<PiecewiseFunction, PiecewiseFunction> sample_proximal_pair(Rng& rng, DomainKind kind);

} // namespace devries
