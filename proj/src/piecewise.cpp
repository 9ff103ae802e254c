#include "devries/piecewise.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

#include "devries/errors.hpp"

namespace devries {

namespace {

std::string_view trim_view(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

void require_normal(const PiecewiseFunction& f, const char* who) {
    if (!is_normal(f))
        throw std::invalid_argument(std::string(who) + " requires a normal function: " + to_string(f));
}

} // namespace

// --- PiecewiseFunction -------------------------------------------------------

PiecewiseFunction::PiecewiseFunction(DomainValue constant) {
    xs_ = {Rat(0), Rat(1)};
    piece_vals_ = {std::move(constant)};
}

PiecewiseFunction PiecewiseFunction::make(std::vector<Rat> breakpoints,
                                          std::vector<DomainValue> piece_values,
                                          std::vector<DomainValue> point_values) {
    if (breakpoints.size() < 2 || piece_values.size() + 1 != breakpoints.size() ||
        point_values.size() + 2 != breakpoints.size())
        throw std::invalid_argument("piecewise: inconsistent sizes");
    if (breakpoints.front() != 0 || breakpoints.back() != 1)
        throw std::invalid_argument("piecewise: breakpoints must span [0,1]");
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
        if (!(breakpoints[i] < breakpoints[i + 1]))
            throw std::invalid_argument("piecewise: breakpoints must increase");

    PiecewiseFunction f{raw_tag{}};
    f.xs_.push_back(breakpoints.front());
    f.piece_vals_.push_back(piece_values.front());
    for (std::size_t j = 0; j + 2 < breakpoints.size(); ++j) {
        const DomainValue& pv = point_values[j];
        const DomainValue& next = piece_values[j + 1];
        if (pv == f.piece_vals_.back() && next == f.piece_vals_.back()) continue; // removable
        f.xs_.push_back(breakpoints[j + 1]);
        f.point_vals_.push_back(pv);
        f.piece_vals_.push_back(next);
    }
    f.xs_.push_back(breakpoints.back());
    return f;
}

PiecewiseFunction PiecewiseFunction::indicator(const PointSet& where) {
    std::vector<Rat> cuts{Rat(0), Rat(1)};
    for (const auto& s : where.segs()) {
        cuts.push_back(s.lo);
        cuts.push_back(s.hi);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<DomainValue> pieces, points;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        pieces.push_back(DomainValue(where.contains(midpoint(cuts[i], cuts[i + 1])) ? 1 : 0));
    for (std::size_t j = 1; j + 1 < cuts.size(); ++j)
        points.push_back(DomainValue(where.contains(cuts[j]) ? 1 : 0));
    return make(std::move(cuts), std::move(pieces), std::move(points));
}

PiecewiseFunction PiecewiseFunction::indicator(const RegularOpenSet& where) {
    return indicator(where.as_point_set());
}

DomainValue PiecewiseFunction::operator()(const Rat& x) const {
    if (x < 0 || x > 1) throw std::invalid_argument("argument outside [0,1]");
    if (x == 0) return piece_vals_.front();
    if (x == 1) return piece_vals_.back();
    for (std::size_t i = 0; i + 1 < xs_.size(); ++i) {
        if (x == xs_[i]) return point_vals_[i - 1];
        if (xs_[i] < x && x < xs_[i + 1]) return piece_vals_[i];
    }
    throw std::logic_error("piecewise evaluation fell through");
}

bool PiecewiseFunction::is_constant() const { return xs_.size() == 2; }

std::vector<DomainValue> PiecewiseFunction::values() const {
    std::vector<DomainValue> vals = piece_vals_;
    vals.insert(vals.end(), point_vals_.begin(), point_vals_.end());
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

PointSet PiecewiseFunction::upset_level(const DomainValue& a) const {
    std::vector<Seg> segs;
    for (std::size_t i = 0; i + 1 < xs_.size(); ++i)
        if (piece_vals_[i] >= a)
            segs.push_back({xs_[i], xs_[i + 1], xs_[i] == 0, xs_[i + 1] == 1});
    for (std::size_t j = 0; j < point_vals_.size(); ++j)
        if (point_vals_[j] >= a)
            segs.push_back({xs_[j + 1], xs_[j + 1], true, true});
    return PointSet::from_segs(std::move(segs));
}

// --- Normality and normalization ----------------------------------------------

RegularOpenSet upset_level_ro(const PiecewiseFunction& f, const DomainValue& a) {
    return f.upset_level(a).closure().interior();
}

bool is_normal(const PiecewiseFunction& f) {
    for (const auto& a : f.values()) {
        PointSet level = f.upset_level(a);
        if (!(level == level.closure().interior().as_point_set())) return false;
    }
    return true;
}

PiecewiseFunction assemble_from_chain(const std::vector<DomainValue>& vals,
                                      const std::vector<RegularOpenSet>& chain) {
    std::vector<Rat> cuts{Rat(0), Rat(1)};
    for (const auto& u : chain)
        for (const auto& p : u.pieces()) {
            cuts.push_back(p.lo);
            cuts.push_back(p.hi);
        }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    auto value_at = [&](const Rat& x) {
        for (std::size_t i = chain.size(); i-- > 0;)
            if (chain[i].contains(x)) return vals[i];
        throw std::logic_error("chain does not start at the whole space");
    };

    std::vector<DomainValue> pieces, points;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        pieces.push_back(value_at(midpoint(cuts[i], cuts[i + 1])));
    for (std::size_t j = 1; j + 1 < cuts.size(); ++j)
        points.push_back(value_at(cuts[j]));
    return PiecewiseFunction::make(std::move(cuts), std::move(pieces), std::move(points));
}

PiecewiseFunction normalize(const PiecewiseFunction& f) {
    std::vector<DomainValue> vals = f.values();
    std::vector<RegularOpenSet> chain;
    chain.reserve(vals.size());
    for (const auto& a : vals) chain.push_back(upset_level_ro(f, a));
    return assemble_from_chain(vals, chain);
}

// --- Pointwise operations -------------------------------------------------------

PiecewiseFunction pw_binary(const PiecewiseFunction& f, const PiecewiseFunction& g,
                            const std::function<DomainValue(const DomainValue&, const DomainValue&)>& op) {
    std::vector<Rat> cuts = f.breakpoints();
    cuts.insert(cuts.end(), g.breakpoints().begin(), g.breakpoints().end());
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<DomainValue> pieces, points;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Rat mid = midpoint(cuts[i], cuts[i + 1]);
        pieces.push_back(op(f(mid), g(mid)));
    }
    for (std::size_t j = 1; j + 1 < cuts.size(); ++j)
        points.push_back(op(f(cuts[j]), g(cuts[j])));
    return PiecewiseFunction::make(std::move(cuts), std::move(pieces), std::move(points));
}

namespace {

PiecewiseFunction pw_unary(const PiecewiseFunction& f,
                           const std::function<DomainValue(const DomainValue&)>& op) {
    std::vector<DomainValue> pieces, points;
    for (const auto& v : f.piece_values()) pieces.push_back(op(v));
    for (const auto& v : f.point_values()) points.push_back(op(v));
    return PiecewiseFunction::make(f.breakpoints(), std::move(pieces), std::move(points));
}

} // namespace

PiecewiseFunction pw_add(const PiecewiseFunction& f, const PiecewiseFunction& g) {
    return pw_binary(f, g, [](const DomainValue& a, const DomainValue& b) { return a + b; });
}
PiecewiseFunction pw_mul(const PiecewiseFunction& f, const PiecewiseFunction& g) {
    return pw_binary(f, g, [](const DomainValue& a, const DomainValue& b) { return a * b; });
}
PiecewiseFunction pw_min(const PiecewiseFunction& f, const PiecewiseFunction& g) {
    return pw_binary(f, g, [](const DomainValue& a, const DomainValue& b) { return dv_min(a, b); });
}
PiecewiseFunction pw_max(const PiecewiseFunction& f, const PiecewiseFunction& g) {
    return pw_binary(f, g, [](const DomainValue& a, const DomainValue& b) { return dv_max(a, b); });
}
PiecewiseFunction pw_negate(const PiecewiseFunction& f) {
    return pw_unary(f, [](const DomainValue& a) { return -a; });
}
PiecewiseFunction pw_scalar(const DomainValue& a, const PiecewiseFunction& f) {
    return pw_unary(f, [&a](const DomainValue& v) { return a * v; });
}
PiecewiseFunction pw_abs(const PiecewiseFunction& f) {
    return pw_unary(f, [](const DomainValue& a) { return dv_abs(a); });
}

bool pw_leq(const PiecewiseFunction& f, const PiecewiseFunction& g) {
    bool ok = true;
    pw_binary(f, g, [&ok](const DomainValue& a, const DomainValue& b) {
        ok = ok && a <= b;
        return DomainValue(0);
    });
    return ok;
}

// --- Lifted operations -----------------------------------------------------------

PiecewiseFunction nf_add(const PiecewiseFunction& f, const PiecewiseFunction& g) {
    require_normal(f, "nf_add");
    require_normal(g, "nf_add");
    return normalize(pw_add(f, g));
}
PiecewiseFunction nf_mul(const PiecewiseFunction& f, const PiecewiseFunction& g) {
    require_normal(f, "nf_mul");
    require_normal(g, "nf_mul");
    return normalize(pw_mul(f, g));
}
PiecewiseFunction nf_meet(const PiecewiseFunction& f, const PiecewiseFunction& g) {
    require_normal(f, "nf_meet");
    require_normal(g, "nf_meet");
    return pw_min(f, g); // pointwise meet is already normal
}
PiecewiseFunction nf_join(const PiecewiseFunction& f, const PiecewiseFunction& g) {
    require_normal(f, "nf_join");
    require_normal(g, "nf_join");
    return normalize(pw_max(f, g));
}
PiecewiseFunction nf_negate(const PiecewiseFunction& f) {
    require_normal(f, "nf_negate");
    return normalize(pw_negate(f));
}
PiecewiseFunction nf_scalar(const DomainValue& a, const PiecewiseFunction& f) {
    require_normal(f, "nf_scalar");
    return normalize(pw_scalar(a, f));
}
PiecewiseFunction nf_abs(const PiecewiseFunction& f) {
    require_normal(f, "nf_abs");
    return normalize(pw_abs(f));
}

// --- Proximity --------------------------------------------------------------------

namespace {

std::vector<DomainValue> merged_values(const PiecewiseFunction& f, const PiecewiseFunction& g) {
    std::vector<DomainValue> vals = f.values();
    for (const auto& v : g.values()) vals.push_back(v);
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

} // namespace

bool nf_prox(const PiecewiseFunction& f, const PiecewiseFunction& g) {
    require_normal(f, "nf_prox");
    require_normal(g, "nf_prox");
    for (const auto& a : merged_values(f, g))
        if (!closed_subset_of_point_set(f.upset_level(a).closure(), g.upset_level(a)))
            return false;
    return true;
}

PiecewiseFunction nf_interpolate(const PiecewiseFunction& f, const PiecewiseFunction& g) {
    if (!nf_prox(f, g)) throw std::invalid_argument("nf_interpolate requires f prox g");
    std::vector<DomainValue> vals = merged_values(f, g);
    std::vector<RegularOpenSet> chain;
    RegularOpenSet acc = RegularOpenSet::full();
    for (const auto& a : vals) {
        RegularOpenSet w = ro_interpolate(upset_level_ro(f, a), upset_level_ro(g, a));
        acc = ro_meet(acc, w);
        chain.push_back(acc);
    }
    return assemble_from_chain(vals, chain);
}

PointSet continuity_domain(const PiecewiseFunction& f) {
    require_normal(f, "continuity_domain");
    std::vector<DomainValue> vals = f.values();
    std::vector<RegularOpenSet> levels;
    for (const auto& a : vals) levels.push_back(upset_level_ro(f, a));
    PointSet acc = levels.back().as_point_set();
    for (std::size_t i = 0; i + 1 < levels.size(); ++i)
        acc = acc.unite(levels[i].as_point_set().subtract_closed(levels[i + 1].closure()));
    return acc;
}

PiecewiseFunction extend_from_dense(const PiecewiseFunction& f, const PointSet& d) {
    auto missing = d.dense_open_complement();
    if (!missing)
        throw std::invalid_argument("domain is not open dense with finite complement");

    // locally constant on every component of d
    for (const auto& seg : d.segs()) {
        DomainValue v = f(midpoint(seg.lo, seg.hi));
        for (std::size_t i = 0; i + 1 < f.breakpoints().size(); ++i) {
            const Rat& lo = std::max(seg.lo, f.breakpoints()[i]);
            const Rat& hi = std::min(seg.hi, f.breakpoints()[i + 1]);
            if (lo < hi && !(f.piece_values()[i] == v))
                throw std::invalid_argument("function jumps inside a component of the dense set");
        }
        for (std::size_t j = 0; j < f.point_values().size(); ++j) {
            const Rat& p = f.breakpoints()[j + 1];
            if (seg.lo < p && p < seg.hi && !(f.point_values()[j] == v))
                throw std::invalid_argument("function jumps inside a component of the dense set");
        }
        if (seg.lo_in && !(f(seg.lo) == v))
            throw std::invalid_argument("function jumps inside a component of the dense set");
        if (seg.hi_in && !(f(seg.hi) == v))
            throw std::invalid_argument("function jumps inside a component of the dense set");
    }

    PiecewiseFunction result = normalize(f);

    // postcondition: the extension restricts to f on d
    std::vector<Rat> cuts = f.breakpoints();
    cuts.insert(cuts.end(), result.breakpoints().begin(), result.breakpoints().end());
    cuts.insert(cuts.end(), missing->begin(), missing->end());
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Rat mid = midpoint(cuts[i], cuts[i + 1]);
        if (d.contains(mid) && !(f(mid) == result(mid)))
            throw std::logic_error("normal extension failed to restrict to the given function");
    }
    for (std::size_t j = 1; j + 1 < cuts.size(); ++j)
        if (d.contains(cuts[j]) && !(f(cuts[j]) == result(cuts[j])))
            throw std::logic_error("normal extension failed to restrict to the given function");
    return result;
}

// --- Level-set formulas ------------------------------------------------------------

CheckReport level_formula_check(const PiecewiseFunction& f, const PiecewiseFunction& g,
                                LevelFormula kind, const DomainValue& scalar) {
    require_normal(f, "level_formula_check");
    if (kind == LevelFormula::sum || kind == LevelFormula::product)
        require_normal(g, "level_formula_check");

    CheckReport report;
    auto check_threshold = [&](const DomainValue& a, const RegularOpenSet& lhs,
                               const RegularOpenSet& rhs) {
        std::string name = "a=" + to_string(a);
        if (lhs == rhs)
            report.add_pass(name);
        else
            report.add_fail(name, "lhs " + to_string(lhs) + " != rhs " + to_string(rhs));
    };

    std::vector<DomainValue> fv = f.values();
    std::vector<DomainValue> gv = g.values();

    switch (kind) {
    case LevelFormula::sum: {
        report.suite = "level-formula sum";
        PiecewiseFunction h = nf_add(f, g);
        std::vector<DomainValue> grid;
        for (const auto& b : fv)
            for (const auto& c : gv) grid.push_back(b + c);
        std::sort(grid.begin(), grid.end());
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
        grid.push_back(grid.back() + DomainValue(1));
        for (const auto& a : grid) {
            RegularOpenSet rhs; // empty join
            for (const auto& b : fv)
                for (const auto& c : gv)
                    if (b + c >= a)
                        rhs = ro_join(rhs, ro_meet(upset_level_ro(f, b), upset_level_ro(g, c)));
            check_threshold(a, upset_level_ro(h, a), rhs);
        }
        break;
    }
    case LevelFormula::product: {
        report.suite = "level-formula product";
        if (f.values().front() < DomainValue(0) || g.values().front() < DomainValue(0))
            throw std::invalid_argument("product clause needs f,g >= 0");
        PiecewiseFunction h = nf_mul(f, g);
        std::vector<DomainValue> grid;
        for (const auto& b : fv)
            for (const auto& c : gv) grid.push_back(b * c);
        std::sort(grid.begin(), grid.end());
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
        grid.push_back(grid.back() + DomainValue(1));
        for (const auto& a : grid) {
            RegularOpenSet rhs;
            for (const auto& b : fv)
                for (const auto& c : gv)
                    if (b >= DomainValue(0) && c >= DomainValue(0) && b * c >= a)
                        rhs = ro_join(rhs, ro_meet(upset_level_ro(f, b), upset_level_ro(g, c)));
            check_threshold(a, upset_level_ro(h, a), rhs);
        }
        break;
    }
    case LevelFormula::scalar: {
        report.suite = "level-formula scalar";
        if (!(scalar > DomainValue(0))) throw std::invalid_argument("scalar clause needs c > 0");
        PiecewiseFunction h = nf_scalar(scalar, f);
        std::vector<DomainValue> grid;
        for (const auto& b : fv) grid.push_back(scalar * b);
        grid.push_back(grid.back() + DomainValue(1));
        for (const auto& a : grid) {
            // smallest value b of f with scalar*b >= a, if any
            RegularOpenSet rhs; // empty when no such value
            for (const auto& b : fv)
                if (scalar * b >= a) {
                    rhs = upset_level_ro(f, b);
                    break;
                }
            check_threshold(a, upset_level_ro(h, a), rhs);
        }
        break;
    }
    case LevelFormula::scalar_shift: {
        report.suite = "level-formula scalar-shift";
        if (!(scalar > DomainValue(0))) throw std::invalid_argument("scalar clause needs c > 0");
        PiecewiseFunction h = nf_scalar(scalar, f);
        for (const auto& a : fv)
            check_threshold(a, upset_level_ro(h, scalar * a), upset_level_ro(f, a));
        break;
    }
    case LevelFormula::negation: {
        report.suite = "level-formula negation";
        PiecewiseFunction h = nf_negate(f);
        std::vector<DomainValue> grid = h.values();
        for (const auto& b : fv) grid.push_back(-b);
        std::sort(grid.begin(), grid.end());
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
        grid.push_back(grid.back() + DomainValue(1));
        for (const auto& a : grid) {
            // smallest value b of f with b > -a; none means the level is full
            RegularOpenSet rhs = RegularOpenSet::full();
            for (const auto& b : fv)
                if (b > -a) {
                    rhs = ro_complement(upset_level_ro(f, b));
                    break;
                }
            check_threshold(a, upset_level_ro(h, a), rhs);
        }
        break;
    }
    }
    return report;
}

// --- Textual syntax -----------------------------------------------------------------

PiecewiseFunction parse_step_function(std::string_view text) {
    struct Assignment {
        DomainValue value;
        std::vector<Seg> segs;
        std::vector<Rat> points;
    };
    std::vector<Assignment> assigns;
    std::optional<DomainValue> elsewhere;

    std::string_view rest = trim_view(text);
    if (rest.empty()) throw ParseError("empty step function");
    while (!rest.empty()) {
        auto semi = rest.find(';');
        std::string_view stmt = trim_view(rest.substr(0, semi));
        rest = semi == std::string_view::npos ? std::string_view{} : trim_view(rest.substr(semi + 1));
        if (stmt.empty()) continue;

        auto kw_on = stmt.find(" on ");
        auto kw_at = stmt.find(" at ");
        auto kw_else = stmt.find(" elsewhere");
        if (kw_on != std::string_view::npos) {
            Assignment a{parse_domain_value(stmt.substr(0, kw_on)),
                         parse_raw_intervals(stmt.substr(kw_on + 4)),
                         {}};
            assigns.push_back(std::move(a));
        } else if (kw_at != std::string_view::npos) {
            Assignment a{parse_domain_value(stmt.substr(0, kw_at)), {}, {}};
            Rat p = parse_rat(stmt.substr(kw_at + 4));
            if (p < 0 || p > 1) throw ParseError("point outside [0,1]");
            a.points.push_back(std::move(p));
            assigns.push_back(std::move(a));
        } else if (kw_else != std::string_view::npos) {
            if (elsewhere) throw ParseError("duplicate 'elsewhere'");
            if (!trim_view(stmt.substr(kw_else + 10)).empty())
                throw ParseError("trailing text after 'elsewhere'");
            elsewhere = parse_domain_value(stmt.substr(0, kw_else));
        } else {
            // bare value: constant function
            if (!assigns.empty() || elsewhere)
                throw ParseError("unexpected bare value: '" + std::string(stmt) + "'");
            return PiecewiseFunction(parse_domain_value(stmt));
        }
    }

    std::vector<Rat> cuts{Rat(0), Rat(1)};
    for (const auto& a : assigns) {
        for (const auto& s : a.segs) {
            cuts.push_back(s.lo);
            cuts.push_back(s.hi);
        }
        for (const auto& p : a.points) cuts.push_back(p);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    auto explicit_value_at = [&](const Rat& x) -> std::optional<DomainValue> {
        std::optional<DomainValue> found;
        for (const auto& a : assigns) {
            bool hit = false;
            for (const auto& s : a.segs) hit = hit || s.contains(x);
            for (const auto& p : a.points) hit = hit || p == x;
            if (hit) {
                if (found) throw ParseError("overlapping assignments at " + rat_to_string(x));
                found = a.value;
            }
        }
        return found;
    };

    std::vector<DomainValue> pieces;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        auto v = explicit_value_at(midpoint(cuts[i], cuts[i + 1]));
        if (!v) {
            if (!elsewhere)
                throw ParseError("uncovered interval around " +
                                 rat_to_string(midpoint(cuts[i], cuts[i + 1])));
            v = *elsewhere;
        }
        pieces.push_back(std::move(*v));
    }
    std::vector<DomainValue> points;
    for (std::size_t j = 1; j + 1 < cuts.size(); ++j) {
        auto v = explicit_value_at(cuts[j]);
        if (!v) v = elsewhere ? *elsewhere : dv_min(pieces[j - 1], pieces[j]);
        points.push_back(std::move(*v));
    }
    return PiecewiseFunction::make(std::move(cuts), std::move(pieces), std::move(points));
}

std::string to_string(const PiecewiseFunction& f) {
    if (f.is_constant()) return to_string(f.piece_values().front());

    // the value covering the greatest total length becomes "elsewhere"
    std::map<DomainValue, Rat> coverage;
    for (std::size_t i = 0; i + 1 < f.breakpoints().size(); ++i)
        coverage[f.piece_values()[i]] += f.breakpoints()[i + 1] - f.breakpoints()[i];
    DomainValue mode = f.piece_values().front();
    for (const auto& [v, len] : coverage)
        if (len > coverage[mode]) mode = v;

    std::ostringstream out;
    bool first = true;
    auto emit = [&](const std::string& stmt) {
        if (!first) out << "; ";
        first = false;
        out << stmt;
    };
    for (std::size_t i = 0; i + 1 < f.breakpoints().size(); ++i) {
        if (f.piece_values()[i] == mode) continue;
        const Rat& lo = f.breakpoints()[i];
        const Rat& hi = f.breakpoints()[i + 1];
        std::string seg = std::string(lo == 0 ? "[" : "(") + rat_to_string(lo) + "," +
                          rat_to_string(hi) + (hi == 1 ? "]" : ")");
        emit(to_string(f.piece_values()[i]) + " on " + seg);
    }
    for (std::size_t j = 0; j < f.point_values().size(); ++j)
        if (!(f.point_values()[j] == mode))
            emit(to_string(f.point_values()[j]) + " at " + rat_to_string(f.breakpoints()[j + 1]));
    emit(to_string(mode) + " elsewhere");
    return out.str();
}

// --- Sampling ---------------------------------------------------------------------------

PiecewiseFunction sample_normal_function(Rng& rng, DomainKind kind, int max_levels) {
    int levels = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_levels))) + 1;
    std::vector<DomainValue> vals = sample_scalar_chain(rng, kind, levels);
    std::vector<RegularOpenSet> chain{RegularOpenSet::full()};
    for (int i = 1; i < levels; ++i)
        chain.push_back(ro_meet(chain.back(), sample_regular_open(rng)));
    return assemble_from_chain(vals, chain);
}

PiecewiseFunction sample_piecewise(Rng& rng, DomainKind kind) {
    std::vector<Rat> cuts{Rat(0), Rat(1)};
    int extra = static_cast<int>(rng.below(4));
    for (int i = 0; i < extra; ++i) cuts.push_back(sample_unit_rat(rng));
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<DomainValue> pieces, points;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) pieces.push_back(sample_scalar(rng, kind));
    for (std::size_t j = 1; j + 1 < cuts.size(); ++j) points.push_back(sample_scalar(rng, kind));
    return PiecewiseFunction::make(std::move(cuts), std::move(pieces), std::move(points));
}

std::pair<PiecewiseFunction, PiecewiseFunction> sample_proximal_pair(Rng& rng, DomainKind kind) {
    PiecewiseFunction g = sample_normal_function(rng, kind);
    std::vector<DomainValue> vals = g.values();
    std::vector<RegularOpenSet> chain;
    RegularOpenSet acc = RegularOpenSet::full();
    for (const auto& a : vals) {
        acc = ro_meet(acc, ro_shrink(upset_level_ro(g, a)));
        chain.push_back(acc);
    }
    return {assemble_from_chain(vals, chain), g};
}

} // namespace devries
