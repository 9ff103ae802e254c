#include "devries/finite_boolean.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "devries/errors.hpp"

namespace devries {

FiniteBooleanAlgebra::FiniteBooleanAlgebra(int atoms) : atom_count(atoms) {
    if (atoms < 1 || atoms > 20) throw std::invalid_argument("atom count out of range");
}

std::vector<Mask> FiniteBooleanAlgebra::elements() const {
    std::vector<Mask> out(size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Mask>(i);
    return out;
}

std::vector<Mask> FiniteBooleanAlgebra::atoms() const {
    std::vector<Mask> out;
    for (int i = 0; i < atom_count; ++i) out.push_back(Mask{1} << i);
    return out;
}

std::string FiniteBooleanAlgebra::element_to_string(Mask a) const {
    std::string s(atom_count, '0');
    for (int i = 0; i < atom_count; ++i)
        if (a & (Mask{1} << i)) s[i] = '1';
    return s;
}

Mask FiniteBooleanAlgebra::parse_element(std::string_view bits) const {
    if (static_cast<int>(bits.size()) != atom_count)
        throw ParseError("element bitstring must have one bit per atom: '" + std::string(bits) + "'");
    Mask a = 0;
    for (int i = 0; i < atom_count; ++i) {
        if (bits[i] == '1')
            a |= Mask{1} << i;
        else if (bits[i] != '0')
            throw ParseError("element bitstring must be 0/1: '" + std::string(bits) + "'");
    }
    return a;
}

// --- FiniteProximity ------------------------------------------------------------

FiniteProximity FiniteProximity::boolean_order() { return FiniteProximity{}; }

FiniteProximity FiniteProximity::explicit_pairs(std::set<std::pair<Mask, Mask>> pairs) {
    FiniteProximity p;
    p.pairs_ = std::move(pairs);
    return p;
}

bool FiniteProximity::rel(const FiniteBooleanAlgebra& ba, Mask a, Mask b) const {
    if (!pairs_) return ba.leq(a, b);
    return pairs_->count({a, b}) > 0;
}

// --- Axiom checker ----------------------------------------------------------------

CheckReport check_devries_axioms(const FiniteBooleanAlgebra& ba, const FiniteProximity& prox) {
    if (ba.atom_count > 10) throw ScaleError("the axiom checker is limited to 10 atoms");
    CheckReport report;
    report.suite = "de Vries axioms (finite)";
    auto rel = [&](Mask a, Mask b) { return prox.rel(ba, a, b); };
    auto name = [&](Mask a) { return ba.element_to_string(a); };
    const std::vector<Mask> all = ba.elements();

    // exhaustive tuple scans up to 4 atoms; beyond, deterministic sampling
    // with an internal seed so reports stay byte-identical
    const bool exhaustive = ba.atom_count <= 4;
    Rng rng(0x9d5ULL + static_cast<std::uint64_t>(ba.atom_count));
    auto random_mask = [&] { return static_cast<Mask>(rng.below(ba.size())); };

    if (rel(ba.top(), ba.top()))
        report.add_pass("DV1");
    else
        report.add_fail("DV1", "1 is not well inside 1");

    bool done = false;
    for (Mask a : all) {
        for (Mask b : all)
            if (rel(a, b) && !ba.leq(a, b)) {
                report.add_fail("DV2", name(a) + " prox " + name(b) + " but not <=");
                done = true;
                break;
            }
        if (done) break;
    }
    if (!done) report.add_pass("DV2");

    done = false;
    if (exhaustive) {
        for (Mask b : all) {
            for (Mask c : all) {
                if (!rel(b, c)) continue;
                for (Mask a : all) {
                    if (!ba.leq(a, b)) continue;
                    for (Mask d : all)
                        if (ba.leq(c, d) && !rel(a, d)) {
                            report.add_fail("DV3", name(a) + " <= " + name(b) + " prox " +
                                                       name(c) + " <= " + name(d) + " yet not " +
                                                       name(a) + " prox " + name(d));
                            done = true;
                            break;
                        }
                    if (done) break;
                }
                if (done) break;
            }
            if (done) break;
        }
    } else {
        for (int i = 0; i < 20000 && !done; ++i) {
            Mask b = random_mask();
            Mask c = ba.join(b, random_mask());
            if (!rel(b, c)) continue;
            Mask a = ba.meet(b, random_mask());
            Mask d = ba.join(c, random_mask());
            if (!rel(a, d)) {
                report.add_fail("DV3", name(a) + " <= " + name(b) + " prox " + name(c) +
                                           " <= " + name(d) + " yet not " + name(a) + " prox " +
                                           name(d));
                done = true;
            }
        }
    }
    if (!done) report.add_pass("DV3");

    done = false;
    if (exhaustive) {
        for (Mask a : all) {
            for (Mask b : all) {
                if (!rel(a, b)) continue;
                for (Mask c : all)
                    if (rel(a, c) && !rel(a, ba.meet(b, c))) {
                        report.add_fail("DV4", name(a) + " prox " + name(b) + "," + name(c) +
                                                   " but not their meet");
                        done = true;
                        break;
                    }
                if (done) break;
            }
            if (done) break;
        }
    } else {
        for (int i = 0; i < 20000 && !done; ++i) {
            Mask a = random_mask();
            Mask b = ba.join(a, random_mask());
            Mask c = ba.join(a, random_mask());
            if (rel(a, b) && rel(a, c) && !rel(a, ba.meet(b, c))) {
                report.add_fail("DV4",
                                name(a) + " prox " + name(b) + "," + name(c) + " but not their meet");
                done = true;
            }
        }
    }
    if (!done) report.add_pass("DV4");

    done = false;
    for (Mask a : all) {
        for (Mask b : all)
            if (rel(a, b) && !rel(ba.complement(b), ba.complement(a))) {
                report.add_fail("DV5", name(a) + " prox " + name(b) + " but complements fail");
                done = true;
                break;
            }
        if (done) break;
    }
    if (!done) report.add_pass("DV5");

    done = false;
    auto dv6_witness = [&](Mask a, Mask b) {
        for (Mask c : all)
            if (rel(a, c) && rel(c, b)) return true;
        return false;
    };
    if (exhaustive) {
        for (Mask a : all) {
            for (Mask b : all) {
                if (!rel(a, b)) continue;
                if (!dv6_witness(a, b)) {
                    report.add_fail("DV6",
                                    "no interpolant between " + name(a) + " and " + name(b));
                    done = true;
                    break;
                }
            }
            if (done) break;
        }
    } else {
        for (int i = 0; i < 4000 && !done; ++i) {
            Mask a = random_mask();
            Mask b = ba.join(a, random_mask());
            if (!rel(a, b)) continue;
            if (!dv6_witness(a, b)) {
                report.add_fail("DV6", "no interpolant between " + name(a) + " and " + name(b));
                done = true;
            }
        }
    }
    if (!done) report.add_pass("DV6");

    done = false;
    for (Mask a : all) {
        if (a == ba.bottom()) continue;
        bool witness = false;
        for (Mask b : all) witness = witness || (b != ba.bottom() && rel(b, a));
        if (!witness) {
            report.add_fail("DV7", "no nonzero element below " + name(a));
            done = true;
            break;
        }
    }
    if (!done) report.add_pass("DV7");

    return report;
}

// --- Ideals and ends ------------------------------------------------------------------

bool is_ideal(const FiniteBooleanAlgebra& ba, const std::set<Mask>& members) {
    if (members.count(ba.bottom()) == 0) return false;
    for (Mask a : members) {
        for (Mask b : ba.elements())
            if (ba.leq(b, a) && members.count(b) == 0) return false;
        for (Mask b : members)
            if (members.count(ba.join(a, b)) == 0) return false;
    }
    return true;
}

bool is_round_ideal(const FiniteBooleanAlgebra& ba, const FiniteProximity& prox,
                    const std::set<Mask>& members) {
    if (!is_ideal(ba, members)) return false;
    for (Mask a : members) {
        bool witness = false;
        for (Mask b : members) witness = witness || prox.rel(ba, a, b);
        if (!witness) return false;
    }
    return true;
}

namespace {

std::set<Mask> principal_ideal(const FiniteBooleanAlgebra& ba, Mask g) {
    std::set<Mask> members;
    for (Mask a : ba.elements())
        if (ba.leq(a, g)) members.insert(a);
    return members;
}

std::vector<Mask> round_generators(const FiniteBooleanAlgebra& ba, const FiniteProximity& prox) {
    std::vector<Mask> gens;
    for (Mask g : ba.elements())
        if (is_round_ideal(ba, prox, principal_ideal(ba, g))) gens.push_back(g);
    return gens;
}

} // namespace

std::vector<std::vector<Mask>> round_ideals(const FiniteBooleanAlgebra& ba,
                                            const FiniteProximity& prox) {
    if (ba.atom_count > 6) throw ScaleError("ideal enumeration is limited to 6 atoms");
    std::vector<std::vector<Mask>> out;
    for (Mask g : round_generators(ba, prox)) {
        auto members = principal_ideal(ba, g);
        out.emplace_back(members.begin(), members.end());
    }
    return out;
}

std::vector<Mask> ends(const FiniteBooleanAlgebra& ba, const FiniteProximity& prox) {
    if (ba.atom_count > 6) throw ScaleError("end enumeration is limited to 6 atoms");
    std::vector<Mask> gens = round_generators(ba, prox);
    std::vector<Mask> maximal;
    for (Mask g : gens) {
        if (g == ba.top()) continue; // improper
        bool is_max = true;
        for (Mask h : gens)
            if (h != ba.top() && h != g && ba.leq(g, h)) is_max = false;
        if (is_max) maximal.push_back(g);
    }
    return maximal;
}

// --- End space ---------------------------------------------------------------------------

namespace {

std::vector<std::uint32_t> close_under_union_intersection(std::vector<std::uint32_t> opens,
                                                          std::uint32_t full) {
    std::set<std::uint32_t> acc(opens.begin(), opens.end());
    acc.insert(0);
    acc.insert(full);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::uint32_t> cur(acc.begin(), acc.end());
        for (auto x : cur)
            for (auto y : cur) {
                if (acc.insert(x | y).second) grew = true;
                if (acc.insert(x & y).second) grew = true;
            }
    }
    return {acc.begin(), acc.end()};
}

} // namespace

bool FiniteEndSpace::is_discrete() const {
    return opens.size() == (std::size_t{1} << point_count());
}

FiniteEndSpace end_space(const FiniteBooleanAlgebra& ba, const FiniteProximity& prox) {
    FiniteEndSpace space;
    space.atom_count = ba.atom_count;
    space.end_generators = ends(ba, prox);
    const int n = space.point_count();
    const std::uint32_t full = (n == 32) ? ~0u : ((std::uint32_t{1} << n) - 1);

    space.basis.resize(ba.size());
    for (Mask a : ba.elements()) {
        std::uint32_t pts = 0;
        for (int i = 0; i < n; ++i)
            if (ba.leq(ba.complement(a), space.end_generators[i])) pts |= std::uint32_t{1} << i;
        space.basis[a] = pts;
    }
    space.opens = close_under_union_intersection(
        std::vector<std::uint32_t>(space.basis.begin(), space.basis.end()), full);

    auto is_open = [&](std::uint32_t s) {
        return std::binary_search(space.opens.begin(), space.opens.end(), s);
    };
    auto interior = [&](std::uint32_t s) {
        std::uint32_t best = 0;
        for (auto o : space.opens)
            if ((o & ~s) == 0) best |= o;
        return best;
    };
    auto closure = [&](std::uint32_t s) { return full & ~interior(full & ~s); };

    // Hausdorff (hence compact Hausdorff: the space is finite)
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool separated = false;
            for (auto o1 : space.opens)
                for (auto o2 : space.opens)
                    separated = separated ||
                                ((o1 & (1u << i)) && (o2 & (1u << j)) && (o1 & o2) == 0);
            if (!separated) throw std::logic_error("end space is not Hausdorff");
        }

    // a |-> O(a) must embed the algebra into the regular opens
    for (Mask a : ba.elements()) {
        std::uint32_t oa = space.basis[a];
        if (!is_open(oa) || interior(closure(oa)) != oa)
            throw std::logic_error("basis image is not regular open");
        if (interior(full & ~oa) != space.basis[ba.complement(a)])
            throw std::logic_error("basis does not respect complement");
        for (Mask b : ba.elements()) {
            if ((oa & space.basis[b]) != space.basis[ba.meet(a, b)])
                throw std::logic_error("basis does not respect meet");
            if (a != b && oa == space.basis[b])
                throw std::logic_error("basis map is not injective");
        }
    }
    return space;
}

// --- Morphisms ------------------------------------------------------------------------------

CheckReport check_devries_morphism(const std::vector<Mask>& sigma,
                                   const FiniteBooleanAlgebra& src, const FiniteProximity& psrc,
                                   const FiniteBooleanAlgebra& dst, const FiniteProximity& pdst) {
    CheckReport report;
    report.suite = "de Vries morphism (M1-M4)";
    if (sigma.size() != src.size()) throw std::invalid_argument("morphism table size mismatch");
    auto nm_s = [&](Mask a) { return src.element_to_string(a); };

    if (sigma[src.bottom()] == dst.bottom())
        report.add_pass("M1");
    else
        report.add_fail("M1", "sigma(0) = " + dst.element_to_string(sigma[src.bottom()]));

    bool done = false;
    for (Mask a : src.elements()) {
        for (Mask b : src.elements())
            if (sigma[src.meet(a, b)] != dst.meet(sigma[a], sigma[b])) {
                report.add_fail("M2", "meet broken at " + nm_s(a) + "," + nm_s(b));
                done = true;
                break;
            }
        if (done) break;
    }
    if (!done) report.add_pass("M2");

    done = false;
    for (Mask a : src.elements()) {
        for (Mask b : src.elements()) {
            if (!psrc.rel(src, a, b)) continue;
            Mask lhs = dst.complement(sigma[src.complement(a)]);
            if (!pdst.rel(dst, lhs, sigma[b])) {
                report.add_fail("M3", nm_s(a) + " prox " + nm_s(b) + " not carried over");
                done = true;
                break;
            }
        }
        if (done) break;
    }
    if (!done) report.add_pass("M3");

    done = false;
    for (Mask a : src.elements()) {
        Mask lub = dst.bottom();
        for (Mask b : src.elements())
            if (psrc.rel(src, b, a)) lub = dst.join(lub, sigma[b]);
        if (sigma[a] != lub) {
            report.add_fail("M4", "sigma(" + nm_s(a) + ") is not the join of approximants");
            done = true;
            break;
        }
    }
    if (!done) report.add_pass("M4");

    return report;
}

std::vector<Mask> compose_devries(const std::vector<Mask>& rho, const std::vector<Mask>& sigma,
                                  const FiniteBooleanAlgebra& src, const FiniteProximity& psrc,
                                  const FiniteBooleanAlgebra& final_dst) {
    std::vector<Mask> out(src.size(), final_dst.bottom());
    for (Mask a : src.elements()) {
        Mask acc = final_dst.bottom();
        for (Mask b : src.elements())
            if (psrc.rel(src, b, a)) acc = final_dst.join(acc, rho[sigma[b]]);
        out[a] = acc;
    }
    return out;
}

std::vector<Mask> identity_devries(const FiniteBooleanAlgebra& ba) {
    return ba.elements();
}

std::vector<std::vector<Mask>> enumerate_devries_morphisms(const FiniteBooleanAlgebra& src,
                                                           const FiniteBooleanAlgebra& dst) {
    if (src.atom_count > 3 || dst.atom_count > 3)
        throw ScaleError("morphism enumeration is limited to 3 atoms");
    std::vector<std::vector<Mask>> out;
    const std::size_t n = src.size();
    const std::size_t m = dst.size();
    std::vector<Mask> table(n, 0);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= m;
    FiniteProximity order = FiniteProximity::boolean_order();
    auto quick_reject = [&] {
        if (table[src.bottom()] != dst.bottom()) return true;
        for (Mask a : src.elements())
            for (Mask b : src.elements())
                if (table[src.meet(a, b)] != dst.meet(table[a], table[b])) return true;
        return false;
    };
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (std::size_t i = 0; i < n; ++i) {
            table[i] = static_cast<Mask>(c % m);
            c /= m;
        }
        if (quick_reject()) continue;
        if (check_devries_morphism(table, src, order, dst, order).all_pass())
            out.push_back(table);
    }
    return out;
}

// --- Rigidity ----------------------------------------------------------------------------------

RigidityReport finite_proximity_rigidity(const FiniteBooleanAlgebra& ba) {
    if (ba.atom_count > 2) throw ScaleError("rigidity scan is exhaustive only up to 2 atoms");
    std::vector<std::pair<Mask, Mask>> le_pairs;
    for (Mask a : ba.elements())
        for (Mask b : ba.elements())
            if (ba.leq(a, b)) le_pairs.emplace_back(a, b);

    RigidityReport rep;
    const std::uint64_t total = std::uint64_t{1} << le_pairs.size();
    bool order_passes = false;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::set<std::pair<Mask, Mask>> pairs;
        for (std::size_t i = 0; i < le_pairs.size(); ++i)
            if (code & (std::uint64_t{1} << i)) pairs.insert(le_pairs[i]);
        ++rep.relations_scanned;
        FiniteProximity prox = FiniteProximity::explicit_pairs(std::move(pairs));
        if (check_devries_axioms(ba, prox).all_pass()) {
            ++rep.passing;
            bool is_order = code + 1 == total; // all le pairs present
            if (is_order) order_passes = true;
        }
    }
    rep.only_boolean_order_passes = rep.passing == 1 && order_passes;
    return rep;
}

bool is_zero_dimensional(const FiniteBooleanAlgebra& ba, const FiniteProximity& prox) {
    for (Mask a : ba.elements())
        for (Mask b : ba.elements()) {
            if (!prox.rel(ba, a, b)) continue;
            bool witness = false;
            for (Mask c : ba.elements())
                witness = witness || (prox.rel(ba, c, c) && prox.rel(ba, a, c) && prox.rel(ba, c, b));
            if (!witness) return false;
        }
    return true;
}

bool is_extremally_disconnected(const FiniteBooleanAlgebra& ba, const FiniteProximity& prox) {
    for (Mask a : ba.elements())
        for (Mask b : ba.elements())
            if (prox.rel(ba, a, b) != ba.leq(a, b)) return false;
    return true;
}

// --- File format -----------------------------------------------------------------------------

FiniteAlgebraSpec parse_finite_algebra(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<int> atoms;
    bool explicit_prox = false;
    std::set<std::pair<Mask, Mask>> pairs;
    std::optional<FiniteBooleanAlgebra> ba;

    auto trim = [](std::string s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
        return s;
    };

    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.rfind("atoms:", 0) == 0) {
            try {
                atoms = std::stoi(trim(t.substr(6)));
            } catch (...) {
                throw ParseError("bad atom count: '" + t + "'");
            }
            if (*atoms < 1 || *atoms > 20) throw ParseError("atom count out of range");
            ba.emplace(*atoms);
            continue;
        }
        if (t.rfind("prox:", 0) == 0) {
            std::string mode = trim(t.substr(5));
            if (mode == "explicit")
                explicit_prox = true;
            else if (mode != "leq" && mode != "default")
                throw ParseError("unknown prox mode: '" + mode + "'");
            continue;
        }
        if (!ba) throw ParseError("element line before 'atoms:'");
        if (!explicit_prox) throw ParseError("relation pairs need 'prox: explicit'");
        // "BITS < BITS" (or the unicode sign)
        auto lt = t.find('<');
        std::size_t sep_len = 1;
        if (lt == std::string::npos) {
            lt = t.find("≺");
            sep_len = 3;
        }
        if (lt == std::string::npos) throw ParseError("bad relation line: '" + t + "'");
        Mask a = ba->parse_element(trim(t.substr(0, lt)));
        Mask b = ba->parse_element(trim(t.substr(lt + sep_len)));
        pairs.insert({a, b});
    }
    if (!ba) throw ParseError("missing 'atoms:' header");
    FiniteProximity prox = explicit_prox ? FiniteProximity::explicit_pairs(std::move(pairs))
                                         : FiniteProximity::boolean_order();
    return {*ba, std::move(prox)};
}

} // namespace devries
