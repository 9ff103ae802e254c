#include "devries/morphisms.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "devries/errors.hpp"

namespace devries {

FinMorphism extend_morphism(const std::vector<Mask>& table, const FiniteCarrier& src,
                            const FiniteCarrier& dst) {
    CheckReport check = check_devries_morphism(table, src.algebra(), src.proximity(),
                                               dst.algebra(), dst.proximity());
    if (!check.all_pass())
        throw std::invalid_argument("idempotent map is not a de Vries morphism:\n" +
                                    check.render_text());
    return {&src, &dst, [table](const Mask& e) { return table[e]; }};
}

IntervalMorphism phi_star(const PLMap& phi, const IntervalCarrier& src,
                          const IntervalCarrier& dst) {
    return {&src, &dst, [phi](const RegularOpenSet& u) { return pl_hat(phi, u); }};
}

FinMorphism phi_star_finite(const std::vector<int>& point_map, const FiniteCarrier& src,
                            const FiniteCarrier& dst) {
    // sigma(U) = preimage of U; on a discrete space Int(Cl(.)) is the identity
    if (static_cast<int>(point_map.size()) != dst.algebra().atom_count)
        throw std::invalid_argument("point map must cover the domain space");
    for (int image : point_map)
        if (image < 0 || image >= src.algebra().atom_count)
            throw std::invalid_argument("point map lands outside the codomain space");
    std::vector<Mask> table(src.algebra().size(), 0);
    for (Mask u : src.algebra().elements()) {
        Mask pre = 0;
        for (int x = 0; x < dst.algebra().atom_count; ++x)
            if (u & (Mask{1} << point_map[x])) pre |= Mask{1} << x;
        table[u] = pre;
    }
    return extend_morphism(table, src, dst);
}

// --- Ends -------------------------------------------------------------------------

SpeckerEnd kernel(const FinMorphism& alpha) {
    const FiniteCarrier& src = *alpha.src;
    const FiniteCarrier& dst = *alpha.dst;
    if (dst.algebra().atom_count != 1)
        throw std::invalid_argument("kernel is defined for morphisms into A");
    Mask gen = src.bottom();
    for (Mask e : src.algebra().elements())
        if (dst.is_zero(alpha.apply_idem(e))) gen = src.join(gen, e);
    SpeckerEnd end;
    end.boolean_generator = gen;
    end.proper = gen != src.top();
    return end;
}

namespace {

DomainValue value_at_atom(const FinSpecker& s, Mask atom) {
    for (const auto& t : s.terms())
        if (t.idem & atom) return t.val;
    throw std::logic_error("orthogonal form does not cover the atom");
}

} // namespace

EndsCrossCheck ends_of_specker(const FiniteCarrier& carrier) {
    if (carrier.algebra().atom_count > 3)
        throw ScaleError("the exhaustive end cross-check is limited to 3 atoms");
    EndsCrossCheck out;

    // (5)/(4): ideals generated by the ends of the idempotent algebra
    out.from_boolean_ends = ends(carrier.algebra(), carrier.proximity());
    std::sort(out.from_boolean_ends.begin(), out.from_boolean_ends.end());

    // (3): down-down P over minimal primes; minimal primes are the kernels of
    // the atom evaluations, and their idempotent parts generate
    for (Mask atom : carrier.algebra().atoms()) {
        Mask gen = carrier.bottom();
        for (Mask e : carrier.algebra().elements()) {
            FinSpecker chi = FinSpecker::indicator(carrier, e);
            bool in_p = value_at_atom(chi, atom) == DomainValue(0);
            if (in_p) gen = carrier.join(gen, e);
        }
        out.from_minimal_primes.push_back(gen);
    }
    std::sort(out.from_minimal_primes.begin(), out.from_minimal_primes.end());

    // (2): kernels of proximity morphisms S -> A, enumerated from the
    // de Vries morphisms Id(S) -> 2
    FiniteCarrier target(1);
    for (const auto& table : enumerate_devries_morphisms(carrier.algebra(), target.algebra())) {
        FinMorphism alpha = extend_morphism(table, carrier, target);
        SpeckerEnd end = kernel(alpha);
        if (end.proper) out.from_kernels.push_back(end.boolean_generator);
    }
    std::sort(out.from_kernels.begin(), out.from_kernels.end());
    out.from_kernels.erase(std::unique(out.from_kernels.begin(), out.from_kernels.end()),
                           out.from_kernels.end());

    // (1): maximality among proper round ideals, exhaustive over the ideals
    // generated by Boolean round ideals
    out.maximality_verified = true;
    for (Mask g : out.from_boolean_ends) {
        for (Mask h : carrier.algebra().elements()) {
            bool strictly_between = carrier.leq(g, h) && h != g && h != carrier.top();
            if (!strictly_between) continue;
            std::set<Mask> members;
            for (Mask e : carrier.algebra().elements())
                if (carrier.leq(e, h)) members.insert(e);
            if (is_round_ideal(carrier.algebra(), carrier.proximity(), members))
                out.maximality_verified = false;
        }
    }

    out.agree = out.from_boolean_ends == out.from_minimal_primes &&
                out.from_boolean_ends == out.from_kernels && out.maximality_verified;
    return out;
}

SpeckerEndSpace end_space_of_specker(const FiniteCarrier& carrier, Rng& rng, DomainKind kind,
                                     int samples) {
    SpeckerEndSpace out;
    out.boolean_space = end_space(carrier.algebra(), carrier.proximity());
    out.end_generators = out.boolean_space.end_generators;

    auto u_of = [&](const FinSpecker& s) {
        std::uint32_t pts = 0;
        for (std::size_t i = 0; i < out.end_generators.size(); ++i) {
            SpeckerEnd end{out.end_generators[i], true};
            if (end.contains(s)) pts |= std::uint32_t{1} << i;
        }
        return pts;
    };

    out.bases_match = true;
    for (Mask e : carrier.algebra().elements()) {
        std::uint32_t via_u = u_of(FinSpecker::indicator(carrier, e));
        std::uint32_t via_o = out.boolean_space.basis[carrier.complement(e)];
        if (via_u != via_o) out.bases_match = false;
    }
    // U(s) = U(e_1) cap ... cap U(e_n) over the nonzero-value idempotents
    for (int i = 0; i < samples && out.bases_match; ++i) {
        FinSpecker s = sample_element(carrier, rng, kind);
        std::uint32_t direct = u_of(s);
        std::uint32_t inter = (std::uint32_t{1} << out.end_generators.size()) - 1;
        for (const auto& t : s.terms())
            if (!(t.val == DomainValue(0)))
                inter &= u_of(FinSpecker::indicator(carrier, t.idem));
        if (direct != inter) out.bases_match = false;
    }
    return out;
}

// --- Category structure ---------------------------------------------------------------

FinMorphism compose_prox(const FinMorphism& beta, const FinMorphism& alpha) {
    const FiniteCarrier& src = *alpha.src;
    const FiniteCarrier& mid = *alpha.dst;
    const FiniteCarrier& dst = *beta.dst;
    if (&mid != beta.src) throw std::invalid_argument("morphisms are not composable");
    std::vector<Mask> sigma_table(src.algebra().size());
    std::vector<Mask> rho_table(mid.algebra().size());
    for (Mask e : src.algebra().elements()) sigma_table[e] = alpha.apply_idem(e);
    for (Mask e : mid.algebra().elements()) rho_table[e] = beta.apply_idem(e);
    std::vector<Mask> composite = compose_devries(rho_table, sigma_table, src.algebra(),
                                                  src.proximity(), dst.algebra());
    return extend_morphism(composite, src, dst);
}

std::vector<int> dual_of_morphism(const FinMorphism& alpha, const std::vector<Mask>& ends_src,
                                  const std::vector<Mask>& ends_dst) {
    const FiniteCarrier& src = *alpha.src;
    std::vector<int> point_map;
    for (Mask h : ends_dst) {
        // generator of down-down alpha^{-1}(I_h) on idempotents
        Mask gen = src.bottom();
        for (Mask e : src.algebra().elements())
            if (alpha.dst->leq(alpha.apply_idem(e), h)) gen = src.join(gen, e);
        auto it = std::find(ends_src.begin(), ends_src.end(), gen);
        if (it == ends_src.end())
            throw std::logic_error("dual image is not an end of the source");
        point_map.push_back(static_cast<int>(it - ends_src.begin()));
    }
    return point_map;
}

DualityReport duality_roundtrip_space(int point_count) {
    if (point_count < 1 || point_count > 6)
        throw ScaleError("space roundtrip is limited to 6 points");
    DualityReport rep;
    // X^* = FN(X) is the Specker algebra over the powerset of X
    FiniteCarrier carrier(point_count);
    FiniteEndSpace space = end_space(carrier.algebra(), carrier.proximity());
    if (space.point_count() != point_count) {
        rep.detail = "end count differs from point count";
        return rep;
    }
    if (!space.is_discrete()) {
        rep.detail = "end space is not discrete";
        return rep;
    }
    // the point bijection x |-> end at x; O must match the discrete basis
    std::vector<int> bijection(point_count, -1);
    for (int i = 0; i < space.point_count(); ++i) {
        Mask gen = space.end_generators[i];
        Mask atom = carrier.complement(gen);
        if (__builtin_popcount(atom) != 1) {
            rep.detail = "end generator is not an atom complement";
            return rep;
        }
        bijection[i] = __builtin_ctz(atom);
    }
    std::sort(bijection.begin(), bijection.end());
    for (int i = 0; i < point_count; ++i)
        if (bijection[i] != i) {
            rep.detail = "ends do not biject with points";
            return rep;
        }
    for (Mask u : carrier.algebra().elements()) {
        // O(u) should be exactly u under the bijection
        std::uint32_t expect = 0;
        for (int i = 0; i < point_count; ++i) {
            Mask atom = carrier.complement(space.end_generators[i]);
            if (u & atom) expect |= std::uint32_t{1} << i;
        }
        if (space.basis[u] != expect) {
            rep.detail = "basis does not match the discrete topology";
            return rep;
        }
    }
    rep.pass = true;
    rep.detail = "points=" + std::to_string(point_count);
    return rep;
}

DualityReport duality_roundtrip_algebra(const FiniteCarrier& carrier, Rng& rng, DomainKind kind,
                                        int samples) {
    if (carrier.algebra().atom_count > 3) throw ScaleError("algebra roundtrip limited to 3 atoms");
    DualityReport rep;
    FiniteEndSpace space = end_space(carrier.algebra(), carrier.proximity());
    const int n = space.point_count();
    if (n != carrier.algebra().atom_count) {
        rep.detail = "end space size mismatch";
        return rep;
    }
    // (S_*)^* is the Specker algebra over the powerset of the end space; the
    // representation sends e to O(e)
    FiniteCarrier image(n);
    std::vector<Mask> table(carrier.algebra().size());
    for (Mask e : carrier.algebra().elements()) table[e] = space.basis[e];
    FinMorphism eta = extend_morphism(table, carrier, image);

    // Boolean isomorphism on idempotents, exhaustive
    std::vector<bool> seen(image.algebra().size(), false);
    for (Mask e : carrier.algebra().elements()) {
        Mask img = table[e];
        if (seen[img]) {
            rep.detail = "representation not injective on idempotents";
            return rep;
        }
        seen[img] = true;
        for (Mask k : carrier.algebra().elements()) {
            if (table[carrier.meet(e, k)] != image.meet(table[e], table[k]) ||
                table[carrier.join(e, k)] != image.join(table[e], table[k])) {
                rep.detail = "representation breaks the lattice structure";
                return rep;
            }
        }
        if (table[carrier.complement(e)] != image.complement(table[e])) {
            rep.detail = "representation breaks complement";
            return rep;
        }
    }

    // A-algebra homomorphism + proximity preserved and reflected, sampled
    for (int i = 0; i < samples; ++i) {
        FinSpecker s = sample_element(carrier, rng, kind);
        FinSpecker t = sample_element(carrier, rng, kind);
        if (!sp_equal(eta.apply(sp_add(s, t)), sp_add(eta.apply(s), eta.apply(t))) ||
            !sp_equal(eta.apply(sp_mul(s, t)), sp_mul(eta.apply(s), eta.apply(t))) ||
            !sp_equal(eta.apply(sp_join(s, t)), sp_join(eta.apply(s), eta.apply(t)))) {
            rep.detail = "representation is not an A-algebra homomorphism at s=" + to_string(s);
            return rep;
        }
        if (sp_prox(s, t) != sp_prox(eta.apply(s), eta.apply(t))) {
            rep.detail = "representation does not preserve/reflect prox at s=" + to_string(s);
            return rep;
        }
        if (sp_equal(eta.apply(s), eta.apply(t)) != sp_equal(s, t)) {
            rep.detail = "representation is not injective";
            return rep;
        }
    }
    rep.pass = true;
    rep.detail = "atoms=" + std::to_string(carrier.algebra().atom_count);
    return rep;
}

// --- Morphism file format ------------------------------------------------------------

MorphismSpec parse_morphism_file(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    MorphismSpec spec;
    bool in_map = false;
    bool saw_source = false, saw_target = false;
    std::map<Mask, Mask> rows;

    auto trim = [](std::string s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
        return s;
    };
    auto parse_carrier = [&](const std::string& v) -> int {
        if (v == "interval") return -1;
        if (v.rfind("finite:", 0) == 0) {
            try {
                return std::stoi(v.substr(7));
            } catch (...) {
                throw ParseError("bad carrier spec: '" + v + "'");
            }
        }
        throw ParseError("carrier must be 'interval' or 'finite:<atoms>'");
    };

    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.rfind("source:", 0) == 0) {
            int a = parse_carrier(trim(t.substr(7)));
            spec.kind = a < 0 ? MorphismSpec::Kind::interval : MorphismSpec::Kind::finite;
            spec.src_atoms = a < 0 ? 0 : a;
            saw_source = true;
            continue;
        }
        if (t.rfind("target:", 0) == 0) {
            int a = parse_carrier(trim(t.substr(7)));
            bool interval = a < 0;
            if (saw_source && interval != (spec.kind == MorphismSpec::Kind::interval))
                throw ParseError("mixed finite/interval morphisms are not supported");
            spec.dst_atoms = a < 0 ? 0 : a;
            saw_target = true;
            continue;
        }
        if (t == "map:") {
            in_map = true;
            continue;
        }
        if (t.rfind("plmap:", 0) == 0) {
            spec.plmap = parse_plmap(t.substr(6));
            continue;
        }
        if (in_map) {
            auto arrow = t.find("->");
            if (arrow == std::string::npos) throw ParseError("map line needs '->': '" + t + "'");
            FiniteBooleanAlgebra src(spec.src_atoms);
            FiniteBooleanAlgebra dst(spec.dst_atoms);
            Mask from = src.parse_element(trim(t.substr(0, arrow)));
            Mask to = dst.parse_element(trim(t.substr(arrow + 2)));
            if (!rows.emplace(from, to).second) throw ParseError("duplicate map row: '" + t + "'");
            continue;
        }
        throw ParseError("unrecognized morphism line: '" + t + "'");
    }
    if (!saw_source || !saw_target) throw ParseError("morphism file needs source: and target:");
    if (spec.kind == MorphismSpec::Kind::finite) {
        FiniteBooleanAlgebra src(spec.src_atoms);
        spec.table.resize(src.size());
        for (Mask e : src.elements()) {
            auto it = rows.find(e);
            if (it == rows.end())
                throw ParseError("map is missing element " + src.element_to_string(e));
            spec.table[e] = it->second;
        }
    }
    return spec;
}

} // namespace devries
