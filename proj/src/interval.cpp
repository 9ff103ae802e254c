#include "devries/interval.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace devries {

namespace {

void require_unit_range(const Rat& x, const char* what) {
    if (x < 0 || x > 1) throw std::invalid_argument(std::string(what) + " endpoint outside [0,1]");
}

std::string_view trim_view(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

// --- RegularOpenSet ---------------------------------------------------------

RegularOpenSet RegularOpenSet::full() {
    RegularOpenSet u;
    u.pieces_.push_back({Rat(0), Rat(1)});
    return u;
}

bool RegularOpenSet::is_full() const {
    return pieces_.size() == 1 && pieces_[0].lo == 0 && pieces_[0].hi == 1;
}

RegularOpenSet RegularOpenSet::from_pieces(std::vector<RoPiece> pieces) {
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        require_unit_range(pieces[i].lo, "piece");
        require_unit_range(pieces[i].hi, "piece");
        if (!(pieces[i].lo < pieces[i].hi))
            throw std::invalid_argument("empty or inverted piece");
        if (i > 0 && !(pieces[i - 1].hi < pieces[i].lo))
            throw std::invalid_argument("pieces not separated");
    }
    RegularOpenSet u;
    u.pieces_ = std::move(pieces);
    return u;
}

RegularOpenSet RegularOpenSet::canonicalize(const std::vector<Seg>& raw) {
    std::vector<std::pair<Rat, Rat>> closed;
    for (const auto& s : raw) {
        require_unit_range(s.lo, "interval");
        require_unit_range(s.hi, "interval");
        if (s.lo > s.hi) throw std::invalid_argument("inverted interval");
        if (s.lo == s.hi && !(s.lo_in && s.hi_in)) continue; // empty
        closed.emplace_back(s.lo, s.hi);
    }
    return ClosedIntervalSet::from_intervals(std::move(closed)).interior();
}

bool RegularOpenSet::contains(const Rat& x) const {
    for (const auto& p : pieces_) {
        if (p.lo < x && x < p.hi) return true;
        if (x == 0 && p.lo == 0) return true;
        if (x == 1 && p.hi == 1) return true;
    }
    return false;
}

ClosedIntervalSet RegularOpenSet::closure() const {
    std::vector<std::pair<Rat, Rat>> comps;
    comps.reserve(pieces_.size());
    for (const auto& p : pieces_) comps.emplace_back(p.lo, p.hi);
    return ClosedIntervalSet::from_intervals(std::move(comps));
}

PointSet RegularOpenSet::as_point_set() const {
    std::vector<Seg> segs;
    segs.reserve(pieces_.size());
    for (const auto& p : pieces_)
        segs.push_back({p.lo, p.hi, p.lo == 0, p.hi == 1});
    return PointSet::from_segs(std::move(segs));
}

// --- ClosedIntervalSet ------------------------------------------------------

ClosedIntervalSet ClosedIntervalSet::from_intervals(std::vector<std::pair<Rat, Rat>> raw) {
    std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
        return a.first < b.first || (a.first == b.first && a.second < b.second);
    });
    ClosedIntervalSet out;
    for (auto& iv : raw) {
        if (iv.first > iv.second) throw std::invalid_argument("inverted closed interval");
        if (!out.comps_.empty() && iv.first <= out.comps_.back().second) {
            if (iv.second > out.comps_.back().second) out.comps_.back().second = iv.second;
        } else {
            out.comps_.push_back(std::move(iv));
        }
    }
    return out;
}

bool ClosedIntervalSet::contains(const Rat& x) const {
    for (const auto& c : comps_)
        if (c.first <= x && x <= c.second) return true;
    return false;
}

RegularOpenSet ClosedIntervalSet::interior() const {
    std::vector<RoPiece> pieces;
    for (const auto& c : comps_)
        if (c.first < c.second) pieces.push_back({c.first, c.second});
    return RegularOpenSet::from_pieces(std::move(pieces));
}

// --- PointSet ----------------------------------------------------------------

PointSet PointSet::full() {
    return PointSet::from_segs({{Rat(0), Rat(1), true, true}});
}

PointSet PointSet::from_segs(std::vector<Seg> raw) {
    std::vector<Seg> kept;
    for (auto& s : raw) {
        if (s.lo > s.hi) throw std::invalid_argument("inverted segment");
        if (s.lo == s.hi && !(s.lo_in && s.hi_in)) continue;
        if (s.lo == s.hi) { s.lo_in = s.hi_in = true; }
        kept.push_back(std::move(s));
    }
    std::sort(kept.begin(), kept.end(), [](const Seg& a, const Seg& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        if (a.lo_in != b.lo_in) return a.lo_in; // inclusive first
        return a.hi < b.hi;
    });
    PointSet out;
    for (auto& s : kept) {
        if (out.segs_.empty()) {
            out.segs_.push_back(std::move(s));
            continue;
        }
        Seg& cur = out.segs_.back();
        bool joins = s.lo < cur.hi || (s.lo == cur.hi && (cur.hi_in || s.lo_in));
        if (!joins) {
            out.segs_.push_back(std::move(s));
            continue;
        }
        if (s.lo == cur.lo) cur.lo_in = cur.lo_in || s.lo_in;
        if (s.hi > cur.hi) {
            cur.hi = s.hi;
            cur.hi_in = s.hi_in;
        } else if (s.hi == cur.hi) {
            cur.hi_in = cur.hi_in || s.hi_in;
        }
    }
    return out;
}

bool PointSet::contains(const Rat& x) const {
    for (const auto& s : segs_)
        if (s.contains(x)) return true;
    return false;
}

ClosedIntervalSet PointSet::closure() const {
    std::vector<std::pair<Rat, Rat>> comps;
    comps.reserve(segs_.size());
    for (const auto& s : segs_) comps.emplace_back(s.lo, s.hi);
    return ClosedIntervalSet::from_intervals(std::move(comps));
}

PointSet PointSet::unite(const PointSet& other) const {
    std::vector<Seg> all = segs_;
    all.insert(all.end(), other.segs_.begin(), other.segs_.end());
    return from_segs(std::move(all));
}

PointSet PointSet::subtract_closed(const ClosedIntervalSet& c) const {
    std::vector<Seg> out;
    for (const auto& s : segs_) {
        std::vector<Seg> parts{s};
        for (const auto& cc : c.components()) {
            std::vector<Seg> next;
            for (const auto& part : parts) {
                if (cc.second < part.lo || part.hi < cc.first) {
                    next.push_back(part);
                    continue;
                }
                // left remainder: points strictly below cc.first
                if (part.lo < cc.first)
                    next.push_back({part.lo, cc.first, part.lo_in, false});
                // right remainder: points strictly above cc.second
                if (cc.second < part.hi)
                    next.push_back({cc.second, part.hi, false, part.hi_in});
            }
            parts = std::move(next);
        }
        out.insert(out.end(), parts.begin(), parts.end());
    }
    return from_segs(std::move(out));
}

namespace {

bool seg_covers(const Seg& t, const Seg& s) {
    bool lo_ok = t.lo < s.lo || (t.lo == s.lo && (t.lo_in || !s.lo_in));
    bool hi_ok = s.hi < t.hi || (s.hi == t.hi && (t.hi_in || !s.hi_in));
    return lo_ok && hi_ok;
}

} // namespace

bool PointSet::subset_of(const PointSet& other) const {
    for (const auto& s : segs_) {
        bool covered = false;
        for (const auto& t : other.segs_)
            if (seg_covers(t, s)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

std::optional<std::vector<Rat>> PointSet::dense_open_complement() const {
    if (segs_.empty()) return std::nullopt;
    std::vector<Rat> missing;
    const Seg& first = segs_.front();
    if (first.lo > 0) return std::nullopt;
    if (first.lo == 0 && !first.lo_in) missing.push_back(Rat(0));
    for (std::size_t i = 0; i + 1 < segs_.size(); ++i) {
        const Seg& a = segs_[i];
        const Seg& b = segs_[i + 1];
        if (a.hi < b.lo) return std::nullopt;
        // canonical adjacency: shared endpoint excluded on both sides
        missing.push_back(a.hi);
    }
    const Seg& last = segs_.back();
    if (last.hi < 1) return std::nullopt;
    if (last.hi == 1 && !last.hi_in) missing.push_back(Rat(1));
    return missing;
}

bool closed_subset_of_point_set(const ClosedIntervalSet& c, const PointSet& s) {
    for (const auto& comp : c.components()) {
        bool covered = false;
        for (const auto& seg : s.segs()) {
            bool lo_ok = seg.lo < comp.first || (seg.lo == comp.first && seg.lo_in);
            bool hi_ok = comp.second < seg.hi || (comp.second == seg.hi && seg.hi_in);
            if (lo_ok && hi_ok) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

// --- Boolean operations ------------------------------------------------------

RegularOpenSet ro_meet(const RegularOpenSet& a, const RegularOpenSet& b) {
    std::vector<RoPiece> out;
    for (const auto& p : a.pieces())
        for (const auto& q : b.pieces()) {
            Rat lo = std::max(p.lo, q.lo);
            Rat hi = std::min(p.hi, q.hi);
            if (lo < hi) out.push_back({std::move(lo), std::move(hi)});
        }
    std::sort(out.begin(), out.end(),
              [](const RoPiece& x, const RoPiece& y) { return x.lo < y.lo; });
    return RegularOpenSet::from_pieces(std::move(out));
}

RegularOpenSet ro_join(const RegularOpenSet& a, const RegularOpenSet& b) {
    std::vector<Seg> segs;
    for (const auto& p : a.pieces()) segs.push_back({p.lo, p.hi, false, false});
    for (const auto& q : b.pieces()) segs.push_back({q.lo, q.hi, false, false});
    return RegularOpenSet::canonicalize(segs);
}

RegularOpenSet ro_complement(const RegularOpenSet& a) {
    if (a.is_empty()) return RegularOpenSet::full();
    std::vector<RoPiece> out;
    const auto& ps = a.pieces();
    if (ps.front().lo > 0) out.push_back({Rat(0), ps.front().lo});
    for (std::size_t i = 0; i + 1 < ps.size(); ++i)
        out.push_back({ps[i].hi, ps[i + 1].lo});
    if (ps.back().hi < 1) out.push_back({ps.back().hi, Rat(1)});
    return RegularOpenSet::from_pieces(std::move(out));
}

bool ro_leq(const RegularOpenSet& a, const RegularOpenSet& b) {
    for (const auto& p : a.pieces()) {
        bool covered = false;
        for (const auto& q : b.pieces())
            if (q.lo <= p.lo && p.hi <= q.hi) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

bool ro_proximity(const RegularOpenSet& a, const RegularOpenSet& b) {
    for (const auto& p : a.pieces()) {
        bool covered = false;
        for (const auto& q : b.pieces()) {
            bool lo_ok = q.lo < p.lo || (q.lo == 0 && p.lo == 0);
            bool hi_ok = p.hi < q.hi || (q.hi == 1 && p.hi == 1);
            if (lo_ok && hi_ok) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

RegularOpenSet ro_interpolate(const RegularOpenSet& a, const RegularOpenSet& b) {
    if (!ro_proximity(a, b))
        throw std::invalid_argument("interpolate requires Cl(a) inside b");
    std::vector<Seg> segs;
    for (const auto& p : a.pieces()) {
        for (const auto& q : b.pieces()) {
            bool lo_ok = q.lo < p.lo || (q.lo == 0 && p.lo == 0);
            bool hi_ok = p.hi < q.hi || (q.hi == 1 && p.hi == 1);
            if (!lo_ok || !hi_ok) continue;
            Rat lo = (p.lo == 0) ? Rat(0) : midpoint(q.lo, p.lo);
            Rat hi = (p.hi == 1) ? Rat(1) : midpoint(p.hi, q.hi);
            segs.push_back({std::move(lo), std::move(hi), false, false});
            break;
        }
    }
    return RegularOpenSet::canonicalize(segs);
}

RegularOpenSet ro_below(const RegularOpenSet& a) {
    if (a.is_empty()) throw std::invalid_argument("below requires a nonempty set");
    const RoPiece* widest = &a.pieces().front();
    for (const auto& p : a.pieces())
        if (p.hi - p.lo > widest->hi - widest->lo) widest = &p;
    Rat third = (widest->hi - widest->lo) / 3;
    return RegularOpenSet::from_pieces({{widest->lo + third, widest->hi - third}});
}

bool end_member(const Rat& point, const RegularOpenSet& u) {
    require_unit_range(point, "end");
    return !u.closure().contains(point);
}

bool ro_is_clopen(const RegularOpenSet& u) { return ro_proximity(u, u); }

std::optional<RegularOpenSet> clopen_interpolant(const RegularOpenSet& a,
                                                 const RegularOpenSet& b) {
    if (!ro_proximity(a, b))
        throw std::invalid_argument("clopen_interpolant requires a prox b");
    std::vector<RegularOpenSet> candidates{RegularOpenSet::empty(), RegularOpenSet::full(),
                                           ro_interpolate(a, b), ro_shrink(b)};
    if (!b.is_empty()) candidates.push_back(ro_below(b));
    for (const auto& c : candidates)
        if (ro_is_clopen(c) && ro_proximity(a, c) && ro_proximity(c, b)) return c;
    return std::nullopt;
}

bool interval_is_zero_dimensional() {
    RegularOpenSet a = RegularOpenSet::from_pieces({{make_rat(1, 4), make_rat(1, 2)}});
    RegularOpenSet b = RegularOpenSet::from_pieces({{make_rat(1, 8), make_rat(3, 4)}});
    return clopen_interpolant(a, b).has_value();
}

bool interval_is_extremally_disconnected() {
    RegularOpenSet u = RegularOpenSet::from_pieces({{make_rat(1, 4), make_rat(1, 2)}});
    return !ro_leq(u, u) || ro_proximity(u, u);
}

// --- PLMap -------------------------------------------------------------------

PLMap PLMap::through(std::vector<std::pair<Rat, Rat>> vertices) {
    if (vertices.size() < 2) throw std::invalid_argument("plmap needs at least two vertices");
    if (vertices.front().first != 0 || vertices.back().first != 1)
        throw std::invalid_argument("plmap must span [0,1]");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        require_unit_range(vertices[i].second, "plmap value");
        if (i > 0 && !(vertices[i - 1].first < vertices[i].first))
            throw std::invalid_argument("plmap breakpoints must increase");
    }
    PLMap m;
    m.verts_ = std::move(vertices);
    return m;
}

PLMap PLMap::identity() { return through({{Rat(0), Rat(0)}, {Rat(1), Rat(1)}}); }

PLMap PLMap::constant(const Rat& y) { return through({{Rat(0), y}, {Rat(1), y}}); }

Rat PLMap::apply(const Rat& x) const {
    require_unit_range(x, "plmap argument");
    for (std::size_t i = 0; i + 1 < verts_.size(); ++i) {
        const auto& [x0, y0] = verts_[i];
        const auto& [x1, y1] = verts_[i + 1];
        if (x0 <= x && x <= x1)
            return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
    }
    throw std::logic_error("plmap argument not covered");
}

RegularOpenSet pl_hat(const PLMap& phi, const RegularOpenSet& u) {
    std::vector<std::pair<Rat, Rat>> closed;
    const auto& vs = phi.vertices();
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
        const Rat& p = vs[i].first;
        const Rat& q = vs[i + 1].first;
        const Rat& yp = vs[i].second;
        const Rat& yq = vs[i + 1].second;
        Rat slope = (yq - yp) / (q - p);
        for (const auto& piece : u.pieces()) {
            if (slope == 0) {
                if (u.contains(yp)) closed.emplace_back(p, q);
                continue;
            }
            // open core: l < phi(x) < r
            Rat t1 = p + (piece.lo - yp) / slope;
            Rat t2 = p + (piece.hi - yp) / slope;
            if (t2 < t1) std::swap(t1, t2);
            Rat lo = std::max(p, t1);
            Rat hi = std::min(q, t2);
            if (lo < hi) closed.emplace_back(lo, hi);
            // boundary points of the space inside u
            if (piece.lo == 0) {
                Rat x0 = p + (Rat(0) - yp) / slope;
                if (p <= x0 && x0 <= q) closed.emplace_back(x0, x0);
            }
            if (piece.hi == 1) {
                Rat x1 = p + (Rat(1) - yp) / slope;
                if (p <= x1 && x1 <= q) closed.emplace_back(x1, x1);
            }
        }
    }
    return ClosedIntervalSet::from_intervals(std::move(closed)).interior();
}

PLMap compose(const PLMap& outer, const PLMap& inner) {
    std::vector<Rat> cuts;
    for (const auto& v : inner.vertices()) cuts.push_back(v.first);
    const auto& iv = inner.vertices();
    for (std::size_t i = 0; i + 1 < iv.size(); ++i) {
        const Rat& p = iv[i].first;
        const Rat& q = iv[i + 1].first;
        const Rat& yp = iv[i].second;
        const Rat& yq = iv[i + 1].second;
        if (yp == yq) continue;
        Rat slope = (yq - yp) / (q - p);
        for (const auto& ov : outer.vertices()) {
            Rat t = p + (ov.first - yp) / slope;
            if (p < t && t < q) cuts.push_back(t);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<std::pair<Rat, Rat>> verts;
    verts.reserve(cuts.size());
    for (const auto& x : cuts) verts.emplace_back(x, outer.apply(inner.apply(x)));
    return PLMap::through(std::move(verts));
}

// --- Textual syntax ----------------------------------------------------------

namespace {

Seg parse_one_interval(std::string_view text) {
    std::string_view s = trim_view(text);
    if (s.size() < 5) throw ParseError("bad interval: '" + std::string(text) + "'");
    char open = s.front();
    char close = s.back();
    if ((open != '[' && open != '(') || (close != ']' && close != ')'))
        throw ParseError("bad interval brackets: '" + std::string(text) + "'");
    std::string_view body = s.substr(1, s.size() - 2);
    auto comma = body.find(',');
    if (comma == std::string_view::npos)
        throw ParseError("interval needs a comma: '" + std::string(text) + "'");
    Rat lo = parse_rat(body.substr(0, comma));
    Rat hi = parse_rat(body.substr(comma + 1));
    if (lo < 0 || hi > 1 || lo > 1 || hi < 0)
        throw ParseError("interval endpoint outside [0,1]: '" + std::string(text) + "'");
    return Seg{std::move(lo), std::move(hi), open == '[', close == ']'};
}

std::vector<std::string_view> split_on_u(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '[' || c == '(') ++depth;
        if (c == ']' || c == ')') --depth;
        if (depth == 0 && (c == 'u' || c == 'U')) {
            out.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    out.push_back(text.substr(start));
    return out;
}

} // namespace

std::vector<Seg> parse_raw_intervals(std::string_view text) {
    std::string_view s = trim_view(text);
    if (s == "empty") return {};
    std::vector<Seg> segs;
    for (auto part : split_on_u(s)) segs.push_back(parse_one_interval(part));
    return segs;
}

RegularOpenSet parse_regular_open(std::string_view text) {
    std::vector<Seg> segs = parse_raw_intervals(text);
    std::vector<RoPiece> pieces;
    for (const auto& s : segs) {
        bool lo_shape_ok = s.lo_in ? (s.lo == 0) : (s.lo >= 0);
        bool hi_shape_ok = s.hi_in ? (s.hi == 1) : (s.hi <= 1);
        if (!lo_shape_ok || !hi_shape_ok)
            throw ParseError("not a canonical regular open piece in '" + std::string(text) +
                             "' (closed endpoints are only allowed at 0 and 1)");
        if (!s.lo_in && s.lo == 0)
            throw ParseError("piece touching 0 must be closed there: use [0,...");
        if (!s.hi_in && s.hi == 1)
            throw ParseError("piece touching 1 must be closed there: use ...,1]");
        pieces.push_back({s.lo, s.hi});
    }
    try {
        return RegularOpenSet::from_pieces(std::move(pieces));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("not canonical: ") + e.what());
    }
}

std::string to_string(const RegularOpenSet& u) {
    if (u.is_empty()) return "empty";
    std::ostringstream out;
    bool first = true;
    for (const auto& p : u.pieces()) {
        if (!first) out << " u ";
        first = false;
        out << (p.lo == 0 ? "[" : "(") << rat_to_string(p.lo) << "," << rat_to_string(p.hi)
            << (p.hi == 1 ? "]" : ")");
    }
    return out.str();
}

PLMap parse_plmap(std::string_view text) {
    std::vector<std::pair<Rat, Rat>> verts;
    std::string_view s = trim_view(text);
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i >= s.size()) break;
        if (s[i] != '(') throw ParseError("plmap vertex must start with '('");
        auto close = s.find(')', i);
        if (close == std::string_view::npos) throw ParseError("unterminated plmap vertex");
        std::string_view body = s.substr(i + 1, close - i - 1);
        auto comma = body.find(',');
        if (comma == std::string_view::npos) throw ParseError("plmap vertex needs a comma");
        verts.emplace_back(parse_rat(body.substr(0, comma)), parse_rat(body.substr(comma + 1)));
        i = close + 1;
    }
    try {
        return PLMap::through(std::move(verts));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad plmap: ") + e.what());
    }
}

std::string to_string(const PLMap& m) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [x, y] : m.vertices()) {
        if (!first) out << " ";
        first = false;
        out << "(" << rat_to_string(x) << "," << rat_to_string(y) << ")";
    }
    return out.str();
}

// --- Sampling ------------------------------------------------------------------

RegularOpenSet sample_regular_open(Rng& rng, int max_pieces) {
    int want = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_pieces) + 1));
    if (want == 0) return rng.chance(1, 8) ? RegularOpenSet::full() : RegularOpenSet::empty();
    std::vector<Rat> cuts;
    for (int i = 0; i < 2 * want; ++i) cuts.push_back(sample_unit_rat(rng));
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<RoPiece> pieces;
    for (std::size_t i = 0; i + 1 < cuts.size(); i += 2)
        pieces.push_back({cuts[i], cuts[i + 1]});
    return RegularOpenSet::from_pieces(std::move(pieces));
}

RegularOpenSet sample_proper_regular_open(Rng& rng) {
    for (int tries = 0; tries < 64; ++tries) {
        RegularOpenSet u = sample_regular_open(rng);
        if (!u.is_empty() && !u.is_full()) return u;
    }
    return RegularOpenSet::from_pieces({{make_rat(1, 4), make_rat(1, 2)}});
}

RegularOpenSet ro_shrink(const RegularOpenSet& u) {
    std::vector<RoPiece> out;
    for (const auto& p : u.pieces()) {
        Rat d = (p.hi - p.lo) / 4;
        Rat lo = (p.lo == 0) ? Rat(0) : p.lo + d;
        Rat hi = (p.hi == 1) ? Rat(1) : p.hi - d;
        if (lo < hi) out.push_back({std::move(lo), std::move(hi)});
    }
    return RegularOpenSet::from_pieces(std::move(out));
}

} // namespace devries
