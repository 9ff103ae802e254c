#include "devries/specker.hpp"

#include <cctype>
#include <sstream>

#include "devries/errors.hpp"

namespace devries {

// --- Bridge between the symbolic algebra and normal step functions -------------

Specker<IntervalCarrier> from_normal(const IntervalCarrier& c, const PiecewiseFunction& f) {
    if (!is_normal(f))
        throw std::invalid_argument("element is not a normal function: " + to_string(f));
    std::vector<DomainValue> vals = f.values();
    std::vector<RegularOpenSet> levels;
    levels.reserve(vals.size());
    for (const auto& a : vals) levels.push_back(upset_level_ro(f, a));

    std::vector<Specker<IntervalCarrier>::Term> raw;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        RegularOpenSet piece = (i + 1 < vals.size())
                                   ? ro_meet(levels[i], ro_complement(levels[i + 1]))
                                   : levels[i];
        if (!piece.is_empty()) raw.push_back({vals[i], std::move(piece)});
    }
    return Specker<IntervalCarrier>::from_orthogonal(c, std::move(raw));
}

PiecewiseFunction to_normal(const Specker<IntervalCarrier>& s) {
    DecreasingForm<IntervalCarrier> d = to_decreasing(s);
    std::vector<DomainValue> vals{d.base};
    std::vector<RegularOpenSet> chain{RegularOpenSet::full()};
    DomainValue acc = d.base;
    for (const auto& [b, k] : d.steps) {
        acc = acc + b;
        vals.push_back(acc);
        chain.push_back(k);
    }
    return assemble_from_chain(vals, chain);
}

// --- Textual element syntax ------------------------------------------------------

std::string to_string(const Specker<IntervalCarrier>& s) {
    std::ostringstream out;
    bool first = true;
    for (const auto& t : s.terms()) {
        if (!first) out << "; ";
        first = false;
        out << to_string(t.val) << " on " << to_string(t.idem);
    }
    return out.str();
}

Specker<IntervalCarrier> parse_interval_element(const IntervalCarrier& c, std::string_view text) {
    PiecewiseFunction f = parse_step_function(text);
    try {
        return from_normal(c, f);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(e.what()) + " (route it through normalize first)");
    }
}

std::string to_string(const Specker<FiniteCarrier>& s) {
    DecreasingForm<FiniteCarrier> d = to_decreasing(s);
    std::ostringstream out;
    out << to_string(d.base);
    for (const auto& [b, k] : d.steps)
        out << " + " << to_string(b) << "*" << s.carrier().print(k);
    return out.str();
}

Specker<FiniteCarrier> parse_finite_element(const FiniteCarrier& c, std::string_view text) {
    // decreasing form: "a0 + b1*BITS + b2*BITS"
    std::vector<std::string> parts;
    std::string cur;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '+' && !cur.empty()) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += text[i];
        }
    }
    if (!cur.empty()) parts.push_back(cur);
    if (parts.empty()) throw ParseError("empty element");

    auto trim = [](std::string s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
        return s;
    };

    DecreasingForm<FiniteCarrier> d;
    d.base = parse_domain_value(trim(parts[0]));
    d.strict = false;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        std::string p = trim(parts[i]);
        auto star = p.find('*');
        if (star == std::string::npos)
            throw ParseError("step term must look like b*BITS: '" + p + "'");
        DomainValue b = parse_domain_value(trim(p.substr(0, star)));
        if (!(b > DomainValue(0))) throw ParseError("step sizes must be positive: '" + p + "'");
        Mask k = c.parse(trim(p.substr(star + 1)));
        d.steps.emplace_back(std::move(b), k);
    }
    for (std::size_t i = 0; i + 1 < d.steps.size(); ++i)
        if (!c.leq(d.steps[i + 1].second, d.steps[i].second))
            throw ParseError("idempotents must decrease");
    try {
        return to_orthogonal(c, d);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad decreasing form: ") + e.what());
    }
}

} // namespace devries
