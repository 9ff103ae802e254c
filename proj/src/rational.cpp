#include "devries/rational.hpp"

#include <cctype>

namespace devries {

namespace {

bool valid_int_token(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

Rat parse_rat(std::string_view text) {
    std::string_view s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!valid_int_token(s)) throw ParseError("bad number: '" + std::string(text) + "'");
        return Rat(Int(std::string(s)));
    }
    std::string_view p = trim(s.substr(0, slash));
    std::string_view q = trim(s.substr(slash + 1));
    if (!valid_int_token(p) || !valid_int_token(q))
        throw ParseError("bad fraction: '" + std::string(text) + "'");
    Int den{std::string(q)};
    if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    return make_rat(Int(std::string(p)), den);
}

std::string rat_to_string(const Rat& r) {
    return r.get_str();
}

} // namespace devries
