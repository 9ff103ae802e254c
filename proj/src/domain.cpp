#include "devries/domain.hpp"

namespace devries {

DomainValue parse_domain_value(std::string_view text) {
    return DomainValue(parse_rat(text));
}

} // namespace devries
