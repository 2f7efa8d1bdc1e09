#include "wlp/weight.hpp"

#include "wlp/errors.hpp"

#include <sstream>

namespace wlp {

DyadicValue UnitWeight::eval(const GroupElement& g) const {
    group().require(g);
    return {};
}

std::optional<DeclaredBound> UnitWeight::left_bound(const GroupElement&) const {
    return DeclaredBound{DyadicValue{}, "constant weight: translations are isometries"};
}

std::optional<DeclaredBound> UnitWeight::right_bound(const GroupElement&) const {
    return DeclaredBound{DyadicValue{}, "constant weight: translations are isometries"};
}

GroupElement parse_element(const Group& group, std::string_view text) {
    if (group.is_free()) {
        GroupElement w = FreeWord::parse(text);
        group.require(w);
        return w;
    }
    std::istringstream in{std::string(text)};
    std::vector<BigInt> coords;
    std::string tok;
    while (in >> tok) coords.push_back(parse_bigint(tok));
    if (coords.size() != static_cast<std::size_t>(group.rank())) {
        throw ValidationError("expected " + std::to_string(group.rank()) + " coordinates in '" + std::string(text) + "'");
    }
    return LatticePoint(std::move(coords));
}

}  // namespace wlp
