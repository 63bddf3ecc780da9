#include "gn2/projpair.hpp"

#include <ostream>

namespace gn2 {

void ProjPair::set(const Rat& a, const Rat& b) {
    if (a == 0 && b == 0) throw InvalidProjective();
    if (b != 0) {
        a_ = a / b;
        b_ = 1;
    } else {
        a_ = 1;
        b_ = 0;
    }
}

ProjPair proj_normalize(const Rat& a, const Rat& b) { return ProjPair(a, b); }

std::string ProjPair::str() const {
    return "(" + to_string(a_) + ":" + to_string(b_) + ")";
}

ProjPair proj_parse(const std::string& s) {
    if (s == "0") return ProjPair::zero();
    if (s == "1") return ProjPair::one();
    if (s == "inf") return ProjPair::infinity();
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw Error("cannot parse projective pair: " + s);
    const std::string body = s.substr(1, s.size() - 2);
    const auto colon = body.find(':');
    if (colon == std::string::npos) throw Error("cannot parse projective pair: " + s);
    return ProjPair(rat_parse(body.substr(0, colon)), rat_parse(body.substr(colon + 1)));
}

std::ostream& operator<<(std::ostream& os, const ProjPair& p) { return os << p.str(); }

}  // namespace gn2
