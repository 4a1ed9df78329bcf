#include "motive/ring.hpp"

namespace motive {

CoefficientRing CoefficientRing::integers_mod(const Int& m) {
    if (m < 2) fail("DomainError", "modulus must be >= 2");
    return CoefficientRing(Kind::integers_mod, m);
}

Rat CoefficientRing::normalize(const Rat& value) const {
    switch (kind_) {
        case Kind::rationals:
            return value;
        case Kind::integers:
            if (!is_integer(value))
                fail("RingMismatch", "fractional coefficient " + rat_to_string(value) + " in Z");
            return value;
        case Kind::integers_mod: {
            if (!is_integer(value))
                fail("RingMismatch",
                     "fractional coefficient " + rat_to_string(value) + " in " + to_string());
            Int r = rat_num(value) % modulus_;
            if (r < 0) r += modulus_;
            return Rat(r);
        }
    }
    fail("DomainError", "unreachable ring kind");
}

std::string CoefficientRing::to_string() const {
    switch (kind_) {
        case Kind::integers: return "Z";
        case Kind::rationals: return "Q";
        case Kind::integers_mod: return "Z/" + modulus_.str();
    }
    return "?";
}

CoefficientRing CoefficientRing::from_string(const std::string& text) {
    if (text == "Z") return integers();
    if (text == "Q") return rationals();
    if (text.size() > 2 && text.rfind("Z/", 0) == 0) return integers_mod(Int(text.substr(2)));
    fail("DomainError", "unknown coefficient ring '" + text + "' (expected Z, Z/m, or Q)");
}

}  // namespace motive
