#pragma once

#include <string>

#include "json.hpp"
#include "motive/error.hpp"
#include "motive/numeric.hpp"

namespace motive {

/// Exact coefficient ring: Z, Z/m (m >= 2) or Q. Values are carried as
/// normalized rationals; the ring decides which values are admissible and
/// what their canonical representative is (residues in [0, m) for Z/m).
class CoefficientRing {
public:
    enum class Kind { integers, integers_mod, rationals };

    static CoefficientRing integers() { return CoefficientRing(Kind::integers, 0); }
    static CoefficientRing integers_mod(const Int& m);
    static CoefficientRing rationals() { return CoefficientRing(Kind::rationals, 0); }

    Kind kind() const { return kind_; }
    const Int& modulus() const { return modulus_; }
    bool is_integers() const { return kind_ == Kind::integers; }
    bool is_modular() const { return kind_ == Kind::integers_mod; }
    bool is_rationals() const { return kind_ == Kind::rationals; }

    /// Canonical representative; throws RingMismatch on a fractional value
    /// fed to Z or Z/m.
    Rat normalize(const Rat& value) const;

    bool operator==(const CoefficientRing& other) const = default;

    std::string to_string() const;  // "Z", "Z/5", "Q"
    static CoefficientRing from_string(const std::string& text);
    nlohmann::json to_json() const { return to_string(); }
    static CoefficientRing from_json(const nlohmann::json& j) { return from_string(j.get<std::string>()); }

private:
    CoefficientRing(Kind kind, Int modulus) : kind_(kind), modulus_(std::move(modulus)) {}
    Kind kind_;
    Int modulus_;
};

inline void require_same_ring(const CoefficientRing& a, const CoefficientRing& b) {
    if (!(a == b)) fail("RingMismatch", "mixed coefficient rings: " + a.to_string() + " vs " + b.to_string());
}

}  // namespace motive
