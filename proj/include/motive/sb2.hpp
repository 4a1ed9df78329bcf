#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "motive/product_class.hpp"
#include "motive/witness.hpp"

namespace motive {

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string lhs;
    std::string rhs;
    std::string ring;
    std::optional<Int> modulus;
    std::optional<nlohmann::json> witness;
    std::string citation;

    nlohmann::json to_json() const;
    static CheckResult from_json(const nlohmann::json& j);
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    double elapsed_ms = 0.0;

    bool all_pass() const;
    const CheckResult* find(const std::string& id) const;
    nlohmann::json to_json() const;
    static VerificationReport from_json(const nlohmann::json& j);
    std::string to_text() const;
};

/// Everything the degree-5 SB_2 verification needs: Gr(2,5), P^4, the rational
/// cycles r and rho with witnesses, the rho powers, the projector pair (p, q),
/// the isomorphism cycles j1/j2 and the localized alpha/beta pairs.
struct Sb2Context {
    GrassmannSpace gr;
    GrassmannSpace p4;

    ProductClass r, rho, rho2, rho3;
    ProductClass rho3_rep;  // displayed mod-5 representative of rho3
    ProductClass p, q, j1, j2;

    // localized pairs; exact identities hold with these (see check_localized)
    ProductClass alpha2, beta2;  // denominators in {2}
    ProductClass alpha3, beta3;  // denominators in {3}
    // adjustments relative to the verbatim displays, all 5-divisible
    ProductClass alpha2_adjustment, beta3_adjustment, rho3_adjustment;

    std::map<std::string, RationalWitness> witnesses;

    /// Builds every cycle from its display and recomputes it independently
    /// (tensor_line_chern, ring powers, compositions); throws
    /// ConstructionMismatch when a display disagrees with recomputation where
    /// exact agreement is asserted.
    static Sb2Context build();

private:
    Sb2Context();
};

struct Sb2Options {
    Int delta_modulus = 5;
    std::uint64_t seed = 0;
};

CheckResult check_delta_identity(const Sb2Context& ctx, const Int& modulus = 5);
std::vector<CheckResult> check_projector(const Sb2Context& ctx);
std::vector<CheckResult> check_decomposition_isos(const Sb2Context& ctx);
std::vector<CheckResult> check_localized(int prime, const Sb2Context& ctx);
std::vector<CheckResult> check_nonisomorphism_family(const Sb2Context& ctx);

/// Runs every check plus the rewrite-engine cross-checks and the seeded
/// property spot-checks; aggregates pass/fail and timing.
VerificationReport run_all(const Sb2Options& options = {});

}  // namespace motive
