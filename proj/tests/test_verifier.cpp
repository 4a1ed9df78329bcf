#include "doctest.h"
#include "motive/sb2.hpp"

using namespace motive;

namespace {

const CoefficientRing Z = CoefficientRing::integers();

ChowClass G(const Sb2Context& ctx, const char* n) { return named_generator(ctx.gr, n, Z); }
ChowClass H(const Sb2Context& ctx, int k) {
    return k == 0 ? ChowClass::unit(ctx.p4, Z) : ChowClass::basis_class(ctx.p4, Z, Partition{k});
}

}  // namespace

TEST_CASE("context construction matches the displays") {
    const Sb2Context ctx = Sb2Context::build();

    // rho^2 display holds exactly
    const ProductClass rho2_display =
        external_product(G(ctx, "1"), H(ctx, 4)) + external_product(G(ctx, "sigma1"), H(ctx, 3)).scaled(2) +
        external_product(G(ctx, "sigma2") + G(ctx, "g2").scaled(3), H(ctx, 2)) +
        external_product(G(ctx, "g3"), H(ctx, 1)).scaled(2) + external_product(G(ctx, "g4"), H(ctx, 0));
    CHECK(ctx.rho2 == rho2_display);

    // rho^3 agrees with its display mod 5 only; the exact H^2 slot is 6g4 + 3h4
    CHECK(eq_mod(ctx.rho3, ctx.rho3_rep, 5));
    CHECK(ctx.rho3.coefficient({2, 2}, {2}) == 6);
    CHECK(ctx.rho3.coefficient({3, 1}, {2}) == 3);
    CHECK(!(ctx.rho3 == ctx.rho3_rep));

    // p is congruent to (rho^2)^t o rho^3 and exactly idempotent
    CHECK(eq_mod(compose(transpose(ctx.rho2), ctx.rho3), ctx.p, 5));
    CHECK(is_projector(ctx.p));
    CHECK(ctx.p + ctx.q == diagonal(ctx.gr, Z));
}

TEST_CASE("exact values frozen from an independent implementation") {
    // coefficient tables computed with a separate partition-arithmetic oracle
    const Sb2Context ctx = Sb2Context::build();

    ProductClass rho3(ctx.gr, ctx.p4, Z);
    rho3.add_term({3, 3}, {}, 1);
    rho3.add_term({3, 2}, {1}, 3);
    rho3.add_term({2, 2}, {2}, 6);
    rho3.add_term({3, 1}, {2}, 3);
    rho3.add_term({2, 1}, {3}, 8);
    rho3.add_term({3}, {3}, 1);
    rho3.add_term({1, 1}, {4}, 6);
    rho3.add_term({2}, {4}, 3);
    CHECK(ctx.rho3 == rho3);

    ProductClass comp(ctx.gr, ctx.gr, Z);
    comp.add_term({3, 3}, {}, 1);
    comp.add_term({3, 2}, {1}, 6);
    comp.add_term({2, 2}, {1, 1}, 18);
    comp.add_term({2, 2}, {2}, 6);
    comp.add_term({3, 1}, {1, 1}, 9);
    comp.add_term({3, 1}, {2}, 3);
    comp.add_term({2, 1}, {2, 1}, 16);
    comp.add_term({1, 1}, {2, 2}, 6);
    comp.add_term({3}, {2, 1}, 2);
    comp.add_term({2}, {2, 2}, 3);
    CHECK(compose(transpose(ctx.rho2), ctx.rho3) == comp);

    // the exact diagonal-identity composition has entries 6, 16, 21, 6, 1
    const ProductClass delta_exact = compose(ctx.rho3, transpose(ctx.rho2));
    CHECK(delta_exact.coefficient({}, {4}) == 6);
    CHECK(delta_exact.coefficient({1}, {3}) == 16);
    CHECK(delta_exact.coefficient({2}, {2}) == 21);
    CHECK(delta_exact.coefficient({3}, {1}) == 6);
    CHECK(delta_exact.coefficient({4}, {}) == 1);
}

TEST_CASE("delta identity") {
    const Sb2Context ctx = Sb2Context::build();
    CHECK(check_delta_identity(ctx, 5).pass);
    CHECK_FALSE(check_delta_identity(ctx, 7).pass);

    // perturbation: replacing rho by rho + r breaks the identity
    const ProductClass rho_bad = ctx.rho + ctx.r;
    const ProductClass rho2_bad = intersect(rho_bad, rho_bad);
    const ProductClass rho3_bad = intersect(rho2_bad, rho_bad);
    CHECK_FALSE(eq_mod(compose(rho3_bad, transpose(rho2_bad)),
                       diagonal(ctx.p4, Z), 5));
}

TEST_CASE("projector checks") {
    const Sb2Context ctx = Sb2Context::build();
    for (const auto& c : check_projector(ctx)) CHECK(c.pass);

    ProductClass p_bad = ctx.p;
    p_bad.add_term({3, 3}, {}, 1);  // double the pt x 1 coefficient
    CHECK_FALSE(is_projector(p_bad));
    // a duality-orthogonal perturbation does stay idempotent; the degree
    // pairing ensures only Gram-visible directions matter
    ProductClass p_orth = ctx.p;
    p_orth.add_term({1}, {3, 2}, 1);
    CHECK(is_projector(p_orth));
}

TEST_CASE("decomposition isomorphisms") {
    const Sb2Context ctx = Sb2Context::build();
    for (const auto& c : check_decomposition_isos(ctx)) CHECK(c.pass);

    // tampering with one j1 coefficient breaks the pair
    ProductClass j1_bad = ctx.j1;
    j1_bad.add_term({3, 3}, {2}, 1);
    CHECK_FALSE(check_iso_pair(j1_bad, ctx.j2, ctx.p, transpose(ctx.p), TwistFrame{2, 0}));

    // flipping the sign of the sigma1 x g3 term of j2 breaks it too
    ProductClass j2_flipped = ctx.j2;
    j2_flipped.add_term({1}, {2, 1}, 2);
    CHECK_FALSE(check_iso_pair(ctx.j1, j2_flipped, ctx.p, transpose(ctx.p), TwistFrame{2, 0}));
}

TEST_CASE("localized isomorphisms") {
    const Sb2Context ctx = Sb2Context::build();
    for (int prime : {2, 3})
        for (const auto& c : check_localized(prime, ctx)) CHECK(c.pass);
    CHECK_THROWS_AS(check_localized(5, ctx), Error);

    // the exact identities, stated directly
    const auto Q = CoefficientRing::rationals();
    CHECK(compose(ctx.alpha2, ctx.beta2) == ctx.p.cast_to(Q));
    CHECK(compose(ctx.beta2, ctx.alpha2) == diagonal(ctx.p4, Q));
    CHECK(compose(ctx.alpha3, ctx.beta3) == ctx.p.cast_to(Q));
    CHECK(compose(ctx.beta3, ctx.alpha3) == diagonal(ctx.p4, Q));
    CHECK(denominator_support(ctx.beta2) == std::set<Int>{2});
    CHECK(denominator_support(ctx.alpha2).empty());
    CHECK(denominator_support(ctx.alpha3) == std::set<Int>{3});
    CHECK(denominator_support(ctx.beta3).empty());

    // the 5/2 and 5/3 corrections of the displays are present
    CHECK(ctx.beta2.coefficient({3, 2}, {1}) == Rat(1, 2));        // 3 - 5/2
    CHECK(ctx.beta2.coefficient({2, 1}, {3}) == Rat(1, 2));
    CHECK(ctx.alpha3.coefficient({1}, {2, 1}) == Rat(1, 3));       // 2 - 5/3
    CHECK(ctx.alpha3.coefficient({3}, {1}) == Rat(1, 3));          // 2 - 5/3
    CHECK(ctx.alpha3.coefficient({2}, {1, 1}) == Rat(-2));         // 3 - 5
}

TEST_CASE("epsilon family") {
    const Sb2Context ctx = Sb2Context::build();
    const auto results = check_nonisomorphism_family(ctx);
    CHECK(results.size() == 17);  // 16 sign vectors + the subset micro-check
    for (const auto& c : results) CHECK(c.pass);
}

TEST_CASE("run_all aggregates and isolates failures") {
    const VerificationReport report = run_all();
    CHECK(report.all_pass());
    for (const char* id : {"rho2_mod5", "delta_identity", "projector_integral", "iso_j1j2",
                           "localized_2", "localized_3", "family_eps_++++", "family_eps_----",
                           "gensb_shape", "witnesses_verify"})
        CHECK(report.find(id) != nullptr);

    Sb2Options bad;
    bad.delta_modulus = 7;
    const VerificationReport failing = run_all(bad);
    CHECK_FALSE(failing.all_pass());
    CHECK_FALSE(failing.find("delta_identity")->pass);
    CHECK(failing.find("projector_integral")->pass);  // isolated failure
}

TEST_CASE("report json round trip") {
    const VerificationReport report = run_all();
    const nlohmann::json j = report.to_json();
    const VerificationReport parsed = VerificationReport::from_json(j);
    CHECK(parsed.to_json() == j);
    CHECK(parsed.all_pass() == report.all_pass());
    CHECK(parsed.checks.size() == report.checks.size());
}

TEST_CASE("every rational-labeled cycle carries a verifying witness") {
    const Sb2Context ctx = Sb2Context::build();
    for (const auto& [name, w] : ctx.witnesses) {
        CAPTURE(name);
        CHECK(w.verify());
        CHECK(w.leaves_are_generators());
    }
    CHECK(ctx.witnesses.at("rho2").is_integral_lineage());
    CHECK_FALSE(ctx.witnesses.at("rho3_rep").is_integral_lineage());
}
