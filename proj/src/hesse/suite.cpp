#include "quintics/hesse/suite.hpp"

#include <random>

#include "quintics/hesse/curve_group.hpp"
#include "quintics/hesse/identities.hpp"

namespace quintics {

Claims verify_group_law(std::uint32_t p, std::uint32_t lambda, std::uint64_t seed, int triples) {
    const PrimeContext ctx(p);
    const CurveGroup g(FpCubic::hesse(PrimeFieldNum(ctx, lambda)));
    const auto& e = g.curve();
    const auto& pts = g.points();
    const auto& o = g.zero();
    std::mt19937_64 rng(seed);
    auto pick = [&]() -> const FpPlanePoint& { return pts[rng() % pts.size()]; };

    std::size_t assoc = 0, comm = 0, ident = 0, inv = 0, off_curve = 0;
    for (int i = 0; i < triples; ++i) {
        const auto &a = pick(), &b = pick(), &c = pick();
        const auto ab = e.add(a, b);
        const auto bc = e.add(b, c);
        assoc += e.add(ab, c) != e.add(a, bc);
        comm += ab != e.add(b, a);
        ident += e.add(a, o) != a;
        inv += e.add(a, e.negate(a)) != o;
        off_curve += !e.contains(ab) || !e.contains(bc);
    }
    Claims claims;
    claims.push_back(hard_claim("hesse.group-law", "chord-tangent addition is an abelian group law with origin (0,1,-1)",
                                assoc + comm + ident + inv + off_curve == 0,
                                {{"prime", p},
                                 {"lambda", lambda},
                                 {"triples", triples},
                                 {"seed", seed},
                                 {"associativity_failures", assoc},
                                 {"commutativity_failures", comm},
                                 {"identity_failures", ident},
                                 {"inverse_failures", inv},
                                 {"off_curve", off_curve}}));

    std::size_t neg_mismatch = 0;
    for (const auto& q : pts) neg_mismatch += e.negate(q) != e.negate_by_chord(q);
    claims.push_back(hard_claim("hesse.negation", "negation (x0,x1,x2) -> (x0,x2,x1) agrees with the chord through the origin",
                                neg_mismatch == 0, {{"points", pts.size()}, {"mismatches", neg_mismatch}}));

    // base points: x0^3 + x1^3 + x2^3 = x0 x1 x2 = 0
    std::size_t base = 0, base_bad = 0;
    for (const auto& q : pts) {
        if (!(q[0] * q[1] * q[2]).is_zero()) continue;
        ++base;
        base_bad += e.multiply(3, q) != o;
    }
    const bool rational_base = (p - 1) % 3 == 0;
    claims.push_back(hard_claim("hesse.base-points", "the base points of the pencil are 3-torsion",
                                base_bad == 0 && base == (rational_base ? 9u : 3u), {{"base_points", base}, {"failures", base_bad}}));
    claims.push_back(hard_claim("hesse.hasse-interval", "|E(F_p)| lies in the Hasse interval", g.in_hasse_interval(),
                                {{"prime", p}, {"lambda", lambda}, {"order", g.order()}}));
    for (auto& c : claims) c.suite = "hesse";
    return claims;
}

Claims verify_hesse(const HesseOptions& options) {
    Claims claims = verify_fermat_identities();
    for (auto& c : verify_triangle_members(31)) claims.push_back(std::move(c));
    for (std::uint32_t p : options.primes) {
        for (auto& c : verify_group_law(p, 1, options.seed, options.group_law_triples)) {
            c.id += "@" + std::to_string(p);
            claims.push_back(std::move(c));
        }
    }

    const auto witness = find_torsion_witness(options.primes, {2, 3, 5}, options.witness_bound);
    if (!witness) {
        auto c = hard_claim("hesse.torsion-witness", "a Hesse member with full rational 2-, 3- and 5-torsion exists below the search bound",
                            false, {{"bound", options.witness_bound}});
        c.suite = "hesse";
        claims.push_back(std::move(c));
        return claims;
    }
    auto wc = hard_claim("hesse.torsion-witness", "a Hesse member with full rational 2-, 3- and 5-torsion exists below the search bound", true,
                         {{"prime", witness->p},
                          {"lambda", witness->lambda},
                          {"order", witness->order},
                          {"structure", {witness->structure.first, witness->structure.second}},
                          {"search", witness->search_log}});
    wc.suite = "hesse";
    claims.push_back(std::move(wc));

    const PrimeContext ctx(witness->p);
    const CurveGroup g(FpCubic::hesse(PrimeFieldNum(ctx, witness->lambda)));
    claims.push_back(verify_heisenberg_translation(g));
    for (auto& c : verify_intersection_arithmetic(g, options.seed)) claims.push_back(std::move(c));
    for (auto& c : verify_six_secant_criterion(g)) claims.push_back(std::move(c));
    return claims;
}

}  // namespace quintics
