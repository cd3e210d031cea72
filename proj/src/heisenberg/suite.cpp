#include "quintics/heisenberg/suite.hpp"

#include "quintics/heisenberg/characters.hpp"
#include "quintics/heisenberg/fixed_points.hpp"

namespace quintics {
namespace {

ClaimRecord commutator_claim(const std::string& id, const std::string& anchor, const CycloNum& got, const CycloNum& want) {
    return hard_claim(id, anchor, got == want, {{"computed", got.to_string()}, {"expected", want.to_string()}});
}

}  // namespace

Claims verify_heisenberg() {
    Claims claims;
    claims.push_back(commutator_claim("heisenberg.commutator.coordinates", "[sigma_3, tau_3] = e3^-1 on x_0, x_1, x_2",
                                      commutator_scalar(Convention::kCoordinates), cyclo_root_of_unity(3, -1)));
    claims.push_back(commutator_claim("heisenberg.commutator.dual", "[sigma_3, tau_3] = e3 on the dual basis",
                                      commutator_scalar(Convention::kDualCoordinates), cyclo_root_of_unity(3, 1)));
    claims.push_back(commutator_claim(
        "heisenberg.commutator.level15", "[sigma_15^5, tau_15^5] = e15^-10 = e3",
        commutator_scalar(HeisenbergElement::sigma(15, 5), HeisenbergElement::tau(15, 5), Convention::kLevel15), cyclo_root_of_unity(3, 1)));

    {
        const auto blocks = character_decomposition(3);
        nlohmann::json dims = nlohmann::json::object();
        std::size_t total = 0;
        bool ok = blocks.size() == 9;
        for (const auto& [label, basis] : blocks) {
            dims[label.to_string()] = basis.size();
            total += basis.size();
            ok = ok && basis.size() == (label == CharacterLabel{0, 0} ? 2u : 1u);
        }
        ok = ok && total == 10;
        nlohmann::json invariants = nlohmann::json::array();
        for (const auto& f : blocks.at({0, 0})) invariants.push_back(f.to_string());
        claims.push_back(hard_claim("heisenberg.characters.cubic",
                                    "cubics split into a 2-dimensional invariant pencil and eight 1-dimensional characters", ok,
                                    {{"dimensions", dims}, {"total", total}, {"invariant_basis", invariants}}));
    }
    {
        const auto table = compare_character_table();
        nlohmann::json discrepancies = nlohmann::json::array();
        bool explained = true;
        for (const auto& e : table) {
            if (e.matches) continue;
            // a mismatch is explained when the printed cubic is a verbatim copy of another row
            std::string duplicate_of;
            for (const auto& other : table) {
                if (other.label != e.label && other.printed == e.printed && other.matches) duplicate_of = other.label.to_string();
            }
            explained = explained && !duplicate_of.empty();
            discrepancies.push_back({{"label", e.label.to_string()},
                                     {"printed", e.printed.to_string()},
                                     {"printed_character", e.printed_character ? e.printed_character->to_string() : "none"},
                                     {"duplicate_of", duplicate_of},
                                     {"corrected", e.computed.to_string()}});
        }
        nlohmann::json computed = nlohmann::json::object();
        for (const auto& e : table) computed[e.label.to_string()] = e.computed.to_string();
        claims.push_back(hard_claim("heisenberg.characters.table",
                                    "printed character cubics agree with the computed eigenvectors except for flagged duplicated rows",
                                    explained, {{"discrepancies", discrepancies}, {"computed", computed}}));
    }
    for (auto& c : claims) c.suite = "heisenberg";
    for (auto& c : verify_triangle_fixed_points()) claims.push_back(std::move(c));
    return claims;
}

}  // namespace quintics
