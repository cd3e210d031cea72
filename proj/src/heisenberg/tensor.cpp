#include "quintics/heisenberg/tensor.hpp"

namespace quintics {

FormalTensor FormalTensor::basis(int i, int j, const CycloNum& c) {
    FormalTensor t;
    t.add({mod(i, 15), mod(j, 3)}, c);
    return t;
}

void FormalTensor::add(const Key& k, const CycloNum& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FormalTensor FormalTensor::operator+(const FormalTensor& o) const {
    FormalTensor r = *this;
    for (const auto& [k, c] : o.terms_) r.add(k, c);
    return r;
}

FormalTensor FormalTensor::operator-(const FormalTensor& o) const { return *this + o.scaled(CycloNum(-1)); }

FormalTensor FormalTensor::scaled(const CycloNum& c) const {
    FormalTensor r;
    for (const auto& [k, v] : terms_) r.add(k, v * c);
    return r;
}

FormalTensor FormalTensor::apply(const BasisMap& f) const {
    FormalTensor r;
    for (const auto& [k, v] : terms_) {
        const auto [c, target] = f(k.first, k.second);
        r.add({mod(target.first, 15), mod(target.second, 3)}, v * c);
    }
    return r;
}

std::string FormalTensor::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        if (!out.empty()) out += " + ";
        const std::string sym = "y" + std::to_string(k.first) + "@x" + std::to_string(k.second);
        out += c == CycloNum(1) ? sym : "(" + c.to_string() + ")*" + sym;
    }
    return out;
}

FormalTensor::BasisMap product_action(const HeisenbergElement& on_y, const HeisenbergElement& on_x) {
    if (on_y.level() != 15 || on_x.level() != 3) throw std::invalid_argument("product action needs a level-15 and a level-3 element");
    return [on_y, on_x](int i, int j) {
        const auto [ky, iy] = on_y.image_of_variable(i);
        const auto [kx, jx] = on_x.image_of_variable(j);
        return std::pair<CycloNum, FormalTensor::Key>{cyclo_root_of_unity(15, ky) * cyclo_root_of_unity(3, kx), {iy, jx}};
    };
}

FormalTensor::BasisMap iota_action() {
    return [](int i, int j) { return std::pair<CycloNum, FormalTensor::Key>{CycloNum(1), {-i, -j}}; };
}

std::vector<FormalTensor> printed_sections() {
    const int idx[5][3] = {{0, 5, 10}, {3, 8, 13}, {6, 11, 1}, {9, 14, 4}, {12, 2, 7}};
    std::vector<FormalTensor> out;
    for (const auto& row : idx) {
        out.push_back(FormalTensor::basis(row[0], 0) + FormalTensor::basis(row[1], 1) + FormalTensor::basis(row[2], 2));
    }
    return out;
}

FormalTensor section_formula(int i) {
    FormalTensor t;
    for (int j = 0; j < 3; ++j) t = t + FormalTensor::basis(3 * i + 5 * j, j);
    return t;
}

HeisenbergElement h5_sigma_on_y() { return HeisenbergElement::sigma(15, 3); }
HeisenbergElement h5_tau_on_y() { return HeisenbergElement::tau(15, -3); }

Claims verify_section_symmetries() {
    Claims claims;
    const auto s = printed_sections();
    const auto id3 = HeisenbergElement::identity(3);

    {
        nlohmann::json bad = nlohmann::json::array();
        for (int i = 0; i < 5; ++i) {
            if (s[static_cast<std::size_t>(i)] != section_formula(i)) bad.push_back(i);
        }
        claims.push_back(hard_claim("sections.listed-form", "the listed sections are s_i = sum_j y_{3i+5j} (x) x_j", bad.empty(),
                                    {{"mismatched", bad}}));
    }
    {
        // diagonal H3: sigma_15^5 with sigma_3, tau_15^5 with tau_3
        const auto dsig = product_action(HeisenbergElement::sigma(15, 5), HeisenbergElement::sigma(3, 1));
        const auto dtau = product_action(HeisenbergElement::tau(15, 5), HeisenbergElement::tau(3, 1));
        // the displayed closed forms of the same maps
        const FormalTensor::BasisMap shown_sig = [](int i, int j) {
            return std::pair<CycloNum, FormalTensor::Key>{CycloNum(1), {mod(i - 5, 15), mod(j - 1, 3)}};
        };
        const FormalTensor::BasisMap shown_tau = [](int i, int j) {
            return std::pair<CycloNum, FormalTensor::Key>{cyclo_root_of_unity(3, -i - j), {i, j}};
        };
        bool closed_forms_agree = true;
        for (int i = 0; i < 15; ++i)
            for (int j = 0; j < 3; ++j) {
                closed_forms_agree = closed_forms_agree && dsig(i, j) == shown_sig(i, j) && dtau(i, j) == shown_tau(i, j);
            }
        nlohmann::json bad = nlohmann::json::array();
        for (int i = 0; i < 5; ++i) {
            const auto& si = s[static_cast<std::size_t>(i)];
            if (si.apply(dsig) != si) bad.push_back({{"section", i}, {"generator", "sigma"}, {"image", si.apply(dsig).to_string()}});
            if (si.apply(dtau) != si) bad.push_back({{"section", i}, {"generator", "tau"}, {"image", si.apply(dtau).to_string()}});
        }
        // the centre of the diagonal acts trivially on y (x) x
        bool centre_trivial = true;
        for (int i = 0; i < 15; ++i)
            for (int j = 0; j < 3; ++j) {
                const FormalTensor b = FormalTensor::basis(i, j);
                centre_trivial = centre_trivial && b.apply(dtau).apply(dsig) == b.apply(dsig).apply(dtau);
            }
        claims.push_back(hard_claim("sections.diagonal-invariant", "the five sections are invariant under the diagonal H3",
                                    bad.empty() && closed_forms_agree && centre_trivial,
                                    {{"failures", bad}, {"closed_forms_agree", closed_forms_agree}, {"centre_trivial", centre_trivial}}));
    }
    {
        const auto sig5 = product_action(h5_sigma_on_y(), id3);
        const auto tau5 = product_action(h5_tau_on_y(), id3);
        const auto tau_literal = product_action(HeisenbergElement::tau(15, 3), id3);
        nlohmann::json bad = nlohmann::json::array();
        for (int i = 0; i < 5; ++i) {
            const auto& si = s[static_cast<std::size_t>(i)];
            if (si.apply(sig5) != s[static_cast<std::size_t>(mod(i - 1, 5))]) bad.push_back({{"section", i}, {"generator", "sigma5"}});
            if (si.apply(tau5) != si.scaled(cyclo_root_of_unity(5, -2 * i))) bad.push_back({{"section", i}, {"generator", "tau5"}});
        }
        // eigenvalue exponents of the literal tau_15^3 on each s_i, for the record
        nlohmann::json literal = nlohmann::json::array();
        for (int i = 0; i < 5; ++i) {
            const auto& si = s[static_cast<std::size_t>(i)];
            const auto img = si.apply(tau_literal);
            int found = -1;
            for (int k = 0; k < 5; ++k) {
                if (img == si.scaled(cyclo_root_of_unity(5, k))) found = k;
            }
            literal.push_back(found);
        }
        const CycloNum comm_used = commutator_scalar(h5_sigma_on_y(), h5_tau_on_y(), Convention::kLevel15);
        const CycloNum comm_literal = commutator_scalar(HeisenbergElement::sigma(15, 3), HeisenbergElement::tau(15, 3), Convention::kLevel15);
        const CycloNum comm_twisted = commutator_scalar(HeisenbergElement::sigma(5, 1, 2), HeisenbergElement::tau(5, 1, 2), Convention::kLevel5);
        const bool comm_ok = comm_used == cyclo_root_of_unity(5, -2) && comm_twisted == comm_used;
        claims.push_back(hard_claim("sections.h5-action", "sigma_5 s_i = s_{i-1} and tau_5 s_i = e5^{-2i} s_i", bad.empty() && comm_ok,
                                    {{"failures", bad},
                                     {"tau5_on_y", "tau_15^-3"},
                                     {"commutator_used", comm_used.to_string()},
                                     {"commutator_twisted_level5", comm_twisted.to_string()},
                                     {"commutator_tau15_cubed", comm_literal.to_string()},
                                     {"tau15_cubed_eigen_exponents_e5", literal}}));
    }
    {
        const auto iota = iota_action();
        nlohmann::json bad = nlohmann::json::array();
        for (int i = 0; i < 5; ++i) {
            if (s[static_cast<std::size_t>(i)].apply(iota) != s[static_cast<std::size_t>(mod(-i, 5))]) bad.push_back(i);
        }
        claims.push_back(hard_claim("sections.involution", "the involution sends s_i to s_{-i}", bad.empty(), {{"failures", bad}}));
    }
    for (auto& c : claims) c.suite = "sections";
    return claims;
}

}  // namespace quintics
