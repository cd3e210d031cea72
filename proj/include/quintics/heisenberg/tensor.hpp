#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "quintics/heisenberg/group.hpp"
#include "quintics/report/claim.hpp"

namespace quintics {

/// Finite linear combination of symbols y_i (x) x_j with i mod 15, j mod 3.
class FormalTensor {
public:
    using Key = std::pair<int, int>;
    /// Image of a basis symbol under a monomial linear map: scalar and new symbol.
    using BasisMap = std::function<std::pair<CycloNum, Key>(int i, int j)>;

    FormalTensor() = default;
    static FormalTensor basis(int i, int j, const CycloNum& c = CycloNum(1));

    const std::map<Key, CycloNum>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    FormalTensor operator+(const FormalTensor& o) const;
    FormalTensor operator-(const FormalTensor& o) const;
    FormalTensor scaled(const CycloNum& c) const;
    FormalTensor apply(const BasisMap& f) const;

    std::string to_string() const;
    friend bool operator==(const FormalTensor&, const FormalTensor&) = default;

private:
    void add(const Key& k, const CycloNum& c);
    std::map<Key, CycloNum> terms_;
};

/// The map induced on y (x) x by a level-15 element on the y factor and a level-3
/// element (coordinate convention) on the x factor.
FormalTensor::BasisMap product_action(const HeisenbergElement& on_y, const HeisenbergElement& on_x);

/// The involution y_i (x) x_j -> y_{-i} (x) x_{-j}.
FormalTensor::BasisMap iota_action();

/// The five invariant sections, entered symbol by symbol from the printed list.
std::vector<FormalTensor> printed_sections();

/// s_i = sum_j y_{3i+5j} (x) x_j.
FormalTensor section_formula(int i);

/// Level-15 elements realizing sigma_5 and tau_5 on the y factor. The tau image is
/// tau_15^{-3}, which yields the stated eigenvalues e5^{-2i}.
HeisenbergElement h5_sigma_on_y();
HeisenbergElement h5_tau_on_y();

/// Checks invariance of the sections under the diagonal H3, the H5 action and the involution.
Claims verify_section_symmetries();

}  // namespace quintics
