#include "quintics/poly/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace quintics {
namespace {

void fill(std::size_t n, std::size_t var, int remaining, Monomial& cur, std::vector<Monomial>& out) {
    if (var + 1 == n) {
        cur.e[var] = static_cast<std::uint8_t>(remaining);
        out.push_back(cur);
        cur.e[var] = 0;
        return;
    }
    for (int k = remaining; k >= 0; --k) {
        cur.e[var] = static_cast<std::uint8_t>(k);
        fill(n, var + 1, remaining - k, cur, out);
    }
    cur.e[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t n, int d) {
    if (n == 0 || n > kMaxVariables) throw std::invalid_argument("variable count out of range");
    std::vector<Monomial> out;
    Monomial cur;
    fill(n, 0, d, cur, out);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return GrevlexLess{}(b, a); });
    return out;
}

}  // namespace quintics
