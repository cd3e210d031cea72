#include "quintics/heisenberg/fixed_points.hpp"

#include <algorithm>
#include <stdexcept>

#include "quintics/heisenberg/group.hpp"
#include "quintics/poly/linalg.hpp"

namespace quintics {
namespace {

bool same_point_set(std::vector<PlanePoint> a, std::vector<PlanePoint> b) {
    if (a.size() != b.size()) return false;
    for (const auto& p : a) {
        auto it = std::find(b.begin(), b.end(), p);
        if (it == b.end()) return false;
        b.erase(it);
    }
    return true;
}

std::string render(const PlanePoint& p) {
    return "(" + p[0].to_string() + ":" + p[1].to_string() + ":" + p[2].to_string() + ")";
}

PlanePoint coefficients(const E3LinearForm& f) {
    PlanePoint c{};
    for (std::size_t i = 0; i < 3; ++i) c[i] = f[i] ? cyclo_root_of_unity(3, *f[i]) : CycloNum(0);
    return c;
}

}  // namespace

PlanePoint normalize_point(const PlanePoint& p) {
    for (const auto& c : p) {
        if (!c.is_zero()) {
            const CycloNum inv = c.inverse();
            return {p[0] * inv, p[1] * inv, p[2] * inv};
        }
    }
    throw std::invalid_argument("the zero vector is not a projective point");
}

std::vector<PlanePoint> fixed_points_of_subgroup(int i, int j) {
    if (mod(i, 3) == 0 && mod(j, 3) == 0) throw std::invalid_argument("the identity fixes every point");
    const HeisenbergElement g = HeisenbergElement::sigma(3, i) * HeisenbergElement::tau(3, j);
    // G(k, l) is the coefficient of x_l in g(x_k); since (g f)(p) = f(G p), the
    // substitution action moves points by p -> G p
    Matrix<CycloNum> gm(3, 3);
    for (int k = 0; k < 3; ++k) {
        const auto [e, l] = g.image_of_variable(k);
        gm(static_cast<std::size_t>(k), static_cast<std::size_t>(l)) = cyclo_root_of_unity(3, e);
    }
    // g^3 = 1, so eigenvalues are cube roots of unity
    std::vector<PlanePoint> points;
    for (int k = 0; k < 3; ++k) {
        Matrix<CycloNum> shifted = gm;
        for (std::size_t d = 0; d < 3; ++d) shifted(d, d) = shifted(d, d) - cyclo_root_of_unity(3, k);
        for (const auto& v : shifted.kernel()) points.push_back(normalize_point({v[0], v[1], v[2]}));
    }
    return points;
}

std::vector<PlanePoint> triangle_vertices(const PrintedTriangle& t) {
    std::vector<PlanePoint> out;
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = a + 1; b < 3; ++b) {
            const PlanePoint u = coefficients(t.lines[a]), v = coefficients(t.lines[b]);
            out.push_back(normalize_point({u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]}));
        }
    return out;
}

Claims verify_triangle_fixed_points() {
    Claims claims;
    for (const auto& t : printed_triangles()) {
        const auto fixed = fixed_points_of_subgroup(t.label.a, t.label.b);
        const auto vertices = triangle_vertices(t);
        nlohmann::json fj = nlohmann::json::array(), vj = nlohmann::json::array();
        for (const auto& p : fixed) fj.push_back(render(p));
        for (const auto& p : vertices) vj.push_back(render(p));
        const bool ok = fixed.size() == 3 && same_point_set(fixed, vertices);
        auto c = hard_claim("heisenberg.fixed-points" + t.label.to_string(),
                            "sigma^i tau^j fixes exactly the vertices of the triangle T" + t.label.to_string(), ok,
                            {{"fixed_points", fj}, {"triangle_vertices", vj}});
        c.suite = "heisenberg";
        claims.push_back(std::move(c));
    }
    return claims;
}

}  // namespace quintics
