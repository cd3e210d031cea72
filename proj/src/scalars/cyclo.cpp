#include "quintics/scalars/cyclo.hpp"

#include <numeric>
#include <vector>

#include "quintics/scalars/upoly.hpp"

namespace quintics {
namespace {

// t^8 = t^7 - t^5 + t^4 - t^3 + t - 1
constexpr std::array<int, CycloNum::kDegree> kTop = {-1, 1, 0, -1, 1, -1, 0, 1};

std::array<Rational, CycloNum::kDegree> reduce(std::vector<Rational> v) {
    for (int k = static_cast<int>(v.size()) - 1; k >= CycloNum::kDegree; --k) {
        if (v[k].is_zero()) continue;
        const Rational c = v[k];
        v[k] = Rational(0);
        for (int i = 0; i < CycloNum::kDegree; ++i) {
            if (kTop[i] == 0) continue;
            if (kTop[i] > 0) v[k - CycloNum::kDegree + i] += c;
            else v[k - CycloNum::kDegree + i] -= c;
        }
    }
    std::array<Rational, CycloNum::kDegree> out{};
    for (int i = 0; i < CycloNum::kDegree && i < static_cast<int>(v.size()); ++i) out[i] = v[i];
    return out;
}

UPoly<Rational> phi15() {
    return UPoly<Rational>({}, {Rational(1), Rational(-1), Rational(0), Rational(1), Rational(-1), Rational(1), Rational(0),
                                Rational(-1), Rational(1)});
}

const std::array<CycloNum, 15>& power_table() {
    static const std::array<CycloNum, 15> table = [] {
        std::array<CycloNum, 15> t{};
        for (int k = 0; k < 15; ++k) {
            std::vector<Rational> v(static_cast<std::size_t>(k) + 1, Rational(0));
            v[k] = Rational(1);
            t[k] = CycloNum(reduce(std::move(v)));
        }
        return t;
    }();
    return table;
}

}  // namespace

CycloNum CycloNum::e15_power(long k) {
    long r = k % 15;
    if (r < 0) r += 15;
    return power_table()[static_cast<std::size_t>(r)];
}

CycloNum CycloNum::operator+(const CycloNum& o) const {
    CycloNum r = *this;
    for (int i = 0; i < kDegree; ++i) r.c_[i] += o.c_[i];
    return r;
}

CycloNum CycloNum::operator-(const CycloNum& o) const {
    CycloNum r = *this;
    for (int i = 0; i < kDegree; ++i) r.c_[i] -= o.c_[i];
    return r;
}

CycloNum CycloNum::operator-() const {
    CycloNum r;
    for (int i = 0; i < kDegree; ++i) r.c_[i] = -c_[i];
    return r;
}

CycloNum CycloNum::operator*(const CycloNum& o) const {
    if (is_rational()) {
        CycloNum r = o;
        for (auto& x : r.c_) x *= c_[0];
        return r;
    }
    if (o.is_rational()) return o * *this;
    std::vector<Rational> v(2 * kDegree - 1, Rational(0));
    for (int i = 0; i < kDegree; ++i) {
        if (c_[i].is_zero()) continue;
        for (int j = 0; j < kDegree; ++j) {
            if (!o.c_[j].is_zero()) v[i + j] += c_[i] * o.c_[j];
        }
    }
    return CycloNum(reduce(std::move(v)));
}

CycloNum CycloNum::inverse() const {
    if (is_zero()) throw ArithmeticError("inverse of zero in Q(e15)");
    if (is_rational()) return CycloNum(c_[0].inverse());
    UPoly<Rational> self({}, std::vector<Rational>(c_.begin(), c_.end()));
    // s*self + t*phi = 1 since phi is irreducible
    auto eg = ext_gcd(self, phi15());
    std::vector<Rational> v = eg.s.coeffs();
    return CycloNum(reduce(std::move(v)));
}

bool CycloNum::is_zero() const {
    for (const auto& x : c_) {
        if (!x.is_zero()) return false;
    }
    return true;
}

bool CycloNum::is_rational() const {
    for (int i = 1; i < kDegree; ++i) {
        if (!c_[i].is_zero()) return false;
    }
    return true;
}

std::pair<int, int> CycloNum::as_signed_e15_power() const {
    const auto& table = power_table();
    for (int k = 0; k < 15; ++k) {
        if (table[k] == *this) return {1, k};
        if (-table[k] == *this) return {-1, k};
    }
    return {0, 0};
}

int CycloNum::root_of_unity_order() const {
    auto [sign, k] = as_signed_e15_power();
    if (sign == 0) return 0;
    // +e15^k has order 15/gcd(15,k); -e15^k = e30^(2k+15) has order 30/gcd(30, 2k+15)
    if (sign > 0) return 15 / std::gcd(15, k);
    return 30 / std::gcd(30, 2 * k + 15);
}

std::string CycloNum::to_string() const {
    if (is_rational()) return c_[0].to_string();
    auto [sign, k] = as_signed_e15_power();
    if (sign != 0) {
        std::string body;
        if (k % 5 == 0) body = "e3^" + std::to_string(k / 5);
        else if (k % 3 == 0) body = "e5^" + std::to_string(k / 3);
        else body = "e15^" + std::to_string(k);
        if (body.ends_with("^1")) body.resize(body.size() - 2);
        return sign > 0 ? body : "-" + body;
    }
    std::string out;
    for (int i = 0; i < kDegree; ++i) {
        if (c_[i].is_zero()) continue;
        std::string term;
        const bool unit = c_[i].is_one() || (-c_[i]).is_one();
        if (i == 0) term = c_[i].to_string();
        else term = (unit ? (c_[i].sign() < 0 ? "-" : "") : c_[i].to_string() + "*") + (i == 1 ? std::string("e15") : "e15^" + std::to_string(i));
        if (!out.empty()) out += term[0] == '-' ? " - " + term.substr(1) : " + " + term;
        else out = term;
    }
    return out;
}

CycloNum cyclo_root_of_unity(int order, long power) {
    if (order <= 0 || 15 % order != 0) throw ArithmeticError("root-of-unity order " + std::to_string(order) + " does not divide 15");
    return CycloNum::e15_power((15 / order) * (power % order));
}

PrimeFieldNum embed_cyclo_in_prime_field(const CycloNum& x, std::uint32_t p, const PrimeFieldNum& witness_root) {
    if (p % 15 != 1) throw ArithmeticError("prime " + std::to_string(p) + " is not 1 mod 15");
    if (witness_root.modulus() != p) throw ArithmeticError("witness root lives in the wrong field");
    if (witness_root.is_zero() || witness_root.multiplicative_order() != 15) throw ArithmeticError("witness root does not have order 15");
    const PrimeContext ctx(p);
    PrimeFieldNum acc = PrimeFieldNum::zero(ctx);
    PrimeFieldNum tk = PrimeFieldNum::one(ctx);
    for (const auto& c : x.coeffs()) {
        acc = acc + PrimeFieldNum(ctx, static_cast<long long>(c.mod(p))) * tk;
        tk = tk * witness_root;
    }
    return acc;
}

PrimeFieldNum canonical_e15_witness(std::uint32_t p) {
    if (p % 15 != 1) throw ArithmeticError("prime " + std::to_string(p) + " is not 1 mod 15");
    const PrimeContext ctx(p);
    for (std::uint32_t g = 2; g < p; ++g) {
        PrimeFieldNum x(ctx, g);
        if (x.multiplicative_order() == 15) return x;
    }
    throw ArithmeticError("no element of order 15");
}

}  // namespace quintics
