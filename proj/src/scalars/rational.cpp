#include "quintics/scalars/rational.hpp"

namespace quintics {

Rational::Rational(long num, long den) {
    if (den == 0) throw ArithmeticError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    mpq_class v;
    if (v.set_str(text, 10) != 0) throw ArithmeticError("cannot parse rational '" + text + "'");
    if (v.get_den() == 0) throw ArithmeticError("rational with zero denominator");
    return Rational(std::move(v));
}

Rational Rational::inverse() const {
    if (is_zero()) throw ArithmeticError("inverse of zero rational");
    return Rational(mpq_class(1 / v_));
}

std::uint64_t Rational::mod(std::uint64_t p) const {
    mpz_class num = v_.get_num() % static_cast<unsigned long>(p);
    if (num < 0) num += static_cast<unsigned long>(p);
    mpz_class den = v_.get_den() % static_cast<unsigned long>(p);
    if (den == 0) throw ArithmeticError("denominator of " + to_string() + " vanishes mod " + std::to_string(p));
    mpz_class inv;
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
    mpz_class r = (num * inv) % pz;
    return r.get_ui();
}

}  // namespace quintics
