#include "higgsgrass/rat.hpp"

#include "higgsgrass/errors.hpp"

#include <ostream>

namespace higgsgrass {

Rat::Rat(long num, long den) : v_(num, den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_.canonicalize();
}

Rat::Rat(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_.canonicalize();
}

Rat::Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

Rat Rat::from_string(std::string_view text) {
    mpq_class q;
    if (q.set_str(std::string(text), 10) != 0)
        throw DomainError("malformed rational literal: '" + std::string(text) + "'");
    if (q.get_den() == 0) throw DomainError("rational with zero denominator");
    q.canonicalize();
    return Rat(std::move(q));
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw DomainError("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::reciprocal() const {
    if (is_zero()) throw DomainError("reciprocal of zero");
    return Rat(mpq_class(v_.get_den(), v_.get_num()));
}

bool Rat::square_root(Rat& out) const {
    if (sign() < 0) return false;
    mpz_class num = v_.get_num(), den = v_.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    out = Rat(rn, rd);
    return true;
}

std::string Rat::to_string() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

} // namespace higgsgrass
