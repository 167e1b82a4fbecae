#include "hha/rational.hpp"

#include <stdexcept>

namespace hha {

Rat rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    mpq_t q;
    mpq_init(q);
    if (mpq_set_str(q, s.c_str(), 10) != 0) {
        mpq_clear(q);
        throw std::invalid_argument("malformed rational literal: '" + s + "'");
    }
    if (mpz_sgn(mpq_denref(q)) == 0) {
        mpq_clear(q);
        throw std::invalid_argument("zero denominator in rational literal: '" + s + "'");
    }
    mpq_canonicalize(q);
    Rat r(q);
    mpq_clear(q);
    return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace hha
