#include "convkit/rational.hpp"

#include <stdexcept>

namespace convkit {

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        bool ok = (c >= '0' && c <= '9') || c == '/' || ((c == '-' || c == '+') && (i == 0 || s[i - 1] == '/'));
        if (!ok) throw std::invalid_argument("bad rational literal: " + s);
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

Rat rat_pow(const Rat& r, long k) {
    if (k < 0) throw std::invalid_argument("negative exponent");
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), r.get_num().get_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(den.get_mpz_t(), r.get_den().get_mpz_t(), static_cast<unsigned long>(k));
    return Rat(num, den);
}

std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace convkit
