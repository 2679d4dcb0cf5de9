#include "degent/entropy.hpp"

#include <cmath>
#include <stdexcept>

namespace degent {

EntropyReport compute_entropy(const DegreeSequence& d) {
    EntropyReport r;
    for (int v : d) {
        if (v < 0) throw std::invalid_argument("negative degree");
        r.two_m += v;
        if (v >= 2) {
            r.h_d += v * std::log2(static_cast<double>(v));
            mpz_class base = v;
            mpz_class pow;
            mpz_pow_ui(pow.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(v));
            r.exact_key *= pow;
        }
        // v == 0 contributes nothing (0 log 0 = 0); v == 1 contributes
        // 0 to h_d and factor 1 to the key.
    }
    if (r.two_m < 2) throw std::invalid_argument("entropy undefined for m = 0");
    r.i_d = std::log2(static_cast<double>(r.two_m)) - r.h_d / static_cast<double>(r.two_m);
    return r;
}

Ordering compare_same_m(const EntropyReport& a, const EntropyReport& b) {
    if (a.two_m != b.two_m)
        throw std::invalid_argument("compare_same_m requires equal 2m");
    const int c = cmp(a.exact_key, b.exact_key);
    if (c > 0) return Ordering::less;     // larger key -> smaller I_d
    if (c < 0) return Ordering::greater;
    return Ordering::equal;
}

std::string key_to_string(const mpz_class& key) {
    return key.get_str();
}

}  // namespace degent
