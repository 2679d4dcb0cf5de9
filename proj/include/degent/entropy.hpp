#pragma once

#include <gmpxx.h>

#include <string>

#include "degent/sequences.hpp"

namespace degent {

// Entropy of the degree distribution d_i / 2m, plus the exact comparison
// key prod d_i^{d_i}. log2(exact_key) = h_d, so at fixed m the I_d order
// is decided by integer comparison of the keys, no float tolerance.
struct EntropyReport {
    long two_m = 0;
    double h_d = 0.0;
    double i_d = 0.0;
    mpz_class exact_key = 1;
};

// Throws std::invalid_argument when the sequence has zero sum (m = 0).
EntropyReport compute_entropy(const DegreeSequence& d);

enum class Ordering { less, equal, greater };

// Exact ordering of I_d for reports with the same 2m: larger key means
// smaller entropy. Throws on mismatched two_m.
Ordering compare_same_m(const EntropyReport& a, const EntropyReport& b);

std::string key_to_string(const mpz_class& key);

}  // namespace degent
