#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "seq.hpp"
#include "value.hpp"

namespace seqcalc {

namespace detail {

inline int valuation2(long long n) {
    int v = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v;
    }
    return v;
}

}  // namespace detail

/// The doubling transform: b_n = a_t where n = 2^{t-1}(2k - 1), i.e. the
/// closed form of the recursive construction b_1 = a_1, b_2 = a_2,
/// b_{j+k} = b_k and b_{2j} = a_{i+1}. Needs a_t up to t = floor(log2 N) + 1.
inline Seq alpha(const Seq& a, int n_terms) {
    if (n_terms < 1) throw std::invalid_argument("alpha: n_terms must be >= 1");
    std::vector<Value> b;
    b.reserve(static_cast<std::size_t>(n_terms));
    for (int n = 1; n <= n_terms; ++n) {
        const int t = detail::valuation2(n) + 1;
        if (t > a.length())
            throw InsufficientInput("alpha: output index " + std::to_string(n) + " needs input term " +
                                    std::to_string(t) + ", have " + std::to_string(a.length()));
        b.push_back(a.at(t));
    }
    return Seq(a.ring(), std::move(b));
}

/// Inverse on the image: a_t = b_{2^{t-1}}, recovering the prefix of a
/// up to t = floor(log2 N_b) + 1.
inline Seq alpha_inverse(const Seq& b) {
    std::vector<Value> a;
    for (long long idx = 1; idx <= b.length(); idx *= 2) a.push_back(b.at(static_cast<int>(idx)));
    return Seq(b.ring(), std::move(a));
}

/// q_n = nu_2(2n), the 2-adic valuation of 2n: (1,2,1,3,1,2,1,4,...).
/// OEIS A001511 lists it from offset 1 as well.
inline Seq ruler_sequence(int n_terms) {
    if (n_terms < 1) throw std::invalid_argument("ruler_sequence: n_terms must be >= 1");
    std::vector<Value> q;
    q.reserve(static_cast<std::size_t>(n_terms));
    for (int n = 1; n <= n_terms; ++n) q.push_back(Value(mpz_class(detail::valuation2(n) + 1)));
    return Seq(RingTag::Int, std::move(q));
}

/// r_n = q_n + 1, the number of divisors of 2n of the form 2^k:
/// (2,3,2,4,2,3,2,5,...). OEIS A085058 starts at offset 0.
inline Seq a085058_sequence(int n_terms) {
    if (n_terms < 1) throw std::invalid_argument("a085058_sequence: n_terms must be >= 1");
    std::vector<Value> r;
    r.reserve(static_cast<std::size_t>(n_terms));
    for (int n = 1; n <= n_terms; ++n) r.push_back(Value(mpz_class(detail::valuation2(n) + 2)));
    return Seq(RingTag::Int, std::move(r));
}

}  // namespace seqcalc
