#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "errors.hpp"
#include "seq.hpp"
#include "value.hpp"

namespace seqcalc {

namespace detail {

inline void require_same_ring_seq(const Seq& a, const Seq& b, const char* op) {
    if (a.ring() != b.ring())
        throw MixedRing(std::string(op) + ": sequences in different rings");
}

inline void require_divisible_ring(RingTag tag, const char* op) {
    if (tag == RingTag::Int)
        throw UnsupportedRing(std::string(op) + ": needs the rat or polyx ring");
}

}  // namespace detail

/// Componentwise sum, truncated to the shorter operand.
inline Seq cw_add(const Seq& a, const Seq& b) {
    detail::require_same_ring_seq(a, b, "cw_add");
    const int n = std::min(a.length(), b.length());
    std::vector<Value> c;
    c.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) c.push_back(add(a.at(i), b.at(i)));
    return Seq(a.ring(), std::move(c));
}

inline Seq cw_sub(const Seq& a, const Seq& b) {
    detail::require_same_ring_seq(a, b, "cw_sub");
    const int n = std::min(a.length(), b.length());
    std::vector<Value> c;
    c.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) c.push_back(sub(a.at(i), b.at(i)));
    return Seq(a.ring(), std::move(c));
}

inline Seq cw_neg(const Seq& a) {
    std::vector<Value> c;
    c.reserve(static_cast<std::size_t>(a.length()));
    for (const auto& v : a.terms()) c.push_back(neg(v));
    return Seq(a.ring(), std::move(c));
}

/// Convolution (Cauchy) product: c_{n+1} = sum_{h=0}^{n} a_{h+1} b_{n-h+1},
/// truncated to the shorter operand. Matches the product of the o.g.f.s.
inline Seq cauchy_mul(const Seq& a, const Seq& b) {
    detail::require_same_ring_seq(a, b, "cauchy_mul");
    const int n = std::min(a.length(), b.length());
    std::vector<Value> c(static_cast<std::size_t>(n), Value::zero(a.ring()));
    for (int i = 1; i <= n; ++i) {
        if (a.at(i).is_zero()) continue;
        for (int j = 1; i + j - 1 <= n; ++j) {
            if (b.at(j).is_zero()) continue;
            auto& slot = c[static_cast<std::size_t>(i + j - 2)];
            slot = add(slot, mul(a.at(i), b.at(j)));
        }
    }
    return Seq(a.ring(), std::move(c));
}

/// Cauchy inverse by the forward recurrence
/// b_1 = a_1^{-1}, b_{n+1} = -a_1^{-1} sum_{h=1}^{n} a_{h+1} b_{n-h+1}.
inline Seq cauchy_inv(const Seq& a) {
    const Value lead_inv = invert(a.at(1));  // NotAUnit when a_1 is not invertible
    const int n = a.length();
    std::vector<Value> b(static_cast<std::size_t>(n), Value::zero(a.ring()));
    b[0] = lead_inv;
    for (int m = 1; m < n; ++m) {
        Value s = Value::zero(a.ring());
        for (int h = 1; h <= m; ++h)
            s = add(s, mul(a.at(h + 1), b[static_cast<std::size_t>(m - h)]));
        b[static_cast<std::size_t>(m)] = neg(mul(lead_inv, s));
    }
    return Seq(a.ring(), std::move(b));
}

/// Binomial convolution (Hurwitz) product:
/// c_{n+1} = sum_{h=0}^{n} C(n,h) a_{h+1} b_{n-h+1}.
inline Seq hurwitz_mul(const Seq& a, const Seq& b) {
    detail::require_same_ring_seq(a, b, "hurwitz_mul");
    const int n = std::min(a.length(), b.length());
    std::vector<Value> c;
    c.reserve(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m) {
        Value s = Value::zero(a.ring());
        mpz_class binom = 1;  // C(m, h), updated incrementally
        for (int h = 0; h <= m; ++h) {
            if (!a.at(h + 1).is_zero() && !b.at(m - h + 1).is_zero())
                s = add(s, mul_by_int(mul(a.at(h + 1), b.at(m - h + 1)), binom));
            binom = binom * (m - h) / (h + 1);
        }
        c.push_back(std::move(s));
    }
    return Seq(a.ring(), std::move(c));
}

/// Factorial rescaling b_{n+1} = n! a_{n+1}; turns the Cauchy product into
/// the Hurwitz product.
inline Seq gamma(const Seq& a) {
    std::vector<Value> b;
    b.reserve(static_cast<std::size_t>(a.length()));
    mpz_class fact = 1;
    for (int n = 0; n < a.length(); ++n) {
        b.push_back(mul_by_int(a.at(n + 1), fact));
        fact *= n + 1;
    }
    return Seq(a.ring(), std::move(b));
}

/// Inverse rescaling b_{n+1} = a_{n+1}/n!; NotDivisible over Int when the
/// division is inexact.
inline Seq gamma_inv(const Seq& a) {
    std::vector<Value> b;
    b.reserve(static_cast<std::size_t>(a.length()));
    mpz_class fact = 1;
    for (int n = 0; n < a.length(); ++n) {
        b.push_back(div_by_int(a.at(n + 1), fact));
        fact *= n + 1;
    }
    return Seq(a.ring(), std::move(b));
}

/// Formal logarithm of a series with constant term 1, via the recurrence
/// n w_n = n u_n - sum_{j=1}^{n-1} j w_j u_{n-j} from U' = U W'.
inline Series series_log(const Series& u) {
    detail::require_divisible_ring(u.ring(), "series_log");
    if (!u.coeff(0).is_one()) throw BadConstantTerm("series_log: constant term must be 1");
    const int n = u.length();
    std::vector<Value> w(static_cast<std::size_t>(n), Value::zero(u.ring()));
    for (int m = 1; m < n; ++m) {
        Value s = mul_by_int(u.coeff(m), mpz_class(m));
        for (int j = 1; j < m; ++j) {
            if (w[static_cast<std::size_t>(j)].is_zero() || u.coeff(m - j).is_zero()) continue;
            s = sub(s, mul_by_int(mul(w[static_cast<std::size_t>(j)], u.coeff(m - j)), mpz_class(j)));
        }
        w[static_cast<std::size_t>(m)] = div_by_int(s, mpz_class(m));
    }
    return Series(Seq(u.ring(), std::move(w)));
}

/// Formal exponential of a series with constant term 0, via
/// n u_n = sum_{j=1}^{n} j w_j u_{n-j}.
inline Series series_exp(const Series& w) {
    detail::require_divisible_ring(w.ring(), "series_exp");
    if (!w.coeff(0).is_zero()) throw BadConstantTerm("series_exp: constant term must be 0");
    const int n = w.length();
    std::vector<Value> u(static_cast<std::size_t>(n), Value::zero(w.ring()));
    u[0] = Value::one(w.ring());
    for (int m = 1; m < n; ++m) {
        Value s = Value::zero(w.ring());
        for (int j = 1; j <= m; ++j) {
            if (w.coeff(j).is_zero() || u[static_cast<std::size_t>(m - j)].is_zero()) continue;
            s = add(s, mul_by_int(mul(w.coeff(j), u[static_cast<std::size_t>(m - j)]), mpz_class(j)));
        }
        u[static_cast<std::size_t>(m)] = div_by_int(s, mpz_class(m));
    }
    return Series(Seq(w.ring(), std::move(u)));
}

/// The single product factor (1 +- t^k)^e as a truncated series: coefficient
/// of t^{k i} is (+-1)^i binomial(e, i), zero elsewhere.
inline Series binomial_factor(int k, const Value& e, int sign, int n_terms) {
    if (k < 1) throw std::invalid_argument("binomial_factor: k must be >= 1");
    if (sign != 1 && sign != -1) throw std::invalid_argument("binomial_factor: sign must be +-1");
    if (n_terms < 1) throw std::invalid_argument("binomial_factor: n_terms must be >= 1");
    std::vector<Value> c(static_cast<std::size_t>(n_terms), Value::zero(e.tag()));
    for (int i = 0; static_cast<long long>(k) * i < n_terms; ++i) {
        Value v = binomial(e, i);
        if (sign < 0 && i % 2 == 1) v = neg(v);
        c[static_cast<std::size_t>(k) * static_cast<std::size_t>(i)] = std::move(v);
    }
    return Series(Seq(e.tag(), std::move(c)));
}

}  // namespace seqcalc
