#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "seq.hpp"
#include "series.hpp"
#include "value.hpp"

namespace seqcalc {

namespace detail {

/// Coefficient of z^n in (x_1 z + x_2 z^2 + ... + x_n z^n)^k, computed by
/// repeated Cauchy multiplication. Callers handle the triangle conventions.
inline Value ordinary_bell_by_powers(const Seq& x, int n, int k) {
    std::vector<Value> xc(static_cast<std::size_t>(n) + 1, Value::zero(x.ring()));
    for (int m = 1; m <= n; ++m) xc[static_cast<std::size_t>(m)] = x.at(m);
    Seq xs(x.ring(), std::move(xc));
    Seq p = Seq::cauchy_identity(x.ring(), n + 1);
    for (int j = 0; j < k; ++j) p = cauchy_mul(p, xs);
    return p.at(n + 1);
}

}  // namespace detail

/// Memoized triangle of partial ordinary Bell polynomial values B0_{n,k}
/// evaluated at a fixed argument sequence, 0 <= k <= n <= max_n.
///
/// Base cases: B0_{0,0} = 1, B0_{n,0} = 0 for n >= 1, B0_{0,k} = 0 for
/// k >= 1; and B0_{n,k} = 0 whenever k > n.
class BellTable {
public:
    BellTable(Seq x, int max_n) : x_(std::move(x)), n_(max_n), zero_(Value::zero(x_.ring())) {
        if (max_n < 0) throw std::invalid_argument("BellTable: max_n must be >= 0");
        if (max_n > x_.length())
            throw InsufficientInput("BellTable: argument sequence shorter than max_n");
        std::vector<Value> xc(static_cast<std::size_t>(n_) + 1, zero_);
        for (int m = 1; m <= n_; ++m) xc[static_cast<std::size_t>(m)] = x_.at(m);
        Seq xs(x_.ring(), std::move(xc));
        Seq p = Seq::cauchy_identity(x_.ring(), n_ + 1);
        rows_.reserve(static_cast<std::size_t>(n_) + 1);
        rows_.push_back(p.terms());
        for (int k = 1; k <= n_; ++k) {
            p = cauchy_mul(p, xs);
            rows_.push_back(p.terms());
        }
    }

    int max_n() const { return n_; }
    const Seq& argument() const { return x_; }

    /// B0_{n,k} at the table's argument.
    const Value& ordinary(int n, int k) const {
        if (n < 0 || k < 0) throw std::invalid_argument("BellTable::ordinary: negative index");
        if (n == 0 && k == 0) return one_;
        if (n == 0 || k == 0 || k > n) return zero_;
        if (n > n_) throw std::out_of_range("BellTable::ordinary: n beyond table");
        return rows_[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)];
    }

    /// Complete ordinary Bell value B_n = sum_{k=1}^{n} B0_{n,k} (B_0 = 1).
    Value complete(int n) const {
        if (n == 0) return Value::one(x_.ring());
        Value s = zero_;
        for (int k = 1; k <= n; ++k) s = add(s, ordinary(n, k));
        return s;
    }

private:
    Seq x_;
    int n_;
    Value zero_;
    Value one_ = Value::one(x_.ring());
    std::vector<std::vector<Value>> rows_;  // rows_[k][n]
};

/// Partial ordinary Bell polynomial B0_{n,k} evaluated at x, defined by
/// (sum_{m>=1} x_m z^m)^k = sum_{n>=k} B0_{n,k}(X) z^n.
inline Value partial_ordinary_bell(const Seq& x, int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("partial_ordinary_bell: negative index");
    if (n == 0 && k == 0) return Value::one(x.ring());
    if (n == 0 || k == 0 || k > n) return Value::zero(x.ring());
    if (n > x.length())
        throw InsufficientInput("partial_ordinary_bell: argument sequence shorter than n");
    return detail::ordinary_bell_by_powers(x, n, k);
}

/// Partial exponential Bell polynomial B_{n,k}, derived from the ordinary
/// one by the factorial rescaling B_{n,k}(x) = (n!/k!) B0_{n,k}(x_m/m!).
inline Value partial_exponential_bell(const Seq& x, int n, int k) {
    detail::require_divisible_ring(x.ring(), "partial_exponential_bell");
    if (n < 0 || k < 0) throw std::invalid_argument("partial_exponential_bell: negative index");
    if (n == 0 && k == 0) return Value::one(x.ring());
    if (n == 0 || k == 0 || k > n) return Value::zero(x.ring());
    if (n > x.length())
        throw InsufficientInput("partial_exponential_bell: argument sequence shorter than n");
    std::vector<Value> scaled;
    scaled.reserve(static_cast<std::size_t>(n));
    mpz_class fact = 1;
    for (int m = 1; m <= n; ++m) {
        fact *= m;
        scaled.push_back(div_by_int(x.at(m), fact));
    }
    Value b0 = detail::ordinary_bell_by_powers(Seq(x.ring(), std::move(scaled)), n, k);
    // n!/k! = (k+1)(k+2)...n
    mpz_class rising = 1;
    for (int m = k + 1; m <= n; ++m) rising *= m;
    return mul_by_int(b0, rising);
}

/// x_n = sum_{h=1}^{n} (-1)^{h-1} (h-1)! B_{n,h}(y_1, ..., y_{n-h+1});
/// inverse of bell_inversion_backward.
inline Seq bell_inversion_forward(const Seq& y) {
    detail::require_divisible_ring(y.ring(), "bell_inversion_forward");
    const int n_terms = y.length();
    std::vector<Value> scaled;
    scaled.reserve(static_cast<std::size_t>(n_terms));
    mpz_class fact = 1;
    for (int m = 1; m <= n_terms; ++m) {
        fact *= m;
        scaled.push_back(div_by_int(y.at(m), fact));
    }
    BellTable table(Seq(y.ring(), std::move(scaled)), n_terms);
    std::vector<Value> x;
    x.reserve(static_cast<std::size_t>(n_terms));
    mpz_class nfact = 1;
    for (int n = 1; n <= n_terms; ++n) {
        nfact *= n;
        // sum_h (-1)^{h-1} (h-1)! (n!/h!) B0_{n,h} = n! sum_h ((-1)^{h-1}/h) B0_{n,h}
        Value s = Value::zero(y.ring());
        for (int h = 1; h <= n; ++h) {
            if (table.ordinary(n, h).is_zero()) continue;
            s = add(s, mul_by_rat(table.ordinary(n, h), make_rational(h % 2 == 1 ? 1 : -1, h)));
        }
        x.push_back(mul_by_int(s, nfact));
    }
    return Seq(y.ring(), std::move(x));
}

/// y_n = sum_{h=1}^{n} B_{n,h}(x_1, ..., x_{n-h+1}).
inline Seq bell_inversion_backward(const Seq& x) {
    detail::require_divisible_ring(x.ring(), "bell_inversion_backward");
    const int n_terms = x.length();
    std::vector<Value> scaled;
    scaled.reserve(static_cast<std::size_t>(n_terms));
    mpz_class fact = 1;
    for (int m = 1; m <= n_terms; ++m) {
        fact *= m;
        scaled.push_back(div_by_int(x.at(m), fact));
    }
    BellTable table(Seq(x.ring(), std::move(scaled)), n_terms);
    std::vector<Value> y;
    y.reserve(static_cast<std::size_t>(n_terms));
    mpz_class nfact = 1;
    std::vector<mpz_class> factorials{mpz_class(1)};
    for (int m = 1; m <= n_terms; ++m) factorials.push_back(factorials.back() * m);
    for (int n = 1; n <= n_terms; ++n) {
        nfact *= n;
        Value s = Value::zero(x.ring());
        for (int h = 1; h <= n; ++h) {
            if (table.ordinary(n, h).is_zero()) continue;
            s = add(s, mul_by_rat(table.ordinary(n, h),
                                  make_rational(1, factorials[static_cast<std::size_t>(h)])));
        }
        y.push_back(mul_by_int(s, nfact));
    }
    return Seq(x.ring(), std::move(y));
}

}  // namespace seqcalc
