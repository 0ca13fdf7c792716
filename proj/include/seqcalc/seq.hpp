#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "value.hpp"

namespace seqcalc {

/// Truncated sequence (a_1, ..., a_N) over one coefficient ring, N >= 1.
///
/// Access is 1-indexed throughout: at(n) is a_n, stored at terms()[n-1].
/// Several OEIS entries quoted in the docs and tests start at offset 0;
/// indices here always start at 1.
class Seq {
public:
    Seq(RingTag ring, std::vector<Value> terms) : ring_(ring), terms_(std::move(terms)) {
        if (terms_.empty()) throw std::invalid_argument("Seq: needs at least one term");
        for (const auto& t : terms_)
            if (t.tag() != ring_) throw MixedRing("Seq: term ring differs from declared ring");
    }

    RingTag ring() const { return ring_; }
    int length() const { return static_cast<int>(terms_.size()); }

    const Value& at(int n) const {
        if (n < 1 || n > length())
            throw std::out_of_range("Seq::at: index " + std::to_string(n) + " of " +
                                    std::to_string(length()));
        return terms_[static_cast<std::size_t>(n - 1)];
    }

    const std::vector<Value>& terms() const { return terms_; }

    Seq prefix(int n) const {
        if (n < 1 || n > length()) throw std::invalid_argument("Seq::prefix: bad length");
        return Seq(ring_, std::vector<Value>(terms_.begin(), terms_.begin() + n));
    }

    bool operator==(const Seq& o) const { return ring_ == o.ring_ && terms_ == o.terms_; }
    bool operator!=(const Seq& o) const { return !(*this == o); }

    static Seq zeros(RingTag ring, int n) {
        return Seq(ring, std::vector<Value>(checked(n), Value::zero(ring)));
    }

    static Seq constant(const Value& v, int n) {
        return Seq(v.tag(), std::vector<Value>(checked(n), v));
    }

    /// The Cauchy-product identity (1, 0, 0, ...).
    static Seq cauchy_identity(RingTag ring, int n) {
        std::vector<Value> t(checked(n), Value::zero(ring));
        t[0] = Value::one(ring);
        return Seq(ring, std::move(t));
    }

    static Seq of_ints(RingTag ring, const std::vector<long>& values) {
        std::vector<Value> t;
        t.reserve(values.size());
        for (long v : values) t.push_back(from_integer(ring, mpz_class(v)));
        return Seq(ring, std::move(t));
    }

    static Seq of_ints(RingTag ring, std::initializer_list<long> values) {
        return of_ints(ring, std::vector<long>(values));
    }

private:
    static std::size_t checked(int n) {
        if (n < 1) throw std::invalid_argument("Seq: length must be >= 1");
        return static_cast<std::size_t>(n);
    }

    RingTag ring_;
    std::vector<Value> terms_;
};

/// Elementwise ring conversion (see convert()).
inline Seq cast_seq(const Seq& a, RingTag target) {
    std::vector<Value> t;
    t.reserve(static_cast<std::size_t>(a.length()));
    for (const auto& v : a.terms()) t.push_back(convert(v, target));
    return Seq(target, std::move(t));
}

/// Truncated ordinary generating function: coeff(h) is the coefficient of
/// t^h, i.e. u_{h+1} of the underlying sequence.
class Series {
public:
    explicit Series(Seq coeffs) : c_(std::move(coeffs)) {}

    RingTag ring() const { return c_.ring(); }
    int length() const { return c_.length(); }
    const Value& coeff(int h) const { return c_.at(h + 1); }
    const Seq& coeffs() const { return c_; }

    bool operator==(const Series& o) const { return c_ == o.c_; }
    bool operator!=(const Series& o) const { return !(*this == o); }

private:
    Seq c_;
};

}  // namespace seqcalc
