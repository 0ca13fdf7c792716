#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace seqcalc {

/// Dense univariate polynomial over exact rationals, lowest degree first.
/// Canonical form: no trailing zero coefficients; the zero polynomial is the
/// empty coefficient list, so equality is plain vector equality.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(const mpq_class& v) {
        Poly p;
        if (v != 0) p.c_.push_back(v);
        return p;
    }
    static Poly variable() { return Poly({mpq_class(0), mpq_class(1)}); }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    mpq_class constant_value() const { return c_.empty() ? mpq_class(0) : c_[0]; }

    /// Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    mpq_class coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return mpq_class(0);
        return c_[static_cast<std::size_t>(i)];
    }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    mpq_class eval(const mpq_class& x) const {
        mpq_class r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    Poly scaled(const mpq_class& s) const {
        if (s == 0) return Poly();
        Poly r = *this;
        for (auto& c : r.c_) c *= s;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<mpq_class> c(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return Poly(std::move(c));
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<mpq_class> c(a.c_.size() + b.c_.size() - 1, mpq_class(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(c));
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<mpq_class> c_;
};

}  // namespace seqcalc
