#pragma once

#include <algorithm>
#include <vector>

#include "finlog/errors.hpp"
#include "finlog/rational.hpp"

namespace finlog {

// Dense polynomial over a coefficient ring R (index = degree). Carries a
// formal degree m >= deg used by the degree-m group action; everyday
// arithmetic keeps it at max (+,-) resp. sum (*) of the operands'.
template <class R>
class DensePoly {
public:
    explicit DensePoly(R constant) : c_{std::move(constant)}, formal_(0) { trim(); }

    DensePoly(std::vector<R> coeffs, int formal_degree = -1) : c_(std::move(coeffs)), formal_(formal_degree) {
        if (c_.empty()) throw ArithError("DensePoly: empty coefficient list");
        trim();
        if (formal_ < deg()) formal_ = deg();
    }

    static DensePoly zero_like(const R& exemplar) { return DensePoly(make_zero(exemplar)); }

    static DensePoly monomial(const R& coeff, int degree) {
        std::vector<R> c(static_cast<std::size_t>(degree) + 1, make_zero(coeff));
        c[degree] = coeff;
        return DensePoly(std::move(c));
    }

    int deg() const {  // of the trimmed representation; zero polynomial has deg 0
        return static_cast<int>(c_.size()) - 1;
    }
    int formal_degree() const { return formal_; }
    void set_formal_degree(int m) {
        if (m < deg()) throw ArithError("formal degree below actual degree");
        formal_ = m;
    }

    bool is_zero_poly() const { return c_.size() == 1 && is_zero(c_[0]); }

    const R& operator[](int i) const { return c_[i]; }
    const std::vector<R>& coeffs() const { return c_; }

    // Coefficient of x^i, with zeros beyond the stored degree.
    R coeff_or_zero(int i) const {
        if (i >= 0 && i < static_cast<int>(c_.size())) return c_[i];
        return zero_coeff();
    }

    R zero_coeff() const { return make_zero(c_[0]); }

    friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
        std::size_t n = std::max(a.c_.size(), b.c_.size());
        std::vector<R> c;
        c.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (i < a.c_.size() && i < b.c_.size())
                c.push_back(a.c_[i] + b.c_[i]);
            else if (i < a.c_.size())
                c.push_back(a.c_[i]);
            else
                c.push_back(b.c_[i]);
        }
        return DensePoly(std::move(c), std::max(a.formal_, b.formal_));
    }

    friend DensePoly operator-(const DensePoly& a, const DensePoly& b) { return a + (-b); }

    DensePoly operator-() const {
        std::vector<R> c;
        c.reserve(c_.size());
        for (const R& x : c_) c.push_back(-x);
        return DensePoly(std::move(c), formal_);
    }

    friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
        std::vector<R> c(a.c_.size() + b.c_.size() - 1, a.zero_coeff());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        }
        return DensePoly(std::move(c), a.formal_ + b.formal_);
    }

    friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const DensePoly& a, const DensePoly& b) { return !(a.c_ == b.c_); }

private:
    static R make_zero(const R& like) { return like - like; }

    void trim() {
        while (c_.size() > 1 && is_zero(c_.back())) c_.pop_back();
    }

    std::vector<R> c_;
    int formal_;
};

template <class R, class S>
DensePoly<R> scale(const DensePoly<R>& f, const S& s) {
    R sc(s);
    std::vector<R> c;
    c.reserve(f.coeffs().size());
    for (const R& x : f.coeffs()) c.push_back(x * sc);
    return DensePoly<R>(std::move(c), f.formal_degree());
}

template <class R>
DensePoly<R> shift_up(const DensePoly<R>& f, int n) {  // multiply by x^n
    std::vector<R> c(f.coeffs().size() + n, f.zero_coeff());
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) c[i + n] = f.coeffs()[i];
    return DensePoly<R>(std::move(c), f.formal_degree() + n);
}

template <class R>
DensePoly<R> truncate(const DensePoly<R>& f, int max_deg) {  // drop terms of degree > max_deg
    std::vector<R> c(f.coeffs().begin(),
                     f.coeffs().begin() + std::min<std::size_t>(f.coeffs().size(), max_deg + 1));
    if (c.empty()) c.push_back(f.zero_coeff());
    return DensePoly<R>(std::move(c));
}

template <class R>
R evaluate(const DensePoly<R>& f, const R& x) {
    R acc = f.zero_coeff();
    for (int i = f.deg(); i >= 0; --i) acc = acc * x + f[i];
    return acc;
}

// f(a*x + b) by Horner.
template <class R>
DensePoly<R> compose_linear(const DensePoly<R>& f, const R& a, const R& b) {
    DensePoly<R> lin(std::vector<R>{b, a});
    DensePoly<R> acc = DensePoly<R>::zero_like(f.zero_coeff());
    for (int i = f.deg(); i >= 0; --i) acc = acc * lin + DensePoly<R>(f[i]);
    return acc;
}

template <class R>
DensePoly<R> compose_one_minus_x(const DensePoly<R>& f) {
    R one = one_like(f.zero_coeff());
    R neg(-one);
    return compose_linear(f, neg, one);
}

// x^m * f(1/x); requires m >= deg f.
template <class R>
DensePoly<R> reversed(const DensePoly<R>& f, int m) {
    if (m < f.deg()) throw ArithError("reversed: m < deg f");
    std::vector<R> c(static_cast<std::size_t>(m) + 1, f.zero_coeff());
    for (int j = 0; j <= f.deg(); ++j) c[m - j] = f[j];
    return DensePoly<R>(std::move(c));
}

// x^m * f(1 - 1/x) = sum_j c_j x^(m-j) (x-1)^j; requires m >= deg f.
template <class R>
DensePoly<R> reversed_one_minus(const DensePoly<R>& f, int m) {
    if (m < f.deg()) throw ArithError("reversed_one_minus: m < deg f");
    R one = one_like(f.zero_coeff());
    DensePoly<R> xm1(std::vector<R>{-one, one});  // x - 1
    DensePoly<R> acc = DensePoly<R>::zero_like(f.zero_coeff());
    DensePoly<R> pw(one);
    for (int j = 0; j <= f.deg(); ++j) {
        acc = acc + shift_up(scale(pw, f[j]), m - j);
        if (j < f.deg()) pw = pw * xm1;
    }
    return acc;
}

template <class R>
DensePoly<R> derivative(const DensePoly<R>& f) {
    if (f.deg() == 0) return DensePoly<R>::zero_like(f.zero_coeff());
    std::vector<R> c;
    c.reserve(f.deg());
    R k = one_like(f.zero_coeff());
    for (int i = 1; i <= f.deg(); ++i) {
        c.push_back(f[i] * k);
        k = k + one_like(f.zero_coeff());
    }
    return DensePoly<R>(std::move(c));
}

template <class R>
bool is_zero(const DensePoly<R>& f) {
    return f.is_zero_poly();
}

template <class R>
DensePoly<R> one_like(const DensePoly<R>& f) {
    return DensePoly<R>(one_like(f.zero_coeff()));
}

template <class R>
DensePoly<R> scalar_like(const DensePoly<R>& f, std::uint64_t v) {
    return DensePoly<R>(scalar_like(f.zero_coeff(), v));
}

// Antiderivative with zero constant term; needs exact division by integers.
template <class R>
DensePoly<R> integrate(const DensePoly<R>& f) {
    std::vector<R> c(f.coeffs().size() + 1, f.zero_coeff());
    for (int i = 0; i <= f.deg(); ++i) c[i + 1] = f[i] * inverse_of_int(f[i], i + 1);
    return DensePoly<R>(std::move(c));
}

}  // namespace finlog
