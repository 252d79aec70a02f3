#pragma once

#include <utility>

#include "finlog/errors.hpp"

namespace finlog {

// a + b*alpha in the quotient B[alpha]/(alpha^2 - P*alpha + Q). No
// irreducibility is assumed; the ring may have zero divisors.
template <class B>
struct QuadElem {
    B a, b;
    B P, Q;

    QuadElem(B a_, B b_, B P_, B Q_) : a(std::move(a_)), b(std::move(b_)), P(std::move(P_)), Q(std::move(Q_)) {}

    static QuadElem alpha(const B& P, const B& Q) { return QuadElem(P - P, one_like(P), P, Q); }

    QuadElem make(B x, B y) const { return QuadElem(std::move(x), std::move(y), P, Q); }
    QuadElem from_base(const B& x) const { return make(x, a - a); }

    bool same_ext(const QuadElem& o) const { return P == o.P && Q == o.Q; }

    QuadElem operator-() const { return make(-a, -b); }

    friend QuadElem operator+(const QuadElem& x, const QuadElem& y) {
        x.check(y);
        return x.make(x.a + y.a, x.b + y.b);
    }
    friend QuadElem operator-(const QuadElem& x, const QuadElem& y) {
        x.check(y);
        return x.make(x.a - y.a, x.b - y.b);
    }
    // (a + b*alpha)(c + d*alpha) = (ac - bdQ) + (ad + bc + bdP) alpha
    friend QuadElem operator*(const QuadElem& x, const QuadElem& y) {
        x.check(y);
        B bd = x.b * y.b;
        return x.make(x.a * y.a - bd * x.Q, x.a * y.b + x.b * y.a + bd * x.P);
    }
    friend bool operator==(const QuadElem& x, const QuadElem& y) {
        return x.same_ext(y) && x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const QuadElem& x, const QuadElem& y) { return !(x == y); }

    // conj(a + b*alpha) = (a + bP) - b*alpha; alpha * conj(alpha) = Q.
    QuadElem conj() const { return make(a + b * P, -b); }

    // x * conj(x), a base-ring element.
    B norm() const { return a * a + a * b * P + b * b * Q; }

    QuadElem pow(std::uint64_t n) const {
        QuadElem r = make(one_like(a), a - a);
        QuadElem base = *this;
        while (n) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

private:
    void check(const QuadElem& o) const {
        if (!same_ext(o)) throw DomainMismatch("QuadElem: mixed extensions");
    }
};

template <class B>
bool is_zero(const QuadElem<B>& x) {
    return is_zero(x.a) && is_zero(x.b);
}

template <class B>
QuadElem<B> one_like(const QuadElem<B>& like) {
    return like.make(one_like(like.a), like.a - like.a);
}

template <class B>
QuadElem<B> scalar_like(const QuadElem<B>& like, std::uint64_t v) {
    return like.make(scalar_like(like.a, v), like.a - like.a);
}

}  // namespace finlog
