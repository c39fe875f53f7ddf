#pragma once

#include <gmpxx.h>

#include <string>

#include "charvar/rng.hpp"

namespace charvar {

using Rat = mpq_class;

inline Rat make_rat(long num, long den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Small random rational, numerator in [-10, 10], denominator in [1, 10].
inline Rat random_rat(Rng& rng) {
    return make_rat(rng.range(-10, 10), rng.range(1, 10));
}

inline Rat random_nonzero_rat(Rng& rng) {
    for (;;) {
        Rat q = random_rat(rng);
        if (q != 0) return q;
    }
}

// Element of Q(i), i a primitive 4th root of 1. Exact arithmetic throughout.
struct GaussianRational {
    Rat re, im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long v) : re(v), im(0) {}          // NOLINT(google-explicit-constructor)
    GaussianRational(Rat r) : re(std::move(r)), im(0) {} // NOLINT(google-explicit-constructor)
    GaussianRational(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational unit_i() { return {Rat(0), Rat(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    GaussianRational inverse() const;

    std::string str() const;

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inverse();
    }
    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

inline GaussianRational GaussianRational::inverse() const {
    Rat n = re * re + im * im;
    if (n == 0) throw std::invalid_argument("division by zero in Q(i)");
    return {re / n, -im / n};
}

inline std::string GaussianRational::str() const {
    auto rat_str = [](const Rat& q) { return q.get_str(); };
    if (is_zero()) return "0";
    std::string out;
    if (re != 0) out += rat_str(re);
    if (im != 0) {
        if (!out.empty() && im > 0) out += "+";
        if (im == -1)
            out += "-";
        else if (im != 1)
            out += rat_str(im) + "*";
        out += "i";
    }
    return out;
}

inline GaussianRational random_gaussian_rational(Rng& rng) {
    return {random_rat(rng), random_rat(rng)};
}

} // namespace charvar
