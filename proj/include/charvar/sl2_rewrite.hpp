#pragma once

#include <map>
#include <string>
#include <vector>

#include "charvar/matrix.hpp"
#include "charvar/rational.hpp"
#include "charvar/words.hpp"

namespace charvar {

// Polynomial in the classical SL(2) trace coordinates. Variables are the
// generators tau_i, tau_{gi gj} (i<j), tau_{gi gj gk} (i<j<k), encoded by
// their ascending digit strings: 1, 2, 3, 12, 13, 23, 123.
class TracePolynomial {
public:
    using Monomial = std::vector<std::pair<int, int>>; // (var, exp), sorted by var

    TracePolynomial() = default;
    static TracePolynomial constant(const Rat& c);
    static TracePolynomial variable(int var);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rat>& terms() const { return terms_; }

    TracePolynomial& operator+=(const TracePolynomial& o);
    TracePolynomial& operator-=(const TracePolynomial& o);
    friend TracePolynomial operator+(TracePolynomial a, const TracePolynomial& b) { return a += b; }
    friend TracePolynomial operator-(TracePolynomial a, const TracePolynomial& b) { return a -= b; }
    friend TracePolynomial operator*(const TracePolynomial& a, const TracePolynomial& b);
    friend bool operator==(const TracePolynomial& a, const TracePolynomial& b) {
        return a.terms_ == b.terms_;
    }

    GaussianRational eval(const std::map<int, GaussianRational>& values) const;
    std::string str() const;

private:
    void add_term(const Monomial& m, const Rat& c);
    std::map<Monomial, Rat> terms_;
};

int trace_var(std::vector<int> ascending_indices);

// Rewrites tr(w), w a word in g1..g3 and their inverses, as a polynomial in
// the classical generators using tr(UV) = tr(U)tr(V) - tr(UV^{-1}),
// tr(U^{-1}) = tr(U) and cyclic invariance. Complete for SL(2).
class Sl2TraceRewriter {
public:
    // star-free Word; starred letters are treated as inverses
    TracePolynomial rewrite(const Word& w);

    // signed alphabet: +k = g_k, -k = g_k^{-1}
    TracePolynomial rewrite_signed(std::vector<int> word);

    // values of the generators on a concrete SL(2) tuple
    static std::map<int, GaussianRational> generator_values(const std::vector<Matrix>& ms);

private:
    std::map<std::vector<int>, TracePolynomial> memo_;
};

} // namespace charvar
