#pragma once

#include <map>
#include <unordered_map>
#include <vector>

#include "charvar/rational.hpp"
#include "charvar/words.hpp"

namespace charvar {

// Homogeneous element of the free semigroup algebra K<S>: a finitely
// supported rational combination of words of one fixed degree.
class FreeAlgebraElement {
public:
    explicit FreeAlgebraElement(int degree);
    static FreeAlgebraElement monomial(const Word& w, Rat coeff = Rat(1));

    int degree() const { return degree_; }
    const std::map<Word, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }

    void add(const Word& w, const Rat& c);
    Rat coeff(const Word& w) const;

    FreeAlgebraElement& operator+=(const FreeAlgebraElement& o);
    FreeAlgebraElement& operator-=(const FreeAlgebraElement& o);
    FreeAlgebraElement& scale(const Rat& c);

    // axpy: *this -= c * o
    void subtract_scaled(const Rat& c, const FreeAlgebraElement& o);

    // greatest word of the support under the global order; null when zero
    const Word* leading_word() const;
    Rat leading_coeff() const;
    void make_monic();

    std::string str() const;

    friend bool operator==(const FreeAlgebraElement& a, const FreeAlgebraElement& b) {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

private:
    int degree_;
    std::map<Word, Rat> terms_;
};

// Row-reduced spanning set of one homogeneous component, keyed by leading
// words. Rows are fully reduced (no row's leading word appears in any other
// row's support) and monic, i.e. the canonical RREF of the span.
class EchelonBasis {
public:
    explicit EchelonBasis(int degree = 0);
    // rows must already be in canonical RREF, ascending by leading word
    EchelonBasis(int degree, std::vector<FreeAlgebraElement> rref_rows);

    int degree() const { return degree_; }
    const std::vector<FreeAlgebraElement>& rows() const { return rows_; }
    std::size_t rank() const { return rows_.size(); }
    bool is_pivot(const Word& w) const { return pivot_.count(w) != 0; }
    const FreeAlgebraElement& row_for(const Word& pivot) const;
    std::vector<Word> leading_words() const;

private:
    int degree_;
    std::vector<FreeAlgebraElement> rows_;
    std::unordered_map<Word, std::size_t, WordHash> pivot_;
};

// Normal form of e modulo the span: the result contains no leading word of
// the basis, and e - result lies in the span. Throws on degree mismatch.
FreeAlgebraElement reduce(const FreeAlgebraElement& e, const EchelonBasis& basis);

// Exact sparse Gaussian elimination over Q. Both entry points produce the
// same canonical RREF; echelonize runs OpenMP-parallel reduction rounds,
// echelonize_serial is the reference implementation kept for testing.
EchelonBasis echelonize(const std::vector<FreeAlgebraElement>& generators);
EchelonBasis echelonize_serial(const std::vector<FreeAlgebraElement>& generators);

} // namespace charvar
