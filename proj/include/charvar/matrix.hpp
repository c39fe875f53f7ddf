#pragma once

#include <vector>

#include "charvar/groups.hpp"
#include "charvar/rational.hpp"
#include "charvar/rng.hpp"
#include "charvar/words.hpp"

namespace charvar {

// Dense square matrix over Q(i).
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}
    static Matrix identity(int n);

    int n() const { return n_; }
    GaussianRational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const GaussianRational& at(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * n_ + j];
    }

    Matrix transpose() const;
    GaussianRational trace() const;
    GaussianRational det() const;
    Matrix inverse() const; // throws on singular input
    Matrix pow(int k) const;
    bool is_zero() const;
    bool is_skew_symmetric() const;

    std::string str() const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const GaussianRational& c, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }

private:
    int n_ = 0;
    std::vector<GaussianRational> a_;
};

// The standard block form [[0, I],[-I, 0]].
Matrix standard_j(int n);

// Pfaffian of a skew-symmetric matrix of even size, by recursive expansion
// along the first row. Throws on odd size or non-skew input.
GaussianRational pfaffian(const Matrix& m);

// Monic polynomial pf((lambda*I - M)J) / pf(J) of degree n/2; coefficients
// stored low to high with the leading 1 included.
struct PfaffianPolynomial {
    std::vector<GaussianRational> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    Matrix eval(const Matrix& m) const;
    GaussianRational eval(const GaussianRational& x) const;
};

// Requires m = J m^T J^{-1} (symplectically self-adjoint), so that
// (lambda*I - m)J is skew for every lambda.
PfaffianPolynomial characteristic_pfaffian(const Matrix& m, const Matrix& J);

// Monic characteristic polynomial coefficients c_0..c_n (c_n = 1), exact
// Faddeev-LeVerrier.
std::vector<GaussianRational> char_poly(const Matrix& m);

// Q_n of n/2 matrices of even size n: the signed sum over all n!
// permutations of products of entry differences. q_n_direct runs
// OpenMP-parallel over the permutation space; the serial variant is the
// reference. q_n_polarized is the independent inclusion-exclusion route
// through Pfaffians of subset sums; the two must agree on every input.
GaussianRational q_n_direct(const std::vector<Matrix>& ms);
GaussianRational q_n_direct_serial(const std::vector<Matrix>& ms);
GaussianRational q_n_polarized(const std::vector<Matrix>& ms);

// words evaluated in a concrete representation; star means the group
// involution (inverse for sl/gl, transpose for o/so, J-transpose for sp)
struct RepresentationTuple {
    Group group = Group::sl;
    std::vector<Matrix> matrices;
    Matrix J; // sp only

    // verifies the defining group equations exactly
    static RepresentationTuple make(Group g, std::vector<Matrix> ms, Matrix J = Matrix());
    Matrix star_image(int index) const;
};

Matrix eval_word(const RepresentationTuple& rep, const Word& w);
GaussianRational trace_of_word(const RepresentationTuple& rep, const Word& w);

// Exact random group elements: sl by random transvections, so/sp by Cayley
// transforms of random (twisted-)skew matrices. Group equations re-checked
// after construction.
Matrix sample_sl(int n, std::uint64_t seed);
Matrix sample_so(int n, std::uint64_t seed);
Matrix sample_sp(int n, std::uint64_t seed);

// Block-diagonal torus element of SO(n), blocks
// (1/2) [[x + 1/x, i(x - 1/x)], [-i(x - 1/x), x + 1/x]].
Matrix torus_element_so(int n, const std::vector<Rat>& params);

Rat factorial(int k);
Rat pow2(int k);

} // namespace charvar
