#include <doctest.h>

#include <functional>
#include <numeric>

#include "charvar/matrix.hpp"
#include "charvar/rng.hpp"

using namespace charvar;

namespace {

Matrix random_rational_matrix(int n, Rng& rng) {
    Matrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = GaussianRational(random_rat(rng));
    return m;
}

Matrix random_skew(int n, Rng& rng) {
    Matrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rat v = random_rat(rng);
            m.at(i, j) = GaussianRational(v);
            m.at(j, i) = GaussianRational(-v);
        }
    return m;
}

// Test oracle: Pfaffian as the signed sum over perfect matchings.
GaussianRational pfaffian_matchings(const Matrix& m) {
    const int n = m.n();
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    GaussianRational acc;
    std::function<void(std::vector<int>&, std::vector<std::pair<int, int>>&)> go =
        [&](std::vector<int>& rest, std::vector<std::pair<int, int>>& pairs) {
            if (rest.empty()) {
                // sign of the permutation (i1 j1 i2 j2 ...)
                std::vector<int> flat;
                for (auto& [a, b] : pairs) {
                    flat.push_back(a);
                    flat.push_back(b);
                }
                int inv = 0;
                for (std::size_t x = 0; x < flat.size(); ++x)
                    for (std::size_t y = x + 1; y < flat.size(); ++y)
                        if (flat[x] > flat[y]) ++inv;
                GaussianRational term(inv % 2 ? -1 : 1);
                for (auto& [a, b] : pairs) term *= m.at(a, b);
                acc += term;
                return;
            }
            int first = rest.front();
            for (std::size_t k = 1; k < rest.size(); ++k) {
                std::vector<int> next;
                for (std::size_t t = 1; t < rest.size(); ++t)
                    if (t != k) next.push_back(rest[t]);
                pairs.emplace_back(first, rest[k]);
                go(next, pairs);
                pairs.pop_back();
            }
        };
    std::vector<std::pair<int, int>> pairs;
    go(idx, pairs);
    return acc;
}

} // namespace

TEST_CASE("scalar arithmetic in Q(i)") {
    GaussianRational i = GaussianRational::unit_i();
    CHECK(i * i == GaussianRational(-1));
    GaussianRational z{make_rat(1, 2), make_rat(3, 4)};
    CHECK(z * z.inverse() == GaussianRational(1));
    CHECK((z * z.conj()).im == 0);
    CHECK(GaussianRational(make_rat(5, 2)).str() == "5/2");
    CHECK((GaussianRational{Rat(0), Rat(3)}).str() == "3*i");
    CHECK_THROWS(GaussianRational().inverse());
}

TEST_CASE("matrix basics") {
    Matrix a(2);
    a.at(0, 0) = GaussianRational(2);
    a.at(1, 1) = GaussianRational(make_rat(1, 2));
    Matrix b(2);
    b.at(0, 0) = GaussianRational(1);
    b.at(0, 1) = GaussianRational(1);
    b.at(1, 1) = GaussianRational(1);
    Matrix p = a * b;
    CHECK(p.at(0, 0) == GaussianRational(2));
    CHECK(p.at(0, 1) == GaussianRational(2));
    CHECK(p.at(1, 0) == GaussianRational(0));
    CHECK(p.at(1, 1) == GaussianRational(make_rat(1, 2)));

    CHECK(Matrix::identity(2).trace() == GaussianRational(2));
    CHECK(a.trace() == GaussianRational(make_rat(5, 2)));

    Rng rng(3);
    Matrix r = random_rational_matrix(3, rng);
    CHECK(r.trace() == r.transpose().trace());
    CHECK(r.det() == r.transpose().det());
}

TEST_CASE("inverse and det are exact") {
    Rng rng(17);
    for (int t = 0; t < 10; ++t) {
        Matrix m = random_rational_matrix(3, rng);
        if (m.det().is_zero()) continue;
        CHECK(m * m.inverse() == Matrix::identity(3));
        CHECK(m.inverse().det() * m.det() == GaussianRational(1));
    }
}

TEST_CASE("pfaffian base cases") {
    Matrix m(2);
    m.at(0, 1) = GaussianRational(make_rat(7, 3));
    m.at(1, 0) = GaussianRational(make_rat(-7, 3));
    CHECK(pfaffian(m) == GaussianRational(make_rat(7, 3)));
    CHECK(pfaffian(standard_j(2)) == GaussianRational(1));

    // upper entries (a,b,c,d,e,f) row-major -> af - be + cd
    Matrix q(4);
    long u[6] = {2, 3, 5, 7, 11, 13};
    int t = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            q.at(i, j) = GaussianRational(u[t]);
            q.at(j, i) = GaussianRational(-u[t]);
            ++t;
        }
    CHECK(pfaffian(q) == GaussianRational(2 * 13 - 3 * 11 + 5 * 7));

    CHECK_THROWS(pfaffian(Matrix::identity(2)));  // not skew
    CHECK_THROWS(pfaffian(Matrix(3)));            // odd size
}

TEST_CASE("pfaffian equals the matching-sum oracle and squares to det") {
    Rng rng(29);
    for (int n : {2, 4, 6}) {
        for (int t = 0; t < 5; ++t) {
            Matrix s = random_skew(n, rng);
            GaussianRational pf = pfaffian(s);
            CHECK(pf == pfaffian_matchings(s));
            CHECK(pf * pf == s.det());
        }
    }
    Rng rng8(31);
    Matrix s8 = random_skew(8, rng8);
    CHECK(pfaffian(s8) * pfaffian(s8) == s8.det());
}

TEST_CASE("q_n on torus elements") {
    Matrix a = torus_element_so(2, {make_rat(2, 1)});
    CHECK(a.at(0, 0) == GaussianRational(make_rat(5, 4)));
    CHECK(a.at(0, 1) == GaussianRational(Rat(0), make_rat(3, 4)));
    CHECK(a * a.transpose() == Matrix::identity(2));
    CHECK(a.det() == GaussianRational(1));
    CHECK(q_n_direct({a}) == GaussianRational(Rat(0), Rat(3)));
    CHECK(torus_element_so(2, {make_rat(1, 1)}) == Matrix::identity(2));
    CHECK_THROWS(torus_element_so(2, {Rat(0)}));

    // n = 4: Pf(X - X^T) = i^2 (x1 - 1/x1)(x2 - 1/x2)
    Matrix x = torus_element_so(4, {make_rat(2, 1), make_rat(3, 1)});
    GaussianRational expect =
        GaussianRational(-1) * GaussianRational(make_rat(3, 2)) * GaussianRational(make_rat(8, 3));
    CHECK(pfaffian(x - x.transpose()) == expect);
}

TEST_CASE("q_n symmetric argument vanishes and diagonal identity holds") {
    Rng rng(37);
    Matrix sym(2);
    sym.at(0, 0) = GaussianRational(1);
    sym.at(0, 1) = GaussianRational(5);
    sym.at(1, 0) = GaussianRational(5);
    sym.at(1, 1) = GaussianRational(-2);
    CHECK(q_n_direct({sym}).is_zero());

    for (int n : {2, 4}) {
        for (int t = 0; t < 5; ++t) {
            Matrix x = random_rational_matrix(n, rng);
            std::vector<Matrix> args(static_cast<std::size_t>(n / 2), x);
            GaussianRational scale{pow2(n / 2) * factorial(n / 2), Rat(0)};
            CHECK(q_n_direct(args) == scale * pfaffian(x - x.transpose()));
            CHECK(q_n_direct(args) == q_n_direct_serial(args));
            CHECK(q_n_direct(args) == q_n_polarized(args));
        }
    }

    // Q_4(X, X) with X skew equals 8 Pf(2X)
    Matrix x = random_skew(4, rng);
    Matrix two_x = GaussianRational(2) * x;
    CHECK(q_n_direct({x, x}) == GaussianRational(8) * pfaffian(two_x));
}

TEST_CASE("q_n input validation") {
    CHECK_THROWS(q_n_direct({}));
    CHECK_THROWS(q_n_direct({Matrix::identity(3), Matrix::identity(3)})); // size != 2*count
}

TEST_CASE("characteristic pfaffian") {
    Matrix j2 = standard_j(2);
    Matrix m = GaussianRational(make_rat(7, 3)) * Matrix::identity(2);
    PfaffianPolynomial p = characteristic_pfaffian(m, j2);
    REQUIRE(p.coeffs.size() == 2);
    CHECK(p.coeffs[1] == GaussianRational(1));
    CHECK(p.coeffs[0] == GaussianRational(make_rat(-7, 3)));
    CHECK(p.eval(m).is_zero());

    PfaffianPolynomial p4 = characteristic_pfaffian(Matrix::identity(4), standard_j(4));
    REQUIRE(p4.coeffs.size() == 3);
    CHECK(p4.coeffs[0] == GaussianRational(1));
    CHECK(p4.coeffs[1] == GaussianRational(-2));
    CHECK(p4.coeffs[2] == GaussianRational(1));

    Rng rng(41);
    for (int n : {2, 4, 6}) {
        Matrix J = standard_j(n);
        Matrix Jinv = J.inverse();
        for (int t = 0; t < 3; ++t) {
            Matrix x = random_rational_matrix(n, rng);
            Matrix self_adjoint = x + J * x.transpose() * Jinv;
            PfaffianPolynomial pf = characteristic_pfaffian(self_adjoint, J);
            CHECK(pf.eval(self_adjoint).is_zero());
        }
    }

    // generic matrices are not symplectically self-adjoint
    Matrix bad(2);
    bad.at(0, 1) = GaussianRational(1);
    CHECK_THROWS(characteristic_pfaffian(bad, j2));
}

TEST_CASE("char_poly satisfies Cayley-Hamilton with invariant coefficients") {
    Rng rng(43);
    for (int n : {2, 3, 4}) {
        Matrix m = random_rational_matrix(n, rng);
        std::vector<GaussianRational> c = char_poly(m);
        Matrix acc(n);
        Matrix p = Matrix::identity(n);
        for (int k = 0; k <= n; ++k) {
            acc = acc + c[static_cast<std::size_t>(k)] * p;
            if (k < n) p = p * m;
        }
        CHECK(acc.is_zero());

        Matrix g = sample_sl(n, 1234 + static_cast<std::uint64_t>(n));
        std::vector<GaussianRational> c2 = char_poly(g * m * g.inverse());
        CHECK(c == c2);
    }
}

TEST_CASE("samplers satisfy the group equations exactly") {
    for (std::uint64_t seed : {1ULL, 2ULL, 99ULL}) {
        for (int n : {2, 3}) {
            Matrix a = sample_sl(n, seed);
            CHECK(a.det() == GaussianRational(1));
        }
        for (int n : {2, 3, 4}) {
            Matrix a = sample_so(n, seed);
            CHECK(a * a.transpose() == Matrix::identity(n));
            CHECK(a.det() == GaussianRational(1));
        }
        for (int n : {2, 4}) {
            Matrix a = sample_sp(n, seed);
            Matrix J = standard_j(n);
            CHECK(a * J * a.transpose() == J);
        }
    }
    // deterministic given the seed
    CHECK(sample_sl(2, 7) == sample_sl(2, 7));
    CHECK(!(sample_sl(2, 7) == sample_sl(2, 8)));
}

TEST_CASE("eval_word and trace") {
    Matrix a1(2);
    a1.at(0, 0) = GaussianRational(2);
    a1.at(1, 1) = GaussianRational(make_rat(1, 2));
    Matrix a2(2);
    a2.at(0, 0) = GaussianRational(1);
    a2.at(0, 1) = GaussianRational(1);
    a2.at(1, 1) = GaussianRational(1);
    RepresentationTuple rep = RepresentationTuple::make(Group::sl, {a1, a2});

    Matrix prod = eval_word(rep, Word::parse("g1 g2"));
    CHECK(prod.at(0, 0) == GaussianRational(2));
    CHECK(prod.at(0, 1) == GaussianRational(2));
    CHECK(prod.at(1, 1) == GaussianRational(make_rat(1, 2)));

    // star acts as the inverse for sl
    CHECK(eval_word(rep, Word::parse("g1 g1*")) == Matrix::identity(2));
    CHECK_THROWS(eval_word(rep, Word::parse("g3")));

    // orthogonal representation: star acts as the transpose
    Matrix r = sample_so(3, 5);
    RepresentationTuple orep = RepresentationTuple::make(Group::so_odd, {r});
    CHECK(eval_word(orep, Word::parse("g1 g1*")) == Matrix::identity(3));

    // traces are rotation invariant
    Rng rng(47);
    Matrix b1 = sample_sl(2, 51), b2 = sample_sl(2, 52), b3 = sample_sl(2, 53);
    RepresentationTuple rep3 = RepresentationTuple::make(Group::sl, {b1, b2, b3});
    Word w = Word::parse("g1 g2 g3 g2");
    for (int k = 1; k < w.degree(); ++k)
        CHECK(trace_of_word(rep3, w) == trace_of_word(rep3, w.rotated(k)));

    // star respects the involution: tr(w*) = tr(w) under sl
    CHECK(trace_of_word(rep3, star(w)) == trace_of_word(rep3, w));
}

TEST_CASE("representation validation") {
    Matrix not_sl(2);
    not_sl.at(0, 0) = GaussianRational(2);
    not_sl.at(1, 1) = GaussianRational(1);
    CHECK_THROWS(RepresentationTuple::make(Group::sl, {not_sl}));
    CHECK_THROWS(RepresentationTuple::make(Group::so_odd, {not_sl}));
    CHECK_NOTHROW(RepresentationTuple::make(Group::gl, {not_sl}));

    Matrix sp_ok = sample_sp(2, 3);
    CHECK_NOTHROW(RepresentationTuple::make(Group::sp, {sp_ok}));
    RepresentationTuple sp_rep = RepresentationTuple::make(Group::sp, {sp_ok});
    CHECK(eval_word(sp_rep, Word::parse("g1 g1*")) ==
          sp_ok * standard_j(2) * sp_ok.transpose() * standard_j(2).inverse());
}

TEST_CASE("q_n conjugation invariance") {
    Rng rng(53);
    for (int n : {2, 4}) {
        std::vector<Matrix> args;
        for (int k = 0; k < n / 2; ++k) args.push_back(random_rational_matrix(n, rng));
        Matrix g = sample_so(n, 61);
        std::vector<Matrix> conj;
        for (const Matrix& m : args) conj.push_back(g * m * g.transpose());
        CHECK(q_n_direct(conj) == q_n_direct(args));
    }
}
