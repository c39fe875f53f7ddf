#include "charvar/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace charvar {

Matrix Matrix::identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m.at(j, i) = at(i, j);
    return m;
}

GaussianRational Matrix::trace() const {
    GaussianRational t;
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& v : a_)
        if (!v.is_zero()) return false;
    return true;
}

bool Matrix::is_skew_symmetric() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j)
            if (at(i, j) != -at(j, i)) return false;
    return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("size mismatch");
    Matrix m(a.n_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] + b.a_[i];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("size mismatch");
    Matrix m(a.n_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] - b.a_[i];
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("size mismatch");
    const int n = a.n_;
    Matrix m(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const GaussianRational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < n; ++j) m.at(i, j) += aik * b.at(k, j);
        }
    return m;
}

Matrix operator*(const GaussianRational& c, const Matrix& a) {
    Matrix m(a.n_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = c * a.a_[i];
    return m;
}

GaussianRational Matrix::det() const {
    Matrix t = *this;
    const int n = n_;
    GaussianRational result(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!t.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return GaussianRational(0);
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(t.at(pivot, j), t.at(col, j));
            result = -result;
        }
        result *= t.at(col, col);
        GaussianRational inv = t.at(col, col).inverse();
        for (int r = col + 1; r < n; ++r) {
            if (t.at(r, col).is_zero()) continue;
            GaussianRational f = t.at(r, col) * inv;
            for (int j = col; j < n; ++j) t.at(r, j) -= f * t.at(col, j);
        }
    }
    return result;
}

Matrix Matrix::inverse() const {
    const int n = n_;
    Matrix t = *this;
    Matrix inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!t.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::invalid_argument("matrix is singular");
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(t.at(pivot, j), t.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        GaussianRational f = t.at(col, col).inverse();
        for (int j = 0; j < n; ++j) {
            t.at(col, j) *= f;
            inv.at(col, j) *= f;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || t.at(r, col).is_zero()) continue;
            GaussianRational g = t.at(r, col);
            for (int j = 0; j < n; ++j) {
                t.at(r, j) -= g * t.at(col, j);
                inv.at(r, j) -= g * inv.at(col, j);
            }
        }
    }
    return inv;
}

Matrix Matrix::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    Matrix result = identity(n_);
    Matrix base = *this;
    while (k) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

std::string Matrix::str() const {
    std::string out = "[";
    for (int i = 0; i < n_; ++i) {
        out += i ? ",[" : "[";
        for (int j = 0; j < n_; ++j) {
            if (j) out += ",";
            out += at(i, j).str();
        }
        out += "]";
    }
    return out + "]";
}

Matrix standard_j(int n) {
    if (n % 2) throw std::invalid_argument("J needs even size");
    Matrix j(n);
    const int h = n / 2;
    for (int i = 0; i < h; ++i) {
        j.at(i, h + i) = GaussianRational(1);
        j.at(h + i, i) = GaussianRational(-1);
    }
    return j;
}

namespace {

// recursive first-row expansion on an index subset
template <typename T>
T pfaffian_rec(const std::vector<T>& a, int n, std::vector<int>& idx, const T& zero) {
    const int m = static_cast<int>(idx.size());
    if (m == 0) return zero + T(1);
    T acc = zero;
    int i0 = idx[0];
    for (int k = 1; k < m; ++k) {
        int jk = idx[k];
        std::vector<int> rest;
        rest.reserve(m - 2);
        for (int t = 1; t < m; ++t)
            if (t != k) rest.push_back(idx[t]);
        T term = a[static_cast<std::size_t>(i0) * n + jk] * pfaffian_rec(a, n, rest, zero);
        if (k % 2 == 1)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

} // namespace

GaussianRational pfaffian(const Matrix& m) {
    if (m.n() % 2) throw std::invalid_argument("pfaffian needs even size");
    if (!m.is_skew_symmetric()) throw std::invalid_argument("pfaffian needs a skew-symmetric matrix");
    std::vector<GaussianRational> flat;
    flat.reserve(static_cast<std::size_t>(m.n()) * m.n());
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) flat.push_back(m.at(i, j));
    std::vector<int> idx(m.n());
    std::iota(idx.begin(), idx.end(), 0);
    return pfaffian_rec(flat, m.n(), idx, GaussianRational());
}

// ---- characteristic Pfaffian ------------------------------------------

namespace {

// dense univariate polynomial over Q(i), low-to-high
struct Poly {
    std::vector<GaussianRational> c;

    Poly() = default;
    Poly(long v) : c{GaussianRational(v)} { trim(); } // NOLINT
    explicit Poly(GaussianRational v) : c{std::move(v)} { trim(); }

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool zero() const { return c.empty(); }

    Poly& operator+=(const Poly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size());
        for (std::size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size());
        for (std::size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.zero() || b.zero()) return {};
        Poly out;
        out.c.assign(a.c.size() + b.c.size() - 1, GaussianRational());
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
        }
        out.trim();
        return out;
    }
};

} // namespace

Matrix PfaffianPolynomial::eval(const Matrix& m) const {
    Matrix acc(m.n());
    Matrix p = Matrix::identity(m.n());
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (!coeffs[k].is_zero()) acc = acc + coeffs[k] * p;
        if (k + 1 < coeffs.size()) p = p * m;
    }
    return acc;
}

GaussianRational PfaffianPolynomial::eval(const GaussianRational& x) const {
    GaussianRational acc;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
    return acc;
}

PfaffianPolynomial characteristic_pfaffian(const Matrix& m, const Matrix& J) {
    const int n = m.n();
    if (n % 2) throw std::invalid_argument("characteristic Pfaffian needs even size");
    Matrix self_adjoint_test = J * m.transpose() * J.inverse();
    if (!(self_adjoint_test == m))
        throw std::invalid_argument("matrix is not symplectically self-adjoint");

    // (lambda*I - m) J with polynomial entries
    std::vector<Poly> flat(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Poly cell;
            for (int k = 0; k < n; ++k) {
                GaussianRational coeffI = i == k ? GaussianRational(1) : GaussianRational();
                // entry (i,k) of lambda*I - m is lambda*delta_ik - m_ik
                Poly factor;
                factor.c = {-m.at(i, k), coeffI};
                factor.trim();
                if (!factor.zero() && !J.at(k, j).is_zero()) cell += factor * Poly(J.at(k, j));
            }
            flat[static_cast<std::size_t>(i) * n + j] = std::move(cell);
        }
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    Poly pf = pfaffian_rec(flat, n, idx, Poly());

    const int half = n / 2;
    PfaffianPolynomial out;
    out.coeffs.assign(half + 1, GaussianRational());
    if (static_cast<int>(pf.c.size()) != half + 1)
        throw std::logic_error("characteristic Pfaffian degree is not n/2");
    GaussianRational lead = pf.c.back();
    for (int k = 0; k <= half; ++k) out.coeffs[k] = pf.c[k] / lead;
    return out;
}

std::vector<GaussianRational> char_poly(const Matrix& m) {
    const int n = m.n();
    std::vector<GaussianRational> c(n + 1);
    c[n] = GaussianRational(1);
    Matrix mk = m;
    for (int k = 1; k <= n; ++k) {
        GaussianRational t = mk.trace();
        GaussianRational ck{-t.re / k, -t.im / k};
        c[n - k] = ck;
        if (k < n) mk = m * (mk + ck * Matrix::identity(n));
    }
    return c;
}

// ---- Q_n ----------------------------------------------------------------

namespace {

void check_qn_input(const std::vector<Matrix>& ms) {
    if (ms.empty()) throw std::invalid_argument("Q_n needs at least one matrix");
    const int n = static_cast<int>(ms.size()) * 2;
    for (const Matrix& m : ms)
        if (m.n() != n) throw std::invalid_argument("Q_n needs n/2 matrices of size n");
}

std::vector<Matrix> skew_parts(const std::vector<Matrix>& ms) {
    std::vector<Matrix> k;
    k.reserve(ms.size());
    for (const Matrix& m : ms) k.push_back(m - m.transpose());
    return k;
}

GaussianRational qn_term(const std::vector<Matrix>& skew, const std::vector<int>& perm, int sign) {
    GaussianRational t(sign);
    for (std::size_t i = 0; i < skew.size(); ++i) {
        const GaussianRational& d = skew[i].at(perm[2 * i], perm[2 * i + 1]);
        if (d.is_zero()) return GaussianRational();
        t *= d;
    }
    return t;
}

int permutation_sign(const std::vector<int>& p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

std::uint64_t factorial_u64(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

// permutation + sign from the Lehmer code of idx
void perm_by_index(std::uint64_t idx, int n, std::vector<int>& perm, int& sign) {
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    perm.resize(n);
    int parity = 0;
    for (int i = 0; i < n; ++i) {
        std::uint64_t f = factorial_u64(n - 1 - i);
        int digit = static_cast<int>(idx / f);
        idx %= f;
        parity += digit;
        perm[i] = pool[digit];
        pool.erase(pool.begin() + digit);
    }
    sign = parity % 2 == 0 ? 1 : -1;
}

} // namespace

GaussianRational q_n_direct_serial(const std::vector<Matrix>& ms) {
    check_qn_input(ms);
    const int n = static_cast<int>(ms.size()) * 2;
    std::vector<Matrix> skew = skew_parts(ms);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    GaussianRational acc;
    do {
        acc += qn_term(skew, perm, permutation_sign(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

GaussianRational q_n_direct(const std::vector<Matrix>& ms) {
#ifndef _OPENMP
    return q_n_direct_serial(ms);
#else
    check_qn_input(ms);
    const int n = static_cast<int>(ms.size()) * 2;
    std::vector<Matrix> skew = skew_parts(ms);
    const std::uint64_t total = factorial_u64(n);
    GaussianRational acc;
#pragma omp parallel
    {
        GaussianRational local;
        std::vector<int> perm;
        int sign = 1;
#pragma omp for schedule(static)
        for (long long idx = 0; idx < static_cast<long long>(total); ++idx) {
            perm_by_index(static_cast<std::uint64_t>(idx), n, perm, sign);
            local += qn_term(skew, perm, sign);
        }
#pragma omp critical
        acc += local; // exact rational addition commutes, order irrelevant
    }
    return acc;
#endif
}

GaussianRational q_n_polarized(const std::vector<Matrix>& ms) {
    check_qn_input(ms);
    const int half = static_cast<int>(ms.size());
    const int n = 2 * half;
    GaussianRational acc;
    for (int mask = 1; mask < (1 << half); ++mask) {
        Matrix y(n);
        int bits = 0;
        for (int i = 0; i < half; ++i)
            if ((mask >> i) & 1) {
                y = y + ms[i];
                ++bits;
            }
        GaussianRational pf = pfaffian(y - y.transpose());
        if ((half - bits) % 2 == 1) pf = -pf;
        acc += pf;
    }
    return GaussianRational(pow2(half)) * acc;
}

// ---- representations ----------------------------------------------------

RepresentationTuple RepresentationTuple::make(Group g, std::vector<Matrix> ms, Matrix J) {
    RepresentationTuple rep;
    rep.group = g;
    rep.matrices = std::move(ms);
    if (rep.matrices.empty()) throw std::invalid_argument("representation needs >= 1 matrix");
    const int n = rep.matrices.front().n();
    if (g == Group::sp) {
        rep.J = J.n() == 0 ? standard_j(n) : std::move(J);
    }
    Matrix id = Matrix::identity(n);
    for (const Matrix& a : rep.matrices) {
        if (a.n() != n) throw std::invalid_argument("representation matrices of mixed size");
        switch (g) {
            case Group::sl:
                if (a.det() != GaussianRational(1)) throw std::invalid_argument("det != 1 for sl");
                break;
            case Group::gl:
                if (a.det().is_zero()) throw std::invalid_argument("singular matrix for gl");
                break;
            case Group::o:
                if (!(a * a.transpose() == id)) throw std::invalid_argument("A A^T != I for o");
                break;
            case Group::so_odd:
            case Group::so_even:
                if (!(a * a.transpose() == id)) throw std::invalid_argument("A A^T != I for so");
                if (a.det() != GaussianRational(1)) throw std::invalid_argument("det != 1 for so");
                break;
            case Group::sp:
                if (!(a * rep.J * a.transpose() == rep.J))
                    throw std::invalid_argument("A J A^T != J for sp");
                break;
        }
    }
    return rep;
}

Matrix RepresentationTuple::star_image(int index) const {
    const Matrix& a = matrices[static_cast<std::size_t>(index) - 1];
    switch (group) {
        case Group::sl:
        case Group::gl:
            return a.inverse();
        case Group::o:
        case Group::so_odd:
        case Group::so_even:
            return a.transpose();
        case Group::sp:
            return J * a.transpose() * J.inverse();
    }
    throw std::logic_error("bad group");
}

Matrix eval_word(const RepresentationTuple& rep, const Word& w) {
    Matrix acc;
    bool first = true;
    for (const Letter& l : w.letters()) {
        if (l.index > static_cast<int>(rep.matrices.size()))
            throw std::out_of_range("letter index exceeds representation size");
        Matrix img = l.starred ? rep.star_image(l.index)
                               : rep.matrices[static_cast<std::size_t>(l.index) - 1];
        acc = first ? img : acc * img;
        first = false;
    }
    return acc;
}

GaussianRational trace_of_word(const RepresentationTuple& rep, const Word& w) {
    return eval_word(rep, w).trace();
}

// ---- samplers ------------------------------------------------------------

Matrix sample_sl(int n, std::uint64_t seed) {
    Rng rng(seed * 0x517cc1b727220a95ULL + 0x2545F4914F6CDD1DULL);
    Matrix a = Matrix::identity(n);
    const int transvections = 2 * n;
    for (int t = 0; t < transvections; ++t) {
        int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        if (i == j) j = (j + 1) % n;
        Matrix e = Matrix::identity(n);
        e.at(i, j) = GaussianRational(random_nonzero_rat(rng));
        a = a * e;
    }
    if (a.det() != GaussianRational(1)) throw std::logic_error("sample_sl produced det != 1");
    return a;
}

namespace {

Matrix cayley(const Matrix& s) {
    const int n = s.n();
    Matrix id = Matrix::identity(n);
    return (id - s).inverse() * (id + s);
}

} // namespace

Matrix sample_so(int n, std::uint64_t seed) {
    Rng rng(seed * 0x9E3779B97F4A7C15ULL + 0x6C62272E07BB0142ULL);
    for (int attempt = 0; attempt < 32; ++attempt) {
        Matrix s(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                Rat v = random_rat(rng);
                s.at(i, j) = GaussianRational(v);
                s.at(j, i) = GaussianRational(-v);
            }
        if ((Matrix::identity(n) - s).det().is_zero()) continue;
        Matrix a = cayley(s);
        if (!(a * a.transpose() == Matrix::identity(n)) || a.det() != GaussianRational(1))
            throw std::logic_error("sample_so produced a non-orthogonal matrix");
        return a;
    }
    throw std::runtime_error("sample_so: I - S singular in every attempt");
}

Matrix sample_sp(int n, std::uint64_t seed) {
    if (n % 2) throw std::invalid_argument("sp needs even size");
    Rng rng(seed * 0xD6E8FEB86659FD93ULL + 0x2F52D9ECA1E7A8F1ULL);
    Matrix J = standard_j(n);
    for (int attempt = 0; attempt < 32; ++attempt) {
        Matrix h(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                Rat v = random_rat(rng);
                h.at(i, j) = GaussianRational(v);
                h.at(j, i) = GaussianRational(v);
            }
        Matrix s = J * h; // S^T J + J S = 0
        if ((Matrix::identity(n) - s).det().is_zero()) continue;
        Matrix a = cayley(s);
        if (!(a * J * a.transpose() == J))
            throw std::logic_error("sample_sp produced a non-symplectic matrix");
        return a;
    }
    throw std::runtime_error("sample_sp: I - S singular in every attempt");
}

Matrix torus_element_so(int n, const std::vector<Rat>& params) {
    if (n % 2) throw std::invalid_argument("torus element needs even size");
    if (static_cast<int>(params.size()) != n / 2)
        throw std::invalid_argument("need n/2 torus parameters");
    Matrix m(n);
    for (int b = 0; b < n / 2; ++b) {
        const Rat& x = params[static_cast<std::size_t>(b)];
        if (x == 0) throw std::invalid_argument("torus parameter must be nonzero");
        Rat inv = Rat(1) / x;
        Rat diag = (x + inv) / 2;
        Rat off = (x - inv) / 2;
        m.at(2 * b, 2 * b) = GaussianRational(diag);
        m.at(2 * b + 1, 2 * b + 1) = GaussianRational(diag);
        m.at(2 * b, 2 * b + 1) = GaussianRational(Rat(0), off);
        m.at(2 * b + 1, 2 * b) = GaussianRational(Rat(0), -off);
    }
    return m;
}

Rat factorial(int k) {
    Rat f(1);
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

Rat pow2(int k) {
    Rat f(1);
    for (int i = 0; i < k; ++i) f *= 2;
    return f;
}

} // namespace charvar
