#pragma once

#include <string>
#include <vector>

#include "charvar/free_algebra.hpp"

namespace charvar {

// Alphabet of the graded free semigroup (with or without involution).
struct Alphabet {
    int letters = 1;        // number of generators s_1..s_N
    bool with_stars = false;
    int max_letter = 0;     // 0 = no cap; otherwise only s_1..s_r

    int effective_letters() const {
        return max_letter > 0 ? std::min(max_letter, letters) : letters;
    }
    friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

enum class IdealMode { plain, symmetric };

// Nilpotency bound nu_n: n(n+1)/2 for n <= 4 (proved), n^2 beyond.
struct NilIndexTable {
    int n = 0;
    int nu = 0;
    enum class Source { kuzmin, razmyslov } source = Source::kuzmin;
};

NilIndexTable nu_bound(int n);

// Homogeneous degree-d spanning set of I ∩ KS_d (plain: ideal of n-th
// powers) or I^s ∩ KS_d (symmetric: ideal of (x+x*)^{n/2}-th powers),
// via polarization: flanked arrangement sums over distinct base words.
std::vector<FreeAlgebraElement> ideal_generators(int n, int degree, const Alphabet& alphabet,
                                                 IdealMode mode);

// Echelonized degree-d ideal component.
EchelonBasis ideal_component(int n, int degree, const Alphabet& alphabet, IdealMode mode);

// Words of degree exactly d whose classes form a basis of KS_d modulo the
// ideal component: the complement of the leading words under the fixed
// order. This is one canonical choice; any spanning complement works.
std::vector<Word> quotient_basis(int n, int degree, const Alphabet& alphabet, IdealMode mode);

// First degree whose component lies entirely inside the ideal; once full,
// all higher components are full. Throws if nothing is full by limit+1.
int first_full_degree(int n, const Alphabet& alphabet, IdealMode mode, int limit);

// True iff every degree-d word over k letters reduces to 0 modulo the ideal
// component. `commutative` additionally quotients by s_i s_j - s_j s_i.
bool nilpotency_check(int n, int degree, int k_letters, IdealMode mode,
                      bool commutative = false);

// Multilinear variant: only words using each of the k letters exactly once,
// against the multilinear slice of the ideal (degree = k).
bool nilpotency_check_multilinear(int n, int k_letters, IdealMode mode = IdealMode::plain);

// Multilinear slice of the ideal component: generators all of whose
// monomials use each letter 1..k exactly once.
std::vector<FreeAlgebraElement> ideal_generators_multilinear(int n, int k_letters);

} // namespace charvar
