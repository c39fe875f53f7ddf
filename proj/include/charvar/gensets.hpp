#pragma once

#include <json.hpp>

#include <vector>

#include "charvar/cache.hpp"
#include "charvar/groups.hpp"
#include "charvar/nilquot.hpp"

namespace charvar {

// One generator of the coordinate ring: a trace function tau_w, a Q_n value
// on a tuple of words, or an inverted determinant of a free-group generator.
struct Generator {
    enum class Kind { trace, q_tuple, det_inverse };

    Kind kind = Kind::trace;
    std::vector<Word> words; // trace: 1 word; q_tuple: n/2 words, sorted
    int index = 0;           // det_inverse only

    static Generator trace(Word w);
    static Generator q_tuple(std::vector<Word> ws);
    static Generator det_inverse(int index);

    friend bool operator==(const Generator&, const Generator&) = default;
};

struct GeneratorSet {
    Group group = Group::sl;
    int n = 0;
    int rank = 0;
    std::vector<Generator> generators;

    std::vector<Word> trace_words() const;
    std::size_t count(Generator::Kind k) const;
};

enum class Prune { none, sl2_identities };

// Trace generators for SL(n): letters plus quotient-basis words D_r
// multiplied by s_r, deduplicated by cyclic class. The prune drops the n=2
// identities tau_{g^2} and tau_{a b^2}, reproducing the classical SL(2) set.
GeneratorSet sln_generators(int n, int rank, QuotientCache& cache, Prune prune = Prune::none);

// The classical SL(2) set: tau_i, tau_ij (i<j), tau_ijk (i<j<k);
// abelian variant drops the triples.
GeneratorSet sl2_generators(int rank, bool abelian = false);

// SL(n) generators plus det(rho(g_i))^{-1} for every generator.
GeneratorSet gln_generators(int n, int rank, QuotientCache& cache, Prune prune = Prune::none);

// Symplectic: letters plus symmetric-mode quotient words D^s_r times s_r,
// deduplicated by cyclic class up to star. Even n only.
GeneratorSet sp_generators(int n, int rank, QuotientCache& cache);

// O(n) and odd SO(n): the star-free SL(n) word set. Even SO(n): the SL(n)
// trace part plus Q_n tuples over the set M (multisets by default;
// ordered_q restores ordered tuples).
GeneratorSet so_generators(Group g, int n, int rank, QuotientCache& cache,
                           Prune prune = Prune::none, bool ordered_q = false);

// Subset of B with no more starred than unstarred letters, augmented (by
// exact linear algebra) until {w - star(w) : w in M} spans the antisymmetric
// part of span(B).
std::vector<Word> build_M(const std::vector<Word>& B);

// Pattern lift: each word's distinct-index pattern is re-embedded by every
// strictly increasing map into {1..target_rank}.
std::vector<Word> lift_generators(const std::vector<Word>& B, int target_rank);

// SL(n) generators for large rank via the lifted quotient basis of the
// rank-(nu_n - 1) free semigroup. Falls back to the direct computation when
// target_rank < nu_n - 1.
GeneratorSet sln_generators_lifted(int n, int rank, QuotientCache& cache,
                                   Prune prune = Prune::none);

nlohmann::ordered_json to_json(const GeneratorSet& gs);
std::string to_text(const GeneratorSet& gs);

} // namespace charvar
