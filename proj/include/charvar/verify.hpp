#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "charvar/groups.hpp"

namespace charvar {

struct SuiteCase {
    std::string desc;
    bool pass = false;
    std::string witness; // concrete inputs, filled on failure
};

// Named, independently runnable check with a machine-readable report.
// Deterministic given (seed, parameters).
struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<SuiteCase> cases;

    bool all_pass() const;
    void check(std::string desc, bool ok, std::string witness_on_fail = "");
};

nlohmann::ordered_json to_json(const SuiteReport& r);
std::string to_text(const SuiteReport& r);

// Nagata-Higman at n = 2: full vanishing at degree 3 over 3 letters, the
// degree-2 survivor, and the commutative variant.
SuiteReport suite_nagata_higman(std::uint64_t seed = 1);

// Long-running optional n = 3 check: multilinear vanishing at degree 6 over
// 6 letters (720-dimensional component) and strictness at degree 5.
SuiteReport suite_nagata_higman_n3();

// tr(B^2) = tr(B)^2 - 2, tr(AB^2) = tr(B)tr(AB) - tr(A) (derived sign,
// with the printed "+" variant flagged) and the fundamental identity.
SuiteReport suite_sl2_identities(int trials = 50, std::uint64_t seed = 1);

// Q_n for n in {2,4,6}: diagonal Pfaffian identity, torus values, the
// direct/polarized cross-oracle, multilinearity, symmetry, conjugation
// invariance, transpose antisymmetry.
SuiteReport suite_qn(int trials = 50, std::uint64_t seed = 1);

// The SO(2) pair not separated by traces but separated by Q_2, at x = 2.
SuiteReport suite_separation_so2();

// Pf_M(M) = 0 for random symplectically self-adjoint M, n in {2,4,6}, plus
// coefficient homogeneity under scaling.
SuiteReport suite_char_pfaffian(int trials = 10, std::uint64_t seed = 1);

// SL(2) generation completeness: every word of length <= max_len over
// rank <= 3 rewrites to a polynomial in the classical generators, validated
// exactly on random SL(2) tuples. Only (sl, n=2) is supported.
SuiteReport suite_generator_soundness(Group group, int n, int rank = 3, int max_len = 6,
                                      int trials = 50, std::uint64_t seed = 1);

std::vector<std::string> suite_names(); // excludes the long-running n3 suite
SuiteReport run_suite(const std::string& name, int trials, std::uint64_t seed);

} // namespace charvar
