#include "charvar/nilquot.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace charvar {

NilIndexTable nu_bound(int n) {
    if (n < 1) throw std::invalid_argument("matrix size must be >= 1");
    NilIndexTable t;
    t.n = n;
    if (n <= 4) {
        t.nu = n * (n + 1) / 2;
        t.source = NilIndexTable::Source::kuzmin;
    } else {
        t.nu = n * n;
        t.source = NilIndexTable::Source::razmyslov;
    }
    return t;
}

namespace {

void partitions_rec(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

std::vector<int> concat_codes(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::string element_key(const FreeAlgebraElement& e) {
    std::string k;
    for (const auto& [w, c] : e.terms()) {
        for (int code : w.codes()) {
            k += static_cast<char>('a' + (code % 26));
            k += std::to_string(code);
        }
        k += '=';
        k += c.get_str();
        k += ';';
    }
    return k;
}

// Arrangement sum over the block multiset {w_i repeated alpha_i times}; in
// symmetric mode each block is w_i + star(w_i), expanded.
FreeAlgebraElement arrangement_sum(const std::vector<Word>& ws, const std::vector<int>& alpha,
                                   bool symmetric) {
    int positions = 0, wdeg = 0;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        positions += alpha[i];
        wdeg += alpha[i] * ws[i].degree();
    }
    std::vector<int> seq;
    for (std::size_t i = 0; i < ws.size(); ++i)
        seq.insert(seq.end(), alpha[i], static_cast<int>(i));
    std::sort(seq.begin(), seq.end());

    std::vector<Word> starred;
    if (symmetric)
        for (const Word& w : ws) starred.push_back(star(w));

    FreeAlgebraElement sum(wdeg);
    do {
        if (!symmetric) {
            std::vector<int> codes;
            for (int b : seq) codes = concat_codes(codes, ws[b].codes());
            sum.add(Word(std::move(codes)), Rat(1));
        } else {
            for (int mask = 0; mask < (1 << positions); ++mask) {
                std::vector<int> codes;
                for (int p = 0; p < positions; ++p) {
                    const Word& f = (mask >> p) & 1 ? starred[seq[p]] : ws[seq[p]];
                    codes = concat_codes(codes, f.codes());
                }
                sum.add(Word(std::move(codes)), Rat(1));
            }
        }
    } while (std::next_permutation(seq.begin(), seq.end()));
    return sum;
}

struct GeneratorBuilder {
    int degree;
    Alphabet alphabet;
    bool symmetric;
    std::vector<std::vector<Word>> words_by_degree; // index = degree, [0] unused
    std::vector<FreeAlgebraElement> out;
    std::unordered_set<std::string> seen;

    void emit(const FreeAlgebraElement& core) {
        if (core.is_zero()) return;
        int rem = degree - core.degree();
        for (int f0 = 0; f0 <= rem; ++f0) {
            int f1 = rem - f0;
            const std::vector<Word>* left = f0 ? &words_by_degree[f0] : nullptr;
            const std::vector<Word>* right = f1 ? &words_by_degree[f1] : nullptr;
            std::size_t nl = left ? left->size() : 1, nr = right ? right->size() : 1;
            for (std::size_t il = 0; il < nl; ++il) {
                for (std::size_t ir = 0; ir < nr; ++ir) {
                    FreeAlgebraElement row(degree);
                    for (const auto& [w, c] : core.terms()) {
                        std::vector<int> codes;
                        if (left) codes = (*left)[il].codes();
                        codes = concat_codes(codes, w.codes());
                        if (right) codes = concat_codes(codes, (*right)[ir].codes());
                        row.add(Word(std::move(codes)), c);
                    }
                    row.make_monic();
                    if (seen.insert(element_key(row)).second) out.push_back(std::move(row));
                }
            }
        }
    }
};

// Choose words for the slots of alpha: equal-alpha runs ascending, all
// chosen words distinct. Slot words may differ from flank words (symmetric
// mode runs slots over star-pair representatives).
struct SlotWalker {
    GeneratorBuilder* b;
    const std::vector<std::vector<Word>>* slots;
    const std::vector<int>* alpha;

    void choose(std::size_t slot, std::vector<Word>& chosen, int used_degree) {
        if (slot == alpha->size()) {
            b->emit(arrangement_sum(chosen, *alpha, b->symmetric));
            return;
        }
        int min_later = 0;
        for (std::size_t j = slot + 1; j < alpha->size(); ++j) min_later += (*alpha)[j];
        int cap = (b->degree - used_degree - min_later) / (*alpha)[slot];
        bool same_run = slot > 0 && (*alpha)[slot] == (*alpha)[slot - 1];
        for (int wd = 1; wd <= cap; ++wd) {
            for (const Word& w : (*slots)[wd]) {
                if (same_run && !(chosen.back() < w)) continue;
                bool dup = false;
                for (const Word& u : chosen)
                    if (u == w) {
                        dup = true;
                        break;
                    }
                if (dup) continue;
                chosen.push_back(w);
                choose(slot + 1, chosen, used_degree + (*alpha)[slot] * wd);
                chosen.pop_back();
            }
        }
    }
};

} // namespace

std::vector<FreeAlgebraElement> ideal_generators(int n, int degree, const Alphabet& alphabet,
                                                 IdealMode mode) {
    if (n < 1 || degree < 1) throw std::invalid_argument("need n >= 1, degree >= 1");
    if (mode == IdealMode::symmetric && n % 2 != 0)
        throw std::invalid_argument("symmetric mode requires even n");
    const int exponent = mode == IdealMode::plain ? n : n / 2;
    if (degree < exponent) return {};

    GeneratorBuilder b;
    b.degree = degree;
    b.alphabet = alphabet;
    b.symmetric = mode == IdealMode::symmetric;
    b.words_by_degree.resize(degree + 1);
    for (int d = 1; d <= degree; ++d)
        b.words_by_degree[d] =
            words_of_degree(alphabet.letters, d, alphabet.with_stars, alphabet.max_letter);

    // In symmetric mode the base words run over star-pair representatives
    // (w and star(w) give the same symmetric element).
    std::vector<std::vector<Word>> slot_words = b.words_by_degree;
    if (b.symmetric) {
        for (auto& layer : slot_words) {
            std::vector<Word> reps;
            for (const Word& w : layer)
                if (!(star(w) < w)) reps.push_back(w);
            layer = std::move(reps);
        }
    }

    for (const auto& alpha : partitions(exponent)) {
        std::vector<Word> chosen;
        SlotWalker walker{&b, &slot_words, &alpha};
        walker.choose(0, chosen, 0);
    }
    return std::move(b.out);
}

EchelonBasis ideal_component(int n, int degree, const Alphabet& alphabet, IdealMode mode) {
    return echelonize(ideal_generators(n, degree, alphabet, mode));
}

std::vector<Word> quotient_basis(int n, int degree, const Alphabet& alphabet, IdealMode mode) {
    if (degree < 1) throw std::invalid_argument("degree must be >= 1");
    std::vector<Word> all =
        words_of_degree(alphabet.letters, degree, alphabet.with_stars, alphabet.max_letter);
    const int start = mode == IdealMode::plain ? n : n / 2;
    if (degree < start) return all; // ideal components vanish below the generator degree
    EchelonBasis basis = ideal_component(n, degree, alphabet, mode);
    std::vector<Word> out;
    for (const Word& w : all)
        if (!basis.is_pivot(w)) out.push_back(w);
    return out;
}

int first_full_degree(int n, const Alphabet& alphabet, IdealMode mode, int limit) {
    for (int d = 1; d <= limit; ++d) {
        if (quotient_basis(n, d, alphabet, mode).empty()) return d;
    }
    throw std::runtime_error("no full ideal component up to degree " + std::to_string(limit));
}

namespace {

bool all_reduce_to_zero(const std::vector<Word>& words, const EchelonBasis& basis) {
    bool ok = true;
    const long count = static_cast<long>(words.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) reduction(&& : ok)
#endif
    for (long i = 0; i < count; ++i) {
        if (!ok) continue; // skips the rest of this thread's share
        FreeAlgebraElement r =
            reduce(FreeAlgebraElement::monomial(words[static_cast<std::size_t>(i)]), basis);
        if (!r.is_zero()) ok = false;
    }
    return ok;
}

} // namespace

bool nilpotency_check(int n, int degree, int k_letters, IdealMode mode, bool commutative) {
    Alphabet alphabet{k_letters, mode == IdealMode::symmetric, 0};
    std::vector<FreeAlgebraElement> gens = ideal_generators(n, degree, alphabet, mode);
    std::vector<Word> all =
        words_of_degree(alphabet.letters, degree, alphabet.with_stars, alphabet.max_letter);
    if (commutative) {
        for (const Word& w : all) {
            std::vector<int> sorted = w.codes();
            std::sort(sorted.begin(), sorted.end());
            Word ws(std::move(sorted));
            if (ws == w) continue;
            FreeAlgebraElement row(degree);
            row.add(w, Rat(1));
            row.add(ws, Rat(-1));
            gens.push_back(std::move(row));
        }
    }
    EchelonBasis basis = echelonize(gens);
    return all_reduce_to_zero(all, basis);
}

namespace {

// Distribute the letters 1..k (each exactly once) over v0, w_1..w_n, v1.
struct MultilinearBuilder {
    int n = 0, k = 0;
    std::vector<FreeAlgebraElement> out;
    std::unordered_set<std::string> seen;

    void build() {
        for (int f0 = 0; f0 <= k - n; ++f0) {
            for (int f1 = 0; f1 + f0 <= k - n; ++f1) {
                int wtotal = k - f0 - f1;
                std::vector<int> degs;
                compose(wtotal, n, degs, f0, f1);
            }
        }
    }

    void compose(int total, int parts, std::vector<int>& degs, int f0, int f1) {
        if (parts == 0) {
            if (total == 0) assign(degs, f0, f1);
            return;
        }
        for (int d = 1; d + (parts - 1) <= total; ++d) {
            degs.push_back(d);
            compose(total - d, parts - 1, degs, f0, f1);
            degs.pop_back();
        }
    }

    void assign(const std::vector<int>& degs, int f0, int f1) {
        std::vector<int> letters;
        for (int i = 1; i <= k; ++i) letters.push_back(i);
        std::vector<std::vector<int>> groups; // sequences of letter indices
        pick(letters, 0, degs, f0, f1, groups);
    }

    // group order: v0, w_1..w_n, v1; each group is an ordered sequence
    void pick(std::vector<int>& avail, std::size_t gi, const std::vector<int>& degs, int f0, int f1,
              std::vector<std::vector<int>>& groups) {
        std::size_t total_groups = degs.size() + 2;
        if (gi == total_groups) {
            finish(groups, f0, f1);
            return;
        }
        int want = gi == 0 ? f0 : gi == total_groups - 1 ? f1 : degs[gi - 1];
        if (want == 0) {
            groups.push_back({});
            pick(avail, gi + 1, degs, f0, f1, groups);
            groups.pop_back();
            return;
        }
        std::vector<int> seq;
        pick_seq(avail, want, seq, [&](const std::vector<int>& s) {
            groups.push_back(s);
            pick(avail, gi + 1, degs, f0, f1, groups);
            groups.pop_back();
        });
    }

    template <class F>
    void pick_seq(std::vector<int>& avail, int want, std::vector<int>& seq, const F& done) {
        if (want == 0) {
            done(seq);
            return;
        }
        for (std::size_t i = 0; i < avail.size(); ++i) {
            int letter = avail[i];
            if (letter < 0) continue;
            avail[i] = -1;
            seq.push_back(letter);
            pick_seq(avail, want - 1, seq, done);
            seq.pop_back();
            avail[i] = letter;
        }
    }

    void finish(const std::vector<std::vector<int>>& groups, int f0, int f1) {
        auto word_of = [](const std::vector<int>& idx) {
            std::vector<int> codes;
            for (int i : idx) codes.push_back(Letter{i, false}.code());
            return Word(std::move(codes));
        };
        std::vector<Word> ws;
        for (std::size_t i = 1; i + 1 < groups.size(); ++i) ws.push_back(word_of(groups[i]));
        // unordered word set: require ascending to avoid duplicates
        for (std::size_t i = 1; i < ws.size(); ++i)
            if (!(ws[i - 1] < ws[i])) return;
        std::vector<int> alpha(ws.size(), 1);
        FreeAlgebraElement core = arrangement_sum(ws, alpha, false);
        FreeAlgebraElement row(k);
        for (const auto& [w, c] : core.terms()) {
            std::vector<int> codes;
            if (f0) codes = word_of(groups.front()).codes();
            codes = concat_codes(codes, w.codes());
            if (f1) codes = concat_codes(codes, word_of(groups.back()).codes());
            row.add(Word(std::move(codes)), c);
        }
        row.make_monic();
        if (seen.insert(element_key(row)).second) out.push_back(std::move(row));
    }
};

} // namespace

std::vector<FreeAlgebraElement> ideal_generators_multilinear(int n, int k_letters) {
    if (k_letters < n) return {};
    MultilinearBuilder b;
    b.n = n;
    b.k = k_letters;
    b.build();
    return std::move(b.out);
}

bool nilpotency_check_multilinear(int n, int k_letters, IdealMode mode) {
    if (mode != IdealMode::plain)
        throw std::invalid_argument("multilinear check implemented for the plain ideal only");
    EchelonBasis basis = echelonize(ideal_generators_multilinear(n, k_letters));
    std::vector<int> perm;
    for (int i = 1; i <= k_letters; ++i) perm.push_back(i);
    std::vector<Word> words;
    do {
        std::vector<int> codes;
        for (int i : perm) codes.push_back(Letter{i, false}.code());
        words.push_back(Word(std::move(codes)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return all_reduce_to_zero(words, basis);
}

} // namespace charvar
