#include "charvar/gensets.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace charvar {

Generator Generator::trace(Word w) {
    Generator g;
    g.kind = Kind::trace;
    g.words.push_back(std::move(w));
    return g;
}

Generator Generator::q_tuple(std::vector<Word> ws) {
    Generator g;
    g.kind = Kind::q_tuple;
    std::sort(ws.begin(), ws.end());
    g.words = std::move(ws);
    return g;
}

Generator Generator::det_inverse(int index) {
    Generator g;
    g.kind = Kind::det_inverse;
    g.index = index;
    return g;
}

std::vector<Word> GeneratorSet::trace_words() const {
    std::vector<Word> out;
    for (const Generator& g : generators)
        if (g.kind == Generator::Kind::trace) out.push_back(g.words.front());
    return out;
}

std::size_t GeneratorSet::count(Generator::Kind k) const {
    std::size_t c = 0;
    for (const Generator& g : generators) c += g.kind == k;
    return c;
}

namespace {

Word cyclic_canon(const Word& w, bool up_to_star) {
    Word best = cyclic_normal_form(w).representative;
    if (up_to_star) {
        Word s = cyclic_normal_form(star(w)).representative;
        if (s < best) best = s;
    }
    return best;
}

bool prune_sl2_word(const Word& w) {
    // tau_{g^2} = tau_g^2 - 2 drops squares; tau_{a b^2} = tau_b tau_{ab} - tau_a
    // drops the repeated-tail triples of the raw construction
    const auto& c = w.codes();
    if (c.size() == 2 && c[0] == c[1]) return true;
    if (c.size() == 3 && c[1] == c[2] && c[0] < c[1]) return true;
    return false;
}

// Quotient-basis words over r letters, all degrees until the component
// fills up. Throws if nothing is full by nu_n (cannot certify finiteness).
std::vector<Word> d_component_words(int n, int r, bool with_stars, IdealMode mode,
                                    QuotientCache& cache) {
    const int nu = nu_bound(n).nu;
    std::vector<Word> out;
    for (int d = 1;; ++d) {
        if (d > nu)
            throw std::runtime_error("quotient components not exhausted by nu_" +
                                     std::to_string(n) + " = " + std::to_string(nu));
        const std::vector<Word>& layer = cache.get(n, Alphabet{r, with_stars, 0}, d, mode);
        if (layer.empty()) break;
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::vector<Word> assemble_b_words(int rank, const std::vector<std::vector<Word>>& d_r,
                                   bool up_to_star, Prune prune) {
    std::set<Word> reps;
    for (int r = 1; r <= rank; ++r) {
        reps.insert(Word::single(r));
        Word sr = Word::single(r);
        for (const Word& w : d_r[static_cast<std::size_t>(r) - 1])
            reps.insert(cyclic_canon(concat(w, sr), up_to_star));
    }
    std::vector<Word> out;
    for (const Word& w : reps) {
        if (prune == Prune::sl2_identities && prune_sl2_word(w)) continue;
        out.push_back(w);
    }
    return out;
}

GeneratorSet traces_only(Group g, int n, int rank, std::vector<Word> words) {
    GeneratorSet gs;
    gs.group = g;
    gs.n = n;
    gs.rank = rank;
    for (Word& w : words) gs.generators.push_back(Generator::trace(std::move(w)));
    return gs;
}

void check_basic(int n, int rank) {
    if (n < 2) throw std::invalid_argument("matrix size must be >= 2");
    if (rank < 1) throw std::invalid_argument("free-group rank must be >= 1");
}

} // namespace

GeneratorSet sln_generators(int n, int rank, QuotientCache& cache, Prune prune) {
    check_basic(n, rank);
    std::vector<std::vector<Word>> d_r;
    for (int r = 1; r <= rank; ++r)
        d_r.push_back(d_component_words(n, r, false, IdealMode::plain, cache));
    return traces_only(Group::sl, n, rank, assemble_b_words(rank, d_r, false, prune));
}

GeneratorSet sl2_generators(int rank, bool abelian) {
    if (rank < 1) throw std::invalid_argument("free-group rank must be >= 1");
    GeneratorSet gs;
    gs.group = Group::sl;
    gs.n = 2;
    gs.rank = rank;
    for (int i = 1; i <= rank; ++i) gs.generators.push_back(Generator::trace(Word::single(i)));
    for (int i = 1; i <= rank; ++i)
        for (int j = i + 1; j <= rank; ++j)
            gs.generators.push_back(Generator::trace(concat(Word::single(i), Word::single(j))));
    if (!abelian)
        for (int i = 1; i <= rank; ++i)
            for (int j = i + 1; j <= rank; ++j)
                for (int k = j + 1; k <= rank; ++k)
                    gs.generators.push_back(Generator::trace(
                        concat(concat(Word::single(i), Word::single(j)), Word::single(k))));
    return gs;
}

GeneratorSet gln_generators(int n, int rank, QuotientCache& cache, Prune prune) {
    GeneratorSet gs = sln_generators(n, rank, cache, prune);
    gs.group = Group::gl;
    for (int i = 1; i <= rank; ++i) gs.generators.push_back(Generator::det_inverse(i));
    return gs;
}

GeneratorSet sp_generators(int n, int rank, QuotientCache& cache) {
    check_basic(n, rank);
    if (n % 2) throw std::invalid_argument("sp needs even n");
    std::vector<std::vector<Word>> d_r;
    for (int r = 1; r <= rank; ++r)
        d_r.push_back(d_component_words(n, r, true, IdealMode::symmetric, cache));
    return traces_only(Group::sp, n, rank, assemble_b_words(rank, d_r, true, Prune::none));
}

std::vector<Word> build_M(const std::vector<Word>& B) {
    std::vector<Word> sorted = B;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    auto rule = [](const Word& w) { return 2 * w.star_count() <= w.degree(); };

    std::vector<Word> M;
    std::map<int, std::vector<FreeAlgebraElement>> rows_by_degree;
    std::map<int, EchelonBasis> basis_by_degree;

    auto antisym = [](const Word& w) {
        FreeAlgebraElement e(w.degree());
        e.add(w, Rat(1));
        e.add(star(w), Rat(-1));
        return e;
    };
    auto insert = [&](const Word& w) {
        M.push_back(w);
        FreeAlgebraElement e = antisym(w);
        if (e.is_zero()) return;
        auto& rows = rows_by_degree[w.degree()];
        rows.push_back(std::move(e));
        basis_by_degree.insert_or_assign(w.degree(), echelonize(rows));
    };

    for (const Word& w : sorted)
        if (rule(w)) insert(w);
    // augment until {w - w* : w in M} spans the antisymmetric part of span(B)
    for (const Word& w : sorted) {
        if (rule(w)) continue;
        FreeAlgebraElement e = antisym(w);
        if (e.is_zero()) continue;
        auto it = basis_by_degree.find(w.degree());
        if (it != basis_by_degree.end()) e = reduce(e, it->second);
        if (!e.is_zero()) insert(w);
    }
    std::sort(M.begin(), M.end());
    return M;
}

namespace {

void multisets_rec(const std::vector<Word>& M, int size, std::size_t from, std::vector<Word>& cur,
                   std::vector<std::vector<Word>>& out) {
    if (size == 0) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < M.size(); ++i) {
        cur.push_back(M[i]);
        multisets_rec(M, size - 1, i, cur, out);
        cur.pop_back();
    }
}

void ordered_tuples_rec(const std::vector<Word>& M, int size, std::vector<Word>& cur,
                        std::vector<std::vector<Word>>& out) {
    if (size == 0) {
        out.push_back(cur);
        return;
    }
    for (const Word& w : M) {
        cur.push_back(w);
        ordered_tuples_rec(M, size - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

GeneratorSet so_generators(Group g, int n, int rank, QuotientCache& cache, Prune prune,
                           bool ordered_q) {
    check_basic(n, rank);
    if (g == Group::o || g == Group::so_odd) {
        if (g == Group::so_odd && n % 2 == 0) throw std::invalid_argument("so_odd needs odd n");
        GeneratorSet gs = sln_generators(n, rank, cache, prune);
        gs.group = g;
        return gs;
    }
    if (g != Group::so_even) throw std::invalid_argument("so_generators: bad group");
    if (n % 2) throw std::invalid_argument("so_even needs even n");

    GeneratorSet gs = sln_generators(n, rank, cache, prune);
    gs.group = Group::so_even;

    const int nu = nu_bound(n).nu;
    std::vector<Word> all = enumerate_words(rank, nu - 1, true);
    std::vector<Word> M = build_M(all);

    std::vector<std::vector<Word>> tuples;
    std::vector<Word> cur;
    if (ordered_q) {
        ordered_tuples_rec(M, n / 2, cur, tuples);
        for (auto& t : tuples) {
            Generator q;
            q.kind = Generator::Kind::q_tuple;
            q.words = std::move(t); // keep the stated order
            gs.generators.push_back(std::move(q));
        }
    } else {
        multisets_rec(M, n / 2, 0, cur, tuples);
        for (auto& t : tuples) gs.generators.push_back(Generator::q_tuple(std::move(t)));
    }
    return gs;
}

std::vector<Word> lift_generators(const std::vector<Word>& B, int target_rank) {
    if (target_rank < 1) throw std::invalid_argument("target rank must be >= 1");
    for (const Word& w : B) {
        if (w.has_star()) throw std::invalid_argument("lift_generators expects star-free words");
        if (static_cast<int>(w.index_pattern().size()) > target_rank)
            throw std::invalid_argument("target rank below the letter pattern of " + w.render());
    }
    std::set<Word> out;
    for (const Word& w : B) {
        std::vector<int> pattern = w.index_pattern();
        const int m = static_cast<int>(pattern.size());
        // strictly increasing images of the pattern in {1..target_rank}
        std::vector<int> image(m);
        for (int i = 0; i < m; ++i) image[i] = i + 1;
        for (;;) {
            std::map<int, int> remap;
            for (int i = 0; i < m; ++i) remap[pattern[static_cast<std::size_t>(i)]] = image[i];
            std::vector<int> codes;
            for (const Letter& l : w.letters())
                codes.push_back(Letter{remap[l.index], false}.code());
            out.insert(Word(std::move(codes)));
            int pos = m - 1;
            while (pos >= 0 && image[pos] == target_rank - (m - 1 - pos)) --pos;
            if (pos < 0) break;
            ++image[pos];
            for (int i = pos + 1; i < m; ++i) image[i] = image[i - 1] + 1;
        }
    }
    return std::vector<Word>(out.begin(), out.end());
}

GeneratorSet sln_generators_lifted(int n, int rank, QuotientCache& cache, Prune prune) {
    check_basic(n, rank);
    const int base_rank = nu_bound(n).nu - 1;
    if (rank < base_rank) return sln_generators(n, rank, cache, prune);
    std::vector<Word> d_base = d_component_words(n, base_rank, false, IdealMode::plain, cache);
    std::vector<Word> d_lifted = lift_generators(d_base, rank);
    std::vector<std::vector<Word>> d_r(static_cast<std::size_t>(rank));
    for (const Word& w : d_lifted)
        for (int r = w.max_index(); r <= rank; ++r)
            d_r[static_cast<std::size_t>(r) - 1].push_back(w);
    return traces_only(Group::sl, n, rank, assemble_b_words(rank, d_r, false, prune));
}

nlohmann::ordered_json to_json(const GeneratorSet& gs) {
    nlohmann::ordered_json j;
    j["group"] = group_name(gs.group);
    j["n"] = gs.n;
    j["rank"] = gs.rank;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Generator& g : gs.generators) {
        nlohmann::ordered_json e;
        switch (g.kind) {
            case Generator::Kind::trace:
                e["kind"] = "trace";
                e["word"] = g.words.front().render();
                break;
            case Generator::Kind::q_tuple: {
                e["kind"] = "q";
                nlohmann::ordered_json ws = nlohmann::ordered_json::array();
                for (const Word& w : g.words) ws.push_back(w.render());
                e["words"] = std::move(ws);
                break;
            }
            case Generator::Kind::det_inverse:
                e["kind"] = "det_inverse";
                e["index"] = g.index;
                break;
        }
        arr.push_back(std::move(e));
    }
    j["generators"] = std::move(arr);
    return j;
}

std::string to_text(const GeneratorSet& gs) {
    std::string out;
    for (const Generator& g : gs.generators) {
        switch (g.kind) {
            case Generator::Kind::trace:
                out += "trace " + g.words.front().render();
                break;
            case Generator::Kind::q_tuple: {
                out += "q ";
                for (std::size_t i = 0; i < g.words.size(); ++i) {
                    if (i) out += " ; ";
                    out += g.words[i].render();
                }
                break;
            }
            case Generator::Kind::det_inverse:
                out += "det_inverse " + std::to_string(g.index);
                break;
        }
        out += '\n';
    }
    return out;
}

} // namespace charvar
