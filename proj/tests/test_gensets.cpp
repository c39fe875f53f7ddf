#include <doctest.h>

#include <set>

#include "charvar/gensets.hpp"

using namespace charvar;

namespace {

std::set<std::string> word_set(const GeneratorSet& gs) {
    std::set<std::string> out;
    for (const Word& w : gs.trace_words()) out.insert(w.render());
    return out;
}

long choose(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

} // namespace

TEST_CASE("sl2 classical counts and contents") {
    GeneratorSet g3 = sl2_generators(3);
    CHECK(g3.generators.size() == 7);
    CHECK(word_set(g3) == std::set<std::string>{"g1", "g2", "g3", "g1 g2", "g1 g3", "g2 g3",
                                                "g1 g2 g3"});
    CHECK(sl2_generators(1).generators.size() == 1);
    CHECK(sl2_generators(3, true).generators.size() == 6); // abelian drops the triple
    for (int rank = 1; rank <= 12; ++rank) {
        CHECK(static_cast<long>(sl2_generators(rank).generators.size()) ==
              rank + choose(rank, 2) + choose(rank, 3));
        CHECK(static_cast<long>(sl2_generators(rank, true).generators.size()) ==
              rank + choose(rank, 2));
    }
    CHECK_THROWS(sl2_generators(0));
}

TEST_CASE("sln raw and pruned sets at n = 2") {
    QuotientCache cache;
    GeneratorSet raw = sln_generators(2, 2, cache);
    CHECK(word_set(raw) ==
          std::set<std::string>{"g1", "g2", "g1 g1", "g1 g2", "g2 g2", "g1 g2 g2"});

    GeneratorSet pruned = sln_generators(2, 2, cache, Prune::sl2_identities);
    CHECK(word_set(pruned) == std::set<std::string>{"g1", "g2", "g1 g2"});

    GeneratorSet rank1 = sln_generators(2, 1, cache);
    CHECK(word_set(rank1) == std::set<std::string>{"g1", "g1 g1"});
    CHECK(word_set(sln_generators(2, 1, cache, Prune::sl2_identities)) ==
          std::set<std::string>{"g1"});

    // pruned sets match the classical ones for every small rank
    for (int rank = 1; rank <= 6; ++rank)
        CHECK(word_set(sln_generators(2, rank, cache, Prune::sl2_identities)) ==
              word_set(sl2_generators(rank)));
}

TEST_CASE("sln regression values at n = 3") {
    QuotientCache cache;
    GeneratorSet g = sln_generators(3, 1, cache);
    CHECK(word_set(g) == std::set<std::string>{"g1", "g1 g1", "g1 g1 g1"});
    GeneratorSet g2 = sln_generators(3, 2, cache);
    CHECK(g2.generators.size() == 18); // regression value, first computed by this pipeline
    CHECK(word_set(g2).count("g1 g1 g2 g1 g2 g2") == 1);
    for (const Word& w : g2.trace_words()) CHECK(w.degree() <= nu_bound(3).nu);
}

TEST_CASE("gln adds inverted determinants") {
    QuotientCache cache;
    GeneratorSet g = gln_generators(2, 1, cache, Prune::sl2_identities);
    CHECK(g.generators.size() == 2);
    CHECK(g.count(Generator::Kind::trace) == 1);
    CHECK(g.count(Generator::Kind::det_inverse) == 1);
    CHECK(g.group == Group::gl);

    GeneratorSet g3 = gln_generators(3, 1, cache);
    CHECK(g3.count(Generator::Kind::trace) == 3);
    CHECK(g3.count(Generator::Kind::det_inverse) == 1);
}

TEST_CASE("sp generator sets") {
    QuotientCache cache;
    CHECK_THROWS(sp_generators(3, 1, cache));

    GeneratorSet sp21 = sp_generators(2, 1, cache);
    CHECK(word_set(sp21) == std::set<std::string>{"g1", "g1 g1"});

    // Sp(2) = SL(2): the symmetric-mode pipeline reproduces the sl word set
    GeneratorSet sp22 = sp_generators(2, 2, cache);
    CHECK(word_set(sp22) == word_set(sln_generators(2, 2, cache)));

    GeneratorSet sp41 = sp_generators(4, 1, cache);
    CHECK(sp41.generators.size() == 10); // regression value
    for (const Word& w : sp41.trace_words()) CHECK(w.degree() <= nu_bound(4).nu);
}

TEST_CASE("star dedup keeps one word per class") {
    QuotientCache cache;
    GeneratorSet sp41 = sp_generators(4, 1, cache);
    std::set<std::string> canon;
    for (const Word& w : sp41.trace_words()) {
        Word a = cyclic_normal_form(w).representative;
        Word b = cyclic_normal_form(star(w)).representative;
        Word best = b < a ? b : a;
        CHECK(canon.insert(best.render()).second);
    }
}

TEST_CASE("cyclic dedup soundness") {
    QuotientCache cache;
    for (const GeneratorSet& gs :
         {sln_generators(2, 3, cache), sln_generators(3, 2, cache), sp_generators(2, 2, cache)}) {
        std::vector<Word> words = gs.trace_words();
        for (std::size_t i = 0; i < words.size(); ++i)
            for (std::size_t j = i + 1; j < words.size(); ++j) {
                CHECK(cyclic_normal_form(words[i]).representative !=
                      cyclic_normal_form(words[j]).representative);
            }
    }
}

TEST_CASE("build_M star rule and span guarantee") {
    {
        std::vector<Word> M = build_M({Word::parse("g1"), Word::parse("g1*")});
        REQUIRE(M.size() == 1);
        CHECK(M.front() == Word::parse("g1"));
    }
    {
        // this B is not star-closed: the star-count subset alone does not
        // span, the augmentation must pull in the third word
        std::vector<Word> B{Word::parse("g1 g2*"), Word::parse("g1* g2*"), Word::parse("g1 g2")};
        std::vector<Word> M = build_M(B);
        CHECK(M.size() == 3);

        std::vector<FreeAlgebraElement> rows;
        for (const Word& w : M) {
            FreeAlgebraElement e(w.degree());
            e.add(w, Rat(1));
            e.add(star(w), Rat(-1));
            if (!e.is_zero()) rows.push_back(std::move(e));
        }
        EchelonBasis basis = echelonize(rows);
        for (const Word& w : B) {
            FreeAlgebraElement e(w.degree());
            e.add(w, Rat(1));
            e.add(star(w), Rat(-1));
            CHECK(reduce(e, basis).is_zero());
        }
    }
    {
        // star-closed B: the rule alone spans, nothing is added
        std::vector<Word> B = enumerate_words(2, 2, true);
        std::vector<Word> M = build_M(B);
        for (const Word& w : M) CHECK(2 * w.star_count() <= w.degree());
        std::vector<FreeAlgebraElement> rows;
        for (const Word& w : M) {
            FreeAlgebraElement e(w.degree());
            e.add(w, Rat(1));
            e.add(star(w), Rat(-1));
            if (!e.is_zero()) rows.push_back(std::move(e));
        }
        std::map<int, std::vector<FreeAlgebraElement>> by_degree;
        for (auto& rw : rows) by_degree[rw.degree()].push_back(rw);
        for (const Word& w : B) {
            FreeAlgebraElement e(w.degree());
            e.add(w, Rat(1));
            e.add(star(w), Rat(-1));
            if (e.is_zero()) continue;
            CHECK(reduce(e, echelonize(by_degree[w.degree()])).is_zero());
        }
    }
}

TEST_CASE("so generators") {
    QuotientCache cache;
    GeneratorSet so32 = so_generators(Group::so_odd, 3, 2, cache);
    CHECK(word_set(so32) == word_set(sln_generators(3, 2, cache)));
    CHECK(so32.group == Group::so_odd);
    CHECK(so32.count(Generator::Kind::q_tuple) == 0);

    GeneratorSet o22 = so_generators(Group::o, 2, 2, cache);
    CHECK(word_set(o22) == word_set(sln_generators(2, 2, cache)));

    CHECK_THROWS(so_generators(Group::so_odd, 4, 1, cache));
    CHECK_THROWS(so_generators(Group::so_even, 3, 1, cache));

    GeneratorSet so21 = so_generators(Group::so_even, 2, 1, cache);
    CHECK(so21.count(Generator::Kind::trace) == 2);
    CHECK(so21.count(Generator::Kind::q_tuple) == 4); // M = {g1, g1 g1, g1 g1*, g1* g1}
    for (const Generator& g : so21.generators)
        if (g.kind == Generator::Kind::q_tuple) {
            CHECK(g.words.size() == 1);
            CHECK(g.words.front().degree() <= nu_bound(2).nu - 1);
        }

    // q tuples for n = 4 are unordered pairs from M
    GeneratorSet so41 = so_generators(Group::so_even, 4, 1, cache);
    std::size_t m_size = 560; // words over {g1, g1*} of length <= 9, star rule
    CHECK(so41.count(Generator::Kind::q_tuple) == m_size * (m_size + 1) / 2);
    std::set<std::vector<std::string>> seen;
    std::size_t checked = 0;
    for (const Generator& g : so41.generators) {
        if (g.kind != Generator::Kind::q_tuple) continue;
        REQUIRE(g.words.size() == 2);
        CHECK(!(g.words[1] < g.words[0])); // sorted multiset
        if (++checked > 500) break;        // spot check
    }
}

TEST_CASE("ordered q tuples flag") {
    QuotientCache cache;
    GeneratorSet multi = so_generators(Group::so_even, 2, 1, cache);
    GeneratorSet ordered = so_generators(Group::so_even, 2, 1, cache, Prune::none, true);
    // n = 2 tuples are singletons, so the two agree there
    CHECK(multi.count(Generator::Kind::q_tuple) == ordered.count(Generator::Kind::q_tuple));
}

TEST_CASE("lift_generators") {
    {
        std::vector<Word> lifted = lift_generators({Word::parse("g1 g2")}, 3);
        REQUIRE(lifted.size() == 3);
        CHECK(lifted[0] == Word::parse("g1 g2"));
        CHECK(lifted[1] == Word::parse("g1 g3"));
        CHECK(lifted[2] == Word::parse("g2 g3"));
    }
    {
        std::vector<Word> lifted = lift_generators({Word::single(1)}, 5);
        CHECK(lifted.size() == 5);
    }
    {
        // identity case on a pattern-closed set returns the set itself
        std::vector<Word> B{Word::parse("g1"), Word::parse("g2"), Word::parse("g1 g2"),
                            Word::parse("g1 g1"), Word::parse("g2 g2")};
        std::vector<Word> lifted = lift_generators(B, 2);
        CHECK(std::set<Word>(lifted.begin(), lifted.end()) == std::set<Word>(B.begin(), B.end()));
    }
    CHECK_THROWS(lift_generators({Word::parse("g1 g2 g3")}, 2));
    CHECK_THROWS(lift_generators({Word::parse("g1*")}, 2));
}

TEST_CASE("lifted sln assembly agrees with the direct computation") {
    QuotientCache cache;
    for (int rank : {2, 3, 5}) {
        CHECK(word_set(sln_generators_lifted(2, rank, cache)) ==
              word_set(sln_generators(2, rank, cache)));
        CHECK(word_set(sln_generators_lifted(2, rank, cache, Prune::sl2_identities)) ==
              word_set(sln_generators(2, rank, cache, Prune::sl2_identities)));
    }
    // below the base rank it falls back to the direct computation
    CHECK(word_set(sln_generators_lifted(2, 1, cache)) ==
          word_set(sln_generators(2, 1, cache)));
}

TEST_CASE("generator set degree bounds") {
    QuotientCache cache;
    for (int rank : {1, 2, 3}) {
        GeneratorSet gs = sln_generators(2, rank, cache);
        for (const Word& w : gs.trace_words()) CHECK(w.degree() <= nu_bound(2).nu);
    }
}

TEST_CASE("json schema") {
    QuotientCache cache;
    GeneratorSet gs = so_generators(Group::so_even, 2, 1, cache);
    nlohmann::ordered_json j = to_json(gs);
    CHECK(j["group"] == "so_even");
    CHECK(j["n"] == 2);
    CHECK(j["rank"] == 1);
    REQUIRE(j["generators"].is_array());
    CHECK(j["generators"][0] ==
          nlohmann::ordered_json({{"kind", "trace"}, {"word", "g1"}}));
    bool has_q = false;
    for (const auto& e : j["generators"])
        if (e["kind"] == "q") {
            has_q = true;
            CHECK(e.contains("words"));
        }
    CHECK(has_q);

    GeneratorSet gl = gln_generators(2, 1, cache, Prune::sl2_identities);
    nlohmann::ordered_json jg = to_json(gl);
    CHECK(jg["generators"][1] ==
          nlohmann::ordered_json({{"kind", "det_inverse"}, {"index", 1}}));

    std::string text = to_text(gl);
    CHECK(text == "trace g1\ndet_inverse 1\n");
}

TEST_CASE("degenerate inputs are rejected") {
    QuotientCache cache;
    CHECK_THROWS(sln_generators(2, 0, cache));
    CHECK_THROWS(sln_generators(1, 2, cache));
    CHECK_THROWS(sp_generators(2, 0, cache));
}
