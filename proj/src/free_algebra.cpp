#include "charvar/free_algebra.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace charvar {

FreeAlgebraElement::FreeAlgebraElement(int degree) : degree_(degree) {
    if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
}

FreeAlgebraElement FreeAlgebraElement::monomial(const Word& w, Rat coeff) {
    FreeAlgebraElement e(w.degree());
    e.add(w, coeff);
    return e;
}

void FreeAlgebraElement::add(const Word& w, const Rat& c) {
    if (c == 0) return;
    if (w.degree() != degree_) throw std::invalid_argument("word degree does not match element degree");
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat FreeAlgebraElement::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rat(0) : it->second;
}

FreeAlgebraElement& FreeAlgebraElement::operator+=(const FreeAlgebraElement& o) {
    if (o.degree_ != degree_) throw std::invalid_argument("degree mismatch");
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

FreeAlgebraElement& FreeAlgebraElement::operator-=(const FreeAlgebraElement& o) {
    if (o.degree_ != degree_) throw std::invalid_argument("degree mismatch");
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

FreeAlgebraElement& FreeAlgebraElement::scale(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

void FreeAlgebraElement::subtract_scaled(const Rat& c, const FreeAlgebraElement& o) {
    if (c == 0) return;
    for (const auto& [w, v] : o.terms_) add(w, -c * v);
}

const Word* FreeAlgebraElement::leading_word() const {
    if (terms_.empty()) return nullptr;
    return &terms_.rbegin()->first;
}

Rat FreeAlgebraElement::leading_coeff() const {
    if (terms_.empty()) return Rat(0);
    return terms_.rbegin()->second;
}

void FreeAlgebraElement::make_monic() {
    if (terms_.empty()) return;
    Rat lead = leading_coeff();
    if (lead == 1) return;
    for (auto& [w, v] : terms_) v /= lead;
}

std::string FreeAlgebraElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
        if (!out.empty()) out += " + ";
        if (c != 1) out += c.get_str() + "*";
        out += "(" + w.render() + ")";
    }
    return out;
}

EchelonBasis::EchelonBasis(int degree) : degree_(degree) {}

EchelonBasis::EchelonBasis(int degree, std::vector<FreeAlgebraElement> rref_rows)
    : degree_(degree), rows_(std::move(rref_rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Word* lw = rows_[i].leading_word();
        if (!lw) throw std::invalid_argument("zero row in echelon basis");
        pivot_.emplace(*lw, i);
    }
}

const FreeAlgebraElement& EchelonBasis::row_for(const Word& pivot) const {
    return rows_.at(pivot_.at(pivot));
}

std::vector<Word> EchelonBasis::leading_words() const {
    std::vector<Word> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(*r.leading_word());
    return out;
}

FreeAlgebraElement reduce(const FreeAlgebraElement& e, const EchelonBasis& basis) {
    if (basis.rank() == 0) return e;
    if (e.degree() != basis.degree()) throw std::invalid_argument("degree mismatch in reduce");
    FreeAlgebraElement r = e;
    // RREF rows have all tail words below their pivot and pivot-free, so a
    // descending sweep over the support terminates.
    for (;;) {
        const Word* target = nullptr;
        for (auto it = r.terms().rbegin(); it != r.terms().rend(); ++it) {
            if (basis.is_pivot(it->first)) {
                target = &it->first;
                break;
            }
        }
        if (!target) return r;
        Word w = *target;
        Rat c = r.coeff(w);
        r.subtract_scaled(c, basis.row_for(w));
    }
}

namespace {

// Internal dense-column view: all distinct words of the input are mapped to
// ints so the elimination works on sorted (column, coeff) vectors instead of
// word maps.
struct RowVec {
    std::vector<std::pair<int, Rat>> t; // ascending by column

    bool zero() const { return t.empty(); }
    int lead() const { return t.back().first; }
    Rat& lead_coeff() { return t.back().second; }
};

RowVec axpy(const RowVec& a, const Rat& c, const RowVec& b) {
    // a - c*b, merged
    RowVec out;
    out.t.reserve(a.t.size() + b.t.size());
    std::size_t i = 0, j = 0;
    while (i < a.t.size() || j < b.t.size()) {
        if (j == b.t.size() || (i < a.t.size() && a.t[i].first < b.t[j].first)) {
            out.t.push_back(a.t[i++]);
        } else if (i == a.t.size() || b.t[j].first < a.t[i].first) {
            out.t.emplace_back(b.t[j].first, -c * b.t[j].second);
            ++j;
        } else {
            Rat v = a.t[i].second - c * b.t[j].second;
            if (v != 0) out.t.emplace_back(a.t[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

struct Eliminator {
    std::vector<RowVec> pivot_rows;   // indexed by insertion
    std::vector<int> pivot_of_col;    // column -> pivot row index (-1 none)

    explicit Eliminator(int ncols) : pivot_of_col(ncols, -1) {}

    // Eliminate every pivot column below `ceiling` from r. Subtracting the
    // row for column `hit` removes that column and touches only columns
    // below it, so a single descending sweep suffices.
    void reduce_below(RowVec& r, int ceiling) const {
        for (;;) {
            int hit = -1;
            Rat c;
            auto end = std::lower_bound(
                r.t.begin(), r.t.end(), ceiling,
                [](const std::pair<int, Rat>& term, int v) { return term.first < v; });
            for (auto it = end; it != r.t.begin();) {
                --it;
                if (pivot_of_col[it->first] >= 0) {
                    hit = it->first;
                    c = it->second;
                    break;
                }
            }
            if (hit < 0) return;
            r = axpy(r, c, pivot_rows[pivot_of_col[hit]]);
            ceiling = hit;
        }
    }

    void reduce_full(RowVec& r) const { reduce_below(r, std::numeric_limits<int>::max()); }

    void insert(RowVec r) {
        Rat lead = r.lead_coeff();
        if (lead != 1)
            for (auto& [col, v] : r.t) v /= lead;
        pivot_of_col[r.lead()] = static_cast<int>(pivot_rows.size());
        pivot_rows.push_back(std::move(r));
    }

    // Back-substitute so every pivot column appears in exactly one row.
    void finalize() {
        std::vector<int> order;
        for (std::size_t i = 0; i < pivot_rows.size(); ++i) order.push_back(static_cast<int>(i));
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return pivot_rows[a].lead() > pivot_rows[b].lead(); });
        for (int id : order) {
            RowVec r = std::move(pivot_rows[id]);
            reduce_below(r, r.lead()); // own pivot is the lead, skip it
            pivot_rows[id] = std::move(r);
        }
    }
};

struct ColumnDict {
    std::vector<Word> words; // ascending
    std::unordered_map<Word, int, WordHash> index;
};

ColumnDict build_dict(const std::vector<FreeAlgebraElement>& gens) {
    ColumnDict d;
    for (const auto& g : gens)
        for (const auto& [w, c] : g.terms()) d.words.push_back(w);
    std::sort(d.words.begin(), d.words.end());
    d.words.erase(std::unique(d.words.begin(), d.words.end()), d.words.end());
    for (std::size_t i = 0; i < d.words.size(); ++i) d.index.emplace(d.words[i], static_cast<int>(i));
    return d;
}

RowVec to_row(const FreeAlgebraElement& e, const ColumnDict& dict) {
    RowVec r;
    r.t.reserve(e.support_size());
    for (const auto& [w, c] : e.terms()) r.t.emplace_back(dict.index.at(w), c);
    return r;
}

EchelonBasis assemble(Eliminator& elim, const ColumnDict& dict, int degree) {
    elim.finalize();
    std::vector<int> order;
    for (std::size_t i = 0; i < elim.pivot_rows.size(); ++i) order.push_back(static_cast<int>(i));
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return elim.pivot_rows[a].lead() < elim.pivot_rows[b].lead(); });
    std::vector<FreeAlgebraElement> rows;
    rows.reserve(order.size());
    for (int id : order) {
        FreeAlgebraElement e(degree);
        for (const auto& [col, v] : elim.pivot_rows[id].t) e.add(dict.words[col], v);
        rows.push_back(std::move(e));
    }
    return EchelonBasis(degree, std::move(rows));
}

int common_degree(const std::vector<FreeAlgebraElement>& gens) {
    int degree = -1;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (degree < 0)
            degree = g.degree();
        else if (g.degree() != degree)
            throw std::invalid_argument("echelonize: inputs of mixed degree");
    }
    return degree;
}

} // namespace

EchelonBasis echelonize_serial(const std::vector<FreeAlgebraElement>& generators) {
    int degree = common_degree(generators);
    if (degree < 0) return EchelonBasis(0);
    ColumnDict dict = build_dict(generators);
    Eliminator elim(static_cast<int>(dict.words.size()));
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        RowVec r = to_row(g, dict);
        elim.reduce_full(r);
        if (!r.zero()) elim.insert(std::move(r));
    }
    return assemble(elim, dict, degree);
}

EchelonBasis echelonize(const std::vector<FreeAlgebraElement>& generators) {
#ifndef _OPENMP
    return echelonize_serial(generators);
#else
    // below one chunk the round scheme degenerates to serial plus overhead
    if (generators.size() < 1024) return echelonize_serial(generators);
    int degree = common_degree(generators);
    if (degree < 0) return EchelonBasis(0);
    ColumnDict dict = build_dict(generators);
    Eliminator elim(static_cast<int>(dict.words.size()));

    std::vector<RowVec> pending;
    pending.reserve(generators.size());
    for (const auto& g : generators)
        if (!g.is_zero()) pending.push_back(to_row(g, dict));

    // Chunked rounds: reduce a block of rows in parallel against the frozen
    // pivot set, then merge survivors serially. The final RREF is canonical,
    // so the chunking does not affect the result.
    const std::size_t chunk = 512;
    std::size_t done = 0;
    while (done < pending.size()) {
        std::size_t hi = std::min(done + chunk, pending.size());
        const long lo_l = static_cast<long>(done), hi_l = static_cast<long>(hi);
#pragma omp parallel for schedule(dynamic, 8)
        for (long i = lo_l; i < hi_l; ++i) {
            elim.reduce_full(pending[static_cast<std::size_t>(i)]);
        }
        for (std::size_t i = done; i < hi; ++i) {
            RowVec& r = pending[i];
            if (r.zero()) continue;
            elim.reduce_full(r); // catch pivots added during this merge
            if (!r.zero()) elim.insert(std::move(r));
        }
        done = hi;
    }
    return assemble(elim, dict, degree);
#endif
}

} // namespace charvar
