#include "charvar/sl2_rewrite.hpp"

#include <algorithm>
#include <stdexcept>

namespace charvar {

TracePolynomial TracePolynomial::constant(const Rat& c) {
    TracePolynomial p;
    p.add_term({}, c);
    return p;
}

TracePolynomial TracePolynomial::variable(int var) {
    TracePolynomial p;
    p.add_term({{var, 1}}, Rat(1));
    return p;
}

void TracePolynomial::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TracePolynomial& TracePolynomial::operator+=(const TracePolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

TracePolynomial& TracePolynomial::operator-=(const TracePolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

TracePolynomial operator*(const TracePolynomial& a, const TracePolynomial& b) {
    TracePolynomial out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            TracePolynomial::Monomial m;
            std::size_t i = 0, j = 0;
            while (i < ma.size() || j < mb.size()) {
                if (j == mb.size() || (i < ma.size() && ma[i].first < mb[j].first))
                    m.push_back(ma[i++]);
                else if (i == ma.size() || mb[j].first < ma[i].first)
                    m.push_back(mb[j++]);
                else {
                    m.emplace_back(ma[i].first, ma[i].second + mb[j].second);
                    ++i;
                    ++j;
                }
            }
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

GaussianRational TracePolynomial::eval(const std::map<int, GaussianRational>& values) const {
    GaussianRational acc;
    for (const auto& [m, c] : terms_) {
        GaussianRational t{c, Rat(0)};
        for (const auto& [var, exp] : m) {
            auto it = values.find(var);
            if (it == values.end()) throw std::invalid_argument("missing generator value");
            for (int e = 0; e < exp; ++e) t *= it->second;
        }
        acc += t;
    }
    return acc;
}

std::string TracePolynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += c.get_str();
        for (const auto& [var, exp] : m) {
            out += "*t" + std::to_string(var);
            if (exp > 1) out += "^" + std::to_string(exp);
        }
    }
    return out;
}

int trace_var(std::vector<int> idx) {
    std::sort(idx.begin(), idx.end());
    int v = 0;
    for (int i : idx) v = v * 10 + i;
    return v;
}

namespace {

// free reduction, cyclic at the seam
void cyclic_free_reduce(std::vector<int>& w) {
    bool changed = true;
    while (changed && !w.empty()) {
        changed = false;
        std::vector<int> out;
        out.reserve(w.size());
        for (int a : w) {
            if (!out.empty() && out.back() == -a) {
                out.pop_back();
                changed = true;
            } else {
                out.push_back(a);
            }
        }
        while (out.size() >= 2 && out.front() == -out.back()) {
            out.erase(out.begin());
            out.pop_back();
            changed = true;
        }
        w = std::move(out);
    }
}

std::vector<int> inverse_of(const std::vector<int>& w) {
    std::vector<int> out(w.rbegin(), w.rend());
    for (int& a : out) a = -a;
    return out;
}

std::vector<int> rotate_to(const std::vector<int>& w, std::size_t k) {
    std::vector<int> out(w.begin() + static_cast<long>(k), w.end());
    out.insert(out.end(), w.begin(), w.begin() + static_cast<long>(k));
    return out;
}

// key: least rotation of w and of w^{-1} (tr is cyclic and tr(U)=tr(U^{-1}))
std::vector<int> canonical_key(const std::vector<int>& w) {
    std::vector<int> best = w;
    for (std::size_t k = 0; k < w.size(); ++k) {
        std::vector<int> r = rotate_to(w, k);
        if (r < best) best = r;
    }
    std::vector<int> inv = inverse_of(w);
    for (std::size_t k = 0; k < w.size(); ++k) {
        std::vector<int> r = rotate_to(inv, k);
        if (r < best) best = r;
    }
    return best;
}

} // namespace

TracePolynomial Sl2TraceRewriter::rewrite(const Word& w) {
    std::vector<int> signed_word;
    for (const Letter& l : w.letters()) {
        if (l.index > 3) throw std::invalid_argument("rewriting supports rank <= 3");
        signed_word.push_back(l.starred ? -l.index : l.index);
    }
    return rewrite_signed(std::move(signed_word));
}

TracePolynomial Sl2TraceRewriter::rewrite_signed(std::vector<int> w) {
    cyclic_free_reduce(w);
    if (w.empty()) return TracePolynomial::constant(Rat(2)); // tr(I)

    const std::vector<int> key = canonical_key(w);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // Deterministic working representative: the side (word or inverse) with
    // fewer negative letters, then its least rotation. Working on the
    // fewer-negatives side makes the inverse-elimination recursion strictly
    // decrease (length, negative count).
    auto least_rotation = [](const std::vector<int>& v) {
        std::vector<int> best = v;
        for (std::size_t k = 1; k < v.size(); ++k) {
            std::vector<int> r = rotate_to(v, k);
            if (r < best) best = r;
        }
        return best;
    };
    {
        std::vector<int> side_a = least_rotation(key);
        std::vector<int> side_b = least_rotation(inverse_of(key));
        auto negs = [](const std::vector<int>& v) {
            return std::count_if(v.begin(), v.end(), [](int a) { return a < 0; });
        };
        auto na = negs(side_a), nb = negs(side_b);
        w = (nb < na || (nb == na && side_b < side_a)) ? std::move(side_b) : std::move(side_a);
    }

    TracePolynomial result;
    const std::size_t len = w.size();
    const bool all_pos = std::all_of(w.begin(), w.end(), [](int a) { return a > 0; });

    if (len == 1) {
        result = TracePolynomial::variable(trace_var({std::abs(w[0])}));
    } else if (!all_pos) {
        // tr(U a^{-1}) = tr(a) tr(U) - tr(U a), with the first inverse
        // letter rotated to the back; each branch loses one negative
        auto neg = std::find_if(w.begin(), w.end(), [](int a) { return a < 0; });
        std::vector<int> rot = rotate_to(w, static_cast<std::size_t>(neg - w.begin() + 1));
        int a = -rot.back();
        std::vector<int> u(rot.begin(), rot.end() - 1);
        std::vector<int> ua = u;
        ua.push_back(a);
        result = TracePolynomial::variable(trace_var({a})) * rewrite_signed(u);
        result -= rewrite_signed(ua);
    } else {
        // positive word: find a repeated letter
        std::size_t first = len, second = len;
        for (std::size_t i = 0; i < len && first == len; ++i)
            for (std::size_t j = i + 1; j < len; ++j)
                if (w[i] == w[j]) {
                    first = i;
                    second = j;
                    break;
                }
        if (first < len) {
            // w = g X g Y: tr = tr(gX) tr(gY) - tr(X Y^{-1})
            std::vector<int> rot = rotate_to(w, first);
            std::size_t p = second - first;
            std::vector<int> gx(rot.begin(), rot.begin() + static_cast<long>(p));
            std::vector<int> gy(rot.begin() + static_cast<long>(p), rot.end());
            std::vector<int> x(gx.begin() + 1, gx.end());
            std::vector<int> y(gy.begin() + 1, gy.end());
            std::vector<int> xyinv = x;
            std::vector<int> yinv = inverse_of(y);
            xyinv.insert(xyinv.end(), yinv.begin(), yinv.end());
            result = rewrite_signed(gx) * rewrite_signed(gy);
            result -= rewrite_signed(xyinv);
        } else if (len == 2) {
            result = TracePolynomial::variable(trace_var({w[0], w[1]}));
        } else if (len == 3) {
            if (w[0] < w[1] && w[1] < w[2]) {
                result = TracePolynomial::variable(trace_var({w[0], w[1], w[2]}));
            } else {
                // reversed triple: tr(a x y), x > y. Closed form so the
                // recursion cannot re-enter this class through the mixed
                // branch:
                // tr(ACB) = tr(A)tr(BC) + tr(B)tr(AC) + tr(C)tr(AB)
                //           - tr(A)tr(B)tr(C) - tr(ABC)
                int A = w[0], C = w[1], B = w[2];
                auto V = [](std::vector<int> idx) {
                    return TracePolynomial::variable(trace_var(std::move(idx)));
                };
                result = V({A}) * V({B, C}) + V({B}) * V({A, C}) + V({C}) * V({A, B});
                result -= V({A}) * V({B}) * V({C});
                result -= V({A, B, C});
            }
        } else {
            throw std::logic_error("distinct-letter word of length > 3 at rank <= 3");
        }
    }

    memo_.emplace(key, result);
    return result;
}

std::map<int, GaussianRational> Sl2TraceRewriter::generator_values(const std::vector<Matrix>& ms) {
    const int rank = static_cast<int>(ms.size());
    std::map<int, GaussianRational> values;
    for (int i = 1; i <= rank; ++i) values[trace_var({i})] = ms[i - 1].trace();
    for (int i = 1; i <= rank; ++i)
        for (int j = i + 1; j <= rank; ++j)
            values[trace_var({i, j})] = (ms[i - 1] * ms[j - 1]).trace();
    for (int i = 1; i <= rank; ++i)
        for (int j = i + 1; j <= rank; ++j)
            for (int k = j + 1; k <= rank; ++k)
                values[trace_var({i, j, k})] = (ms[i - 1] * ms[j - 1] * ms[k - 1]).trace();
    return values;
}

} // namespace charvar
