#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace charvar {

// Generator letter s_i or s_i*. Encoded as 2*(index-1) + starred, so the
// fixed letter order s1 < s1* < s2 < s2* < ... is the natural order on codes.
struct Letter {
    int index = 1; // 1-based
    bool starred = false;

    int code() const { return 2 * (index - 1) + (starred ? 1 : 0); }
    static Letter from_code(int c) { return Letter{c / 2 + 1, (c & 1) != 0}; }

    friend bool operator==(const Letter&, const Letter&) = default;
};

// Nonempty word in the free semigroup with involution. Immutable value;
// degree equals the letter count.
class Word {
public:
    explicit Word(std::vector<int> codes);
    explicit Word(const std::vector<Letter>& letters);
    static Word single(int index, bool starred = false);
    static Word parse(const std::string& text);

    int degree() const { return static_cast<int>(codes_.size()); }
    const std::vector<int>& codes() const { return codes_; }
    std::vector<Letter> letters() const;
    int max_index() const;
    bool has_star() const;
    int star_count() const;

    // Distinct letter indices used, ascending.
    std::vector<int> index_pattern() const;

    Word rotated(int k) const; // left rotation by k
    std::string render() const; // "g1 g2* g3"

    // degree-first, then lexicographic on letter codes
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);
    friend bool operator==(const Word& a, const Word& b) { return a.codes_ == b.codes_; }

private:
    std::vector<int> codes_;
};

struct WordHash {
    std::size_t operator()(const Word& w) const {
        std::size_t h = 1469598103934665603ULL;
        for (int c : w.codes()) {
            h ^= static_cast<std::size_t>(c) + 0x9e3779b9;
            h *= 1099511628211ULL;
        }
        return h;
    }
};

struct CyclicClass {
    Word representative;

    friend bool operator==(const CyclicClass&, const CyclicClass&) = default;
};

Word concat(const Word& a, const Word& b);

// Involution: reverse the letters, toggle every star.
Word star(const Word& w);

// Least rotation under the global order.
CyclicClass cyclic_normal_form(const Word& w);

// All words of degree 1..max_degree over the alphabet, deglex order.
// If max_letter > 0 only letters with index <= max_letter are used.
std::vector<Word> enumerate_words(int alphabet_size, int max_degree, bool with_stars,
                                  int max_letter = 0);

// Words of one exact degree, lex order.
std::vector<Word> words_of_degree(int alphabet_size, int degree, bool with_stars,
                                  int max_letter = 0);

} // namespace charvar
