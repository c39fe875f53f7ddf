#include "charvar/words.hpp"

#include <algorithm>

namespace charvar {

Word::Word(std::vector<int> codes) : codes_(std::move(codes)) {
    if (codes_.empty()) throw std::invalid_argument("empty word is not representable");
    for (int c : codes_)
        if (c < 0) throw std::invalid_argument("bad letter code");
}

Word::Word(const std::vector<Letter>& letters) {
    codes_.reserve(letters.size());
    for (const Letter& l : letters) {
        if (l.index < 1) throw std::invalid_argument("letter index must be >= 1");
        codes_.push_back(l.code());
    }
    if (codes_.empty()) throw std::invalid_argument("empty word is not representable");
}

Word Word::single(int index, bool starred) {
    return Word(std::vector<int>{Letter{index, starred}.code()});
}

std::vector<Letter> Word::letters() const {
    std::vector<Letter> out;
    out.reserve(codes_.size());
    for (int c : codes_) out.push_back(Letter::from_code(c));
    return out;
}

int Word::max_index() const {
    int m = 1;
    for (int c : codes_) m = std::max(m, c / 2 + 1);
    return m;
}

bool Word::has_star() const {
    for (int c : codes_)
        if (c & 1) return true;
    return false;
}

int Word::star_count() const {
    int n = 0;
    for (int c : codes_) n += (c & 1);
    return n;
}

std::vector<int> Word::index_pattern() const {
    std::vector<int> idx;
    for (int c : codes_) idx.push_back(c / 2 + 1);
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    return idx;
}

Word Word::rotated(int k) const {
    const int d = degree();
    k = ((k % d) + d) % d;
    std::vector<int> out(codes_.begin() + k, codes_.end());
    out.insert(out.end(), codes_.begin(), codes_.begin() + k);
    return Word(std::move(out));
}

std::string Word::render() const {
    std::string out;
    for (std::size_t i = 0; i < codes_.size(); ++i) {
        if (i) out += ' ';
        Letter l = Letter::from_code(codes_[i]);
        out += 'g';
        out += std::to_string(l.index);
        if (l.starred) out += '*';
    }
    return out;
}

Word Word::parse(const std::string& text) {
    std::vector<int> codes;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && text[i] == ' ') ++i;
        if (i >= text.size()) break;
        if (text[i] != 'g') throw std::invalid_argument("bad word text: " + text);
        ++i;
        std::size_t start = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (i == start) throw std::invalid_argument("bad word text: " + text);
        int index = std::stoi(text.substr(start, i - start));
        bool starred = false;
        if (i < text.size() && text[i] == '*') {
            starred = true;
            ++i;
        }
        codes.push_back(Letter{index, starred}.code());
    }
    return Word(std::move(codes));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.codes_.size() != b.codes_.size())
        return a.codes_.size() <=> b.codes_.size();
    for (std::size_t i = 0; i < a.codes_.size(); ++i)
        if (a.codes_[i] != b.codes_[i]) return a.codes_[i] <=> b.codes_[i];
    return std::strong_ordering::equal;
}

Word concat(const Word& a, const Word& b) {
    std::vector<int> codes = a.codes();
    codes.insert(codes.end(), b.codes().begin(), b.codes().end());
    return Word(std::move(codes));
}

Word star(const Word& w) {
    std::vector<int> codes(w.codes().rbegin(), w.codes().rend());
    for (int& c : codes) c ^= 1;
    return Word(std::move(codes));
}

CyclicClass cyclic_normal_form(const Word& w) {
    Word best = w;
    for (int k = 1; k < w.degree(); ++k) {
        Word r = w.rotated(k);
        if (r < best) best = r;
    }
    return CyclicClass{best};
}

std::vector<Word> words_of_degree(int alphabet_size, int degree, bool with_stars, int max_letter) {
    if (alphabet_size < 1 || degree < 1) throw std::invalid_argument("need alphabet >= 1, degree >= 1");
    const int letters = max_letter > 0 ? std::min(max_letter, alphabet_size) : alphabet_size;
    const int base = with_stars ? 2 * letters : letters;
    std::vector<Word> out;
    std::vector<int> digits(degree, 0);
    for (;;) {
        std::vector<int> codes(degree);
        for (int i = 0; i < degree; ++i)
            codes[i] = with_stars ? digits[i] : 2 * digits[i];
        out.push_back(Word(std::move(codes)));
        int pos = degree - 1;
        while (pos >= 0 && digits[pos] == base - 1) digits[pos--] = 0;
        if (pos < 0) break;
        ++digits[pos];
    }
    return out;
}

std::vector<Word> enumerate_words(int alphabet_size, int max_degree, bool with_stars, int max_letter) {
    std::vector<Word> out;
    for (int d = 1; d <= max_degree; ++d) {
        std::vector<Word> layer = words_of_degree(alphabet_size, d, with_stars, max_letter);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

} // namespace charvar
