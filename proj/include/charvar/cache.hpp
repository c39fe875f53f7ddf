#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <vector>

#include "charvar/nilquot.hpp"

namespace charvar {

// In-memory memo plus optional on-disk store for quotient bases. Payloads
// are canonical (fixed word order), so cache hits are byte-identical to
// recomputation. Disk files are versioned; stale versions are ignored.
// Writes go through a temp file and an atomic rename.
class QuotientCache {
public:
    QuotientCache() = default; // memo only, no disk
    explicit QuotientCache(std::filesystem::path dir);

    // $CHARVAR_CACHE_DIR if set, else .charvar-cache in the working dir
    static std::filesystem::path default_dir();

    const std::vector<Word>& get(int n, const Alphabet& alphabet, int degree, IdealMode mode);

    static constexpr int format_version = 1;

private:
    struct Key {
        int n, letters, stars, max_letter, degree, mode;
        friend auto operator<=>(const Key&, const Key&) = default;
    };

    std::optional<std::vector<Word>> load(const Key& key) const;
    void store(const Key& key, const std::vector<Word>& words) const;
    std::filesystem::path file_for(const Key& key) const;

    std::map<Key, std::vector<Word>> memo_;
    std::optional<std::filesystem::path> dir_;
};

} // namespace charvar
