#include "charvar/cache.hpp"

#include <cstdlib>
#include <fstream>

#include <json.hpp>

namespace charvar {

namespace fs = std::filesystem;

QuotientCache::QuotientCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path QuotientCache::default_dir() {
    if (const char* env = std::getenv("CHARVAR_CACHE_DIR"); env && *env) return fs::path(env);
    return fs::path(".charvar-cache");
}

const std::vector<Word>& QuotientCache::get(int n, const Alphabet& alphabet, int degree,
                                            IdealMode mode) {
    Key key{n,
            alphabet.letters,
            alphabet.with_stars ? 1 : 0,
            alphabet.max_letter,
            degree,
            mode == IdealMode::plain ? 0 : 1};
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    if (dir_) {
        if (auto loaded = load(key)) return memo_.emplace(key, std::move(*loaded)).first->second;
    }
    std::vector<Word> computed = quotient_basis(n, degree, alphabet, mode);
    if (dir_) store(key, computed);
    return memo_.emplace(key, std::move(computed)).first->second;
}

fs::path QuotientCache::file_for(const Key& key) const {
    std::string name = "qb-n" + std::to_string(key.n) + "-l" + std::to_string(key.letters) + "-s" +
                       std::to_string(key.stars) + "-m" + std::to_string(key.max_letter) + "-d" +
                       std::to_string(key.degree) + "-" + (key.mode == 0 ? "plain" : "symmetric") +
                       ".json";
    return *dir_ / name;
}

std::optional<std::vector<Word>> QuotientCache::load(const Key& key) const {
    std::ifstream in(file_for(key));
    if (!in) return std::nullopt;
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded()) return std::nullopt;
    if (!j.contains("version") || j["version"].get<int>() != format_version) return std::nullopt;
    std::vector<Word> words;
    for (const auto& t : j["words"]) words.push_back(Word::parse(t.get<std::string>()));
    return words;
}

void QuotientCache::store(const Key& key, const std::vector<Word>& words) const {
    std::error_code ec;
    fs::create_directories(*dir_, ec);
    nlohmann::ordered_json j;
    j["version"] = format_version;
    j["key"] = {{"n", key.n},          {"letters", key.letters}, {"stars", key.stars != 0},
                {"max_letter", key.max_letter}, {"degree", key.degree},
                {"mode", key.mode == 0 ? "plain" : "symmetric"}};
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Word& w : words) arr.push_back(w.render());
    j["words"] = std::move(arr);

    fs::path target = file_for(key);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return; // cache is best-effort
        out << j.dump(2) << '\n';
    }
    fs::rename(tmp, target, ec);
    if (ec) fs::remove(tmp, ec);
}

} // namespace charvar
