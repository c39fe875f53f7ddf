#include <doctest.h>

#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "charvar/cache.hpp"

using namespace charvar;
namespace fs = std::filesystem;

#ifndef CHARVAR_CLI_PATH
#define CHARVAR_CLI_PATH "charvar"
#endif

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(CHARVAR_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    int rc = pclose(p);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("charvar-test-" + std::to_string(static_cast<unsigned>(getpid())) + "-" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

} // namespace

TEST_CASE("cache hits are byte-identical to recomputation") {
    TempDir dir;
    Alphabet a{2, false, 0};

    QuotientCache cold(dir.path);
    std::vector<Word> first = cold.get(2, a, 2, IdealMode::plain);

    // a fresh instance reads the file written by the first one
    QuotientCache warm(dir.path);
    std::vector<Word> second = warm.get(2, a, 2, IdealMode::plain);
    CHECK(first == second);

    QuotientCache none; // memo only
    CHECK(none.get(2, a, 2, IdealMode::plain) == first);

    bool found = false;
    for (const auto& e : fs::directory_iterator(dir.path)) {
        found = true;
        CHECK(e.path().extension() == ".json");
    }
    CHECK(found);
}

TEST_CASE("stale cache versions are ignored") {
    TempDir dir;
    Alphabet a{2, false, 0};
    {
        QuotientCache c(dir.path);
        c.get(2, a, 2, IdealMode::plain);
    }
    for (const auto& e : fs::directory_iterator(dir.path)) {
        std::ofstream out(e.path());
        out << "{\"version\": 0, \"words\": [\"g9\"]}\n";
    }
    QuotientCache c(dir.path);
    std::vector<Word> words = c.get(2, a, 2, IdealMode::plain);
    REQUIRE(words.size() == 1);
    CHECK(words.front() == Word::parse("g1 g2"));
}

TEST_CASE("corrupt cache files are ignored") {
    TempDir dir;
    Alphabet a{2, false, 0};
    {
        QuotientCache c(dir.path);
        c.get(2, a, 2, IdealMode::plain);
    }
    for (const auto& e : fs::directory_iterator(dir.path)) {
        std::ofstream out(e.path());
        out << "not json";
    }
    QuotientCache c(dir.path);
    CHECK(c.get(2, a, 2, IdealMode::plain).size() == 1);
}

TEST_CASE("cli: gens counts and formats") {
    TempDir dir;
    setenv("CHARVAR_CACHE_DIR", dir.path.c_str(), 1);

    RunResult pruned = run_cli("gens --group sl --n 2 --rank 3 --prune sl2-identities");
    CHECK(pruned.status == 0);
    int lines = 0;
    for (char ch : pruned.out) lines += ch == '\n';
    CHECK(lines == 7);

    RunResult gl = run_cli("gens --group gl --n 2 --rank 1 --prune sl2-identities");
    CHECK(gl.status == 0);
    CHECK(gl.out == "trace g1\ndet_inverse 1\n");

    RunResult json = run_cli("gens --group so --n 4 --rank 1 --format json --no-cache");
    CHECK(json.status == 0);
    CHECK(json.out.find("\"group\": \"so_even\"") != std::string::npos);
    CHECK(json.out.find("\"kind\": \"q\"") != std::string::npos);

    unsetenv("CHARVAR_CACHE_DIR");
}

TEST_CASE("cli: cache transparency") {
    TempDir dir;
    setenv("CHARVAR_CACHE_DIR", dir.path.c_str(), 1);
    std::string args = "gens --group sl --n 2 --rank 4 --format json";
    RunResult cold = run_cli(args);          // computes and fills the cache
    RunResult warm = run_cli(args);          // reads the cache
    RunResult fresh = run_cli(args + " --no-cache");
    CHECK(cold.status == 0);
    CHECK(cold.out == warm.out);
    CHECK(cold.out == fresh.out);
    unsetenv("CHARVAR_CACHE_DIR");
}

TEST_CASE("cli: --out writes the same bytes as stdout") {
    TempDir dir;
    fs::path out_file = dir.path / "gens.json";
    std::string base = "gens --group sp --n 2 --rank 2 --format json --no-cache";
    RunResult to_stdout = run_cli(base);
    RunResult to_file = run_cli(base + " --out " + out_file.string());
    CHECK(to_file.status == 0);
    CHECK(to_file.out.empty());
    std::ifstream in(out_file);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(content == to_stdout.out);
}

TEST_CASE("cli: verify subcommand") {
    RunResult ok = run_cli("verify --suite separation_so2");
    CHECK(ok.status == 0);
    CHECK(ok.out.find("pass") != std::string::npos);

    RunResult json = run_cli("verify --suite nagata_higman --format json --seed 1");
    CHECK(json.status == 0);
    CHECK(json.out.find("\"suite\": \"nagata_higman\"") != std::string::npos);

    RunResult bad = run_cli("verify --suite nosuch");
    CHECK(bad.status == 2);
}

TEST_CASE("cli: nilquot subcommand") {
    RunResult basis = run_cli("nilquot --n 2 --degree 2 --letters 2 --print basis --no-cache");
    CHECK(basis.status == 0);
    CHECK(basis.out == "g1 g2\n");

    RunResult dim = run_cli("nilquot --n 2 --degree 3 --letters 3 --print dimension --no-cache");
    CHECK(dim.status == 0);
    CHECK(dim.out == "0\n");

    RunResult dim1 = run_cli("nilquot --n 2 --degree 1 --letters 4 --print dimension --no-cache");
    CHECK(dim1.status == 0);
    CHECK(dim1.out == "4\n");

    RunResult odd = run_cli("nilquot --n 3 --degree 2 --letters 1 --mode symmetric --no-cache");
    CHECK(odd.status == 2);
}

TEST_CASE("cli: invalid flags exit 2") {
    CHECK(run_cli("gens --group nosuch --n 2 --rank 1").status == 2);
    CHECK(run_cli("gens --group sp --n 3 --rank 1").status == 2);
    CHECK(run_cli("gens --group sl --n 3 --rank 1 --prune sl2-identities").status == 2);
    CHECK(run_cli("gens --n 2 --rank 1").status == 2); // missing --group
}
