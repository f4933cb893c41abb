#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lff/io/commands.hpp"

namespace fs = std::filesystem;

namespace {

/// Splits a command line on blanks, honouring single and double quotes.
std::vector<std::string> split_command(const std::string& line)
{
    std::vector<std::string> out;
    std::string current;
    bool in_word = false;
    char quote = 0;
    for (char c : line) {
        if (quote) {
            if (c == quote) quote = 0;
            else current += c;
        } else if (c == '\'' || c == '"') {
            quote = c;
            in_word = true;
        } else if (c == ' ') {
            if (in_word) out.push_back(current);
            current.clear();
            in_word = false;
        } else {
            current += c;
            in_word = true;
        }
    }
    if (in_word) out.push_back(current);
    return out;
}

struct Golden {
    std::vector<std::string> args;
    std::string output;
    int code = 0;
};

Golden read_golden(const fs::path& path)
{
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    REQUIRE(line.rfind("$ lff ", 0) == 0);
    Golden g{split_command(line.substr(6)), "", 0};
    while (std::getline(in, line)) {
        if (line.rfind("[exit ", 0) == 0) {
            g.code = std::stoi(line.substr(6));
            break;
        }
        g.output += line + "\n";
    }
    return g;
}

struct Run {
    int code;
    std::string out, err;
};

Run run(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = lff::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("golden transcripts", "[cli]")
{
    const fs::path root(LFF_SOURCE_DIR);
    const fs::path saved = fs::current_path();
    fs::current_path(root);
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(root / "tests" / "golden"))
        if (e.path().extension() == ".golden") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    REQUIRE(files.size() >= 20);
    for (const auto& f : files) {
        INFO(f.filename().string());
        const Golden g = read_golden(f);
        const Run r = run(g.args);
        CHECK(r.out + r.err == g.output);
        CHECK(r.code == g.code);
    }
    fs::current_path(saved);
}

TEST_CASE("reports are byte-identical across runs", "[cli]")
{
    const std::string s = std::string(LFF_SOURCE_DIR) + "/samples/";
    const std::vector<std::string> args{"equiv", s + "ends_in_a.nfa", s + "ends_in_a_dfa.nfa", "--start-a", "0",
                                        "--start-b", "s"};
    const Run first = run(args);
    for (int i = 0; i < 3; ++i) CHECK(run(args).out == first.out);
}

TEST_CASE("argument errors exit with status 2", "[cli]")
{
    CHECK(run({}).code == lff::cli::InputError);
    CHECK(run({"frobnicate"}).code == lff::cli::InputError);
    CHECK(run({"member", "x.nfa"}).code == lff::cli::InputError);
    CHECK(run({"equiv", "a", "b", "--start-a", "0", "--start-b", "0", "--depth", "3", "--exact"}).code ==
          lff::cli::InputError);
    CHECK(run({"unfold", "x", "--root", "f", "--depth", "minus one"}).code == lff::cli::InputError);
    const Run help = run({"--help"});
    CHECK(help.code == lff::cli::Success);
    CHECK(help.out.find("member") != std::string::npos);
}
