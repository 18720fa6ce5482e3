#include <gtest/gtest.h>

#include <fstream>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

std::vector<std::string> split(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> words;
    for (std::string w; in >> w;) {
        words.push_back(w);
    }
    return words;
}

CliRun run(const std::string& line) {
    std::ostringstream out;
    std::ostringstream err;
    int code = tower::cli::run(split(line), out, err);
    return {code, out.str(), err.str()};
}

struct GoldenCase {
    std::string command;
    std::string expected;
    int code = 0;
};

// Blocks of "$ tower <args>", expected stdout lines, then "? <exit code>".
std::vector<GoldenCase> load_golden() {
    std::ifstream in(TOWER_GOLDEN_FILE);
    std::vector<GoldenCase> cases;
    std::string line;
    GoldenCase current;
    bool open = false;
    while (std::getline(in, line)) {
        if (line.rfind("$ tower ", 0) == 0) {
            current = {line.substr(8), "", 0};
            open = true;
        } else if (open && line.rfind("? ", 0) == 0) {
            current.code = std::stoi(line.substr(2));
            cases.push_back(current);
            open = false;
        } else if (open) {
            current.expected += line + "\n";
        }
    }
    return cases;
}

std::string slurp(const char* path) {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST(CliGolden, CorpusMatches) {
    auto cases = load_golden();
    ASSERT_GE(cases.size(), 30U);
    for (const auto& c : cases) {
        CliRun r = run(c.command);
        EXPECT_EQ(r.code, c.code) << c.command << "\n" << r.err;
        EXPECT_EQ(r.out, c.expected) << c.command;
    }
}

TEST(CliGolden, CorpusCoversEverySubcommandAndExitCode) {
    std::set<std::string> seen;
    std::set<int> codes;
    for (const auto& c : load_golden()) {
        seen.insert(split(c.command).front());
        codes.insert(c.code);
    }
    for (const auto& h : tower::cli::command_table()) {
        EXPECT_TRUE(seen.count(h.name)) << h.name;
    }
    EXPECT_EQ(codes, (std::set<int>{0, 1, 2}));
}

TEST(CliExitCodes, UsageErrors) {
    for (const char* line : {"", "frobnicate", "gcd 1", "gcd x 3", "cf", "pebble square 3", "real nope 1 2",
                             "laws ring", "gcd 1 2 --bits", "pi --doublings many"}) {
        CliRun r = run(line);
        EXPECT_EQ(r.code, 2) << line;
        EXPECT_TRUE(r.out.empty()) << line;
        EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1) << line;
        EXPECT_EQ(r.err.rfind("tower: usage error: ", 0), 0U) << r.err;
    }
}

TEST(CliExitCodes, DomainErrors) {
    for (const char* line : {"surd 4", "real between sqrt:2 sqrt:2", "cf 1/0", "pi --doublings 65",
                             "gcd 2000000 1 --literal", "real archimedean 0 1", "cf -1/2", "pebble odd-square 4"}) {
        CliRun r = run(line);
        EXPECT_EQ(r.code, 1) << line;
        EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1) << line;
        EXPECT_EQ(r.err.rfind("tower: domain error: ", 0), 0U) << r.err;
    }
}

TEST(CliExitCodes, JsonErrorIsOneDocument) {
    CliRun r = run("surd 9 --json");
    EXPECT_EQ(r.code, 1);
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["error"]["kind"], "domain");
}

TEST(CliDocSync, EveryHelpEntryRuns) {
    for (const auto& h : tower::cli::command_table()) {
        CliRun r = run(h.example);
        EXPECT_EQ(r.code, 0) << h.example << "\n" << r.err;
        EXPECT_FALSE(r.out.empty()) << h.example;
    }
}

TEST(CliDocSync, HelpListsEveryHandler) {
    CliRun r = run("help");
    for (const auto& [name, handler] : tower::cli::handlers()) {
        EXPECT_NE(r.out.find("\n" + name + " "), std::string::npos) << name;
    }
    EXPECT_EQ(tower::cli::handlers().size(), tower::cli::command_table().size());
}

TEST(CliDocSync, ReadmeShowsEveryExample) {
    const std::string readme = slurp(TOWER_README_FILE);
    for (const auto& h : tower::cli::command_table()) {
        EXPECT_NE(readme.find("tower " + h.example), std::string::npos) << h.example;
    }
}

TEST(CliJson, TextAndJsonAgreeOnNumbers) {
    const std::regex number(R"(-?\d+(?:/\d+|\.\d+)?)");
    for (const auto& h : tower::cli::command_table()) {
        if (h.name == "help" || h.name == "pebble") {
            continue;
        }
        CliRun text = run(h.example);
        CliRun js = run(h.example + " --json");
        ASSERT_EQ(text.code, js.code) << h.example;
        auto doc = nlohmann::json::parse(js.out);
        const std::string dumped = doc.dump();
        for (std::sregex_iterator it(text.out.begin(), text.out.end(), number), end; it != end; ++it) {
            std::string n = it->str();
            // single digits are mostly row indices and header text
            if (n.size() <= 1) {
                continue;
            }
            EXPECT_NE(dumped.find(n), std::string::npos) << h.example << ": " << n << " missing from JSON";
        }
    }
}

TEST(CliJson, DeterministicLawSuites) {
    EXPECT_EQ(run("laws group --max 50 --seed 3 --json").out, run("laws group --max 50 --seed 3 --json").out);
}

TEST(CliParsing, NegativeOperandsAreNotFlags) {
    CliRun r = run("real add -3/4 1/4");
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "-0.5000000000 ±1 ulp\n");
}

TEST(CliParsing, FlagsMayPrecedeSubcommand) {
    EXPECT_EQ(run("--json cf 17/3").out, run("cf 17/3 --json").out);
}
