/*
   Copyright 2026 The gorext authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "gorext/problemfile.hpp"

using namespace gorext;

namespace {

RunOutcome run_text(const std::string& text) {
    return run_problem(ProblemFile::parse_text(text, "test.gx"));
}

}  // namespace

TEST_SUITE("problemfile") {
    TEST_CASE("a freeext problem runs and checks expectations") {
        std::string text = R"(
ring x, y, t char 0
dual FB = X*Y
dual G1 = X^[3]
dual G2 = X*Y^[3]
task freeext n=3
expect free = true
expect hilbert C = 1,3,4,3,1
expect sufficient = pass
expect ichain = x^2,y^2 | x^2,y | R
)";
        RunOutcome out = run_text(text);
        CHECK(out.exit_code == 0);
        CHECK(out.failures.empty());
        CHECK(out.json["free"] == true);
        CHECK(out.json["n"] == 3);
        CHECK(out.json["hilbert"]["C"] == nlohmann::json::array({1, 3, 4, 3, 1}));
        CHECK(out.json["certificates"]["dimension"]["C"] == 12);
        CHECK(out.json["certificates"]["lifting"].size() == 2);
    }

    TEST_CASE("a refuted expectation flips the exit code and reports a diff") {
        std::string text = R"(
ring x, y, t char 0
dual FB = X*Y
dual G1 = X^[3]
task freeext n=2
expect hilbert C = 1,3,4,3,1
)";
        RunOutcome out = run_text(text);
        CHECK(out.exit_code == 1);
        REQUIRE(out.failures.size() == 1);
        CHECK(out.failures[0].find("(1,3,3,1)") != std::string::npos);
    }

    TEST_CASE("unknown directives, tasks, keys and arguments are rejected") {
        CHECK_THROWS_AS(ProblemFile::parse_text("ring x\nfrobnicate y\ntask ann\n", "t"),
                        std::invalid_argument);
        CHECK_THROWS_AS(ProblemFile::parse_text("ring x\ntask trisect\n", "t"),
                        std::invalid_argument);
        CHECK_THROWS_AS(
            ProblemFile::parse_text("ring x\ndual F = X\ntask ann\nexpect socle = 1\n", "t"),
            std::invalid_argument);
        CHECK_THROWS_AS(ProblemFile::parse_text("ring x\ndual F = X\ntask ann depth=3\n", "t"),
                        std::invalid_argument);
        CHECK_THROWS_AS(ProblemFile::parse_text("dual F = X\nring x\ntask ann\n", "t"),
                        std::invalid_argument);
        // errors carry file and line positions
        try {
            ProblemFile::parse_text("ring x\nbogus\n", "somefile.gx");
            CHECK(false);
        } catch (const std::invalid_argument& ex) {
            CHECK(std::string(ex.what()).find("somefile.gx:2") != std::string::npos);
        }
    }

    TEST_CASE("parsing is deterministic and json round-trips") {
        std::string text = R"(
ring x, y char 0
dual F = X^[2] + Y^[2]
poly ell = x + y
task jordan
expect jordan = 3,1
)";
        RunOutcome a = run_text(text);
        RunOutcome b = run_text(text);
        CHECK(a.json == b.json);
        CHECK(a.table == b.table);
        // serialize and re-parse
        auto round = nlohmann::json::parse(a.json.dump());
        CHECK(round == a.json);
        CHECK(a.json["jordan"] == nlohmann::json::array({3, 1}));
    }

    TEST_CASE("table and json agree on the numeric fields") {
        std::string text = R"(
ring x, y, t char 0
dual F = X*Y*T + X^[3]
task ann
)";
        RunOutcome out = run_text(text);
        int dim = out.json["dim"];
        CHECK(out.table.find("dim: " + std::to_string(dim)) != std::string::npos);
        std::string h = "(1,3,3,1)";
        CHECK(out.json["hilbert"] == nlohmann::json::array({1, 3, 3, 1}));
        CHECK(out.table.find("hilbert: " + h) != std::string::npos);
    }

    TEST_CASE("weighted rings and char p parse") {
        std::string text = R"(
ring x, y, t weights 1,1,2 char 0
dual FB = X*Y
dual G1 = X^[3]*Y
task freeext n=2
expect hilbert A = 1,0,1
expect free = true
)";
        CHECK(run_text(text).exit_code == 0);
        std::string modp = R"(
ring x, y char 5
dual F = X^[2] + Y^[2]
task ann
expect gens = x*y, x^2 - y^2
)";
        CHECK(run_text(modp).exit_code == 0);
    }

    TEST_CASE("corpus runner verdicts") {
        namespace fs = std::filesystem;
        fs::path dir = fs::temp_directory_path() / "gorext_corpus_test";
        fs::remove_all(dir);
        fs::create_directories(dir);
        {
            std::ofstream good(dir / "good.gx");
            good << "ring x, y\ndual F = X*Y\ntask ann\nexpect hilbert = 1,2,1\n";
            std::ofstream bad(dir / "bad.gx");
            bad << "ring x, y\ndual F = X*Y\ntask ann\nexpect hilbert = 1,3,1\n";
            std::ofstream broken(dir / "broken.gx");
            broken << "ring x, y\nnonsense\n";
        }
        CorpusSummary sum = run_corpus(dir.string(), 2);
        CHECK(sum.total == 3);
        CHECK(sum.passed == 1);
        REQUIRE(sum.failures.size() == 2);
        CHECK(sum.text.find("PASS good.gx") != std::string::npos);
        CHECK(sum.text.find("FAIL bad.gx") != std::string::npos);
        CHECK(sum.text.find("FAIL broken.gx") != std::string::npos);

        fs::path empty = fs::temp_directory_path() / "gorext_empty_corpus";
        fs::remove_all(empty);
        fs::create_directories(empty);
        CorpusSummary esum = run_corpus(empty.string(), 1);
        CHECK(esum.total == 0);
        CHECK(esum.text.find("warning: 0 entries") != std::string::npos);
        fs::remove_all(dir);
        fs::remove_all(empty);
    }

    TEST_CASE("pbi and admissible-g tasks run from files") {
        std::string pbi = R"(
ring x, y char 0
dual THETA = X^[2] + Y^[2]
poly h1 = y
poly h2 = 1/2*x^2 + 1/2*y^2
task pbi k=1
expect hilbert = 1,3,3,1
expect contains = t^2 - t*y
)";
        CHECK(run_text(pbi).exit_code == 0);
        std::string adm = R"(
ring x, y char 0
dual FB = X*Y
task admissible-g
expect admissible = 4
)";
        CHECK(run_text(adm).exit_code == 0);
    }
}
