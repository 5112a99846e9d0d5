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

#ifndef GOREXT_PROBLEMFILE_HPP
#define GOREXT_PROBLEMFILE_HPP

#include <map>
#include <string>

#include <json.hpp>

#include "gorext/fixtures.hpp"
#include "gorext/lefschetz.hpp"

namespace gorext {

/// Line-oriented problem file:
///   ring x, y, t weights 1,1,2 char 0
///   dual F = X*Y*T + X^[3]
///   poly ell = x+y
///   task freeext n=3
///   expect hilbert C = 1,3,4,3,1
///   note free text
/// Unknown keys are rejected; parse errors carry file:line positions.
struct ProblemFile {
    std::string name;
    RingPtr ring;
    std::vector<std::pair<std::string, DualPoly>> duals;
    std::vector<std::pair<std::string, Poly>> polys;
    std::string task;
    std::map<std::string, std::string> task_args;

    struct Expect {
        std::string key;
        std::string arg;    // optional, e.g. the "C" of `expect hilbert C = ...`
        std::string value;  // raw text after '='
        int line = 0;
    };
    std::vector<Expect> expects;
    std::vector<std::string> notes;

    const DualPoly* find_dual(const std::string& n) const;
    const Poly* find_poly(const std::string& n) const;

    static ProblemFile parse_text(std::string_view text, const std::string& name);
    static ProblemFile parse_file(const std::string& path);
};

struct RunOutcome {
    int exit_code = 0;  // 0 ok, 1 expect refuted (input errors throw instead)
    std::string table;
    nlohmann::json json;
    std::vector<std::string> failures;
};

RunOutcome run_problem(const ProblemFile& pf);

struct CorpusSummary {
    int total = 0;
    int passed = 0;
    std::vector<std::pair<std::string, std::string>> failures;  // name -> reason
    std::string text;
};

/// Replays every *.gx file in the directory (concurrently up to `jobs`;
/// jobs <= 0 means hardware concurrency).
CorpusSummary run_corpus(const std::string& dir, int jobs = 1);

}  // namespace gorext

#endif
