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

#include "gorext/problemfile.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace gorext {

namespace {

using nlohmann::json;

[[noreturn]] void fail_at(const std::string& name, int line, const std::string& msg) {
    throw std::invalid_argument(name + ":" + std::to_string(line) + ": " + msg);
}

std::string trim(std::string_view s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

std::vector<std::string> words(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream is{std::string(s)};
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

bool is_integer(const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::vector<int> parse_int_list(const std::string& value, const std::string& what) {
    std::vector<int> out;
    for (const auto& piece : split(value, ',')) {
        if (!is_integer(piece)) {
            throw std::invalid_argument("bad integer '" + piece + "' in " + what);
        }
        out.push_back(std::stoi(piece));
    }
    return out;
}

json partition_json(const Partition& p) {
    json a = json::array();
    for (int v : p) a.push_back(v);
    return a;
}

json hilbert_json(const HilbertFunction& h) {
    json a = json::array();
    for (int v : h.values()) a.push_back(v);
    return a;
}

json gens_json(const GradedIdeal& ideal) {
    json a = json::array();
    for (const auto& [d, g] : ideal.minimal_generators()) {
        a.push_back(json{{"degree", d}, {"poly", g.to_string()}});
    }
    return a;
}

std::string gens_string(const GradedIdeal& ideal) {
    std::string s;
    for (const auto& [d, g] : ideal.minimal_generators()) {
        if (!s.empty()) s += ", ";
        s += g.to_string();
    }
    return s.empty() ? std::string("0") : s;
}

// everything the expect checks may query
struct TaskContext {
    RingPtr fiber_ring;  // ring for FB-level objects (no t) when meaningful
    std::optional<FreeExtReport> freeext;
    std::vector<GradedIdeal> chain;
    std::optional<GradedIdeal> ann;
    std::optional<ArtinianAlgebra> alg;  // quotient by ann (C for freeext)
    std::optional<Partition> jordan;
    std::optional<SLResult> sl;
    std::optional<int> admissible;
    std::optional<DualPoly> f;  // the dual form witnesses contract against
};

bool parse_bool(const std::string& v, const std::string& what) {
    if (v == "true" || v == "yes") return true;
    if (v == "false" || v == "no") return false;
    throw std::invalid_argument("bad boolean '" + v + "' in " + what);
}

bool parse_passfail(const std::string& v, const std::string& what) {
    if (v == "pass") return true;
    if (v == "fail") return false;
    throw std::invalid_argument("expected pass/fail in " + what + ", got '" + v + "'");
}

std::string hs(const HilbertFunction& h) { return h.to_string(); }

void check_one(const ProblemFile& pf, const ProblemFile::Expect& e, const TaskContext& ctx,
               std::vector<std::string>& failures) {
    auto fail = [&](const std::string& msg) {
        failures.push_back(pf.name + ":" + std::to_string(e.line) + ": expect " + e.key +
                           (e.arg.empty() ? "" : " " + e.arg) + " = " + e.value + "  -- " + msg);
    };
    const std::string what = "expect " + e.key;

    if (e.key == "free") {
        if (!ctx.freeext) return fail("no freeext task ran");
        bool want = parse_bool(e.value, what);
        if (ctx.freeext->free != want) fail("got " + std::string(ctx.freeext->free ? "true" : "false"));
    } else if (e.key == "hilbert") {
        HilbertFunction want{parse_int_list(e.value, what)};
        const HilbertFunction* got = nullptr;
        if (ctx.freeext) {
            if (e.arg == "A") got = &ctx.freeext->h_a;
            else if (e.arg == "B") got = &ctx.freeext->h_b;
            else if (e.arg == "C" || e.arg.empty()) got = &ctx.freeext->h_c;
            else if (e.arg == "tensor") got = &ctx.freeext->h_tensor;
            else return fail("unknown hilbert selector '" + e.arg + "'");
        } else if (ctx.alg) {
            if (!e.arg.empty()) return fail("hilbert selector needs a freeext task");
            got = &ctx.alg->hilbert();
        } else {
            return fail("no Hilbert function computed by this task");
        }
        if (!(*got == want)) fail("got " + hs(*got));
    } else if (e.key == "dim") {
        if (!is_integer(e.value)) return fail("bad integer");
        int want = std::stoi(e.value);
        int got = -1;
        if (ctx.freeext && (e.arg == "C" || e.arg.empty())) got = ctx.freeext->dimension.dim_c;
        else if (ctx.freeext && e.arg == "AxB") got = ctx.freeext->dimension.dim_a_times_b;
        else if (ctx.freeext && e.arg == "B") got = ctx.freeext->h_b.total();
        else if (!ctx.freeext && ctx.alg && e.arg.empty()) got = ctx.alg->total_dim();
        else return fail("no dimension computed by this task");
        if (got != want) fail("got " + std::to_string(got));
    } else if (e.key == "gens") {
        if (!ctx.ann) return fail("no annihilator computed by this task");
        const RingPtr& ring = ctx.ann->ring();
        std::vector<Poly> gens;
        for (const auto& piece : split(e.value, ',')) gens.push_back(Poly::parse(ring, piece));
        GradedIdeal want = GradedIdeal::from_generators(ring, gens, ctx.ann->bound());
        if (!want.equals(*ctx.ann)) {
            fail("ideals differ; computed minimal generators: " + gens_string(*ctx.ann));
        }
    } else if (e.key == "gendegs") {
        if (!ctx.ann) return fail("no annihilator computed by this task");
        std::vector<int> want = parse_int_list(e.value, what);
        std::vector<int> got;
        for (const auto& [d, g] : ctx.ann->minimal_generators()) got.push_back(d);
        std::sort(want.begin(), want.end());
        std::sort(got.begin(), got.end());
        if (want != got) {
            std::string s;
            for (int d : got) s += std::to_string(d) + " ";
            fail("got degrees " + s);
        }
    } else if (e.key == "ichain") {
        if (ctx.chain.empty()) return fail("no ideal chain computed by this task");
        auto pieces = split(e.value, '|');
        if (pieces.size() != ctx.chain.size()) {
            return fail("chain length is " + std::to_string(ctx.chain.size()));
        }
        const RingPtr& ring = ctx.chain.front().ring();
        for (size_t i = 0; i < pieces.size(); ++i) {
            GradedIdeal want = GradedIdeal::unit_ideal(ring, ctx.chain[i].bound());
            if (pieces[i] != "R") {
                std::vector<Poly> gens;
                for (const auto& piece : split(pieces[i], ',')) {
                    gens.push_back(Poly::parse(ring, piece));
                }
                want = GradedIdeal::from_generators(ring, gens, ctx.chain[i].bound());
            }
            if (!want.equals(ctx.chain[i])) {
                fail("I_" + std::to_string(i) +
                     " differs; computed generators: " + gens_string(ctx.chain[i]));
                return;
            }
        }
    } else if (e.key == "sufficient" || e.key == "necessary" || e.key == "squared") {
        if (!ctx.freeext) return fail("no freeext task ran");
        bool want = parse_passfail(e.value, what);
        bool got;
        if (e.key == "sufficient") got = ctx.freeext->sufficient_all;
        else if (e.key == "necessary") got = ctx.freeext->necessary_all;
        else {
            got = std::all_of(ctx.freeext->squared.begin(), ctx.freeext->squared.end(),
                              [](bool v) { return v; });
        }
        if (got != want) fail(std::string("got ") + (got ? "pass" : "fail"));
    } else if (e.key == "corollary") {
        if (!ctx.freeext) return fail("no freeext task ran");
        if (!ctx.freeext->corollary) return fail("input does not have the corollary shape");
        bool want = parse_bool(e.value, what);
        if (*ctx.freeext->corollary != want) {
            fail(std::string("got ") + (*ctx.freeext->corollary ? "true" : "false"));
        }
    } else if (e.key == "nolift") {
        if (!ctx.freeext) return fail("no freeext task ran");
        const RingPtr& r = ctx.fiber_ring;
        for (const auto& piece : split(e.value, ',')) {
            Poly want = normalized(Poly::parse(r, piece));
            bool found = false;
            for (const auto& le : ctx.freeext->lifting) {
                if (normalized(le.generator) == want) {
                    found = true;
                    if (le.witness) fail("generator " + piece + " does lift");
                }
            }
            if (!found) fail("no minimal generator matches " + piece);
        }
    } else if (e.key == "witness") {
        if (!ctx.f) return fail("no dual form to contract against");
        const RingPtr& s = ctx.f->ring();
        for (const auto& piece : split(e.value, ',')) {
            Poly w = Poly::parse(s, piece);
            if (!contract(w, *ctx.f).is_zero()) {
                fail("element " + piece + " does not annihilate F");
            }
        }
    } else if (e.key == "jordan") {
        if (!ctx.jordan) return fail("no jordan task ran");
        Partition want;
        for (int v : parse_int_list(e.value, what)) want.push_back(v);
        if (*ctx.jordan != want) fail("got " + partition_to_string(*ctx.jordan));
    } else if (e.key == "sl") {
        if (!ctx.sl) return fail("no sl task ran");
        bool want = parse_bool(e.value, what);
        bool got = ctx.sl->verdict == SLResult::Verdict::yes;
        if (got != want) fail(std::string("got ") + (got ? "yes" : "no"));
    } else if (e.key == "compressed" || e.key == "gorenstein") {
        if (!ctx.alg) return fail("no algebra computed by this task");
        bool want = parse_bool(e.value, what);
        bool got = (e.key == "compressed") ? ctx.alg->is_compressed() : ctx.alg->is_gorenstein();
        if (got != want) fail(std::string("got ") + (got ? "true" : "false"));
    } else if (e.key == "admissible") {
        if (!ctx.admissible) return fail("no admissible-g task ran");
        if (!is_integer(e.value)) return fail("bad integer");
        if (*ctx.admissible != std::stoi(e.value)) {
            fail("got " + std::to_string(*ctx.admissible));
        }
    } else if (e.key == "contains") {
        if (!ctx.ann) return fail("no annihilator computed by this task");
        for (const auto& piece : split(e.value, ',')) {
            Poly p = Poly::parse(ctx.ann->ring(), piece);
            if (!ctx.ann->contains(p)) fail("annihilator does not contain " + piece);
        }
    } else {
        fail("unknown expect key");
    }
}

json ring_json(const RingSpec& ring) {
    json vars = json::array(), weights = json::array();
    for (size_t i = 0; i < ring.var_count(); ++i) {
        vars.push_back(ring.var_name(i));
        weights.push_back(ring.weight(i));
    }
    return json{{"vars", vars},
                {"weights", weights},
                {"char", ring.field().characteristic()}};
}

}  // namespace

const DualPoly* ProblemFile::find_dual(const std::string& n) const {
    for (const auto& [name, p] : duals)
        if (name == n) return &p;
    return nullptr;
}

const Poly* ProblemFile::find_poly(const std::string& n) const {
    for (const auto& [name, p] : polys)
        if (name == n) return &p;
    return nullptr;
}

ProblemFile ProblemFile::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open problem file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str(), std::filesystem::path(path).filename().string());
}

ProblemFile ProblemFile::parse_text(std::string_view text, const std::string& name) {
    ProblemFile pf;
    pf.name = name;
    int lineno = 0;
    std::istringstream is{std::string(text)};
    std::string raw;
    while (std::getline(is, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        std::string rest = trim(line.substr(key.size()));

        if (key == "ring") {
            if (pf.ring) fail_at(name, lineno, "duplicate ring declaration");
            // names [weights w1,..] [char p]
            std::string names_part = rest;
            std::string weights_part, char_part;
            size_t wpos = rest.find(" weights ");
            size_t cpos = rest.find(" char ");
            if (wpos != std::string::npos) {
                names_part = rest.substr(0, wpos);
                size_t wend = (cpos != std::string::npos && cpos > wpos) ? cpos : rest.size();
                weights_part = trim(rest.substr(wpos + 9, wend - (wpos + 9)));
            } else if (cpos != std::string::npos) {
                names_part = rest.substr(0, cpos);
            }
            if (cpos != std::string::npos) char_part = trim(rest.substr(cpos + 6));
            std::vector<std::string> vnames;
            for (const auto& piece : split(names_part, ',')) {
                for (const auto& w : words(piece)) vnames.push_back(w);
            }
            if (vnames.empty()) fail_at(name, lineno, "ring needs variables");
            std::vector<int> weights;
            if (!weights_part.empty()) {
                try {
                    weights = parse_int_list(weights_part, "weights");
                } catch (const std::exception& ex) {
                    fail_at(name, lineno, ex.what());
                }
            }
            FieldSpec field = FieldSpec::rationals();
            if (!char_part.empty()) {
                if (!is_integer(char_part)) fail_at(name, lineno, "bad characteristic");
                long p = std::stol(char_part);
                if (p != 0) {
                    try {
                        field = FieldSpec::prime_field(static_cast<unsigned long>(p));
                    } catch (const std::exception& ex) {
                        fail_at(name, lineno, ex.what());
                    }
                }
            }
            bool last_is_t = vnames.back() == "t";
            try {
                pf.ring = RingSpec::make(vnames, weights, field, last_is_t);
            } catch (const std::exception& ex) {
                fail_at(name, lineno, ex.what());
            }
        } else if (key == "dual" || key == "poly") {
            if (!pf.ring) fail_at(name, lineno, "declare the ring before polynomials");
            size_t eq = rest.find('=');
            if (eq == std::string::npos) fail_at(name, lineno, "missing '='");
            std::string pname = trim(rest.substr(0, eq));
            std::string expr = trim(rest.substr(eq + 1));
            if (pname.empty() || !std::isalpha(static_cast<unsigned char>(pname[0]))) {
                fail_at(name, lineno, "bad polynomial name '" + pname + "'");
            }
            if (pf.find_dual(pname) || pf.find_poly(pname)) {
                fail_at(name, lineno, "duplicate polynomial name " + pname);
            }
            try {
                if (key == "dual") {
                    pf.duals.emplace_back(pname, DualPoly::parse(pf.ring, expr));
                } else {
                    pf.polys.emplace_back(pname, Poly::parse(pf.ring, expr));
                }
            } catch (const std::exception& ex) {
                fail_at(name, lineno, ex.what());
            }
        } else if (key == "task") {
            if (!pf.task.empty()) fail_at(name, lineno, "duplicate task directive");
            auto ws = words(rest);
            if (ws.empty()) fail_at(name, lineno, "task needs a name");
            static const std::vector<std::string> known{"ann",    "hilbert", "freeext",
                                                        "jordan", "sl",      "pbi",
                                                        "admissible-g"};
            if (std::find(known.begin(), known.end(), ws[0]) == known.end()) {
                fail_at(name, lineno, "unknown task '" + ws[0] + "'");
            }
            pf.task = ws[0];
            for (size_t i = 1; i < ws.size(); ++i) {
                size_t eq = ws[i].find('=');
                if (eq == std::string::npos) fail_at(name, lineno, "task arguments are key=value");
                std::string k = ws[i].substr(0, eq), v = ws[i].substr(eq + 1);
                static const std::vector<std::string> known_args{"n", "k", "bound"};
                if (std::find(known_args.begin(), known_args.end(), k) == known_args.end()) {
                    fail_at(name, lineno, "unknown task argument '" + k + "'");
                }
                if (!is_integer(v)) fail_at(name, lineno, "bad value for task argument " + k);
                pf.task_args[k] = v;
            }
        } else if (key == "expect") {
            size_t eq = rest.find('=');
            if (eq == std::string::npos) fail_at(name, lineno, "missing '=' in expect");
            auto head = words(rest.substr(0, eq));
            if (head.empty() || head.size() > 2) fail_at(name, lineno, "bad expect head");
            Expect e;
            e.key = head[0];
            if (head.size() == 2) e.arg = head[1];
            e.value = trim(rest.substr(eq + 1));
            e.line = lineno;
            static const std::vector<std::string> known{
                "free",      "hilbert",   "dim",     "gens",       "gendegs",  "ichain",
                "sufficient", "necessary", "squared", "corollary", "nolift",   "witness",
                "jordan",    "sl",        "compressed", "gorenstein", "admissible", "contains"};
            if (std::find(known.begin(), known.end(), e.key) == known.end()) {
                fail_at(name, lineno, "unknown expect key '" + e.key + "'");
            }
            pf.expects.push_back(std::move(e));
        } else if (key == "note") {
            pf.notes.push_back(rest);
        } else {
            fail_at(name, lineno, "unknown directive '" + key + "'");
        }
    }
    if (!pf.ring) fail_at(name, lineno, "missing ring declaration");
    if (pf.task.empty()) fail_at(name, lineno, "missing task directive");
    return pf;
}

RunOutcome run_problem(const ProblemFile& pf) {
    RunOutcome out;
    TaskContext ctx;
    std::ostringstream tab;
    json j;
    j["task"] = pf.task;
    j["ring"] = ring_json(*pf.ring);
    tab << "task: " << pf.task << "\n";
    tab << "ring: " << pf.ring->to_string() << "\n";

    auto require_dual = [&](const std::string& n) -> const DualPoly& {
        const DualPoly* p = pf.find_dual(n);
        if (!p) throw std::invalid_argument(pf.name + ": task " + pf.task +
                                            " needs a dual polynomial named " + n);
        return *p;
    };

    auto emit_algebra = [&](const GradedIdeal& ann, const DualPoly& f) {
        ctx.ann = ann;
        ctx.f = f;
        ctx.alg = ArtinianAlgebra::quotient(ann.ring(), ann);
        const ArtinianAlgebra& a = *ctx.alg;
        tab << "F = " << f.to_string() << "\n";
        tab << "minimal generators: " << gens_string(ann) << "\n";
        tab << "hilbert: " << a.hilbert().to_string() << "\n";
        tab << "dim: " << a.total_dim() << "  socle degree: " << a.socle_degree() << "\n";
        bool gor = a.is_gorenstein();
        tab << "gorenstein: " << (gor ? "true" : "false");
        if (gor) tab << "  compressed: " << (a.is_compressed() ? "true" : "false");
        tab << "\n";
        j["F"] = f.to_string();
        j["annihilator"] = json{{"generators", gens_json(ann)}, {"bound", ann.bound()}};
        j["hilbert"] = hilbert_json(a.hilbert());
        j["dim"] = a.total_dim();
        j["socle_degree"] = a.socle_degree();
        j["gorenstein"] = gor;
        if (gor) j["compressed"] = a.is_compressed();
        if (auto w = small_char_warning(pf.ring->field(), a.socle_degree())) {
            j["warnings"] = json::array({*w});
            tab << "warning: " << *w << "\n";
        }
    };

    if (pf.task == "ann" || pf.task == "hilbert") {
        const DualPoly& f = require_dual("F");
        std::optional<int> bound;
        if (auto it = pf.task_args.find("bound"); it != pf.task_args.end()) {
            bound = std::stoi(it->second);
        }
        emit_algebra(GradedIdeal::annihilator(f, bound), f);
    } else if (pf.task == "freeext") {
        if (!pf.ring->has_t()) {
            throw std::invalid_argument(pf.name +
                                        ": freeext needs a ring whose last variable is t");
        }
        RingPtr r = pf.ring->without_t();
        ctx.fiber_ring = r;
        std::optional<ExtensionInput> input;
        if (const DualPoly* f = pf.find_dual("F")) {
            input = expand_in_t(*f);
        } else {
            auto it = pf.task_args.find("n");
            if (it == pf.task_args.end()) {
                throw std::invalid_argument(pf.name + ": freeext needs n=<int> or a dual F");
            }
            int n = std::stoi(it->second);
            auto to_fiber = [&](const DualPoly& p, const std::string& nm) {
                if (p.t_degree() > 0) {
                    throw std::invalid_argument(pf.name + ": " + nm + " must not involve T");
                }
                return p.t_coefficient(0).lift_to(r);
            };
            DualPoly fb_r = to_fiber(require_dual("FB"), "FB");
            std::vector<DualPoly> gs;
            for (int i = 1; i <= n - 1; ++i) {
                if (const DualPoly* gi = pf.find_dual("G" + std::to_string(i))) {
                    gs.push_back(to_fiber(*gi, "G" + std::to_string(i)));
                } else {
                    gs.push_back(DualPoly(r));
                }
            }
            input = ExtensionInput{r, n, pf.ring->t_weight(), fb_r, gs};
        }
        if (auto it = pf.task_args.find("n"); it != pf.task_args.end()) {
            if (std::stoi(it->second) != input->n) {
                throw std::invalid_argument(pf.name + ": declared n disagrees with F");
            }
        }
        FreeExtReport rep = full_report(*input);
        ctx.chain = nested_ideals(*input);
        ctx.freeext = rep;
        ctx.f = rep.f;
        GradedIdeal ann = GradedIdeal::annihilator(rep.f);
        ctx.ann = ann;
        ctx.alg = ArtinianAlgebra::quotient(ann.ring(), ann);

        tab << "F = " << rep.f.to_string() << "\n";
        tab << "F_B = " << rep.fiber.to_string() << "\n";
        for (size_t i = 0; i < rep.g.size(); ++i) {
            tab << "G_" << (i + 1) << " = " << rep.g[i].to_string() << "\n";
        }
        tab << "hilbert A: " << rep.h_a.to_string() << "\n";
        tab << "hilbert B: " << rep.h_b.to_string() << "\n";
        tab << "hilbert C: " << rep.h_c.to_string() << "\n";
        tab << "hilbert A(x)B: " << rep.h_tensor.to_string() << "\n";
        tab << "Ann F: " << gens_string(ann) << "\n";
        tab << "ideal chain:";
        for (size_t i = 0; i < ctx.chain.size(); ++i) {
            tab << " I_" << i << " = (" << gens_string(ctx.chain[i]) << ")";
        }
        tab << "\n";
        auto pfx = [](const std::vector<bool>& v) {
            std::string s;
            for (bool b : v) s += b ? "pass " : "FAIL ";
            return s;
        };
        tab << "sufficient: " << pfx(rep.sufficient) << "=> "
            << (rep.sufficient_all ? "pass" : "fail") << "\n";
        tab << "necessary: " << pfx(rep.necessary) << "=> "
            << (rep.necessary_all ? "pass" : "fail") << "\n";
        tab << "squared ((I_B)^2 o G_i in R o F_B): " << pfx(rep.squared) << "\n";
        if (rep.corollary) {
            tab << "corollary ((I_B)^2 o G = 0): " << (*rep.corollary ? "true" : "false") << "\n";
        }
        tab << "lifting:\n";
        for (const auto& le : rep.lifting) {
            tab << "  " << le.generator.to_string() << " -> "
                << (le.witness ? le.witness->to_string() : std::string("no lift")) << "\n";
        }
        tab << "dimension: |C| = " << rep.dimension.dim_c
            << ", |A|*|B| = " << rep.dimension.dim_a_times_b
            << (rep.dimension.equal ? " (equal)" : " (unequal)") << "\n";
        tab << "free extension: " << (rep.free ? "true" : "false") << "\n";
        for (const auto& w : rep.warnings) tab << "warning: " << w << "\n";

        json weights = json::object();
        for (size_t i = 0; i < pf.ring->var_count(); ++i) {
            weights[pf.ring->var_name(i)] = pf.ring->weight(i);
        }
        json gj = json::array();
        for (const auto& g : rep.g) gj.push_back(g.to_string());
        json lifting = json::array();
        for (const auto& le : rep.lifting) {
            lifting.push_back(json{{"generator", le.generator.to_string()},
                                   {"witness", le.witness ? json(le.witness->to_string())
                                                          : json(nullptr)}});
        }
        json suff = json::array(), nec = json::array(), sq = json::array();
        for (bool b : rep.sufficient) suff.push_back(b);
        for (bool b : rep.necessary) nec.push_back(b);
        for (bool b : rep.squared) sq.push_back(b);
        j["n"] = rep.n;
        j["weights"] = weights;
        j["F"] = rep.f.to_string();
        j["F_B"] = rep.fiber.to_string();
        j["G"] = gj;
        j["hilbert"] = json{{"A", hilbert_json(rep.h_a)},
                            {"B", hilbert_json(rep.h_b)},
                            {"C", hilbert_json(rep.h_c)},
                            {"tensor", hilbert_json(rep.h_tensor)}};
        j["certificates"] =
            json{{"sufficient", suff},
                 {"necessary", nec},
                 {"squared", sq},
                 {"corollary", rep.corollary ? json(*rep.corollary) : json(nullptr)},
                 {"lifting", lifting},
                 {"dimension", json{{"C", rep.dimension.dim_c},
                                    {"AxB", rep.dimension.dim_a_times_b},
                                    {"equal", rep.dimension.equal}}}};
        j["free"] = rep.free;
        json warn = json::array();
        for (const auto& w : rep.warnings) warn.push_back(w);
        j["warnings"] = warn;
        j["annihilator"] = json{{"generators", gens_json(ann)}, {"bound", ann.bound()}};
    } else if (pf.task == "jordan") {
        const DualPoly& f = require_dual("F");
        const Poly* ell = pf.find_poly("ell");
        if (!ell) throw std::invalid_argument(pf.name + ": jordan needs poly ell");
        GradedIdeal ann = GradedIdeal::annihilator(f);
        ctx.ann = ann;
        ctx.f = f;
        ctx.alg = ArtinianAlgebra::quotient(ann.ring(), ann);
        ctx.jordan = jordan_type(*ctx.alg, *ell);
        Partition conj = conjugate(ctx.alg->hilbert());
        if (auto w = small_char_warning(pf.ring->field(), ctx.alg->socle_degree())) {
            j["warnings"] = json::array({*w});
            tab << "warning: " << *w << "\n";
        }
        tab << "F = " << f.to_string() << "\n";
        tab << "ell = " << ell->to_string() << "\n";
        tab << "hilbert: " << ctx.alg->hilbert().to_string() << "\n";
        tab << "jordan type: " << partition_to_string(*ctx.jordan) << "\n";
        tab << "H^vee: " << partition_to_string(conj)
            << "  (SLJT element: " << ((*ctx.jordan == conj) ? "yes" : "no") << ")\n";
        j["F"] = f.to_string();
        j["ell"] = ell->to_string();
        j["hilbert"] = hilbert_json(ctx.alg->hilbert());
        j["jordan"] = partition_json(*ctx.jordan);
        j["conjugate"] = partition_json(conj);
        j["sljt"] = (*ctx.jordan == conj);
    } else if (pf.task == "sl") {
        const DualPoly& f = require_dual("F");
        GradedIdeal ann = GradedIdeal::annihilator(f);
        ctx.ann = ann;
        ctx.f = f;
        ctx.alg = ArtinianAlgebra::quotient(ann.ring(), ann);
        ctx.sl = is_strong_lefschetz(*ctx.alg);
        const SLResult& sl = *ctx.sl;
        if (auto w = small_char_warning(pf.ring->field(), ctx.alg->socle_degree())) {
            j["warnings"] = json::array({*w});
            tab << "warning: " << *w << "\n";
        }
        std::string verdict = sl.verdict == SLResult::Verdict::yes
                                  ? "yes"
                                  : (sl.verdict == SLResult::Verdict::vacuous_no ? "no (vacuous)"
                                                                                 : "no");
        tab << "F = " << f.to_string() << "\n";
        tab << "hilbert: " << ctx.alg->hilbert().to_string() << "\n";
        tab << "strong Lefschetz: " << verdict << (sl.sampled_only ? " (sampled)" : "") << "\n";
        if (sl.witness) tab << "witness: " << sl.witness->to_string() << "\n";
        if (!sl.detail.empty()) tab << "detail: " << sl.detail << "\n";
        j["F"] = f.to_string();
        j["hilbert"] = hilbert_json(ctx.alg->hilbert());
        j["verdict"] = verdict;
        j["sampled_only"] = sl.sampled_only;
        j["witness"] = sl.witness ? json(sl.witness->to_string()) : json(nullptr);
        j["expected"] = partition_json(sl.expected);
        j["detail"] = sl.detail;
    } else if (pf.task == "pbi") {
        const DualPoly& theta = require_dual("THETA");
        auto it = pf.task_args.find("k");
        if (it == pf.task_args.end()) throw std::invalid_argument(pf.name + ": pbi needs k=<int>");
        int k = std::stoi(it->second);
        std::vector<Poly> hsv;
        for (int i = 1;; ++i) {
            const Poly* hi = pf.find_poly("h" + std::to_string(i));
            if (!hi) break;
            hsv.push_back(*hi);
        }
        DualPoly f = pbi_dual_generator(theta, hsv, k);
        tab << "theta = " << theta.to_string() << "\n";
        emit_algebra(GradedIdeal::annihilator(f), f);
        j["k"] = k;
        j["theta"] = theta.to_string();
    } else if (pf.task == "admissible-g") {
        const DualPoly& fb = require_dual("FB");
        ctx.admissible = admissible_g_dimension(fb);
        tab << "F_B = " << fb.to_string() << "\n";
        tab << "admissible G dimension: " << *ctx.admissible << "\n";
        j["F_B"] = fb.to_string();
        j["dimension"] = *ctx.admissible;
    } else {
        throw std::invalid_argument(pf.name + ": unhandled task " + pf.task);
    }

    for (const auto& e : pf.expects) check_one(pf, e, ctx, out.failures);
    json ej;
    ej["checked"] = pf.expects.size();
    json fj = json::array();
    for (const auto& f : out.failures) fj.push_back(f);
    ej["failures"] = fj;
    j["expects"] = ej;
    if (!pf.notes.empty()) {
        json nj = json::array();
        for (const auto& n : pf.notes) nj.push_back(n);
        j["notes"] = nj;
    }

    if (!pf.expects.empty()) {
        tab << "expects: " << (pf.expects.size() - out.failures.size()) << "/"
            << pf.expects.size() << " ok\n";
        for (const auto& f : out.failures) tab << "MISMATCH " << f << "\n";
    }

    out.exit_code = out.failures.empty() ? 0 : 1;
    out.table = tab.str();
    out.json = std::move(j);
    return out;
}

CorpusSummary run_corpus(const std::string& dir, int jobs) {
    CorpusSummary sum;
    std::vector<std::filesystem::path> files;
    if (!std::filesystem::exists(dir)) {
        throw std::invalid_argument("corpus directory " + dir + " does not exist");
    }
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".gx") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    sum.total = static_cast<int>(files.size());
    std::ostringstream text;
    if (files.empty()) {
        text << "warning: 0 entries in " << dir << "\n";
        sum.text = text.str();
        return sum;
    }
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    jobs = std::min<int>(jobs, static_cast<int>(files.size()));

    std::vector<std::string> results(files.size());
    std::vector<std::pair<bool, std::string>> verdicts(files.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (size_t i = next.fetch_add(1); i < files.size(); i = next.fetch_add(1)) {
            std::string fname = files[i].filename().string();
            try {
                ProblemFile pf = ProblemFile::parse_file(files[i].string());
                RunOutcome out = run_problem(pf);
                if (out.exit_code == 0) {
                    verdicts[i] = {true, ""};
                } else {
                    std::string why;
                    for (const auto& f : out.failures) why += (why.empty() ? "" : "; ") + f;
                    verdicts[i] = {false, why};
                }
            } catch (const std::exception& ex) {
                verdicts[i] = {false, std::string("error: ") + ex.what()};
            }
            results[i] = fname;
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    for (size_t i = 0; i < files.size(); ++i) {
        if (verdicts[i].first) {
            ++sum.passed;
            text << "PASS " << results[i] << "\n";
        } else {
            sum.failures.emplace_back(results[i], verdicts[i].second);
            text << "FAIL " << results[i] << ": " << verdicts[i].second << "\n";
        }
    }
    text << sum.passed << "/" << sum.total << " corpus entries passed\n";
    sum.text = text.str();
    return sum;
}

}  // namespace gorext
