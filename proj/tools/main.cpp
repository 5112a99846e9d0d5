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

#include <CLI11.hpp>
#include <iostream>
#include <set>
#include <sstream>

#include "gorext/problemfile.hpp"

namespace {

using namespace gorext;

struct CommonOpts {
    std::string vars;     // comma list; inferred from the expressions when empty
    std::string weights;  // comma list, default all 1
    long characteristic = 0;
    int t_weight = 1;
    bool json_out = false;
    std::optional<int> bound;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_t_weight) {
    cmd->add_option("--vars", o.vars, "comma-separated variable names (inferred when omitted)");
    cmd->add_option("--weights", o.weights, "comma-separated positive weights, default all 1");
    cmd->add_option("--char", o.characteristic, "field characteristic, 0 = rationals")
        ->default_val(0);
    if (with_t_weight) {
        cmd->add_option("--t-weight", o.t_weight, "weight of the t-variable")->default_val(1);
    }
    cmd->add_flag("--json", o.json_out, "emit a JSON report instead of the table");
    cmd->add_option("--bound", o.bound, "override the ideal degree bound");
}

// Pull variable names out of expressions: dual names are lowercased,
// alphabetical order, `t` forced last.
std::vector<std::string> infer_vars(const std::vector<std::string>& exprs) {
    std::set<std::string> names;
    for (const auto& e : exprs) {
        for (size_t i = 0; i < e.size();) {
            if (std::isalpha(static_cast<unsigned char>(e[i])) || e[i] == '_') {
                size_t j = i;
                while (j < e.size() &&
                       (std::isalnum(static_cast<unsigned char>(e[j])) || e[j] == '_')) {
                    ++j;
                }
                std::string w = e.substr(i, j - i);
                for (char& c : w) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
                names.insert(w);
                i = j;
            } else {
                ++i;
            }
        }
    }
    std::vector<std::string> out(names.begin(), names.end());  // alphabetical
    auto it = std::find(out.begin(), out.end(), "t");
    if (it != out.end()) {
        out.erase(it);
        out.push_back("t");
    }
    return out;
}

// Build a problem file in memory and run it through the shared pipeline.
int run_text(const std::string& text, bool json_out) {
    ProblemFile pf = ProblemFile::parse_text(text, "<cli>");
    RunOutcome out = run_problem(pf);
    if (json_out) {
        std::cout << out.json.dump(2) << "\n";
    } else {
        std::cout << out.table;
    }
    return out.exit_code;
}

std::string ring_line(const CommonOpts& o, const std::vector<std::string>& exprs, bool need_t) {
    std::vector<std::string> vars;
    if (!o.vars.empty()) {
        std::istringstream is(o.vars);
        std::string piece;
        while (std::getline(is, piece, ',')) {
            while (!piece.empty() && piece.front() == ' ') piece.erase(piece.begin());
            while (!piece.empty() && piece.back() == ' ') piece.pop_back();
            if (!piece.empty()) vars.push_back(piece);
        }
    } else {
        vars = infer_vars(exprs);
    }
    if (need_t) {
        auto it = std::find(vars.begin(), vars.end(), "t");
        if (it != vars.end()) vars.erase(it);
        vars.push_back("t");
    }
    if (vars.empty()) throw std::invalid_argument("no variables given or inferable");
    std::ostringstream os;
    os << "ring ";
    for (size_t i = 0; i < vars.size(); ++i) os << (i ? ", " : "") << vars[i];
    if (!o.weights.empty()) {
        os << " weights " << o.weights;
    } else if (need_t && o.t_weight != 1) {
        std::string w;
        for (size_t i = 0; i + 1 < vars.size(); ++i) w += "1,";
        w += std::to_string(o.t_weight);
        os << " weights " << w;
    }
    os << " char " << o.characteristic;
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "gorext: exact Macaulay-duality kernel for Artinian Gorenstein algebras,\n"
        "free extensions over k[t]/(t^n), and Lefschetz/Jordan-type analysis"};
    app.require_subcommand(1);

    // ann ------------------------------------------------------------------
    CommonOpts ann_o;
    std::string ann_dual;
    auto* ann = app.add_subcommand("ann", "annihilator ideal and quotient of a dual form");
    ann->add_option("--dual", ann_dual, "dual polynomial F")->required();
    add_common(ann, ann_o, false);

    // hilbert ----------------------------------------------------------------
    CommonOpts hil_o;
    std::string hil_dual;
    auto* hil = app.add_subcommand("hilbert", "Hilbert function of S/Ann(F)");
    hil->add_option("--dual", hil_dual, "dual polynomial F")->required();
    add_common(hil, hil_o, false);

    // freeext ----------------------------------------------------------------
    CommonOpts fx_o;
    int fx_n = 0;
    std::string fx_f, fx_fb;
    std::vector<std::string> fx_g(9);
    auto* fx = app.add_subcommand("freeext",
                                  "free-extension certificates for F = T^[n-1]F_B + ... + G_{n-1}");
    fx->add_option("--n", fx_n, "n with A = k[t]/(t^n)");
    fx->add_option("--f", fx_f, "assembled dual generator F over Q_R[T] (alternative input)");
    fx->add_option("--fb", fx_fb, "fiber dual generator F_B");
    for (int i = 1; i <= 9; ++i) {
        fx->add_option("--g" + std::to_string(i), fx_g[i - 1],
                       "form G_" + std::to_string(i) + " (omit for zero)");
    }
    add_common(fx, fx_o, true);

    // jordan -----------------------------------------------------------------
    CommonOpts jo_o;
    std::string jo_dual, jo_ell;
    auto* jo = app.add_subcommand("jordan", "Jordan type of multiplication by ell on R/Ann(F)");
    jo->add_option("--dual", jo_dual, "dual polynomial F")->required();
    jo->add_option("--ell", jo_ell, "element of the maximal ideal (may be non-homogeneous)")
        ->required();
    add_common(jo, jo_o, false);

    // sl ---------------------------------------------------------------------
    CommonOpts sl_o;
    std::string sl_dual;
    auto* sl = app.add_subcommand("sl", "strong Lefschetz decision for R/Ann(F)");
    sl->add_option("--dual", sl_dual, "dual polynomial F")->required();
    add_common(sl, sl_o, false);

    // pbi --------------------------------------------------------------------
    CommonOpts pbi_o;
    int pbi_k = 1;
    std::string pbi_theta;
    std::vector<std::string> pbi_h(9);
    auto* pbi = app.add_subcommand("pbi",
                                   "projective-bundle dual generator F = theta T^[k] + ...");
    pbi->add_option("--theta", pbi_theta, "base dual form theta")->required();
    pbi->add_option("--k", pbi_k, "fiber dimension k")->required();
    for (int i = 1; i <= 9; ++i) {
        pbi->add_option("--h" + std::to_string(i), pbi_h[i - 1],
                        "degree-" + std::to_string(i) + " form h_" + std::to_string(i));
    }
    add_common(pbi, pbi_o, false);

    // admissible-g -------------------------------------------------------------
    CommonOpts ad_o;
    std::string ad_fb;
    auto* ad = app.add_subcommand("admissible-g",
                                  "dimension of {G : (I_B)^2 o G = 0} in degree j_B + 1");
    ad->add_option("--fb", ad_fb, "fiber dual generator F_B")->required();
    add_common(ad, ad_o, false);

    // run / corpus --------------------------------------------------------------
    std::string run_path;
    bool run_json = false;
    auto* run = app.add_subcommand("run", "run a problem file");
    run->add_option("file", run_path, "problem file (.gx)")->required();
    run->add_flag("--json", run_json, "emit a JSON report");

    std::string corpus_dir;
    int corpus_jobs = 0;
    auto* corpus = app.add_subcommand("corpus", "replay every problem file in a directory");
    corpus->add_option("dir", corpus_dir, "directory of .gx files")->required();
    corpus->add_option("--jobs", corpus_jobs, "max concurrent entries (0 = auto)")->default_val(0);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*ann || *hil) {
            const CommonOpts& o = *ann ? ann_o : hil_o;
            const std::string& dual = *ann ? ann_dual : hil_dual;
            std::ostringstream text;
            text << ring_line(o, {dual}, false) << "\n";
            text << "dual F = " << dual << "\n";
            text << "task " << (*ann ? "ann" : "hilbert");
            if (o.bound) text << " bound=" << *o.bound;
            text << "\n";
            return run_text(text.str(), o.json_out);
        }
        if (*fx) {
            std::ostringstream text;
            std::vector<std::string> exprs;
            if (!fx_f.empty()) exprs.push_back(fx_f);
            if (!fx_fb.empty()) exprs.push_back(fx_fb);
            for (const auto& g : fx_g)
                if (!g.empty()) exprs.push_back(g);
            if (exprs.empty()) throw std::invalid_argument("freeext needs --f or --fb");
            text << ring_line(fx_o, exprs, true) << "\n";
            if (!fx_f.empty()) {
                text << "dual F = " << fx_f << "\n";
            } else {
                if (fx_fb.empty()) throw std::invalid_argument("freeext needs --fb (or --f)");
                if (fx_n < 1) throw std::invalid_argument("freeext needs --n");
                text << "dual FB = " << fx_fb << "\n";
                for (int i = 1; i <= 9; ++i) {
                    if (!fx_g[i - 1].empty()) {
                        text << "dual G" << i << " = " << fx_g[i - 1] << "\n";
                    }
                }
            }
            text << "task freeext";
            if (fx_n >= 1) text << " n=" << fx_n;
            text << "\n";
            return run_text(text.str(), fx_o.json_out);
        }
        if (*jo) {
            std::ostringstream text;
            text << ring_line(jo_o, {jo_dual, jo_ell}, false) << "\n";
            text << "dual F = " << jo_dual << "\n";
            text << "poly ell = " << jo_ell << "\n";
            text << "task jordan\n";
            return run_text(text.str(), jo_o.json_out);
        }
        if (*sl) {
            std::ostringstream text;
            text << ring_line(sl_o, {sl_dual}, false) << "\n";
            text << "dual F = " << sl_dual << "\n";
            text << "task sl\n";
            return run_text(text.str(), sl_o.json_out);
        }
        if (*pbi) {
            std::ostringstream text;
            std::vector<std::string> exprs{pbi_theta};
            for (const auto& h : pbi_h)
                if (!h.empty()) exprs.push_back(h);
            text << ring_line(pbi_o, exprs, false) << "\n";
            text << "dual THETA = " << pbi_theta << "\n";
            for (int i = 1; i <= 9; ++i) {
                if (!pbi_h[i - 1].empty()) text << "poly h" << i << " = " << pbi_h[i - 1] << "\n";
            }
            text << "task pbi k=" << pbi_k << "\n";
            return run_text(text.str(), pbi_o.json_out);
        }
        if (*ad) {
            std::ostringstream text;
            text << ring_line(ad_o, {ad_fb}, false) << "\n";
            text << "dual FB = " << ad_fb << "\n";
            text << "task admissible-g\n";
            return run_text(text.str(), ad_o.json_out);
        }
        if (*run) {
            ProblemFile pf = ProblemFile::parse_file(run_path);
            RunOutcome out = run_problem(pf);
            if (run_json) {
                std::cout << out.json.dump(2) << "\n";
            } else {
                std::cout << out.table;
            }
            return out.exit_code;
        }
        if (*corpus) {
            CorpusSummary sum = run_corpus(corpus_dir, corpus_jobs);
            std::cout << sum.text;
            return sum.failures.empty() ? 0 : 1;
        }
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::out_of_range& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
