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

#include "gorext/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gorext {

namespace {

std::string dual_of(const std::string& name) {
    std::string d = name;
    for (char& c : d) {
        if (std::isalpha(static_cast<unsigned char>(c))) {
            c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
            break;
        }
    }
    return d;
}

}  // namespace

RingPtr RingSpec::make(std::vector<std::string> names, std::vector<int> weights, FieldSpec field,
                       bool last_is_t) {
    if (names.empty()) throw std::invalid_argument("ring needs at least one variable");
    if (weights.empty()) weights.assign(names.size(), 1);
    if (weights.size() != names.size()) {
        throw std::invalid_argument("variable/weight count mismatch");
    }
    for (int w : weights) {
        if (w < 1) throw std::invalid_argument("variable weights must be >= 1");
    }
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty()) throw std::invalid_argument("empty variable name");
        if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name " + n);
    }
    auto r = std::shared_ptr<RingSpec>(new RingSpec());
    r->names_ = std::move(names);
    r->weights_ = std::move(weights);
    r->field_ = field;
    r->has_t_ = last_is_t;
    r->dual_names_.reserve(r->names_.size());
    std::set<std::string> dual_seen;
    for (const auto& n : r->names_) {
        std::string d = dual_of(n);
        if (!dual_seen.insert(d).second) {
            throw std::invalid_argument("dual variable name collision for " + n);
        }
        r->dual_names_.push_back(std::move(d));
    }
    return r;
}

size_t RingSpec::t_index() const {
    if (!has_t_) throw std::logic_error("ring has no distinguished t-variable");
    return names_.size() - 1;
}

int RingSpec::t_weight() const { return weights_[t_index()]; }

int RingSpec::max_weight() const {
    int w = 1;
    for (int x : weights_) w = std::max(w, x);
    return w;
}

int RingSpec::index_of(std::string_view name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

int RingSpec::dual_index_of(std::string_view name) const {
    for (size_t i = 0; i < dual_names_.size(); ++i)
        if (dual_names_[i] == name) return static_cast<int>(i);
    return -1;
}

RingPtr RingSpec::without_t() const {
    size_t ti = t_index();
    std::vector<std::string> names(names_.begin(), names_.begin() + ti);
    std::vector<int> weights(weights_.begin(), weights_.begin() + ti);
    return make(std::move(names), std::move(weights), field_, false);
}

RingPtr RingSpec::with_t(int t_weight) const {
    if (has_t_) throw std::logic_error("ring already has a t-variable");
    std::vector<std::string> names = names_;
    std::vector<int> weights = weights_;
    names.push_back("t");
    weights.push_back(t_weight);
    return make(std::move(names), std::move(weights), field_, true);
}

int RingSpec::weighted_degree(const Monomial& m) const {
    if (m.exps.size() != names_.size()) throw std::invalid_argument("monomial arity mismatch");
    int d = 0;
    for (size_t i = 0; i < m.exps.size(); ++i) d += weights_[i] * m.exps[i];
    return d;
}

bool RingSpec::monomial_less(const Monomial& a, const Monomial& b) const {
    int da = weighted_degree(a), db = weighted_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.exps.begin(), a.exps.end(), b.exps.begin(),
                                        b.exps.end());
}

std::vector<Monomial> RingSpec::monomial_basis(int d) const {
    std::vector<Monomial> out;
    if (d < 0) return out;
    Monomial cur(var_count());
    // enumerate exponents with sum of w_i*e_i = d
    auto rec = [&](auto&& self, size_t i, int rem) -> void {
        if (i + 1 == var_count()) {
            if (rem % weights_[i] == 0) {
                cur.exps[i] = rem / weights_[i];
                out.push_back(cur);
                cur.exps[i] = 0;
            }
            return;
        }
        for (int e = rem / weights_[i]; e >= 0; --e) {
            cur.exps[i] = e;
            self(self, i + 1, rem - e * weights_[i]);
        }
        cur.exps[i] = 0;
    };
    rec(rec, 0, d);
    // descending graded-lex; equal degree throughout, so sort by exponents
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return monomial_less(b, a); });
    return out;
}

int RingSpec::dim_piece(int d) const { return static_cast<int>(monomial_basis(d).size()); }

bool RingSpec::same(const RingSpec& other) const {
    return names_ == other.names_ && weights_ == other.weights_ && field_ == other.field_ &&
           has_t_ == other.has_t_;
}

std::string RingSpec::to_string() const {
    std::ostringstream os;
    os << field_.to_string() << "[";
    for (size_t i = 0; i < names_.size(); ++i) {
        if (i) os << ",";
        os << names_[i];
    }
    os << "]";
    bool nonstd = false;
    for (int w : weights_)
        if (w != 1) nonstd = true;
    if (nonstd) {
        os << " weights(";
        for (size_t i = 0; i < weights_.size(); ++i) {
            if (i) os << ",";
            os << weights_[i];
        }
        os << ")";
    }
    return os.str();
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a.get() == b.get()) return;
    if (!a || !b || !a->same(*b)) {
        throw std::invalid_argument("operands live in different rings");
    }
}

}  // namespace gorext
