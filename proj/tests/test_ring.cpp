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

#include "gorext/duality.hpp"
#include "oracles.hpp"

using namespace gorext;

namespace {
const FieldSpec QQ = FieldSpec::rationals();
}

TEST_SUITE("ring") {
    TEST_CASE("ordinary multiplication") {
        auto r = RingSpec::make({"x", "y"}, {1, 1}, QQ);
        CHECK(Poly::parse(r, "x+y") * Poly::parse(r, "x-y") == Poly::parse(r, "x^2-y^2"));
        CHECK((Poly(r) * Poly::parse(r, "x+y")).is_zero());

        // e1*e2 in three variables, expanded termwise by the oracle below
        auto r3 = RingSpec::make({"x1", "x2", "x3"}, {1, 1, 1}, QQ);
        Poly e1 = Poly::parse(r3, "x1+x2+x3");
        Poly e2 = Poly::parse(r3, "x1*x2 + x1*x3 + x2*x3");
        Poly expect(r3);
        for (const auto& [m1, c1] : e1.terms()) {
            for (const auto& [m2, c2] : e2.terms()) {
                Monomial m(3);
                for (int i = 0; i < 3; ++i) m.exps[i] = m1.exps[i] + m2.exps[i];
                expect.add_term(m, c1 * c2);
            }
        }
        Poly prod = e1 * e2;
        CHECK(prod == expect);
        CHECK(prod.term_count() == 7);  // six x_i^2 x_j monomials plus 3*x1x2x3
        CHECK(prod.homogeneous_degree() == 3);
    }

    TEST_CASE("divided-power multiplication carries binomial constants") {
        auto r = RingSpec::make({"x", "y"}, {1, 1}, QQ);
        auto X = DualPoly::variable(r, 0);
        auto Y = DualPoly::variable(r, 1);
        CHECK((X * X) == DualPoly::parse(r, "2*X^[2]"));
        // binom(4,2) computed independently from Pascal's rule
        int pascal[5][5] = {};
        for (int n = 0; n <= 4; ++n) {
            pascal[n][0] = 1;
            for (int k = 1; k <= n; ++k) {
                pascal[n][k] = pascal[n - 1][k - 1] + (k <= n - 1 ? pascal[n - 1][k] : 0);
            }
        }
        auto X2 = DualPoly::parse(r, "X^[2]");
        CHECK(X2 * X2 ==
              DualPoly::parse(r, std::to_string(pascal[4][2]) + "*X^[4]"));
        CHECK((X * Y) == DualPoly::parse(r, "X*Y"));
        auto f5 = FieldSpec::prime_field(5);
        auto r5 = RingSpec::make({"x"}, {1}, f5);
        auto x2 = DualPoly::parse(r5, "X^[2]");
        CHECK(x2 * x2 == DualPoly::parse(r5, "X^[4]"));  // 6 = 1 mod 5
    }

    TEST_CASE("contraction matches the defining rule") {
        auto s = RingSpec::make({"x", "y", "t"}, {1, 1, 1}, QQ, true);
        auto f = DualPoly::parse(s, "X*Y*T + X^[3]");
        CHECK(contract(Poly::parse(s, "x*y"), f) == DualPoly::parse(s, "T"));
        CHECK(contract(Poly::parse(s, "x^2"), DualPoly::parse(s, "X^[3]")) ==
              DualPoly::parse(s, "X"));
        // termwise application of the definition
        auto r = RingSpec::make({"x", "y"}, {1, 1}, QQ);
        auto g = Poly::parse(r, "x^2+y^2");
        auto h = DualPoly::parse(r, "X^[2]+Y^[2]");
        CHECK(contract(g, h) == DualPoly::parse(r, "2"));
        CHECK(contract(Poly::parse(r, "x"), DualPoly::parse(r, "Y^[3]")).is_zero());
    }

    TEST_CASE("contraction is an R-module action") {
        std::mt19937 rng(7);
        auto r = RingSpec::make({"x", "y", "z"}, {1, 1, 1}, QQ);
        for (int i = 0; i < 25; ++i) {
            Poly g = testing::random_poly(r, 1 + (i % 2), rng, true);
            Poly h = testing::random_poly(r, 1, rng, true);
            DualPoly f = testing::random_dual(r, 4, rng, true);
            CHECK(contract(g * h, f) == contract(g, contract(h, f)));
            CHECK(contract(g, contract(h, f)) == contract(h, contract(g, f)));
        }
    }

    TEST_CASE("monomial-level duality pairing is a delta") {
        auto r = RingSpec::make({"x", "y"}, {1, 2}, QQ);
        for (int d = 0; d <= 4; ++d) {
            auto basis = r->monomial_basis(d);
            for (const auto& m : basis) {
                for (const auto& mm : basis) {
                    auto res = contract(Poly::monomial(r, m, Scalar::one(QQ)),
                                        DualPoly::monomial(r, mm, Scalar::one(QQ)));
                    if (m == mm) {
                        CHECK(res == DualPoly::parse(r, "1"));
                    } else {
                        CHECK(res.is_zero());
                    }
                }
            }
        }
    }

    TEST_CASE("derivative basis conversion") {
        auto r = RingSpec::make({"x", "y"}, {1, 1}, QQ);
        // the factor is 3! = 6; dividing keeps the functional fixed, so the
        // contraction/differentiation square below commutes
        CHECK(DualPoly::parse(r, "X^[3]").to_derivative_basis() ==
              DualPoly::parse(r, "1/6*X^3"));
        CHECK(DualPoly::parse(r, "X*Y").to_derivative_basis() == DualPoly::parse(r, "X*Y"));
        std::mt19937 rng(11);
        for (int i = 0; i < 20; ++i) {
            DualPoly f = testing::random_dual(r, 3, rng, true);
            CHECK(f.to_derivative_basis().from_derivative_basis() == f);
            Poly g = testing::random_poly(r, 1 + i % 2, rng, true);
            CHECK(contract(g, f).to_derivative_basis() ==
                  contract_derivative(g, f.to_derivative_basis()));
        }
        auto f3 = FieldSpec::prime_field(3);
        auto r3 = RingSpec::make({"x"}, {1}, f3);
        CHECK_THROWS_AS(DualPoly::parse(r3, "X^[4]").to_derivative_basis(), std::domain_error);
    }

    TEST_CASE("annihilator agrees between contraction and differentiation in char 0") {
        // worked dual forms, each converted to the ordinary-power view and
        // annihilated with the partial-differentiation action instead
        auto check_one = [](const RingPtr& ring, const std::string& text) {
            DualPoly f = DualPoly::parse(ring, text);
            GradedIdeal ann = GradedIdeal::annihilator(f);
            DualPoly fd = f.to_derivative_basis();
            for (int d = 0; d <= ann.bound(); ++d) {
                for (const Poly& g : ann.piece_basis(d)) {
                    CHECK(contract_derivative(g, fd).is_zero());
                }
                // dimension must match as well: kernel of the derivative map
                auto cols = ring->monomial_basis(d);
                if (cols.empty()) continue;
                auto rows = ring->monomial_basis(std::max(f.degree() - d, -1));
                if (f.degree() - d < 0) continue;
                Matrix m(rows.size(), cols.size(), ring->field());
                for (size_t j = 0; j < cols.size(); ++j) {
                    auto img = contract_derivative(
                        Poly::monomial(ring, cols[j], Scalar::one(ring->field())), fd);
                    auto co = coordinates(img, rows);
                    for (size_t i = 0; i < rows.size(); ++i) m.at(i, j) = co[i];
                }
                CHECK(static_cast<int>(kernel_basis(m).size()) == ann.dim_piece(d));
            }
        };
        auto r2 = RingSpec::make({"x", "y"}, {1, 1}, QQ);
        auto s = RingSpec::make({"x", "y", "t"}, {1, 1, 1}, QQ, true);
        check_one(r2, "X^[2]+Y^[2]");
        check_one(r2, "X*Y^[4]");
        check_one(s, "X*Y*T + X^[3]");
        check_one(s, "X^[2]*T^[2] + X^[2]*Y*T");
    }

    TEST_CASE("weighted degrees") {
        auto s = RingSpec::make({"x", "y", "t"}, {1, 1, 2}, QQ, true);
        CHECK(DualPoly::parse(s, "T*X*Y").homogeneous_degree() == 4);
        auto r = RingSpec::make({"x", "y"}, {1, 1}, QQ);
        CHECK(!Poly::parse(r, "x + y^2").homogeneous_degree().has_value());
        auto s1 = RingSpec::make({"x", "y", "t"}, {1, 1, 1}, QQ, true);
        CHECK(DualPoly::parse(s1, "T^[2]*X*Y + T*X^[3] + X^[2]*Y^[2]").homogeneous_degree() == 4);
    }

    TEST_CASE("monomial bases are complete, ordered, duplicate-free") {
        auto r = RingSpec::make({"x", "y"}, {1, 1}, QQ);
        auto b = r->monomial_basis(2);
        REQUIRE(b.size() == 3);
        CHECK(Poly::monomial(r, b[0], Scalar::one(QQ)).to_string() == "x^2");
        CHECK(Poly::monomial(r, b[1], Scalar::one(QQ)).to_string() == "x*y");
        CHECK(Poly::monomial(r, b[2], Scalar::one(QQ)).to_string() == "y^2");
        auto w = RingSpec::make({"x", "y"}, {1, 2}, QQ);
        auto bw = w->monomial_basis(2);
        REQUIRE(bw.size() == 2);
        CHECK(Poly::monomial(w, bw[0], Scalar::one(QQ)).to_string() == "x^2");
        CHECK(Poly::monomial(w, bw[1], Scalar::one(QQ)).to_string() == "y");
        auto s = RingSpec::make({"x", "y", "t"}, {1, 1, 1}, QQ, true);
        CHECK(s->monomial_basis(0).size() == 1);
        // d-th piece sizes match the stars-and-bars count in the standard case
        auto r3 = RingSpec::make({"a", "b", "c"}, {1, 1, 1}, QQ);
        CHECK(r3->dim_piece(4) == 15);
    }

    TEST_CASE("print/parse round-trip on random polynomials") {
        std::mt19937 rng(13);
        auto r = RingSpec::make({"x", "y", "t"}, {1, 1, 2}, QQ, true);
        for (int i = 0; i < 40; ++i) {
            DualPoly f = testing::random_dual(r, 2 + (i % 4), rng, true);
            CHECK(DualPoly::parse(r, f.to_string()) == f);
            Poly g = testing::random_poly(r, 1 + (i % 4), rng, true);
            CHECK(Poly::parse(r, g.to_string()) == g);
        }
        auto f5 = FieldSpec::prime_field(5);
        auto r5 = RingSpec::make({"x", "y"}, {1, 1}, f5);
        std::mt19937 rng2(17);
        for (int i = 0; i < 20; ++i) {
            DualPoly f = testing::random_dual(r5, 3, rng2, true);
            CHECK(DualPoly::parse(r5, f.to_string()) == f);
        }
    }

    TEST_CASE("parser rejects malformed input with positions") {
        auto r = RingSpec::make({"x", "y"}, {1, 1}, QQ);
        CHECK_THROWS_AS(Poly::parse(r, "x + z"), std::invalid_argument);
        CHECK_THROWS_AS(Poly::parse(r, "x ++ y"), std::invalid_argument);
        CHECK_THROWS_AS(Poly::parse(r, ""), std::invalid_argument);
        CHECK_THROWS_AS(DualPoly::parse(r, "X*X"), std::invalid_argument);
        CHECK_THROWS_AS(Poly::parse(r, "x^"), std::invalid_argument);
        CHECK_THROWS_AS(DualPoly::parse(r, "X^[2"), std::invalid_argument);
        // dual shorthand: X^3 means the divided power X^[3]
        CHECK(DualPoly::parse(r, "X^3") == DualPoly::parse(r, "X^[3]"));
    }

    TEST_CASE("ring structure guards") {
        CHECK_THROWS_AS(RingSpec::make({"x", "x"}, {1, 1}, QQ), std::invalid_argument);
        CHECK_THROWS_AS(RingSpec::make({"x"}, {0}, QQ), std::invalid_argument);
        CHECK_THROWS_AS(RingSpec::make({}, {}, QQ), std::invalid_argument);
        auto s = RingSpec::make({"x", "y", "t"}, {1, 1, 2}, QQ, true);
        CHECK(s->t_index() == 2);
        CHECK(s->t_weight() == 2);
        auto r = s->without_t();
        CHECK(r->var_count() == 2);
        CHECK(!r->has_t());
        CHECK(r->with_t(2)->same(*s));
        // mixed-ring operands
        auto other = RingSpec::make({"x", "y"}, {1, 1}, QQ);
        CHECK_THROWS_AS(Poly::parse(other, "x") * Poly::parse(s, "x"),
                        std::invalid_argument);
    }
}
