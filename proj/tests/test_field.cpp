#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmacdo/field.hpp"

using namespace qmacdo;

TEST_CASE("symbolic scalars") {
    FieldCtx F = FieldCtx::symbolic();
    CHECK(F.is_symbolic());
    FieldElem a = F.qt(2, -1, QQ(3, 2));
    FieldElem b = F.qt(2, 0) * F.qt(0, -1) * F.rational(QQ(3, 2));
    CHECK((a - b).is_zero());
    CHECK((F.one() - F.qt(0, 0)).is_zero());
    CHECK(F.zero().is_zero());
    CHECK((F.q() * F.qt(-1, 0) - F.one()).is_zero());
}

TEST_CASE("eval scalars match symbolic substitution") {
    FieldCtx F = FieldCtx::symbolic();
    FieldCtx E = FieldCtx::eval(QQ(2, 3), QQ(5, 2));
    FieldElem s = (F.one() - F.t()) / (F.one() - F.qt(2, 1));
    FieldElem sv = s.eval_params(QQ(2, 3), QQ(5, 2));
    FieldElem ev = (E.one() - E.t()) / (E.one() - E.qt(2, 1));
    CHECK((sv - ev).is_zero());
    CHECK(E.qt_value(2, 1) == QQ(4, 9) * QQ(5, 2));
}

TEST_CASE("qpochhammer") {
    FieldCtx F = FieldCtx::symbolic();
    FieldElem a = F.t(), q = F.q();
    CHECK((qpochhammer(a, q, 0) - F.one()).is_zero());
    FieldElem p2 = (F.one() - a) * (F.one() - a * q);
    CHECK((qpochhammer(a, q, 2) - p2).is_zero());
    // (a;q)_{-k} (a q^{-k};q)_k = 1
    FieldElem neg = qpochhammer(a, q, -2);
    FieldElem pos = qpochhammer(a * F.qt(-2, 0), q, 2);
    CHECK((neg * pos - F.one()).is_zero());
    // poch ratio denominator
    FieldElem pr = poch_ratio(a, q, 2);
    CHECK((pr * qpochhammer(q, q, 2) - qpochhammer(a, q, 2)).is_zero());
}

TEST_CASE("special parameter detection") {
    CHECK(is_non_special(QQ(2, 3), QQ(5, 2), 8));
    CHECK(!is_non_special(QQ(1), QQ(5, 2), 8));
    // q^2 t = 1 at q = 2, t = 1/4
    CHECK(!is_non_special(QQ(2), QQ(1, 4), 8));
    CHECK(!is_non_special(QQ(0), QQ(3), 8));
    std::mt19937_64 rng(7);
    FieldCtx E = random_eval_ctx(rng, 40);
    CHECK(is_non_special(E.q0(), E.t0(), 40));
}

TEST_CASE("linear solve") {
    FieldCtx F = FieldCtx::symbolic();
    std::vector<std::vector<FieldElem>> M = {{F.one(), F.q()}, {F.t(), F.one()}};
    std::vector<FieldElem> rhs = {F.one() + F.qt(1, 1), F.t() + F.t()};
    auto x = solve_linear(M, rhs);
    CHECK((x[0] - F.one()).is_zero());
    CHECK((x[1] - F.t()).is_zero());
    std::vector<std::vector<FieldElem>> S = {{F.one(), F.one()}, {F.one(), F.one()}};
    CHECK_THROWS_AS(solve_linear(S, rhs), SpecialParams);
}

TEST_CASE("field text") {
    FieldCtx F = FieldCtx::symbolic();
    CHECK(field_to_string(F.one()) == "1");
    CHECK(field_to_string(FieldCtx::eval(QQ(2, 3), QQ(5, 2)).q()) == "2/3");
}
