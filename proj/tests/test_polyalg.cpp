#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmacdo/polyalg.hpp"

using namespace qmacdo;

TEST_CASE("u-series arithmetic") {
    FieldCtx F = FieldCtx::symbolic();
    USeries<FieldElem> a(3), b(3);
    a[0] = F.one();
    a[1] = F.q();
    b[0] = F.one();
    b[1] = -F.q();
    USeries<FieldElem> prod = a * b;
    CHECK((prod[0] - F.one()).is_zero());
    CHECK(prod[1].is_zero());
    CHECK((prod[2] + F.qt(2, 0)).is_zero());
    CHECK(prod[3].is_zero());
    USeries<FieldElem> r = a.rescaled(F.t());
    CHECK((r[1] - F.qt(1, 1)).is_zero());
    CHECK((r[0] - a[0]).is_zero());
}

TEST_CASE("truncated series respects degree") {
    FieldCtx F = FieldCtx::symbolic();
    VarTable vt(1, 0, 1, 0);
    Mono z1 = mono_of(vt.var(Bank::Z, 1));
    TruncSeries s = series_binomial(z1, F.one(), 2);
    TruncSeries sq = s * s;
    CHECK((sq.coeff(z1) - Rat(QQ(2))).is_zero());
    CHECK((sq.coeff(z1 + z1) - Rat(QQ(1))).is_zero());
    TruncSeries cut = sq.truncated(1);
    CHECK(cut.coeff(z1 + z1).is_zero());
    // keys past the degree are dropped on add
    TruncSeries t(1);
    t.add(z1 + z1, Rat(QQ(5)));
    CHECK(t.is_zero());
}

TEST_CASE("q-binomial series") {
    FieldCtx F = FieldCtx::symbolic();
    VarTable vt(1, 0, 1, 0);
    Mono g = mono_of(vt.var(Bank::X, 1)) + mono_of(vt.var(Bank::Z, 1));
    // (t g; q)_inf / (g; q)_inf expands with poch ratio coefficients
    TruncSeries s = q_binomial_series(F.t(), F.q(), g, F.one(), 3, vt);
    Mono z1 = mono_of(vt.var(Bank::Z, 1));
    for (int k = 0; k <= 3; ++k) {
        Mono key;
        for (int i = 0; i < k; ++i) key = key + z1;
        Rat c = s.coeff(key);
        Rat want = Rat(poch_ratio(F.t(), F.q(), k)) *
                   Rat::from_term(mono_of(vt.var(Bank::X, 1), k), QQ(1));
        CHECK((c - want).is_zero());
    }
    // geometric gauge: 1/(1-g)
    TruncSeries geo = geometric_series(g, F.one(), 2, vt);
    TruncSeries dif = geo * series_binomial(g, -F.one(), 2);
    CHECK((dif - series_one(2)).is_zero());
}

TEST_CASE("series times polynomial") {
    FieldCtx F = FieldCtx::symbolic();
    VarTable vt(1, 0, 1, 0);
    Mono z1 = mono_of(vt.var(Bank::Z, 1));
    TruncSeries s = series_binomial(z1, F.one(), 2);
    Poly p = Poly(QQ(1)) - Poly::var(vt.var(Bank::Z, 1));
    TruncSeries prod = s.mul_poly(p, vt);
    CHECK(prod.coeff(z1).is_zero());
    CHECK((prod.coeff(Mono{}) - Rat(QQ(1))).is_zero());
}

TEST_CASE("series keys split off the xy part") {
    VarTable vt(1, 0, 1, 0);
    Mono mixed = mono_of(vt.var(Bank::X, 1), 2) + mono_of(vt.var(Bank::Z, 1), 3);
    Mono zw, rest;
    split_series_mono(mixed, vt, zw, rest);
    CHECK(zw == mono_of(vt.var(Bank::Z, 1), 3));
    CHECK(rest == mono_of(vt.var(Bank::X, 1), 2));
}

TEST_CASE("bank coefficient extraction") {
    FieldCtx F = FieldCtx::symbolic();
    VarTable vt(2, 0);
    int x1 = vt.var(Bank::X, 1), x2 = vt.var(Bank::X, 2);
    Rat f = Rat(Poly::var(x1) * Poly::var(x2)) * Rat(F.t()) + Rat(Poly::var(x1));
    Rat c = bank_coefficient(f, mono_of(x1) + mono_of(x2));
    CHECK((c - Rat(F.t())).is_zero());
    CHECK(bank_coefficient(f, mono_of(x2)).is_zero());
}

TEST_CASE("variable swap") {
    VarTable vt(2, 0);
    int x1 = vt.var(Bank::X, 1), x2 = vt.var(Bank::X, 2);
    Rat f(Poly::var(x1, 2));
    f.div_factor(Poly::var(x1) - Poly::var(x2));
    Rat g = swap_vars(f, x1, x2);
    Rat sum = f + g;
    // antisymmetric denominator: f + swap(f) = (x1^2 - x2^2)/(x1 - x2) = x1 + x2
    CHECK((sum - Rat(Poly::var(x1) + Poly::var(x2))).is_zero());
    CHECK((swap_vars(g, x1, x2) - f).is_zero());
}

TEST_CASE("truncation guard") {
    FieldCtx F = FieldCtx::symbolic();
    VarTable vt(1, 0, 1, 0);
    Mono z1 = mono_of(vt.var(Bank::Z, 1));
    TruncSeries a = series_binomial(z1, F.one(), 3);
    TruncSeries b = series_binomial(z1, F.one(), 2);
    CHECK_THROWS_AS(a + b, TruncationTooSmall);
}
