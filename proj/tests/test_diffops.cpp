#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmacdo/diffops.hpp"

using namespace qmacdo;

TEST_CASE("shift algebra") {
    FieldCtx F = FieldCtx::symbolic();
    VarTable vt(1, 1);
    int x1 = vt.var(Bank::X, 1), y1 = vt.var(Bank::Y, 1);
    Shift s = q_shift(x1, 2) + t_shift(y1, -1);
    CHECK(!s.is_identity());
    CHECK((q_shift(x1, 1) + q_shift(x1, -1)).is_identity());
    // action on monomials: x1^2 picks up q^4
    Poly f = Poly::var(x1, 2);
    Poly g = apply_shift(f, s, F);
    CHECK((Rat(g) - Rat(F.qt(4, 0)) * Rat(f)).is_zero());
    // rational shift keeps the denominator factored
    Rat r(Poly(QQ(1)));
    r.div_factor(Poly::var(x1) - Poly::var(y1));
    Rat rs = apply_shift(r, s, F);
    CHECK(rs.den_factors().size() == 1);
    Rat back = rs * (Rat(F.qt(2, 0)) * Rat(Poly::var(x1)) - Rat(F.qt(0, -1)) * Rat(Poly::var(y1)));
    CHECK((back - Rat(QQ(1))).is_zero());
}

TEST_CASE("operator normal form") {
    FieldCtx F = FieldCtx::symbolic();
    VarTable vt(1, 0);
    int x1 = vt.var(Bank::X, 1);
    DiffOp a = DiffOp::from_term(q_shift(x1, 1), Rat(F.t()));
    a.add(q_shift(x1, 1), -Rat(F.t()));
    CHECK(a.is_zero());
    DiffOp b = DiffOp::from_term(q_shift(x1, 1), Rat(QQ(1)));
    DiffOp c = compose(b, b, F);
    CHECK(c.size() == 1);
    CHECK(c.terms().begin()->first == q_shift(x1, 2));
    // composition applies the outer shift to the inner coefficient
    DiffOp d = DiffOp::from_term(Shift{}, Rat(Poly::var(x1)));
    DiffOp bd = compose(b, d, F);
    CHECK((bd.terms().begin()->second - Rat(F.q()) * Rat(Poly::var(x1))).is_zero());
    DiffOp db = compose(d, b, F);
    CHECK((db.terms().begin()->second - Rat(Poly::var(x1))).is_zero());
}

TEST_CASE("classical one bank coefficients") {
    FieldCtx F = FieldCtx::symbolic();
    VarTable vt(1, 0);
    for (int r = 0; r <= 3; ++r) {
        DiffOp H = classical_H_coeff(r, 1, Bank::X, F, vt);
        REQUIRE(H.size() == 1);
        auto& [s, c] = *H.terms().begin();
        CHECK(s.qs.e[vt.var(Bank::X, 1)] == r);
        CHECK(s.ts.is_unit());
        CHECK((c - poch_ratio(F.t(), F.q(), r)).is_zero());
    }
    CHECK(classical_D_coeff(0, 1, Bank::X, F, vt) == DiffOp::identity());
    DiffOp D1 = classical_D_coeff(1, 1, Bank::X, F, vt);
    REQUIRE(D1.size() == 1);
    CHECK((D1.terms().begin()->second + Rat(QQ(1))).is_zero());
}

TEST_CASE("classical eigenfunctions") {
    FieldCtx F = FieldCtx::symbolic();
    VarTable vt(3, 0);
    ParamPair pp = params_qt(F);
    for (auto lam : {Partition{2, 1}, Partition{3}, Partition{1, 1, 1}}) {
        Rat P = macdonald_P(lam, Bank::X, 3, pp, vt);
        Rat got = classical_D_coeff(1, 3, Bank::X, F, vt).apply(P, F);
        FieldElem ev;
        for (int i = 1; i <= 3; ++i) ev += F.qt(part(lam, i), 3 - i);
        CHECK((got + ev * P).is_zero());
    }
}

TEST_CASE("deformed operator units") {
    FieldCtx F = FieldCtx::symbolic();
    VarTable vt(1, 1);
    CHECK((B_coeff({0}, {}, 1, 1, F, vt) - Rat(QQ(1))).is_zero());
    CHECK((A_coeff({}, {0}, 1, 1, F, vt) - Rat(QQ(1))).is_zero());
    CHECK(deformed_NS(0, 1, 1, F, vt) == DiffOp::identity());
    CHECK(deformed_MR(0, 1, 1, F, vt) == DiffOp::identity());
    CHECK(deformed_MR_direct(0, 1, 1, F, vt) == DiffOp::identity());
    CHECK(deformed_MR(1, 1, 1, F, vt).size() == 3);
}

TEST_CASE("dual construction routes agree") {
    FieldCtx F = FieldCtx::symbolic();
    {
        VarTable vt(1, 1);
        for (int r = 1; r <= 2; ++r)
            CHECK((deformed_MR(r, 1, 1, F, vt) - deformed_MR_direct(r, 1, 1, F, vt)).is_zero());
    }
    {
        VarTable vt(2, 1);
        CHECK((deformed_MR(1, 2, 1, F, vt) - deformed_MR_direct(1, 2, 1, F, vt)).is_zero());
    }
}

TEST_CASE("classical gauge of the two bank family at m=0") {
    FieldCtx F = FieldCtx::symbolic();
    VarTable vt(2, 0);
    for (int r = 0; r <= 2; ++r) {
        DiffOp lhs = deformed_ns_generic(r, Bank::X, 2, Bank::Y, 0, {1, 0}, {0, 1}, F, vt);
        DiffOp rhs;
        for (int s = 0; s <= r; ++s) {
            DiffOp hk = classical_H_coeff(r - s, 2, Bank::X, F, vt);
            hk.scale(F.qt(0, (1 - 2) * (r - s)));
            hk.scale(poch_ratio(F.qt(0, -2), F.q(), s) * F.qt(0, s));
            rhs += hk;
        }
        CHECK((lhs - rhs).is_zero());
    }
}

TEST_CASE("commutators vanish structurally") {
    FieldCtx F = FieldCtx::symbolic();
    VarTable vt(1, 1);
    DiffOp H1 = deformed_NS(1, 1, 1, F, vt);
    DiffOp H2 = deformed_NS(2, 1, 1, F, vt);
    DiffOp M1 = deformed_MR(1, 1, 1, F, vt);
    CHECK(certify_zero(commutator(H1, H2, F), ZeroCert::Coefficients, F, vt));
    CHECK(commutator(H1, M1, F).is_zero());
    CHECK(commutator(H1, hat_NS(1, 1, 1, F, vt), F).is_zero());
    FieldCtx E = FieldCtx::eval(QQ(3, 5), QQ(2, 7));
    VarTable vte(1, 1);
    CHECK(commutator(deformed_NS(1, 1, 1, E, vte), deformed_MR(2, 1, 1, E, vte), E).is_zero());
}

TEST_CASE("hatted operators invert parameters and rescale y") {
    FieldCtx F = FieldCtx::symbolic();
    VarTable vt(1, 1);
    int y1 = vt.var(Bank::Y, 1);
    DiffOp direct = deformed_ns_generic(1, Bank::X, 1, Bank::Y, 1, {-1, 0}, {0, -1}, F, vt);
    DiffOp hat = hat_NS(1, 1, 1, F, vt);
    CHECK(hat.size() == direct.size());
    for (auto& [s, c] : direct.terms()) {
        auto it = hat.terms().find(s);
        REQUIRE(it != hat.terms().end());
        CHECK((it->second - c.scale_var(y1, QQ(1), 1, 1)).is_zero());
    }
}

TEST_CASE("zero certificates agree and locate failures") {
    FieldCtx F = FieldCtx::symbolic();
    VarTable vt(1, 1);
    DiffOp H1 = deformed_NS(1, 1, 1, F, vt);
    DiffOp M1 = deformed_MR(1, 1, 1, F, vt);
    DiffOp Z = commutator(H1, M1, F);
    std::string where;
    CHECK(certify_zero(Z, ZeroCert::Coefficients, F, vt));
    CHECK(certify_zero(Z, ZeroCert::Specialization, F, vt, &where));
    // perturb the zero operator: both modes must reject, specialization names a pivot
    int x1 = vt.var(Bank::X, 1);
    DiffOp nz = Z + DiffOp::from_term(q_shift(x1, 1), Rat(F.one() - F.qt(1, 1)));
    CHECK(!nz.is_zero());
    CHECK(!certify_zero(nz, ZeroCert::Coefficients, F, vt));
    CHECK(!certify_zero(nz, ZeroCert::Specialization, F, vt, &where));
    CHECK(!where.empty());
}
