#include "qmacdo/superpoly.hpp"

namespace qmacdo {

bool is_bisymmetric(BiSymPoly& p, const VarTable& vt) {
    for (int i = 1; i < p.n; ++i) {
        Rat g = swap_vars(p.f, vt.var(Bank::X, i), vt.var(Bank::X, i + 1));
        if (g != p.f) return false;
    }
    for (int j = 1; j < p.m; ++j) {
        Rat g = swap_vars(p.f, vt.var(Bank::Y, j), vt.var(Bank::Y, j + 1));
        if (g != p.f) return false;
    }
    p.checked_symmetric = true;
    return true;
}

bool is_in_Lambda_nm(BiSymPoly& p, const FieldCtx& F, const VarTable& vt) {
    if (!is_bisymmetric(p, vt)) return false;
    for (int i = 1; i <= p.n; ++i)
        for (int j = 1; j <= p.m; ++j) {
            int xi = vt.var(Bank::X, i), yj = vt.var(Bank::Y, j);
            Rat g = apply_shift(p.f, q_shift(xi, 1), F) - apply_shift(p.f, t_shift(yj, -1), F);
            Rat on_diag = g.substitute(xi, Rat::from_term(mono_of(yj), QQ(1)));
            if (!on_diag.is_zero()) return false;
        }
    p.checked_quasi_invariant = true;
    return true;
}

BiSymPoly super_P_generic(const Partition& lam, Bank bx, int n, Bank by, int m,
                          const ParamPair& pp, const ParamPair& ppd, const FieldElem& tbase,
                          const FieldCtx& F, const VarTable& vt) {
    Rat acc;
    for (auto& nu : subpartitions(lam)) {
        Partition nuc = conjugate(nu);
        if (length(nuc) > m) continue;
        Rat skew = skew_P(lam, nu, bx, n, pp, vt);
        if (skew.is_zero()) continue;
        Rat qpart = macdonald_Q(nuc, by, m, ppd, vt);
        int w = weight(nu);
        FieldElem c = tbase.pow(w);
        if (w % 2) c = -c;
        acc += c * skew * qpart;
    }
    return {acc, n, m, false, false};
}

BiSymPoly super_P(const Partition& lam, int n, int m, const FieldCtx& F, const VarTable& vt) {
    return super_P_generic(lam, Bank::X, n, Bank::Y, m, params_qt(F), params_tq(F), F.t(), F,
                           vt);
}

BiSymPoly super_Q(const Partition& lam, int n, int m, const FieldCtx& F, const VarTable& vt) {
    BiSymPoly p = super_P(lam, n, m, F, vt);
    p.f = b_lambda(lam, params_qt(F)) * p.f;
    return p;
}

BiSymPoly super_P_double(const Partition& lam, int n, int m, const FieldCtx& F,
                         const VarTable& vt) {
    ParamPair pp = params_qt(F), ppd = params_tq(F);
    Rat acc;
    for (auto& nu : subpartitions(lam)) {
        Partition nuc = conjugate(nu);
        if (length(nuc) > m) continue;
        Rat qpart = macdonald_Q(nuc, Bank::Y, m, ppd, vt);
        int w = weight(nu);
        FieldElem c = F.t().pow(w);
        if (w % 2) c = -c;
        for (auto& mu : partitions_of_weight(weight(lam) - w)) {
            if (length(mu) > n) continue;
            const PartCoeffs& lr = lr_coefficients(mu, nu, pp);
            auto it = lr.find(lam);
            if (it == lr.end() || it->second.is_zero()) continue;
            acc += c * it->second * macdonald_P(mu, Bank::X, n, pp, vt) * qpart;
        }
    }
    return {acc, n, m, false, false};
}

BiSymPoly deformed_newton_sum(int r, int n, int m, const FieldCtx& F, const VarTable& vt) {
    Rat out(power_sum_poly(r, Bank::X, n, vt));
    FieldElem cr = (F.one() - F.qt(r, 0)) / (F.one() - F.qt(0, -r));
    out += cr * Rat(power_sum_poly(r, Bank::Y, m, vt));
    return {out, n, m, false, false};
}

BiSymPoly phi_restriction(const PartCoeffs& pc, int n, int m, const FieldCtx& F,
                          const VarTable& vt) {
    Rat acc;
    for (auto& [lam, c] : pc) {
        Rat prod(QQ(1));
        for (int part : lam) prod *= deformed_newton_sum(part, n, m, F, vt).f;
        acc += c * prod;
    }
    return {acc, n, m, false, false};
}

} // namespace qmacdo
