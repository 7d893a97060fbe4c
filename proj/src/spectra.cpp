#include "qmacdo/spectra.hpp"

#include "qmacdo/macdonald.hpp"

namespace qmacdo {

namespace {

FieldElem pshift(const FieldCtx& F, ShiftParam s, int e) { return F.qt(s.qe * e, s.te * e); }

FieldElem pshift2(const FieldCtx& F, ShiftParam qp, ShiftParam tp, int a, int b) {
    return F.qt(qp.qe * a + tp.qe * b, qp.te * a + tp.te * b);
}

USeries<Rat> uone(int order) {
    USeries<Rat> s(order);
    s[0] = Rat(QQ(1));
    return s;
}

// (ratio * outer * u; base)_inf / (outer * u; base)_inf expanded as
// sum_s [prod_{k<s} (1 - base^k ratio)] / (base;base)_s * (outer u)^s
USeries<Rat> upair(const Rat& ratio, const Rat& outer, ShiftParam base, int order,
                   const FieldCtx& F) {
    USeries<Rat> out(order);
    Rat poch(QQ(1));
    Rat opow(QQ(1));
    FieldElem bfac = F.one();
    for (int s = 0; s <= order; ++s) {
        if (s > 0) {
            poch = poch * (Rat(QQ(1)) - ratio * pshift(F, base, s - 1));
            opow = opow * outer;
            bfac = bfac * (F.one() - pshift(F, base, s));
        }
        out[s] = poch * opow / bfac;
    }
    return out;
}

USeries<Rat> ufinite(const Rat& c, int order) {
    USeries<Rat> out(order);
    out[0] = Rat(QQ(1));
    if (order >= 1) out[1] = -c;
    return out;
}

USeries<Rat> ugeom(const Rat& c, int order) {
    USeries<Rat> out(order);
    Rat p(QQ(1));
    for (int s = 0; s <= order; ++s) {
        out[s] = p;
        if (s < order) p = p * c;
    }
    return out;
}

USeries<FieldElem> sone(int order, const FieldCtx& F) {
    USeries<FieldElem> s(order);
    s[0] = F.one();
    return s;
}

// scalar version: sum_s poch_ratio(a, base, s) (outer u)^s
USeries<FieldElem> spair(const FieldElem& a, const FieldElem& outer, const FieldElem& base,
                         int order, const FieldCtx& F) {
    USeries<FieldElem> out(order);
    FieldElem opow = F.one();
    for (int s = 0; s <= order; ++s) {
        out[s] = poch_ratio(a, base, s) * opow;
        if (s < order) opow = opow * outer;
    }
    return out;
}

USeries<FieldElem> sfinite(const FieldElem& c, int order, const FieldCtx& F) {
    USeries<FieldElem> out(order);
    out[0] = F.one();
    if (order >= 1) out[1] = -c;
    return out;
}

USeries<FieldElem> sgeom(const FieldElem& c, int order, const FieldCtx& F) {
    USeries<FieldElem> out(order);
    FieldElem p = F.one();
    for (int s = 0; s <= order; ++s) {
        out[s] = p;
        if (s < order) p = p * c;
    }
    return out;
}

Rat bank_var(const VarTable& vt, Bank b, int i, int exp = 1) {
    return Rat::from_term(mono_of(vt.var(b, i), exp), QQ(1));
}

int z_degree(const Mono& mo, const VarTable& vt) {
    int d = 0;
    for (int i = 1; i <= vt.size(Bank::Z); ++i) d += mo.e[vt.var(Bank::Z, i)];
    return d;
}

int z_degree_max(const Rat& f, const VarTable& vt) {
    int d = 0;
    for (const auto& [mo, c] : f.num().terms()) d = std::max(d, z_degree(mo, vt));
    return d;
}

void require_param_den(const Rat& f, const char* who) {
    for (const auto& [fp, mult] : f.den_factors()) {
        (void)mult;
        for (const auto& [mo, c] : fp.terms()) {
            (void)c;
            if (!mo.params_only()) throw std::logic_error(std::string(who) + ": denominator involves bank variables");
        }
    }
}

// terms of the numerator with total z-degree d, over the same denominator
Rat z_graded_piece(const Rat& f, int d, const VarTable& vt) {
    require_param_den(f, "z_graded_piece");
    Poly top;
    for (const auto& [mo, c] : f.num().terms())
        if (z_degree(mo, vt) == d) top.add_term(mo, c);
    Rat out(top);
    for (const auto& [fp, mult] : f.den_factors()) out.div_factor(fp, mult);
    return out;
}

Poly d_poly(const Poly& p, int slot) {
    Poly out;
    for (const auto& [mo, c] : p.terms()) {
        int e = mo.e[slot];
        if (e == 0) continue;
        Mono m2 = mo;
        m2.e[slot] = static_cast<int16_t>(e - 1);
        out.add_term(m2, c * QQ(e));
    }
    return out;
}

Rat d_rat(const Rat& f, int slot) {
    require_param_den(f, "d_rat");
    Rat out(d_poly(f.num(), slot));
    for (const auto& [fp, mult] : f.den_factors()) out.div_factor(fp, mult);
    return out;
}

Rat det_rat(std::vector<std::vector<Rat>> M) {
    size_t n = M.size();
    if (n == 0) return Rat(QQ(1));
    if (n == 1) return M[0][0];
    Rat acc;
    for (size_t r = 0; r < n; ++r) {
        if (M[r][0].is_zero()) continue;
        std::vector<std::vector<Rat>> minor;
        minor.reserve(n - 1);
        for (size_t i = 0; i < n; ++i) {
            if (i == r) continue;
            minor.emplace_back(M[i].begin() + 1, M[i].end());
        }
        Rat term = M[r][0] * det_rat(std::move(minor));
        if (r % 2) acc -= term;
        else acc += term;
    }
    return acc;
}

// simultaneous (a, b) -> (ca * b_old, cb * a_old) with ca, cb powers of q, t
Rat twisted_swap(const Rat& f, int a, int b, int qa, int ta, int qb, int tb) {
    Rat g = f.scale_var(a, QQ(1), qa, ta).scale_var(b, QQ(1), qb, tb);
    return swap_vars(g, a, b);
}

}  // namespace

SpectralVector spectral_vector(const Partition& lam, int n, int m, const FieldCtx& F) {
    Partition mu, nu;
    hook_split(n, m, lam, mu, nu);
    SpectralVector sv;
    for (int i = 1; i <= n; ++i) sv.xs.push_back(F.qt(part(mu, i), 0));
    for (int j = 1; j <= m; ++j) sv.ys.push_back(F.qt(0, -part(nu, j) - n));
    return sv;
}

USeries<Rat> g_natural_series_generic(int order, Bank bx, int n, Bank by, int m,
                                      ShiftParam qp, ShiftParam tp, const FieldCtx& F,
                                      const VarTable& vt) {
    USeries<Rat> acc = uone(order);
    for (int i = 1; i <= n; ++i) {
        Rat xi = bank_var(vt, bx, i);
        Rat xinv = bank_var(vt, bx, i, -1);
        acc = acc * upair(xi, Rat(pshift(F, tp, 2 - i)), qp, order, F);
        acc = acc * upair(xinv, xi * pshift(F, tp, 1 - i), qp, order, F);
    }
    for (int j = 1; j <= m; ++j) {
        Rat yj = bank_var(vt, by, j);
        acc = acc * ufinite(yj * pshift2(F, qp, tp, j - 1, 1), order);
        acc = acc * ugeom(Rat(pshift2(F, qp, tp, j - 1, 1 - n)), order);
    }
    return acc;
}

USeries<Rat> g_natural_series(int order, int n, int m, const FieldCtx& F, const VarTable& vt) {
    return g_natural_series_generic(order, Bank::X, n, Bank::Y, m, ShiftParam{1, 0},
                                    ShiftParam{0, 1}, F, vt);
}

USeries<Rat> e_natural_series(int order, int n, int m, const FieldCtx& F, const VarTable& vt) {
    ShiftParam tinv{0, -1};
    USeries<Rat> acc = uone(order);
    for (int i = 1; i <= n; ++i) {
        Rat xi = bank_var(vt, Bank::X, i);
        acc = acc * ufinite(xi * F.qt(0, 1 - i), order);
        acc = acc * ugeom(Rat(F.qt(0, 1 - i)), order);
    }
    for (int j = 1; j <= m; ++j) {
        Rat yj = bank_var(vt, Bank::Y, j);
        Rat yinv = bank_var(vt, Bank::Y, j, -1);
        acc = acc * upair(yinv * F.qt(0, -n), yj * F.qt(j, 0), tinv, order, F);
        acc = acc * upair(yj * F.qt(0, n), Rat(F.qt(j - 1, -n)), tinv, order, F);
    }
    return acc;
}

BiSymPoly G_natural_coeff(int r, int n, int m, const FieldCtx& F, const VarTable& vt) {
    return BiSymPoly{g_natural_series(r, n, m, F, vt)[r], n, m, false, false};
}

BiSymPoly E_natural_coeff(int r, int n, int m, const FieldCtx& F, const VarTable& vt) {
    Rat c = e_natural_series(r, n, m, F, vt)[r];
    if (r % 2) c = -c;
    return BiSymPoly{c, n, m, false, false};
}

USeries<FieldElem> script_G(const Partition& lam, int order, const FieldCtx& F) {
    USeries<FieldElem> acc = sone(order, F);
    for (int i = 1; i <= length(lam); ++i) {
        int li = part(lam, i);
        acc = acc * spair(F.qt(li, 0), F.qt(0, 2 - i), F.q(), order, F);
        acc = acc * spair(F.qt(-li, 0), F.qt(li, 1 - i), F.q(), order, F);
    }
    return acc;
}

USeries<FieldElem> script_G_hook(const Partition& lam, int n, int m, int order,
                                 const FieldCtx& F) {
    Partition mu, nu;
    hook_split(n, m, lam, mu, nu);
    USeries<FieldElem> acc = sone(order, F);
    for (int i = 1; i <= n; ++i) {
        int mi = part(mu, i);
        acc = acc * spair(F.qt(mi, 0), F.qt(0, 2 - i), F.q(), order, F);
        acc = acc * spair(F.qt(-mi, 0), F.qt(mi, 1 - i), F.q(), order, F);
    }
    for (int j = 1; j <= m; ++j) {
        acc = acc * sfinite(F.qt(j - 1, 1 - part(nu, j) - n), order, F);
        acc = acc * sgeom(F.qt(j - 1, 1 - n), order, F);
    }
    return acc;
}

FieldElem eval_at_spectral(const Rat& f, const SpectralVector& sv, const FieldCtx& F,
                           const VarTable& vt) {
    Rat g = f;
    for (size_t i = 0; i < sv.xs.size(); ++i)
        g = g.substitute(vt.var(Bank::X, static_cast<int>(i) + 1), sv.xs[i]);
    for (size_t j = 0; j < sv.ys.size(); ++j)
        g = g.substitute(vt.var(Bank::Y, static_cast<int>(j) + 1), sv.ys[j]);
    if (!g.params_only()) throw std::logic_error("eval_at_spectral: residual bank variables");
    (void)F;
    return g;
}

USeries<FieldElem> series_at_spectral(const USeries<Rat>& s, const SpectralVector& sv,
                                      const FieldCtx& F, const VarTable& vt) {
    USeries<FieldElem> out(s.order());
    for (int r = 0; r <= s.order(); ++r) out[r] = eval_at_spectral(s[r], sv, F, vt);
    return out;
}

BiSymPoly p_natural(int r, int n, int m, const FieldCtx& F, const VarTable& vt) {
    Rat acc;
    for (int i = 1; i <= n; ++i)
        acc += (bank_var(vt, Bank::X, i, r) - Rat(QQ(1))) * F.qt(0, r * (1 - i));
    FieldElem c = (F.one() - F.qt(r, 0)) / (F.one() - F.qt(0, -r));
    for (int j = 1; j <= m; ++j)
        acc += c * (bank_var(vt, Bank::Y, j, r) - Rat(F.qt(0, -r * n))) * F.qt(r * (j - 1), 0);
    return BiSymPoly{acc, n, m, false, false};
}

bool wronski_scalar_check(int k, int n, int m, const FieldCtx& F, const VarTable& vt) {
    USeries<Rat> gs = g_natural_series(k, n, m, F, vt);
    USeries<Rat> es = e_natural_series(k, n, m, F, vt);
    Rat acc;
    for (int r = 0; r <= k; ++r) {
        int s = k - r;
        // es[r] already carries the sign (-1)^r
        acc += Rat(F.one() - F.qt(s, r)) * es[r] * gs[s];
    }
    return acc.is_zero();
}

bool newton_check(int r, int n, int m, const FieldCtx& F, const VarTable& vt) {
    USeries<Rat> es = e_natural_series(r, n, m, F, vt);
    std::vector<Rat> e(r + 1);
    for (int j = 0; j <= r; ++j) e[j] = (j % 2) ? -es[j] : es[j];
    Rat rhs;
    for (int s = 1; s <= r; ++s) {
        Rat term = p_natural(s, n, m, F, vt).f * e[r - s];
        if (s % 2 == 0) rhs -= term;
        else rhs += term;
    }
    Rat lhs = e[r] * Rat(QQ(r));
    return (lhs - rhs).is_zero();
}

bool is_shifted_symmetric(const ShiftedSymPoly& g, const FieldCtx& F, const VarTable& vt) {
    (void)F;
    for (int i = 1; i < g.N; ++i) {
        int a = vt.var(Bank::Z, i);
        int b = vt.var(Bank::Z, i + 1);
        // (z_i, z_{i+1}) -> (z_{i+1}/t, t z_i)
        if (!(twisted_swap(g.f, a, b, 0, -1, 0, 1) - g.f).is_zero()) return false;
    }
    return true;
}

bool is_shifted_bisymmetric(const Rat& f, int n, int m, const FieldCtx& F,
                            const VarTable& vt) {
    (void)F;
    for (int i = 1; i < n; ++i) {
        int a = vt.var(Bank::X, i);
        int b = vt.var(Bank::X, i + 1);
        if (!(twisted_swap(f, a, b, 0, -1, 0, 1) - f).is_zero()) return false;
    }
    for (int j = 1; j < m; ++j) {
        int a = vt.var(Bank::Y, j);
        int b = vt.var(Bank::Y, j + 1);
        // (y_j, y_{j+1}) -> (q y_{j+1}, y_j/q)
        if (!(twisted_swap(f, a, b, 1, 0, -1, 0) - f).is_zero()) return false;
    }
    return true;
}

bool quasi_invariant_shifted(const Rat& f, int n, int m, const FieldCtx& F,
                             const VarTable& vt) {
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= m; ++j) {
            int xi = vt.var(Bank::X, i);
            int yj = vt.var(Bank::Y, j);
            Rat g = apply_shift(f, q_shift(xi, 1), F) - apply_shift(f, t_shift(yj, -1), F);
            Rat diag = Rat::from_term(mono_of(yj), QQ(1)) * F.qt(j - 1, i - 1);
            if (!g.substitute(xi, diag).is_zero()) return false;
        }
    }
    return true;
}

USeries<Rat> g_star_series(int order, int N, const FieldCtx& F, const VarTable& vt) {
    return g_natural_series_generic(order, Bank::Z, N, Bank::W, 0, ShiftParam{1, 0},
                                    ShiftParam{0, 1}, F, vt);
}

ShiftedSymPoly shifted_g_star(int r, int N, const FieldCtx& F, const VarTable& vt) {
    return ShiftedSymPoly{g_star_series(r, N, F, vt)[r], N, r};
}

ShiftedSymPoly shifted_p_star(int r, int N, const FieldCtx& F, const VarTable& vt) {
    Rat acc;
    for (int i = 1; i <= N; ++i)
        acc += (bank_var(vt, Bank::Z, i, r) - Rat(QQ(1))) * F.qt(0, r * (1 - i));
    return ShiftedSymPoly{acc, N, r};
}

bool g_star_explog_check(int order, int N, const FieldCtx& F, const VarTable& vt) {
    USeries<Rat> L(order);
    for (int r = 1; r <= order; ++r) {
        FieldElem c = (F.one() - F.qt(0, r)) / (F.one() - F.qt(r, 0));
        L[r] = shifted_p_star(r, N, F, vt).f * c * Rat(QQ(1, r));
    }
    USeries<Rat> E(order);
    E[0] = Rat(QQ(1));
    for (int k = 1; k <= order; ++k) {
        Rat s;
        for (int j = 1; j <= k; ++j) s += L[j] * E[k - j] * Rat(QQ(j));
        E[k] = s * Rat(QQ(1, k));
    }
    USeries<Rat> G = g_star_series(order, N, F, vt);
    for (int k = 0; k <= order; ++k)
        if (!(E[k] - G[k]).is_zero()) return false;
    return true;
}

PartCoeffs pstar_coordinates(const ShiftedSymPoly& g, const FieldCtx& F, const VarTable& vt) {
    if (g.N > vt.size(Bank::Z)) throw RankError("pstar_coordinates: table has too few z variables");
    if (g.N < g.deg) throw RankError("pstar_coordinates: need at least deg variables");
    PartCoeffs coords;
    Rat rem = g.f;
    int d = z_degree_max(rem, vt);
    while (d >= 1) {
        Rat top = z_graded_piece(rem, d, vt);
        // untwist z_i -> t^{i-1} z_i, then read ordinary power-sum coordinates
        for (int i = 2; i <= g.N; ++i) top = top.scale_var(vt.var(Bank::Z, i), QQ(1), 0, i - 1);
        PartCoeffs pc = m_to_p(to_m_basis(top, Bank::Z, g.N, vt));
        for (const auto& [lam, c] : pc) {
            if (c.is_zero()) continue;
            if (weight(lam) != d) throw std::logic_error("pstar_coordinates: graded piece not homogeneous");
            coords[lam] += c;
            Rat prod(QQ(1));
            for (int li : lam) prod = prod * shifted_p_star(li, g.N, F, vt).f;
            rem -= c * prod;
        }
        int d2 = z_degree_max(rem, vt);
        if (!rem.is_zero() && d2 >= d)
            throw std::logic_error("pstar_coordinates: peel did not lower the degree");
        d = rem.is_zero() ? 0 : d2;
        if (rem.is_zero()) break;
        if (d == 0) break;
    }
    if (!rem.is_zero()) {
        if (!rem.params_only()) throw std::logic_error("pstar_coordinates: residual bank variables");
        coords[Partition{}] += rem;
    }
    return coords;
}

BiSymPoly phi_natural(const PartCoeffs& coords, int n, int m, const FieldCtx& F,
                      const VarTable& vt) {
    Rat acc;
    for (const auto& [lam, c] : coords) {
        Rat prod(QQ(1));
        for (int li : lam) prod = prod * p_natural(li, n, m, F, vt).f;
        acc += c * prod;
    }
    return BiSymPoly{acc, n, m, false, false};
}

Rat jacobian_det_p_natural(int n, int m, const FieldCtx& F, const VarTable& vt) {
    std::vector<int> slots;
    for (int i = 1; i <= n; ++i) slots.push_back(vt.var(Bank::X, i));
    for (int j = 1; j <= m; ++j) slots.push_back(vt.var(Bank::Y, j));
    std::vector<std::vector<Rat>> M(n + m, std::vector<Rat>(n + m));
    for (int r = 1; r <= n + m; ++r) {
        Rat pr = p_natural(r, n, m, F, vt).f;
        for (int c = 0; c < n + m; ++c) M[r - 1][c] = d_rat(pr, slots[c]);
    }
    return det_rat(std::move(M));
}

FieldElem jacobian_witness_value(int n, int m, const FieldCtx& F) {
    QQ fact(1);
    for (int i = 2; i <= n; ++i) fact *= QQ(i);
    QQ rising(1);
    for (int j = 1; j <= m; ++j) rising *= QQ(n + j);
    int tpow = 0;
    for (int i = 1; i <= n; ++i) tpow += i * (1 - i);
    int qpow = 0;
    for (int j = 1; j <= m; ++j) qpow += (n + j) * (j - 1);
    FieldElem val = F.qt(qpow, tpow, fact * rising);
    val = val * qpochhammer(F.qt(n + 1, 0), F.q(), m);
    val = val / qpochhammer(F.qt(0, -n - 1), F.qt(0, -1), m);
    return val;
}

bool jacobian_independence(int n, int m, const FieldCtx& F, const VarTable& vt) {
    Rat det = jacobian_det_p_natural(n, m, F, vt);
    if (det.is_zero()) return false;
    Mono witness;
    for (int i = 1; i <= n; ++i) witness = witness + mono_of(vt.var(Bank::X, i), i - 1);
    for (int j = 1; j <= m; ++j) witness = witness + mono_of(vt.var(Bank::Y, j), n + j - 1);
    FieldElem got = bank_coefficient(det, witness);
    FieldElem want = jacobian_witness_value(n, m, F);
    return (got - want).is_zero() && !want.is_zero();
}

}  // namespace qmacdo
