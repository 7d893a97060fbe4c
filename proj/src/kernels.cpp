#include "qmacdo/kernels.hpp"

#include <chrono>
#include <sstream>

namespace qmacdo {

namespace {

Mono mono2(int s1, int s2) {
    Mono m;
    m.e[s1] += 1;
    m.e[s2] += 1;
    return m;
}

// 1 + c * xy_slot * zw_slot with the series key carrying only the z,w part
TruncSeries pair_binomial(int xy_slot, int zw_slot, const FieldElem& c, int d) {
    TruncSeries s = series_one(d);
    s.add(mono_of(zw_slot), c * Rat::from_term(mono_of(xy_slot), QQ(1)));
    return s;
}

double secs_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string mono_label(const Mono& mo, const VarTable& vt) {
    std::string s;
    for (int sl = 0; sl < vt.width(); ++sl) {
        int e = mo.e[sl];
        if (!e) continue;
        if (!s.empty()) s += "*";
        s += vt.name(sl);
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

std::string series_residual(const TruncSeries& diff, const VarTable& vt) {
    if (diff.is_zero()) return "0";
    for (auto& [k, v] : diff.coeffs())
        if (!v.is_zero()) return "nonzero at " + mono_label(k, vt);
    return "0";
}

std::string scalar_residual(const FieldElem& v) {
    if (v.is_zero()) return "0";
    VarTable vt(0, 0, 0, 0);
    return v.to_string(vt);
}

std::string part_text(const Partition& lam) {
    std::string s = "(";
    for (size_t i = 0; i < lam.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(lam[i]);
    }
    return s + ")";
}

struct PolyLess {
    bool operator()(const Poly& a, const Poly& b) const { return Poly::cmp(a, b) < 0; }
};

} // namespace

KernelSeries phi_kernel(int n, int m, int N, int M, int d, const FieldCtx& F,
                        const VarTable& vt) {
    TruncSeries s = series_one(d);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= N; ++j)
            s = s * q_binomial_series(F.t(), F.q(),
                                      mono2(vt.var(Bank::X, i), vt.var(Bank::Z, j)),
                                      F.qt(0, -1), d, vt);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= M; ++j)
            s = s * q_binomial_series(F.qt(-1, 0), F.qt(0, -1),
                                      mono2(vt.var(Bank::Y, i), vt.var(Bank::W, j)), F.q(),
                                      d, vt);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= M; ++j)
            s = s * pair_binomial(vt.var(Bank::X, i), vt.var(Bank::W, j), F.integer(-1), d);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= N; ++j)
            s = s * pair_binomial(vt.var(Bank::Y, i), vt.var(Bank::Z, j), F.integer(-1), d);
    return {s, n, m, N, M, KernelKind::Phi};
}

KernelSeries psi_kernel(int n, int m, int N, int M, int d, const FieldCtx& F,
                        const VarTable& vt) {
    TruncSeries s = series_one(d);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= N; ++j)
            s = s * q_binomial_series(F.t(), F.q(),
                                      mono2(vt.var(Bank::X, i), vt.var(Bank::Z, j)), F.one(),
                                      d, vt);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= M; ++j)
            s = s * q_binomial_series(F.q(), F.t(),
                                      mono2(vt.var(Bank::Y, i), vt.var(Bank::W, j)), F.t(),
                                      d, vt);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= M; ++j)
            s = s * pair_binomial(vt.var(Bank::X, i), vt.var(Bank::W, j), F.qt(0, 1, QQ(-1)), d);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= N; ++j)
            s = s * pair_binomial(vt.var(Bank::Y, i), vt.var(Bank::Z, j), F.qt(0, 1, QQ(-1)), d);
    return {s, n, m, N, M, KernelKind::Psi};
}

KernelSeries pi_kernel(int n, int m, int N, int d, const FieldCtx& F, const VarTable& vt) {
    KernelSeries k = psi_kernel(n, m, N, 0, d, F, vt);
    k.kind = KernelKind::Pi;
    return k;
}

DiffOp xy_operator(char family, int r, int n, int m, const FieldCtx& F, const VarTable& vt) {
    if (family == 'H') return deformed_NS(r, n, m, F, vt);
    if (family == 'D') return deformed_MR(r, n, m, F, vt);
    throw std::invalid_argument("family must be 'H' or 'D'");
}

DiffOp zw_operator(char family, int r, int N, int M, const FieldCtx& F, const VarTable& vt) {
    if (family == 'H')
        return deformed_ns_generic(r, Bank::Z, N, Bank::W, M, {1, 0}, {0, 1}, F, vt);
    if (family != 'D') throw std::invalid_argument("family must be 'H' or 'D'");
    DiffOp op = deformed_ns_generic(r, Bank::W, M, Bank::Z, N, {0, -1}, {-1, 0}, F, vt);
    op.scale(F.qt(r, 0, (r % 2) ? QQ(-1) : QQ(1)));
    return op;
}

TruncSeries apply_op_xy(const DiffOp& op, const TruncSeries& s, const FieldCtx& F) {
    TruncSeries out(s.deg());
    for (auto& [sh, c] : op.terms())
        for (auto& [key, v] : s.coeffs()) out.add(key, c * apply_shift(v, sh, F));
    return out;
}

Poly clearing_poly(const DiffOp& op) {
    std::map<Poly, int, PolyLess> mult;
    for (auto& [sh, c] : op.terms())
        for (auto& [f, k] : c.den_factors()) {
            if (f.params_only()) continue;
            int& v = mult[f];
            v = std::max(v, k);
        }
    Poly D = Poly::term(Mono{}, QQ(1));
    for (auto& [f, k] : mult)
        for (int i = 0; i < k; ++i) D = D * f;
    return D;
}

int zw_valuation(const Poly& p, const VarTable& vt) {
    int best = -1;
    for (auto& [mo, c] : p.terms()) {
        int dsum = 0;
        for (Bank b : {Bank::Z, Bank::W})
            for (int i = 1; i <= vt.size(b); ++i) dsum += mo.e[vt.var(b, i)];
        if (best < 0 || dsum < best) best = dsum;
    }
    return best < 0 ? 0 : best;
}

TruncSeries apply_op_zw(const DiffOp& op, const TruncSeries& s, const Poly& clear,
                        const FieldCtx& F, const VarTable& vt) {
    TruncSeries out(s.deg());
    for (auto& [sh, c] : op.terms()) {
        Rat pc = c * Rat(clear);
        Rat dinv(QQ(1));
        for (auto& [f, k] : pc.den_factors()) {
            if (!f.params_only())
                throw std::logic_error("clearing polynomial does not clear a denominator");
            dinv.div_factor(f, k);
        }
        TruncSeries w(s.deg());
        for (auto& [key, v] : s.coeffs()) {
            long qa = 0, ta = 0;
            for (int sl = kBankBase; sl < vt.width(); ++sl) {
                qa += static_cast<long>(sh.qs.e[sl]) * key.e[sl];
                ta += static_cast<long>(sh.ts.e[sl]) * key.e[sl];
            }
            w.add(key, v * F.qt(static_cast<int>(qa), static_cast<int>(ta)));
        }
        TruncSeries cleared = w.mul_poly(pc.num(), vt);
        cleared.scale(dinv);
        out += cleared;
    }
    return out;
}

namespace {

// shared core of the two expansions: weight(r) selects the extra scalar
// applied to the lam term
template <class Weight>
TruncSeries hook_expansion(int n, int m, int N, int d, const FieldCtx& F, const VarTable& vt,
                           Weight weight_of) {
    TruncSeries out(d);
    ParamPair pp = params_qt(F);
    out.add(Mono{}, Rat(QQ(1)) * weight_of(Partition{}));
    for (int w = 1; w <= d; ++w) {
        for (auto& lam : partitions_of_weight(w)) {
            if (length(lam) > N) continue;
            FieldElem wt = weight_of(lam);
            if (wt.is_zero()) continue;
            Rat sp = phi_restriction(macdonald_data(lam, pp).p_coeffs, n, m, F, vt).f;
            if (sp.is_zero()) continue;
            Rat q = macdonald_Q(lam, Bank::Z, N, pp, vt);
            Rat base = sp * F.qt(0, -w) * wt;
            for (auto& [f, k] : q.den_factors()) base.div_factor(f, k);
            for (auto& [mo, cq] : q.num().terms()) {
                Mono zw, rest;
                split_series_mono(mo, vt, zw, rest);
                out.add(zw, base * Rat::from_term(rest, cq));
            }
        }
    }
    return out;
}

} // namespace

TruncSeries sp_def_expansion(int n, int m, int N, int d, const FieldCtx& F,
                             const VarTable& vt) {
    return hook_expansion(n, m, N, d, F, vt, [&](const Partition&) { return F.one(); });
}

TruncSeries eigen_expansion(int n, int m, int N, int d, int r, const FieldCtx& F,
                            const VarTable& vt) {
    return hook_expansion(n, m, N, d, F, vt,
                          [&](const Partition& lam) { return script_G(lam, r, F)[r]; });
}

USeries<FieldElem> two_phi_one(const FieldElem& a, const FieldElem& b, const FieldElem& c,
                               int R, const FieldCtx& F) {
    USeries<FieldElem> out(R);
    for (int k = 0; k <= R; ++k) {
        FieldElem den = qpochhammer(F.q(), F.q(), k) * qpochhammer(c, F.q(), k);
        if (den.is_zero()) throw PoleError("vanishing pochhammer in basic series");
        out[k] = qpochhammer(a, F.q(), k) * qpochhammer(b, F.q(), k) / den;
    }
    return out;
}

namespace {

FieldElem kaj_term(const std::vector<FieldElem>& a, const std::vector<FieldElem>& X,
                   const std::vector<FieldElem>& b, const std::vector<FieldElem>& c,
                   const std::vector<int>& g, const FieldCtx& F) {
    int K = static_cast<int>(X.size());
    int L = static_cast<int>(b.size());
    FieldElem num = F.one(), den = F.one();
    for (int i = 0; i < K; ++i)
        for (int j = i + 1; j < K; ++j) {
            num = num * (F.qt(g[i], 0) * X[i] - F.qt(g[j], 0) * X[j]);
            den = den * (X[i] - X[j]);
        }
    for (int i = 0; i < K; ++i) {
        if (g[i] == 0) continue;
        for (int j = 0; j < K; ++j) {
            FieldElem ratio = X[i] / X[j];
            num = num * qpochhammer(a[j] * ratio, F.q(), g[i]);
            den = den * qpochhammer(F.q() * ratio, F.q(), g[i]);
        }
        for (int k = 0; k < L; ++k) {
            num = num * qpochhammer(X[i] * b[k], F.q(), g[i]);
            den = den * qpochhammer(X[i] * c[k], F.q(), g[i]);
        }
    }
    if (den.is_zero()) throw PoleError("vanishing pochhammer in hypergeometric term");
    return num / den;
}

} // namespace

USeries<FieldElem> kajihara_phi(const std::vector<FieldElem>& a,
                                const std::vector<FieldElem>& X,
                                const std::vector<FieldElem>& b,
                                const std::vector<FieldElem>& c, int R, const FieldCtx& F) {
    if (a.size() != X.size() || b.size() != c.size())
        throw std::invalid_argument("block size mismatch");
    int K = static_cast<int>(X.size());
    USeries<FieldElem> out(R);
    for (int r = 0; r <= R; ++r) {
        FieldElem acc = F.zero();
        for (auto& g : compositions(K, r)) acc += kaj_term(a, X, b, c, g, F);
        out[r] = acc;
    }
    return out;
}

namespace {

FieldElem nonzero_sample(std::mt19937_64& rng, const FieldCtx& F) {
    for (;;) {
        QQ v = random_rational(rng);
        if (v != 0) return F.rational(v);
    }
}

std::vector<FieldElem> distinct_samples(int k, std::mt19937_64& rng, const FieldCtx& F) {
    std::vector<FieldElem> out;
    while (static_cast<int>(out.size()) < k) {
        FieldElem v = nonzero_sample(rng, F);
        bool fresh = true;
        for (auto& o : out)
            if ((o - v).is_zero()) fresh = false;
        if (fresh) out.push_back(v);
    }
    return out;
}

USeries<FieldElem> euler_prefactor(const FieldElem& ratio, int R, const FieldCtx& F) {
    USeries<FieldElem> out(R);
    for (int s = 0; s <= R; ++s) out[s] = poch_ratio(ratio, F.q(), s);
    return out;
}

void push_series_residuals(std::vector<CheckRecord>& out, const std::string& suite,
                           const std::string& instance, const USeries<FieldElem>& lhs,
                           const USeries<FieldElem>& rhs,
                           std::chrono::steady_clock::time_point t0) {
    for (int r = 0; r <= lhs.order(); ++r)
        out.push_back({suite, instance, "r=" + std::to_string(r),
                       scalar_residual(lhs[r] - rhs[r]), secs_since(t0)});
}

std::vector<CheckRecord> kajihara_once(int K, int L, int R, const FieldCtx& F,
                                       std::mt19937_64& rng) {
    std::vector<CheckRecord> out;
    std::ostringstream tag;
    tag << "K=" << K << " L=" << L;
    std::string instance = tag.str();

    std::vector<FieldElem> a, b, X, Y;
    for (int i = 0; i < K; ++i) a.push_back(nonzero_sample(rng, F));
    for (int k = 0; k < L; ++k) b.push_back(nonzero_sample(rng, F));
    X = distinct_samples(K, rng, F);
    Y = distinct_samples(L, rng, F);
    FieldElem cscal = nonzero_sample(rng, F);

    FieldElem alpha = F.one(), beta = F.one();
    for (auto& v : a) alpha = alpha * v;
    for (auto& v : b) beta = beta * v;

    {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<FieldElem> bv, cv;
        for (int k = 0; k < L; ++k) {
            bv.push_back(b[k] * Y[k]);
            cv.push_back(cscal * Y[k]);
        }
        USeries<FieldElem> lhs = kajihara_phi(a, X, bv, cv, R, F);
        FieldElem A = alpha * beta / cscal.pow(L);
        std::vector<FieldElem> a2, bv2, cv2;
        for (int k = 0; k < L; ++k) a2.push_back(cscal / b[k]);
        for (int j = 0; j < K; ++j) {
            bv2.push_back(cscal * X[j] / a[j]);
            cv2.push_back(cscal * X[j]);
        }
        USeries<FieldElem> rhs =
            euler_prefactor(A, R, F) * kajihara_phi(a2, Y, bv2, cv2, R, F).rescaled(A);
        push_series_residuals(out, "kajihara-transform", instance, lhs, rhs, t0);
    }

    {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<FieldElem> bv, cv;
        for (int k = 0; k < L; ++k) {
            bv.push_back(Y[k] / b[k]);
            cv.push_back(Y[k]);
        }
        USeries<FieldElem> lhs = euler_prefactor(alpha.inverse(), R, F) *
                                 kajihara_phi(a, X, bv, cv, R, F).rescaled(alpha.inverse());
        std::vector<FieldElem> bv2, cv2;
        for (int j = 0; j < K; ++j) {
            bv2.push_back(X[j] / a[j]);
            cv2.push_back(X[j]);
        }
        USeries<FieldElem> rhs = euler_prefactor(beta.inverse(), R, F) *
                                 kajihara_phi(b, Y, bv2, cv2, R, F).rescaled(beta.inverse());
        push_series_residuals(out, "kajihara-duality", instance, lhs, rhs, t0);
    }

    if (K == 1 && L == 1) {
        auto t0 = std::chrono::steady_clock::now();
        FieldElem ha = nonzero_sample(rng, F), hb = nonzero_sample(rng, F),
                  hc = nonzero_sample(rng, F);
        FieldElem A = ha * hb / hc;
        USeries<FieldElem> lhs = two_phi_one(ha, hb, hc, R, F);
        USeries<FieldElem> rhs =
            euler_prefactor(A, R, F) * two_phi_one(hc / ha, hc / hb, hc, R, F).rescaled(A);
        push_series_residuals(out, "heine", instance, lhs, rhs, t0);

        t0 = std::chrono::steady_clock::now();
        USeries<FieldElem> gen = kajihara_phi({ha}, {X[0]}, {hb}, {hc}, R, F);
        USeries<FieldElem> red = two_phi_one(ha, hb * X[0], hc * X[0], R, F);
        push_series_residuals(out, "heine-reduction", instance, gen, red, t0);
    }

    return out;
}

} // namespace

std::vector<CheckRecord> verify_kajihara(int K, int L, int R, const FieldCtx& F,
                                         std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 24; ++attempt) {
        try {
            return kajihara_once(K, L, R, F, rng);
        } catch (const PoleError&) {
        } catch (const NonInvertible&) {
        }
    }
    throw PoleError("no pole-free hypergeometric sample found");
}

std::vector<CheckRecord> verify_kernel_identity(char family, int n, int m, int N, int M,
                                                int R, int d, const FieldCtx& F,
                                                bool psi_form) {
    std::vector<CheckRecord> out;
    VarTable vt(n, m, N, M);
    std::ostringstream tag;
    tag << "n=" << n << " m=" << m << " N=" << N << " M=" << M << " d=" << d
        << (psi_form ? " psi" : "");
    std::string instance = tag.str();
    std::string suite = std::string("kernel-") + family;
    for (int r = 1; r <= R; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        DiffOp oxy = xy_operator(family, r, n, m, F, vt);
        DiffOp ozw = zw_operator(family, r, N, M, F, vt);
        Poly D = clearing_poly(ozw);
        int T = d + zw_valuation(D, vt);
        KernelSeries K_ = psi_form ? psi_kernel(n, m, N, M, T, F, vt)
                                   : phi_kernel(n, m, N, M, T, F, vt);
        TruncSeries lhs = apply_op_xy(oxy, K_.s, F).mul_poly(D, vt);
        TruncSeries rhs = apply_op_zw(ozw, K_.s, D, F, vt);
        out.push_back({suite, instance, "r=" + std::to_string(r),
                       series_residual(lhs - rhs, vt), secs_since(t0)});
    }
    return out;
}

namespace {

QQ qq_pow(const QQ& base, int e) {
    QQ b = e > 0 ? base : QQ(1) / base;
    QQ r(1);
    for (int k = e < 0 ? -e : e; k > 0; --k) r *= b;
    return r;
}

// evaluate every bank slot at the numeric coordinates in at, keeping q,t
Poly eval_bank_point(const Poly& f, const std::vector<QQ>& at) {
    Poly out;
    for (auto& [mo, c] : f.terms()) {
        QQ s = c;
        Mono qt;
        qt.e[kParamQ] = mo.e[kParamQ];
        qt.e[kParamT] = mo.e[kParamT];
        for (int sl = kBankBase; sl < kMaxVars; ++sl)
            if (mo.e[sl]) s *= qq_pow(at[sl], mo.e[sl]);
        out.add_term(qt, s);
    }
    return out;
}

Rat eval_rat_point(const Rat& f, const std::vector<QQ>& at) {
    Rat out(eval_bank_point(f.num(), at));
    for (auto& [fac, mult] : f.den_factors()) {
        Poly d = eval_bank_point(fac, at);
        if (d.is_zero()) throw PoleError("pole at interpolation point");
        Rat dr(d);
        for (int k = 0; k < mult; ++k) out /= dr;
    }
    return out;
}

// The image of a power sum under the operator is homogeneous of the same
// degree, so its monomial coordinates are pinned down exactly by solving a
// small linear system against evaluations at geometric points c, c^2, ...
PartCoeffs restricted_p_image(const DiffOp& op, const Partition& lam, int N,
                              const FieldCtx& F, const VarTable& vt) {
    int w = 0;
    for (int part : lam) w += part;
    std::vector<Partition> basis = partitions_of_weight(w);
    int B = basis.size();
    Poly p = power_sum_poly(lam, Bank::Z, N, vt);
    static const std::vector<QQ> cand = {
        QQ(2),       QQ(3),       QQ(1) / 2,  QQ(5),      QQ(2) / 3,  QQ(7),
        QQ(3) / 2,   QQ(1) / 5,   QQ(4),      QQ(5) / 2,  QQ(3) / 7,  QQ(6),
        QQ(7) / 2,   QQ(2) / 7,   QQ(9),      QQ(4) / 3,  QQ(5) / 7,  QQ(8),
        QQ(9) / 2,   QQ(3) / 5,   QQ(10),     QQ(7) / 4,  QQ(2) / 9,  QQ(11),
        QQ(5) / 3,   QQ(4) / 7,   QQ(12),     QQ(13)};
    for (int start = 0; start + B <= static_cast<int>(cand.size()); ++start) {
        std::vector<std::vector<QQ>> A(B);
        std::vector<FieldElem> rhs(B);
        bool usable = true;
        for (int s = 0; s < B && usable; ++s) {
            std::vector<QQ> at(kMaxVars, QQ(1));
            QQ pw(1);
            for (int i = 1; i <= N; ++i) {
                pw *= cand[start + s];
                at[vt.var(Bank::Z, i)] = pw;
            }
            A[s].resize(B);
            for (int j = 0; j < B; ++j) {
                Poly v = eval_bank_point(monomial_sym(basis[j], Bank::Z, N, vt), at);
                A[s][j] = v.is_zero() ? QQ(0) : v.terms().begin()->second;
            }
            try {
                FieldElem total;
                for (auto& [sh, c] : op.terms())
                    total = total + eval_rat_point(c, at) * Rat(eval_bank_point(apply_shift(p, sh, F), at));
                rhs[s] = total;
            } catch (const PoleError&) {
                usable = false;
            }
        }
        if (!usable) continue;
        bool singular = false;
        for (int col = 0; col < B && !singular; ++col) {
            int piv = col;
            while (piv < B && A[piv][col] == 0) ++piv;
            if (piv == B) {
                singular = true;
                break;
            }
            std::swap(A[col], A[piv]);
            std::swap(rhs[col], rhs[piv]);
            for (int row = col + 1; row < B; ++row) {
                if (A[row][col] == 0) continue;
                QQ f = A[row][col] / A[col][col];
                for (int j = col; j < B; ++j) A[row][j] -= f * A[col][j];
                rhs[row] = rhs[row] - rhs[col] * Rat(Poly(f));
            }
        }
        if (singular) continue;
        PartCoeffs mc;
        std::vector<FieldElem> x(B);
        for (int col = B - 1; col >= 0; --col) {
            FieldElem acc = rhs[col];
            for (int j = col + 1; j < B; ++j) acc = acc - x[j] * Rat(Poly(A[col][j]));
            x[col] = acc * Rat(Poly(QQ(1) / A[col][col]));
            if (!x[col].is_zero()) mc[basis[col]] = x[col];
        }
        return m_to_p(mc);
    }
    throw BasisError("no generic interpolation points for the restricted image");
}

bool coeffs_equal(const PartCoeffs& a, const PartCoeffs& b) {
    for (auto& [k, v] : a) {
        auto it = b.find(k);
        FieldElem o = it == b.end() ? Rat() : it->second;
        if (!(v - o).is_zero()) return false;
    }
    for (auto& [k, v] : b)
        if (a.find(k) == a.end() && !v.is_zero()) return false;
    return true;
}

} // namespace

std::vector<CheckRecord> verify_restriction(char family, int r, int n, int m, int d,
                                            const FieldCtx& F) {
    int N = d + r + n + m;
    if (kBankBase + n + m + N + 1 > kMaxVars)
        throw std::invalid_argument("variable banks exceed the slot budget");
    std::vector<CheckRecord> out;
    VarTable vt(n, m, N + 1, 0);
    std::ostringstream tag;
    tag << "family=" << family << " r=" << r << " n=" << n << " m=" << m << " d=" << d;
    std::string instance = tag.str();
    DiffOp oxy = xy_operator(family, r, n, m, F, vt);
    DiffOp oz = zw_operator(family, r, N, 0, F, vt);
    DiffOp oz1 = zw_operator(family, r, N + 1, 0, F, vt);
    for (int w = 0; w <= d; ++w) {
        for (auto& lam : partitions_of_weight(w)) {
            auto t0 = std::chrono::steady_clock::now();
            PartCoeffs pc = restricted_p_image(oz, lam, N, F, vt);
            PartCoeffs pc1 = restricted_p_image(oz1, lam, N + 1, F, vt);
            out.push_back({"restriction-stability", instance, "lam=" + part_text(lam),
                           coeffs_equal(pc, pc1) ? "0" : "coefficient drift",
                           secs_since(t0)});
            t0 = std::chrono::steady_clock::now();
            Rat lhs = phi_restriction(pc, n, m, F, vt).f;
            Rat g(QQ(1));
            for (int part : lam) g *= deformed_newton_sum(part, n, m, F, vt).f;
            Rat resid = lhs - oxy.apply(g, F);
            out.push_back({"restriction", instance, "lam=" + part_text(lam),
                           resid.is_zero() ? "0" : "nonzero", secs_since(t0)});
        }
    }
    return out;
}

} // namespace qmacdo
