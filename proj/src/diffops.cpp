#include "qmacdo/diffops.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qmacdo {

Shift q_shift(int slot, int steps) {
    Shift s;
    s.qs.e[slot] = static_cast<int16_t>(steps);
    return s;
}

Shift t_shift(int slot, int steps) {
    Shift s;
    s.ts.e[slot] = static_cast<int16_t>(steps);
    return s;
}

Poly apply_shift(const Poly& f, const Shift& s, const FieldCtx& F) {
    Poly out = f;
    for (int v = 0; v < kMaxVars; ++v) {
        int a = s.qs.e[v], b = s.ts.e[v];
        if (a == 0 && b == 0) continue;
        out = F.is_symbolic() ? out.scale_var(v, QQ(1), a, b)
                              : out.scale_var(v, F.qt_value(a, b));
    }
    return out;
}

Rat apply_shift(const Rat& f, const Shift& s, const FieldCtx& F) {
    Rat out = f;
    for (int v = 0; v < kMaxVars; ++v) {
        int a = s.qs.e[v], b = s.ts.e[v];
        if (a == 0 && b == 0) continue;
        out = F.is_symbolic() ? out.scale_var(v, QQ(1), a, b)
                              : out.scale_var(v, F.qt_value(a, b));
    }
    return out;
}

void DiffOp::add(const Shift& s, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(s, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
    for (auto& [s, c] : o.terms_) add(s, c);
    return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
    for (auto& [s, c] : o.terms_) add(s, -c);
    return *this;
}

DiffOp DiffOp::operator-() const {
    DiffOp r = *this;
    for (auto& [s, c] : r.terms_) c = -c;
    return r;
}

DiffOp& DiffOp::scale(const FieldElem& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [s, f] : terms_) f *= c;
    return *this;
}

Rat DiffOp::apply(const Rat& f, const FieldCtx& F) const {
    Rat out;
    for (auto& [s, c] : terms_) out += c * apply_shift(f, s, F);
    return out;
}

bool DiffOp::operator==(const DiffOp& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto it = o.terms_.begin();
    for (auto& [s, c] : terms_) {
        if (!(s == it->first) || c != it->second) return false;
        ++it;
    }
    return true;
}

std::string DiffOp::to_string(const VarTable& vt) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [s, c] : terms_) {
        if (!first) os << "\n";
        first = false;
        os << c.to_string(vt) << " | mu=(";
        for (int i = 1; i <= vt.size(Bank::X); ++i) {
            if (i > 1) os << ",";
            os << s.qs.e[vt.var(Bank::X, i)];
        }
        os << ")";
        bool subsetForm = true;
        for (int j = 1; j <= vt.size(Bank::Y); ++j) {
            int b = s.ts.e[vt.var(Bank::Y, j)];
            if (b != 0 && b != -1) subsetForm = false;
        }
        if (subsetForm) {
            os << " | I=(";
            bool sep = false;
            for (int j = 1; j <= vt.size(Bank::Y); ++j)
                if (s.ts.e[vt.var(Bank::Y, j)] == -1) {
                    if (sep) os << ",";
                    os << j;
                    sep = true;
                }
            os << ")";
        } else {
            os << " | yshift=(";
            for (int j = 1; j <= vt.size(Bank::Y); ++j) {
                if (j > 1) os << ",";
                os << s.ts.e[vt.var(Bank::Y, j)];
            }
            os << ")";
        }
    }
    return os.str();
}

DiffOp compose(const DiffOp& a, const DiffOp& b, const FieldCtx& F) {
    DiffOp out;
    for (auto& [sa, ca] : a.terms())
        for (auto& [sb, cb] : b.terms()) out.add(sa + sb, ca * apply_shift(cb, sa, F));
    return out;
}

DiffOp commutator(const DiffOp& a, const DiffOp& b, const FieldCtx& F) {
    return compose(a, b, F) - compose(b, a, F);
}

std::vector<std::vector<int>> compositions(int n, int w) {
    std::vector<std::vector<int>> out;
    if (n == 0) {
        if (w == 0) out.push_back({});
        return out;
    }
    std::vector<int> cur(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int rest) {
        if (pos == n - 1) {
            cur[pos] = rest;
            out.push_back(cur);
            return;
        }
        for (int v = rest; v >= 0; --v) {
            cur[pos] = v;
            rec(pos + 1, rest - v);
        }
    };
    rec(0, w);
    return out;
}

std::vector<std::vector<int>> subsets_of_size(int m, int c) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(cur.size()) == c) {
            out.push_back(cur);
            return;
        }
        for (int v = next; v <= m; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

namespace {

Poly param_poly(const FieldCtx& F, int a, int b, const QQ& c = QQ(1)) {
    return F.qt(a, b, c).num();
}

// single-term polynomial c * q^a t^b * var
Poly var_term(const FieldCtx& F, int slot, int a, int b, const QQ& c = QQ(1)) {
    return param_poly(F, a, b, c) * Poly::var(slot);
}

bool contains_index(const std::vector<int>& I, int j) {
    return std::find(I.begin(), I.end(), j) != I.end();
}

Rat B_coeff_generic(const std::vector<int>& mu, const std::vector<int>& I, Bank bx, int n,
                    Bank by, int m, ShiftParam qs, ShiftParam ts, const FieldCtx& F,
                    const VarTable& vt) {
    auto xv = [&](int i) { return vt.var(bx, i); };
    auto yv = [&](int j) { return vt.var(by, j); };
    FieldElem qp = F.qt(qs.qe, qs.te), tp = F.qt(ts.qe, ts.te);
    Rat B(QQ(1));

    // Vandermonde ratio of the q-shifted x variables
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (mu[i - 1] == 0 && mu[j - 1] == 0) continue;
            B.mul_factor(var_term(F, xv(i), qs.qe * mu[i - 1], qs.te * mu[i - 1]) -
                         var_term(F, xv(j), qs.qe * mu[j - 1], qs.te * mu[j - 1]));
            B.div_factor(Poly::var(xv(i)) - Poly::var(xv(j)));
        }

    // (tp x_i/x_j; qp) / (qp x_i/x_j; qp) blocks, both of length mu_i
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) {
                B *= poch_ratio(tp, qp, mu[i - 1]);
                continue;
            }
            for (int k = 0; k < mu[i - 1]; ++k) {
                B.mul_factor(Poly::var(xv(j)) -
                             var_term(F, xv(i), ts.qe + k * qs.qe, ts.te + k * qs.te));
                B.div_factor(Poly::var(xv(j)) -
                             var_term(F, xv(i), (k + 1) * qs.qe, (k + 1) * qs.te));
            }
        }

    // (y_i - qp y_j)/(y_i - y_j) over i in I, j outside
    for (int i : I)
        for (int j = 1; j <= m; ++j) {
            if (contains_index(I, j)) continue;
            B.mul_factor(Poly::var(yv(i)) - var_term(F, yv(j), qs.qe, qs.te));
            B.div_factor(Poly::var(yv(i)) - Poly::var(yv(j)));
        }

    // mixed x-y block
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j) {
            if (contains_index(I, j)) {
                // (1 - x_i/(tp y_j)) / (1 - qp^{mu_i} x_i/y_j)
                B.mul_factor(var_term(F, yv(j), ts.qe, ts.te) - Poly::var(xv(i)));
                B *= F.qt(-ts.qe, -ts.te);
                B.div_factor(Poly::var(yv(j)) -
                             var_term(F, xv(i), mu[i - 1] * qs.qe, mu[i - 1] * qs.te));
            } else {
                // (1 - x_i/(qp y_j)) / (1 - qp^{mu_i-1} x_i/y_j)
                B.mul_factor(var_term(F, yv(j), qs.qe, qs.te) - Poly::var(xv(i)));
                B *= F.qt(-qs.qe, -qs.te);
                B.div_factor(Poly::var(yv(j)) - var_term(F, xv(i), (mu[i - 1] - 1) * qs.qe,
                                                         (mu[i - 1] - 1) * qs.te));
            }
        }
    return B;
}

} // namespace

Rat B_coeff(const std::vector<int>& mu, const std::vector<int>& I, int n, int m,
            const FieldCtx& F, const VarTable& vt) {
    return B_coeff_generic(mu, I, Bank::X, n, Bank::Y, m, {1, 0}, {0, 1}, F, vt);
}

Rat A_coeff(const std::vector<int>& I, const std::vector<int>& mu, int n, int m,
            const FieldCtx& F, const VarTable& vt) {
    auto xv = [&](int i) { return vt.var(Bank::X, i); };
    auto yv = [&](int j) { return vt.var(Bank::Y, j); };
    Rat A(QQ(1));

    // (x_i - t^{-1} x_j)/(x_i - x_j) over i in I, j outside
    for (int i : I)
        for (int j = 1; j <= n; ++j) {
            if (contains_index(I, j)) continue;
            A.mul_factor(Poly::var(xv(i)) - var_term(F, xv(j), 0, -1));
            A.div_factor(Poly::var(xv(i)) - Poly::var(xv(j)));
        }

    // Vandermonde ratio of the t-lowered y variables
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            if (mu[i - 1] == 0 && mu[j - 1] == 0) continue;
            A.mul_factor(var_term(F, yv(i), 0, -mu[i - 1]) - var_term(F, yv(j), 0, -mu[j - 1]));
            A.div_factor(Poly::var(yv(i)) - Poly::var(yv(j)));
        }

    // (y_i/(q y_j); t^{-1}) / (y_i/(t y_j); t^{-1}) blocks of length mu_i
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            if (i == j) {
                A *= qpochhammer(F.qt(-1, 0), F.qt(0, -1), mu[i - 1]) /
                     qpochhammer(F.qt(0, -1), F.qt(0, -1), mu[i - 1]);
                continue;
            }
            for (int k = 0; k < mu[i - 1]; ++k) {
                A.mul_factor(var_term(F, yv(j), 1, 0) - var_term(F, yv(i), 0, -k));
                A *= F.qt(-1, 0);
                A.div_factor(var_term(F, yv(j), 0, 1) - var_term(F, yv(i), 0, -k));
                A *= F.qt(0, 1);
            }
        }

    // mixed y-x block
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) {
            if (contains_index(I, j)) {
                // (1 - q y_i/x_j)/(1 - t^{-mu_i} y_i/x_j)
                A.mul_factor(Poly::var(xv(j)) - var_term(F, yv(i), 1, 0));
                A.div_factor(Poly::var(xv(j)) - var_term(F, yv(i), 0, -mu[i - 1]));
            } else {
                // (1 - t y_i/x_j)/(1 - t^{1-mu_i} y_i/x_j)
                A.mul_factor(Poly::var(xv(j)) - var_term(F, yv(i), 0, 1));
                A.div_factor(Poly::var(xv(j)) - var_term(F, yv(i), 0, 1 - mu[i - 1]));
            }
        }
    return A;
}

DiffOp ns_u_coeff_generic(int r, Bank bx, int n, Bank by, int m, ShiftParam qs, ShiftParam ts,
                          const FieldCtx& F, const VarTable& vt) {
    DiffOp out;
    for (int c = 0; c <= std::min(r, m); ++c) {
        int w = r - c;
        auto mus = compositions(n, w);
        if (mus.empty()) continue;
        for (auto& I : subsets_of_size(m, c)) {
            for (auto& mu : mus) {
                // (tp^{1-n} qp^m)^w (-tp)^c qp^{C(c,2)}
                int qa = (qs.qe * m + ts.qe * (1 - n)) * w + ts.qe * c + qs.qe * (c * (c - 1) / 2);
                int qb = (qs.te * m + ts.te * (1 - n)) * w + ts.te * c + qs.te * (c * (c - 1) / 2);
                FieldElem scal = F.qt(qa, qb, (c % 2) ? QQ(-1) : QQ(1));
                Rat coeff = scal * B_coeff_generic(mu, I, bx, n, by, m, qs, ts, F, vt);
                Shift s;
                for (int i = 1; i <= n; ++i) {
                    s.qs.e[vt.var(bx, i)] = static_cast<int16_t>(qs.qe * mu[i - 1]);
                    s.ts.e[vt.var(bx, i)] = static_cast<int16_t>(qs.te * mu[i - 1]);
                }
                for (int j : I) {
                    s.qs.e[vt.var(by, j)] = static_cast<int16_t>(-ts.qe);
                    s.ts.e[vt.var(by, j)] = static_cast<int16_t>(-ts.te);
                }
                out.add(s, coeff);
            }
        }
    }
    return out;
}

DiffOp deformed_ns_generic(int r, Bank bx, int n, Bank by, int m, ShiftParam qs, ShiftParam ts,
                           const FieldCtx& F, const VarTable& vt) {
    DiffOp out;
    for (int s = 0; s <= r; ++s) {
        FieldElem cs = poch_ratio(F.qt(qs.qe * m - ts.qe * n, qs.te * m - ts.te * n),
                                  F.qt(qs.qe, qs.te), s) *
                       F.qt(ts.qe * s, ts.te * s);
        DiffOp hk = ns_u_coeff_generic(r - s, bx, n, by, m, qs, ts, F, vt);
        out += hk.scale(cs);
    }
    return out;
}

DiffOp deformed_NS(int r, int n, int m, const FieldCtx& F, const VarTable& vt) {
    return deformed_ns_generic(r, Bank::X, n, Bank::Y, m, {1, 0}, {0, 1}, F, vt);
}

DiffOp deformed_MR(int r, int n, int m, const FieldCtx& F, const VarTable& vt) {
    DiffOp op = deformed_ns_generic(r, Bank::Y, m, Bank::X, n, {0, -1}, {-1, 0}, F, vt);
    op.scale(F.qt(r, 0, (r % 2) ? QQ(-1) : QQ(1)));
    return op;
}

DiffOp deformed_MR_direct(int r, int n, int m, const FieldCtx& F, const VarTable& vt) {
    DiffOp out;
    for (int s = 0; s <= r; ++s) {
        FieldElem cs = poch_ratio(F.qt(m, -n), F.qt(0, -1), s);
        int k = r - s;
        DiffOp dk;
        for (int c = 0; c <= std::min(k, n); ++c) {
            int w = k - c;
            auto mus = compositions(m, w);
            if (mus.empty()) continue;
            for (auto& I : subsets_of_size(n, c)) {
                for (auto& mu : mus) {
                    // (q^m t^{-n})^w (-1)^c t^{-C(c,2)}
                    FieldElem scal =
                        F.qt(m * w, -n * w - c * (c - 1) / 2, (c % 2) ? QQ(-1) : QQ(1));
                    Rat coeff = scal * A_coeff(I, mu, n, m, F, vt);
                    Shift sh;
                    for (int j : I) sh.qs.e[vt.var(Bank::X, j)] = 1;
                    for (int i = 1; i <= m; ++i)
                        sh.ts.e[vt.var(Bank::Y, i)] = static_cast<int16_t>(-mu[i - 1]);
                    dk.add(sh, coeff);
                }
            }
        }
        out += dk.scale(cs);
    }
    out.scale(F.integer((r % 2) ? -1 : 1));
    return out;
}

DiffOp classical_D_coeff(int r, int N, Bank bank, const FieldCtx& F, const VarTable& vt) {
    DiffOp out;
    for (auto& I : subsets_of_size(N, r)) {
        Rat coeff(QQ(1));
        for (int i : I)
            for (int j = 1; j <= N; ++j) {
                if (contains_index(I, j)) continue;
                coeff.mul_factor(var_term(F, vt.var(bank, i), 0, 1) - Poly::var(vt.var(bank, j)));
                coeff.div_factor(Poly::var(vt.var(bank, i)) - Poly::var(vt.var(bank, j)));
            }
        coeff *= F.qt(0, r * (r - 1) / 2, (r % 2) ? QQ(-1) : QQ(1));
        Shift s;
        for (int i : I) s.qs.e[vt.var(bank, i)] = 1;
        out.add(s, coeff);
    }
    return out;
}

DiffOp classical_H_coeff(int r, int N, Bank bank, const FieldCtx& F, const VarTable& vt) {
    Bank spare = bank == Bank::W ? Bank::Z : Bank::W;
    DiffOp op = ns_u_coeff_generic(r, bank, N, spare, 0, {1, 0}, {0, 1}, F, vt);
    op.scale(F.qt(0, (N - 1) * r));
    return op;
}

namespace {

DiffOp rescale_y_coeffs(DiffOp op, const FieldCtx& F, const VarTable& vt) {
    DiffOp out;
    for (auto& [s, c] : op.terms()) {
        Rat cc = c;
        for (int j = 1; j <= vt.size(Bank::Y); ++j) {
            int v = vt.var(Bank::Y, j);
            cc = F.is_symbolic() ? cc.scale_var(v, QQ(1), 1, 1) : cc.scale_var(v, F.qt_value(1, 1));
        }
        out.add(s, cc);
    }
    return out;
}

} // namespace

DiffOp hat_NS(int r, int n, int m, const FieldCtx& F, const VarTable& vt) {
    DiffOp op = deformed_ns_generic(r, Bank::X, n, Bank::Y, m, {-1, 0}, {0, -1}, F, vt);
    return rescale_y_coeffs(std::move(op), F, vt);
}

DiffOp hat_MR(int r, int n, int m, const FieldCtx& F, const VarTable& vt) {
    DiffOp op = deformed_ns_generic(r, Bank::Y, m, Bank::X, n, {0, 1}, {1, 0}, F, vt);
    op.scale(F.qt(-r, 0, (r % 2) ? QQ(-1) : QQ(1)));
    return rescale_y_coeffs(std::move(op), F, vt);
}

namespace {

std::string key_string(const std::vector<int>& alpha, const std::vector<int>& beta) {
    std::ostringstream os;
    os << "(alpha=(";
    for (size_t i = 0; i < alpha.size(); ++i) os << (i ? "," : "") << alpha[i];
    os << "),beta=(";
    for (size_t i = 0; i < beta.size(); ++i) os << (i ? "," : "") << beta[i];
    os << "))";
    return os.str();
}

} // namespace

bool certify_zero(const DiffOp& op, ZeroCert via, const FieldCtx& F, const VarTable& vt,
                  std::string* where) {
    if (via == ZeroCert::Coefficients) {
        if (op.is_zero()) return true;
        if (where) {
            std::vector<int> alpha, beta;
            const Shift& s = op.terms().begin()->first;
            for (int i = 1; i <= vt.size(Bank::X); ++i) alpha.push_back(s.qs.e[vt.var(Bank::X, i)]);
            for (int j = 1; j <= vt.size(Bank::Y); ++j) beta.push_back(-s.ts.e[vt.var(Bank::Y, j)]);
            *where = key_string(alpha, beta);
        }
        return false;
    }

    int n = vt.size(Bank::X), m = vt.size(Bank::Y);
    struct Key {
        std::vector<int> alpha, beta;
        Rat coeff;
        int level;
    };
    std::vector<Key> keys;
    int d = 0;
    for (auto& [s, c] : op.terms()) {
        Key k;
        for (int v = 0; v < kMaxVars; ++v) {
            bool isX = false, isY = false;
            for (int i = 1; i <= n; ++i) isX |= (vt.var(Bank::X, i) == v);
            for (int j = 1; j <= m; ++j) isY |= (vt.var(Bank::Y, j) == v);
            if (isX) {
                if (s.ts.e[v] != 0 || s.qs.e[v] < 0)
                    throw ConventionError("x shifts must be nonnegative q powers");
            } else if (isY) {
                if (s.qs.e[v] != 0 || s.ts.e[v] > 0)
                    throw ConventionError("y shifts must be nonpositive t powers");
            } else if (s.qs.e[v] != 0 || s.ts.e[v] != 0) {
                throw ConventionError("shift outside the x,y banks");
            }
        }
        k.level = 0;
        for (int i = 1; i <= n; ++i) {
            k.alpha.push_back(s.qs.e[vt.var(Bank::X, i)]);
            k.level += k.alpha.back();
        }
        for (int j = 1; j <= m; ++j) {
            k.beta.push_back(-s.ts.e[vt.var(Bank::Y, j)]);
            k.level += k.beta.back();
            d = std::max(d, k.beta.back());
        }
        k.coeff = c;
        keys.push_back(std::move(k));
    }
    std::stable_sort(keys.begin(), keys.end(),
                     [](const Key& a, const Key& b) { return a.level < b.level; });

    for (auto& piv : keys) {
        // kernel points z_{alpha,beta}: t q^{-alpha_i}/x_i and t^s/y_k
        struct ZPoint {
            int slot, qa, qb;
        };
        std::vector<ZPoint> zs;
        for (int i = 1; i <= n; ++i) zs.push_back({vt.var(Bank::X, i), -piv.alpha[i - 1], 1});
        for (int k = 1; k <= m; ++k)
            for (int sexp = piv.beta[k - 1] + 1; sexp <= d; ++sexp)
                zs.push_back({vt.var(Bank::Y, k), 0, sexp});

        Rat S;
        for (auto& key : keys) {
            Rat phi = key.coeff;
            for (int i = 1; i <= n && !phi.is_zero(); ++i) {
                int xslot = vt.var(Bank::X, i);
                for (auto& z : zs) {
                    // argument x_i * z; factors (t^{-1} arg; q)_mu / (arg; q)_mu
                    Mono arg = mono_of(xslot) - mono_of(z.slot);
                    for (int k = 0; k < key.alpha[i - 1]; ++k) {
                        phi.mul_factor(Poly(QQ(1)) -
                                       Poly::term(arg, QQ(1)) *
                                           param_poly(F, z.qa + k, z.qb - 1));
                        if (phi.is_zero()) break;
                        phi.div_factor(Poly(QQ(1)) -
                                       Poly::term(arg, QQ(1)) * param_poly(F, z.qa + k, z.qb));
                    }
                    if (phi.is_zero()) break;
                }
            }
            for (int j = 1; j <= m && !phi.is_zero(); ++j) {
                int yslot = vt.var(Bank::Y, j);
                if (key.beta[j - 1] == 0) continue;
                for (auto& z : zs) {
                    Mono arg = mono_of(yslot) - mono_of(z.slot);
                    phi.mul_factor(Poly(QQ(1)) -
                                   Poly::term(arg, QQ(1)) *
                                       param_poly(F, z.qa, z.qb - key.beta[j - 1]));
                    if (phi.is_zero()) break;
                    phi.div_factor(Poly(QQ(1)) - Poly::term(arg, QQ(1)) * param_poly(F, z.qa, z.qb));
                }
            }
            S += phi;
        }
        if (!S.is_zero()) {
            if (where) *where = key_string(piv.alpha, piv.beta);
            return false;
        }
    }
    return true;
}

} // namespace qmacdo
