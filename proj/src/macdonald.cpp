#include "qmacdo/macdonald.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

namespace qmacdo {

std::string ParamPair::fingerprint() const {
    return field_to_string(qp) + ";" + field_to_string(tp);
}

ParamPair params_qt(const FieldCtx& F) { return {F.q(), F.t()}; }
ParamPair params_tq(const FieldCtx& F) { return {F.t(), F.q()}; }
ParamPair params_inv(const FieldCtx& F) { return {F.qt(-1, 0), F.qt(0, -1)}; }
ParamPair params_tq_inv(const FieldCtx& F) { return {F.qt(0, -1), F.qt(-1, 0)}; }

FieldElem pp_pow(const ParamPair& pp, int a, int b) {
    return pp.qp.pow(a) * pp.tp.pow(b);
}

FieldElem b_lambda(const Partition& lam, const ParamPair& pp) {
    FieldElem acc(QQ(1));
    for (int i = 1; i <= length(lam); ++i)
        for (int j = 1; j <= part(lam, i); ++j) {
            int a = arm(lam, i, j), l = leg(lam, i, j);
            acc *= (FieldElem(QQ(1)) - pp_pow(pp, a, l + 1)) /
                   (FieldElem(QQ(1)) - pp_pow(pp, a + 1, l));
        }
    return acc;
}

FieldElem z_lambda(const Partition& lam, const ParamPair& pp) {
    std::map<int, int> mult;
    for (int x : lam) ++mult[x];
    QQ zz(1);
    for (auto& [v, m] : mult) {
        for (int k = 0; k < m; ++k) zz *= v;
        for (int k = 2; k <= m; ++k) zz *= k;
    }
    FieldElem acc(zz);
    for (int x : lam)
        acc *= (FieldElem(QQ(1)) - pp.qp.pow(x)) / (FieldElem(QQ(1)) - pp.tp.pow(x));
    return acc;
}

Mono mono_of_partition(const Partition& lam, Bank bank, const VarTable& vt) {
    Mono m{};
    for (int i = 1; i <= length(lam); ++i)
        m.e[vt.var(bank, i)] = static_cast<int16_t>(part(lam, i));
    return m;
}

Poly monomial_sym(const Partition& lam, Bank bank, int N, const VarTable& vt) {
    if (length(lam) > N) return Poly();
    std::vector<int> exps(N, 0);
    for (int i = 0; i < length(lam); ++i) exps[i] = lam[i];
    std::sort(exps.begin(), exps.end());
    Poly out;
    do {
        Mono m{};
        for (int i = 0; i < N; ++i) m.e[vt.var(bank, i + 1)] = static_cast<int16_t>(exps[i]);
        out.add_term(m, QQ(1));
    } while (std::next_permutation(exps.begin(), exps.end()));
    return out;
}

Poly power_sum_poly(int r, Bank bank, int N, const VarTable& vt) {
    Poly out;
    for (int i = 1; i <= N; ++i) out.add_term(mono_of(vt.var(bank, i), r), QQ(1));
    return out;
}

Poly power_sum_poly(const Partition& lam, Bank bank, int N, const VarTable& vt) {
    Poly out(QQ(1));
    for (int x : lam) out *= power_sum_poly(x, bank, N, vt);
    return out;
}

namespace {

std::mutex cache_mtx;

std::map<int, std::vector<Partition>> parts_cache;

const std::vector<Partition>& weight_partitions(int k) {
    auto it = parts_cache.find(k);
    if (it == parts_cache.end())
        it = parts_cache.emplace(k, partitions_of_weight(k)).first;
    return it->second;
}

// p_lambda in the monomial basis and its inverse over the partitions of k,
// indexed in descending lex order; entries are parameter-free rationals
struct Transition {
    std::vector<std::vector<QQ>> p2m, m2p;
};

std::map<int, Transition> trans_cache;

std::vector<std::vector<QQ>> qq_inverse(std::vector<std::vector<QQ>> M) {
    size_t n = M.size();
    std::vector<std::vector<QQ>> inv(n, std::vector<QQ>(n, QQ(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && M[piv][col] == 0) ++piv;
        if (piv == n) throw std::logic_error("power sum transition is singular");
        std::swap(M[piv], M[col]);
        std::swap(inv[piv], inv[col]);
        QQ d = M[col][col];
        for (size_t j = 0; j < n; ++j) {
            M[col][j] /= d;
            inv[col][j] /= d;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || M[r][col] == 0) continue;
            QQ f = M[r][col];
            for (size_t j = 0; j < n; ++j) {
                M[r][j] -= f * M[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

const Transition& transition(int k) {
    auto it = trans_cache.find(k);
    if (it != trans_cache.end()) return it->second;
    const auto& parts = weight_partitions(k);
    size_t n = parts.size();
    std::map<Partition, size_t> idx;
    for (size_t i = 0; i < n; ++i) idx[parts[i]] = i;
    VarTable vt(std::max(k, 1), 0, 0, 0);
    Transition tr;
    tr.p2m.assign(n, std::vector<QQ>(n, QQ(0)));
    for (size_t i = 0; i < n; ++i) {
        Poly p = power_sum_poly(parts[i], Bank::X, std::max(k, 1), vt);
        for (auto& [m, c] : p.terms()) {
            Partition mu;
            bool sortedDesc = true;
            int prev = INT16_MAX;
            for (int v = 1; v <= std::max(k, 1); ++v) {
                int e = m.e[vt.var(Bank::X, v)];
                if (e > prev) sortedDesc = false;
                prev = e;
                if (e > 0) mu.push_back(e);
            }
            if (!sortedDesc) continue;
            tr.p2m[i][idx.at(mu)] = c;
        }
    }
    tr.m2p = qq_inverse(tr.p2m);
    return trans_cache.emplace(k, std::move(tr)).first->second;
}

struct DegreeBasis {
    std::map<Partition, MacBasis, PartitionLess> data;
    std::vector<FieldElem> zvals; // z_rho aligned with weight_partitions(k)
};

std::map<std::pair<int, std::string>, DegreeBasis> basis_cache;

using LRKey = std::tuple<std::string, std::string, std::string>;
std::map<LRKey, PartCoeffs> lr_cache;

FieldElem vec_inner(const std::vector<FieldElem>& a, const std::vector<FieldElem>& b,
                    const std::vector<FieldElem>& z) {
    FieldElem acc;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero() || b[i].is_zero()) continue;
        acc += a[i] * b[i] * z[i];
    }
    return acc;
}

const DegreeBasis& degree_basis(int k, const ParamPair& pp) {
    auto key = std::make_pair(k, pp.fingerprint());
    auto it = basis_cache.find(key);
    if (it != basis_cache.end()) return it->second;

    const auto& parts = weight_partitions(k);
    const auto& tr = transition(k);
    size_t n = parts.size();
    DegreeBasis db;
    db.zvals.reserve(n);
    for (auto& rho : parts) db.zvals.push_back(z_lambda(rho, pp));

    // Gram-Schmidt in ascending lex order; each P stays monic in m_lambda
    std::vector<std::vector<FieldElem>> built(n);
    std::vector<FieldElem> norms(n);
    for (size_t pos = n; pos-- > 0;) {
        std::vector<FieldElem> v(n);
        for (size_t j = 0; j < n; ++j) v[j] = FieldElem(tr.m2p[pos][j]);
        for (size_t prev = n; prev-- > pos + 1;) {
            FieldElem c = vec_inner(v, built[prev], db.zvals) / norms[prev];
            if (c.is_zero()) continue;
            for (size_t j = 0; j < n; ++j) v[j] -= c * built[prev][j];
        }
        FieldElem norm = vec_inner(v, v, db.zvals);
        if (norm.is_zero()) throw SpecialParams("vanishing Macdonald norm at weight " +
                                                std::to_string(k));
        built[pos] = v;
        norms[pos] = norm;

        MacBasis mb;
        mb.norm = norm;
        for (size_t j = 0; j < n; ++j)
            if (!v[j].is_zero()) mb.p_coeffs[parts[j]] = v[j];
        for (size_t j = 0; j < n; ++j) {
            FieldElem mc;
            for (size_t i = 0; i < n; ++i) {
                if (v[i].is_zero() || tr.p2m[i][j] == 0) continue;
                mc += v[i] * FieldElem(tr.p2m[i][j]);
            }
            if (!mc.is_zero()) mb.m_coeffs[parts[j]] = mc;
        }
        db.data.emplace(parts[pos], std::move(mb));
    }
    return basis_cache.emplace(std::move(key), std::move(db)).first->second;
}

} // namespace

const MacBasis& macdonald_data(const Partition& lam, const ParamPair& pp) {
    std::lock_guard<std::mutex> lock(cache_mtx);
    return degree_basis(weight(lam), pp).data.at(lam);
}

FieldElem p_inner(const PartCoeffs& a, const PartCoeffs& b, const ParamPair& pp) {
    FieldElem acc;
    for (auto& [rho, av] : a) {
        auto it = b.find(rho);
        if (it == b.end()) continue;
        acc += av * it->second * z_lambda(rho, pp);
    }
    return acc;
}

PartCoeffs p_to_m(const PartCoeffs& pc) {
    PartCoeffs out;
    for (auto& [rho, c] : pc) {
        int k = weight(rho);
        std::lock_guard<std::mutex> lock(cache_mtx);
        const auto& parts = weight_partitions(k);
        const auto& tr = transition(k);
        size_t i = std::find(parts.begin(), parts.end(), rho) - parts.begin();
        for (size_t j = 0; j < parts.size(); ++j) {
            if (tr.p2m[i][j] == 0) continue;
            auto [it, fresh] = out.emplace(parts[j], c * FieldElem(tr.p2m[i][j]));
            if (!fresh) it->second += c * FieldElem(tr.p2m[i][j]);
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

PartCoeffs m_to_p(const PartCoeffs& mc) {
    PartCoeffs out;
    for (auto& [mu, c] : mc) {
        int k = weight(mu);
        std::lock_guard<std::mutex> lock(cache_mtx);
        const auto& parts = weight_partitions(k);
        const auto& tr = transition(k);
        size_t i = std::find(parts.begin(), parts.end(), mu) - parts.begin();
        for (size_t j = 0; j < parts.size(); ++j) {
            if (tr.m2p[i][j] == 0) continue;
            auto [it, fresh] = out.emplace(parts[j], c * FieldElem(tr.m2p[i][j]));
            if (!fresh) it->second += c * FieldElem(tr.m2p[i][j]);
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

PartCoeffs to_m_basis(const Rat& f, Bank bank, int N, const VarTable& vt) {
    for (auto& [fac, mult] : f.den_factors())
        if (!fac.params_only())
            throw std::logic_error("to_m_basis needs a q,t-only denominator");
    PartCoeffs out;
    FieldElem den(QQ(1));
    for (auto& [fac, mult] : f.den_factors())
        for (int i = 0; i < mult; ++i) den *= FieldElem(fac);
    for (auto& [m, c] : f.num().terms()) {
        Partition mu;
        bool sortedDesc = true;
        int prev = INT16_MAX;
        for (int v = 1; v <= N; ++v) {
            int e = m.e[vt.var(bank, v)];
            if (e < 0) throw std::logic_error("to_m_basis needs polynomial bank content");
            if (e > prev) sortedDesc = false;
            prev = e;
            if (e > 0) mu.push_back(e);
        }
        for (int s = kBankBase; s < kMaxVars; ++s) {
            bool inBank = false;
            for (int v = 1; v <= N; ++v)
                if (vt.var(bank, v) == s) inBank = true;
            if (!inBank && m.e[s] != 0)
                throw std::logic_error("to_m_basis saw a foreign bank variable");
        }
        if (!sortedDesc) continue;
        Mono par{};
        par.e[kParamQ] = m.e[kParamQ];
        par.e[kParamT] = m.e[kParamT];
        FieldElem cc = FieldElem(Poly::term(par, c)) / den;
        auto [it, fresh] = out.emplace(mu, cc);
        if (!fresh) it->second += cc;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

Rat from_m_basis(const PartCoeffs& mc, Bank bank, int N, const VarTable& vt) {
    Rat out;
    for (auto& [mu, c] : mc) {
        if (length(mu) > N) continue;
        out += c * Rat(monomial_sym(mu, bank, N, vt));
    }
    return out;
}

Rat macdonald_P(const Partition& lam, Bank bank, int N, const ParamPair& pp,
                const VarTable& vt) {
    if (length(lam) > N) throw RankError("partition longer than the variable count");
    return from_m_basis(macdonald_data(lam, pp).m_coeffs, bank, N, vt);
}

Rat macdonald_Q(const Partition& lam, Bank bank, int N, const ParamPair& pp,
                const VarTable& vt) {
    return b_lambda(lam, pp) * macdonald_P(lam, bank, N, pp, vt);
}

Rat g_r_poly(int r, Bank bank, int N, const ParamPair& pp, const VarTable& vt) {
    USeries<Rat> acc(r);
    acc[0] = Rat(QQ(1));
    for (int i = 1; i <= N; ++i) {
        USeries<Rat> fac(r);
        for (int k = 0; k <= r; ++k)
            fac[k] = poch_ratio(pp.tp, pp.qp, k) *
                     Rat::from_term(mono_of(vt.var(bank, i), k), QQ(1));
        acc = acc * fac;
    }
    return acc[r];
}

PartCoeffs lr_coefficients_at(const Partition& mu, const Partition& nu, const ParamPair& pp,
                              int N) {
    int K = weight(mu) + weight(nu);
    VarTable vt(N, 0, 0, 0);
    Rat prod = macdonald_Q(mu, Bank::X, N, pp, vt) * macdonald_Q(nu, Bank::X, N, pp, vt);
    PartCoeffs out;
    for (auto& lam : partitions_of_weight(K)) {
        if (length(lam) > N) continue;
        FieldElem c = bank_coefficient(prod, mono_of_partition(lam, Bank::X, vt));
        if (c.is_zero()) continue;
        FieldElem chat = c / b_lambda(lam, pp);
        out[lam] = chat;
        prod -= chat * macdonald_Q(lam, Bank::X, N, pp, vt);
    }
    if (!prod.is_zero()) throw std::logic_error("LR back-solve left a residual");
    return out;
}

const PartCoeffs& lr_coefficients(const Partition& mu, const Partition& nu,
                                  const ParamPair& pp) {
    LRKey key{partition_to_string(mu), partition_to_string(nu), pp.fingerprint()};
    {
        std::lock_guard<std::mutex> lock(cache_mtx);
        auto it = lr_cache.find(key);
        if (it != lr_cache.end()) return it->second;
    }
    PartCoeffs val = lr_coefficients_at(mu, nu, pp, weight(mu) + weight(nu));
    std::lock_guard<std::mutex> lock(cache_mtx);
    return lr_cache.emplace(std::move(key), std::move(val)).first->second;
}

Rat skew_P(const Partition& lam, const Partition& nu, Bank bank, int N, const ParamPair& pp,
           const VarTable& vt) {
    if (!contains(lam, nu)) throw NotContained("skew shape requires nu inside lambda");
    Rat out;
    for (auto& mu : partitions_of_weight(weight(lam) - weight(nu))) {
        const PartCoeffs& lr = lr_coefficients(mu, nu, pp);
        auto it = lr.find(lam);
        if (it == lr.end() || it->second.is_zero()) continue;
        if (length(mu) > N) continue;
        out += it->second * macdonald_P(mu, bank, N, pp, vt);
    }
    return out;
}

void clear_macdonald_cache() {
    std::lock_guard<std::mutex> lock(cache_mtx);
    basis_cache.clear();
    lr_cache.clear();
}

} // namespace qmacdo
