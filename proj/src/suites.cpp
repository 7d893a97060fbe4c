#include "qmacdo/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <thread>

namespace qmacdo {

namespace {

using Clock = std::chrono::steady_clock;

double secs_since(Clock::time_point t) {
    return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string part_text(const Partition& lam) {
    if (lam.empty()) return "[]";
    std::string out = "[";
    for (std::size_t i = 0; i < lam.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(lam[i]);
    }
    return out + "]";
}

std::string comp_text(const std::vector<int>& v) { return part_text(v); }

std::string nm_text(int n, int m) {
    return "n=" + std::to_string(n) + " m=" + std::to_string(m);
}

std::string rat_residual(const Rat& d) { return d.is_zero() ? "0" : "nonzero"; }

using Item = std::function<std::vector<CheckRecord>()>;

int worker_count(std::size_t items) {
    unsigned hw = std::thread::hardware_concurrency();
    std::size_t p = hw ? hw : 1;
    if (const char* env = std::getenv("QMACDO_THREADS")) {
        long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) p = std::min<std::size_t>(p, static_cast<std::size_t>(cap));
    }
    return static_cast<int>(std::min(p, items ? items : 1));
}

// items run on a small pool, results are stitched back in item order so the
// report does not depend on the worker count
std::vector<CheckRecord> run_items(std::vector<Item>& items) {
    std::vector<std::vector<CheckRecord>> slots(items.size());
    int workers = worker_count(items.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < items.size(); ++i) slots[i] = items[i]();
    } else {
        std::atomic<std::size_t> next{0};
        auto drain = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= items.size()) return;
                slots[i] = items[i]();
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(drain);
        for (auto& th : pool) th.join();
    }
    std::vector<CheckRecord> out;
    for (auto& s : slots) out.insert(out.end(), s.begin(), s.end());
    return out;
}

FieldCtx make_ctx(const SuiteConfig& cfg, std::mt19937_64& rng) {
    if (cfg.symbolic) return FieldCtx::symbolic();
    if (cfg.qt_given) return FieldCtx::eval(cfg.q0, cfg.t0);
    return random_eval_ctx(rng, 40);
}

SpectralVector inverted(const SpectralVector& sv) {
    SpectralVector out;
    for (const FieldElem& v : sv.xs) out.xs.push_back(v.inverse());
    for (const FieldElem& v : sv.ys) out.ys.push_back(v.inverse());
    return out;
}

std::vector<Partition> hook_partitions_up_to(int n, int m, int deg) {
    std::vector<Partition> out;
    for (int w = 0; w <= deg; ++w)
        for (const Partition& lam : partitions_of_weight(w))
            if (fat_hook_contains(n, m, lam)) out.push_back(lam);
    return out;
}

std::vector<CheckRecord> run_kajihara(const SuiteConfig& cfg, const FieldCtx& F,
                                      std::mt19937_64& rng) {
    return verify_kajihara(cfg.K, cfg.L, cfg.order, F, rng);
}

std::vector<CheckRecord> run_kernel(const SuiteConfig& cfg, const FieldCtx& F) {
    std::vector<Item> items;
    items.push_back([&] { return verify_kernel_identity('H', cfg.n, cfg.m, cfg.N, cfg.M, cfg.rmax, cfg.deg, F); });
    items.push_back([&] { return verify_kernel_identity('D', cfg.n, cfg.m, cfg.N, cfg.M, cfg.rmax, cfg.deg, F); });
    if (cfg.M == 0)
        items.push_back([&] { return verify_kernel_identity('H', cfg.n, cfg.m, cfg.N, 0, cfg.rmax, cfg.deg, F, true); });
    return run_items(items);
}

std::vector<CheckRecord> run_commute(const SuiteConfig& cfg, const FieldCtx& F) {
    VarTable vt(cfg.n, cfg.m, 0, 0);
    std::vector<DiffOp> H(cfg.rmax + 1), D(cfg.rmax + 1);
    for (int r = 1; r <= cfg.rmax; ++r) {
        H[r] = deformed_NS(r, cfg.n, cfg.m, F, vt);
        D[r] = deformed_MR(r, cfg.n, cfg.m, F, vt);
    }
    struct Pair {
        const char* kind;
        int r, s;
    };
    std::vector<Pair> pairs;
    for (int r = 1; r <= cfg.rmax; ++r)
        for (int s = r + 1; s <= cfg.rmax; ++s) pairs.push_back({"HH", r, s});
    for (int r = 1; r <= cfg.rmax; ++r)
        for (int s = r + 1; s <= cfg.rmax; ++s) pairs.push_back({"DD", r, s});
    for (int r = 1; r <= cfg.rmax; ++r)
        for (int s = 1; s <= cfg.rmax; ++s) pairs.push_back({"HD", r, s});
    std::vector<Item> items;
    for (const Pair& p : pairs)
        items.push_back([&, p] {
            auto start = Clock::now();
            const DiffOp& a = p.kind[0] == 'H' ? H[p.r] : D[p.r];
            const DiffOp& b = p.kind[1] == 'H' ? H[p.s] : D[p.s];
            DiffOp c = commutator(a, b, F);
            std::vector<CheckRecord> out;
            for (ZeroCert mode : {ZeroCert::Coefficients, ZeroCert::Specialization}) {
                std::string where;
                bool ok = certify_zero(c, mode, F, vt, &where);
                CheckRecord rec;
                rec.suite = std::string("commute-") + p.kind;
                rec.instance = nm_text(cfg.n, cfg.m) +
                               (mode == ZeroCert::Coefficients ? " cert=coefficients" : " cert=specialization");
                rec.index = "r=" + std::to_string(p.r) + " s=" + std::to_string(p.s);
                rec.residual = ok ? "0" : "nonzero at " + where;
                rec.elapsed = secs_since(start);
                out.push_back(rec);
            }
            return out;
        });
    return run_items(items);
}

std::vector<CheckRecord> run_eigen(const SuiteConfig& cfg, const FieldCtx& F) {
    VarTable vt(cfg.n, cfg.m, 0, 0);
    std::vector<Partition> lams =
        cfg.lam_given ? std::vector<Partition>{cfg.lam} : hook_partitions_up_to(cfg.n, cfg.m, cfg.deg);
    struct Family {
        const char* name;
        DiffOp op;
        Rat natural;
        bool invert_point;
    };
    // the hatted operators carry inverted parameters, so their natural
    // polynomials come from the generic series at q -> 1/q, t -> 1/t and are
    // evaluated on the inverted spectral points
    USeries<Rat> ghat = g_natural_series_generic(cfg.rmax, Bank::X, cfg.n, Bank::Y, cfg.m,
                                                 ShiftParam{-1, 0}, ShiftParam{0, -1}, F, vt);
    USeries<Rat> ehat = g_natural_series_generic(cfg.rmax, Bank::Y, cfg.m, Bank::X, cfg.n,
                                                 ShiftParam{0, 1}, ShiftParam{1, 0}, F, vt)
                            .rescaled(Rat(F.qt(-1, 0)));
    std::vector<std::vector<Family>> fams(cfg.rmax + 1);
    for (int r = 1; r <= cfg.rmax; ++r) {
        Rat g = G_natural_coeff(r, cfg.n, cfg.m, F, vt).f;
        Rat e = E_natural_coeff(r, cfg.n, cfg.m, F, vt).f;
        Rat eh = ehat[r];
        if (r % 2) eh = -eh;
        fams[r].push_back({"H", deformed_NS(r, cfg.n, cfg.m, F, vt), g, false});
        fams[r].push_back({"D", deformed_MR(r, cfg.n, cfg.m, F, vt), e, false});
        fams[r].push_back({"hatH", hat_NS(r, cfg.n, cfg.m, F, vt), ghat[r], true});
        fams[r].push_back({"hatD", hat_MR(r, cfg.n, cfg.m, F, vt), eh, true});
    }
    std::vector<Item> items;
    for (const Partition& lam : lams)
        items.push_back([&, lam] {
            std::vector<CheckRecord> out;
            Rat sp = super_P(lam, cfg.n, cfg.m, F, vt).f;
            SpectralVector sv = spectral_vector(lam, cfg.n, cfg.m, F);
            SpectralVector svi = inverted(sv);
            for (int r = 1; r <= cfg.rmax; ++r)
                for (const Family& fam : fams[r]) {
                    auto start = Clock::now();
                    FieldElem ev = eval_at_spectral(fam.natural, fam.invert_point ? svi : sv, F, vt);
                    Rat resid = fam.op.apply(sp, F) - ev * sp;
                    CheckRecord rec;
                    rec.suite = std::string("eigen-") + fam.name;
                    rec.instance = nm_text(cfg.n, cfg.m);
                    rec.index = "lam=" + part_text(lam) + " r=" + std::to_string(r);
                    rec.residual = rat_residual(resid);
                    rec.elapsed = secs_since(start);
                    out.push_back(rec);
                }
            return out;
        });
    return run_items(items);
}

std::vector<CheckRecord> run_wronski(const SuiteConfig& cfg, const FieldCtx& F) {
    VarTable vt(cfg.n, cfg.m, 0, 0);
    std::vector<Item> items;
    for (int k = 1; k <= cfg.rmax; ++k)
        items.push_back([&, k] {
            auto start = Clock::now();
            CheckRecord rec;
            rec.suite = "wronski-scalar";
            rec.instance = nm_text(cfg.n, cfg.m);
            rec.index = "k=" + std::to_string(k);
            rec.residual = wronski_scalar_check(k, cfg.n, cfg.m, F, vt) ? "0" : "nonzero";
            rec.elapsed = secs_since(start);
            return std::vector<CheckRecord>{rec};
        });
    if (cfg.n == 1 && cfg.m == 1) {
        for (int k = 1; k <= std::min(cfg.rmax, 3); ++k)
            items.push_back([&, k] {
                auto start = Clock::now();
                DiffOp sum;
                for (int r = 0; r <= k; ++r) {
                    int s = k - r;
                    DiffOp Dr = deformed_MR(r, cfg.n, cfg.m, F, vt);
                    DiffOp Hs = deformed_NS(s, cfg.n, cfg.m, F, vt);
                    FieldElem c = F.one() - F.qt(s, r);
                    if (r % 2) c = -c;
                    sum += compose(Dr, Hs, F).scale(c);
                }
                std::string where;
                bool ok = certify_zero(sum, ZeroCert::Coefficients, F, vt, &where);
                CheckRecord rec;
                rec.suite = "wronski-operator";
                rec.instance = nm_text(cfg.n, cfg.m);
                rec.index = "k=" + std::to_string(k);
                rec.residual = ok ? "0" : "nonzero at " + where;
                rec.elapsed = secs_since(start);
                return std::vector<CheckRecord>{rec};
            });
    }
    return run_items(items);
}

std::vector<CheckRecord> run_newton(const SuiteConfig& cfg, const FieldCtx& F) {
    VarTable vt(cfg.n, cfg.m, 0, 0);
    std::vector<Item> items;
    for (int r = 1; r <= cfg.rmax; ++r)
        items.push_back([&, r] {
            auto start = Clock::now();
            CheckRecord rec;
            rec.suite = "newton";
            rec.instance = nm_text(cfg.n, cfg.m);
            rec.index = "r=" + std::to_string(r);
            rec.residual = newton_check(r, cfg.n, cfg.m, F, vt) ? "0" : "nonzero";
            rec.elapsed = secs_since(start);
            return std::vector<CheckRecord>{rec};
        });
    return run_items(items);
}

std::vector<CheckRecord> run_hc(const SuiteConfig& cfg, const FieldCtx& F) {
    int zbank = std::max(cfg.rmax + 1, 3);
    VarTable vt(cfg.n, cfg.m, zbank, 0);
    std::vector<Item> items;
    for (int r = 1; r <= cfg.rmax; ++r)
        items.push_back([&, r] {
            auto start = Clock::now();
            ShiftedSymPoly g = shifted_g_star(r, r + 1, F, vt);
            PartCoeffs coords = pstar_coordinates(g, F, vt);
            Rat mapped = phi_natural(coords, cfg.n, cfg.m, F, vt).f;
            Rat direct = G_natural_coeff(r, cfg.n, cfg.m, F, vt).f;
            CheckRecord rec;
            rec.suite = "hc-phi-natural";
            rec.instance = nm_text(cfg.n, cfg.m);
            rec.index = "r=" + std::to_string(r);
            rec.residual = rat_residual(mapped - direct);
            rec.elapsed = secs_since(start);
            return std::vector<CheckRecord>{rec};
        });
    for (int r = 1; r <= cfg.rmax; ++r)
        items.push_back([&, r] {
            std::vector<CheckRecord> out;
            for (const char* which : {"g", "e"}) {
                auto start = Clock::now();
                Rat f = which[0] == 'g' ? G_natural_coeff(r, cfg.n, cfg.m, F, vt).f
                                        : E_natural_coeff(r, cfg.n, cfg.m, F, vt).f;
                bool ok = is_shifted_bisymmetric(f, cfg.n, cfg.m, F, vt) &&
                          quasi_invariant_shifted(f, cfg.n, cfg.m, F, vt);
                CheckRecord rec;
                rec.suite = "hc-shifted-membership";
                rec.instance = nm_text(cfg.n, cfg.m);
                rec.index = std::string(which) + " r=" + std::to_string(r);
                rec.residual = ok ? "0" : "condition violated";
                rec.elapsed = secs_since(start);
                out.push_back(rec);
            }
            return out;
        });
    items.push_back([&] {
        auto start = Clock::now();
        CheckRecord rec;
        rec.suite = "hc-explog";
        rec.instance = "N=3";
        rec.index = "order=" + std::to_string(cfg.order);
        rec.residual = g_star_explog_check(cfg.order, 3, F, vt) ? "0" : "nonzero";
        rec.elapsed = secs_since(start);
        return std::vector<CheckRecord>{rec};
    });
    items.push_back([&, seed = cfg.seed] {
        auto start = Clock::now();
        std::mt19937_64 rng(seed * 2654435761ULL + 17);
        std::vector<Partition> lams = hook_partitions_up_to(cfg.n, cfg.m, cfg.deg);
        std::vector<Rat> gs(cfg.rmax + 1);
        for (int r = 1; r <= cfg.rmax; ++r) gs[r] = G_natural_coeff(r, cfg.n, cfg.m, F, vt).f;
        std::vector<std::vector<FieldElem>> vals(lams.size());
        for (std::size_t i = 0; i < lams.size(); ++i) {
            SpectralVector sv = spectral_vector(lams[i], cfg.n, cfg.m, F);
            vals[i].resize(cfg.rmax + 1);
            for (int r = 1; r <= cfg.rmax; ++r) vals[i][r] = eval_at_spectral(gs[r], sv, F, vt);
        }
        std::uniform_int_distribution<int> coeff(-3, 3);
        std::uniform_int_distribution<int> expo(0, 2);
        std::string bad;
        for (int trial = 1; trial <= 50 && bad.empty(); ++trial) {
            Rat combo;
            std::vector<std::pair<std::vector<int>, QQ>> terms;
            while (combo.is_zero()) {
                combo = Rat();
                terms.clear();
                for (int j = 0; j < 3; ++j) {
                    std::vector<int> a(cfg.rmax + 1, 0);
                    int total = 0;
                    for (int r = 1; r <= cfg.rmax; ++r) {
                        a[r] = expo(rng);
                        total += a[r];
                    }
                    int c = coeff(rng);
                    if (c == 0 || total == 0 || total > 2) continue;
                    Rat term{QQ(c)};
                    for (int r = 1; r <= cfg.rmax; ++r)
                        for (int k = 0; k < a[r]; ++k) term = term * gs[r];
                    combo = combo + term;
                    terms.emplace_back(a, QQ(c));
                }
            }
            bool all_vanish = true;
            for (std::size_t i = 0; i < lams.size() && all_vanish; ++i) {
                FieldElem v;
                for (auto& [a, c] : terms) {
                    FieldElem term(c);
                    for (int r = 1; r <= cfg.rmax; ++r)
                        for (int k = 0; k < a[r]; ++k) term = term * vals[i][r];
                    v = v + term;
                }
                if (!v.is_zero()) all_vanish = false;
            }
            if (all_vanish) bad = "vanishing combination at trial " + std::to_string(trial);
        }
        CheckRecord rec;
        rec.suite = "hc-spectral-density";
        rec.instance = nm_text(cfg.n, cfg.m) + " deg=" + std::to_string(cfg.deg);
        rec.index = "trials=50";
        rec.residual = bad.empty() ? "0" : bad;
        rec.elapsed = secs_since(start);
        return std::vector<CheckRecord>{rec};
    });
    return run_items(items);
}

std::vector<CheckRecord> run_restriction(const SuiteConfig& cfg, const FieldCtx& F) {
    std::vector<Item> items;
    for (char family : {'H', 'D'})
        for (int r = 1; r <= cfg.rmax; ++r)
            items.push_back([&, family, r] { return verify_restriction(family, r, cfg.n, cfg.m, cfg.deg, F); });
    return run_items(items);
}

std::vector<CheckRecord> run_preserve(const SuiteConfig& cfg, const FieldCtx& F) {
    VarTable vt(cfg.n, cfg.m, 0, 0);
    std::vector<Item> items;
    for (int w = 0; w <= cfg.deg; ++w)
        for (const Partition& lam : partitions_of_weight(w))
            items.push_back([&, lam] {
                std::vector<CheckRecord> out;
                PartCoeffs pc;
                pc[lam] = F.one();
                Rat gen = phi_restriction(pc, cfg.n, cfg.m, F, vt).f;
                for (char family : {'H', 'D'})
                    for (int r = 1; r <= cfg.rmax; ++r) {
                        auto start = Clock::now();
                        DiffOp op = family == 'H' ? deformed_NS(r, cfg.n, cfg.m, F, vt)
                                                  : deformed_MR(r, cfg.n, cfg.m, F, vt);
                        BiSymPoly image{op.apply(gen, F), cfg.n, cfg.m, false, false};
                        CheckRecord rec;
                        rec.suite = "preserve-algebra";
                        rec.instance = nm_text(cfg.n, cfg.m) + " family=" + family;
                        rec.index = "lam=" + part_text(lam) + " r=" + std::to_string(r);
                        rec.residual = is_in_Lambda_nm(image, F, vt) ? "0" : "outside the algebra";
                        rec.elapsed = secs_since(start);
                        out.push_back(rec);
                    }
                return out;
            });
    if (cfg.n < 1 || cfg.m < 1) return run_items(items);
    int x1 = vt.var(Bank::X, 1), y1 = vt.var(Bank::Y, 1);
    Rat y1var = Rat::from_term(mono_of(y1), QQ(1));
    auto restricted = [&](const Rat& f) { return f.substitute(x1, y1var); };
    for (int wmu = 0; wmu <= cfg.deg; ++wmu)
        for (const std::vector<int>& mu : compositions(cfg.n, wmu))
            for (int c = 0; c + wmu <= cfg.deg && c <= cfg.m; ++c)
                for (const std::vector<int>& I : subsets_of_size(cfg.m, c))
                    items.push_back([&, mu, I] {
                        std::vector<CheckRecord> out;
                        bool has1 = !I.empty() && I.front() == 1;
                        auto emit = [&](const char* which, const std::function<Rat()>& body) {
                            auto start = Clock::now();
                            CheckRecord rec;
                            rec.suite = "preserve-implications";
                            rec.instance = nm_text(cfg.n, cfg.m);
                            rec.index = std::string("(") + which + ") mu=" + comp_text(mu) +
                                        " I=" + comp_text(I);
                            try {
                                rec.residual = rat_residual(restricted(body()));
                            } catch (const PoleError&) {
                                rec.residual = "pole on the x1=y1 hyperplane";
                            }
                            rec.elapsed = secs_since(start);
                            out.push_back(rec);
                        };
                        Rat B = B_coeff(mu, I, cfg.n, cfg.m, F, vt);
                        if (has1) {
                            emit("I", [&] { return apply_shift(B, t_shift(y1, -1), F); });
                        } else if (mu[0] == 0) {
                            emit("III", [&] {
                                return apply_shift(B, q_shift(x1, 1), F) - apply_shift(B, t_shift(y1, -1), F);
                            });
                        } else {
                            emit("II", [&] { return apply_shift(B, q_shift(x1, 1), F); });
                            emit("IV", [&] {
                                std::vector<int> mu1 = mu;
                                mu1[0] -= 1;
                                std::vector<int> I1;
                                I1.push_back(1);
                                I1.insert(I1.end(), I.begin(), I.end());
                                Rat other = B_coeff(mu1, I1, cfg.n, cfg.m, F, vt);
                                int sz = static_cast<int>(I.size());
                                return apply_shift(B, t_shift(y1, -1), F) +
                                       apply_shift(other, q_shift(x1, 1), F) * F.qt(sz - cfg.m, cfg.n);
                            });
                        }
                        return out;
                    });
    return run_items(items);
}

std::vector<CheckRecord> run_independence(const SuiteConfig& cfg, const FieldCtx& F) {
    VarTable vt(cfg.n, cfg.m, 0, 0);
    std::vector<CheckRecord> out;
    auto start = Clock::now();
    CheckRecord rec;
    rec.suite = "independence";
    rec.instance = nm_text(cfg.n, cfg.m);
    rec.index = "jacobian";
    rec.residual = jacobian_independence(cfg.n, cfg.m, F, vt) ? "0" : "jacobian vanishes";
    rec.elapsed = secs_since(start);
    out.push_back(rec);
    if (cfg.n == 2 && cfg.m == 1) {
        start = Clock::now();
        FieldElem got = jacobian_witness_value(2, 1, F);
        FieldElem want = F.qt(0, -2, QQ(6)) * (F.one() - F.qt(3, 0)) / (F.one() - F.qt(0, -3));
        CheckRecord wrec;
        wrec.suite = "independence";
        wrec.instance = nm_text(cfg.n, cfg.m);
        wrec.index = "witness coefficient";
        wrec.residual = rat_residual(got - want);
        wrec.elapsed = secs_since(start);
        out.push_back(wrec);
    }
    return out;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "kajihara", "kernel",      "commute",       "eigen",    "wronski",
        "newton",   "hc-generators", "restriction", "preserve", "independence"};
    return names;
}

void validate(const SuiteConfig& cfg) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), cfg.suite) == names.end())
        throw ConfigError("unknown suite: " + cfg.suite);
    auto nonneg = [](int v, const char* name) {
        if (v < 0) throw ConfigError(std::string(name) + " must be nonnegative");
    };
    nonneg(cfg.n, "n");
    nonneg(cfg.m, "m");
    nonneg(cfg.N, "N");
    nonneg(cfg.M, "M");
    nonneg(cfg.K, "K");
    nonneg(cfg.L, "L");
    nonneg(cfg.rmax, "rmax");
    nonneg(cfg.order, "order");
    nonneg(cfg.deg, "deg");
    for (int part : cfg.lam)
        if (part < 0) throw ConfigError("partition parts must be nonnegative");
    for (std::size_t i = 1; i < cfg.lam.size(); ++i)
        if (cfg.lam[i] > cfg.lam[i - 1]) throw ConfigError("partition parts must be weakly decreasing");
    if (cfg.symbolic && cfg.qt_given) throw ConfigError("q,t values conflict with symbolic mode");
    if (cfg.qt_given) {
        if (cfg.q0 == 0 || cfg.t0 == 0) throw ConfigError("q and t must be nonzero");
        if (!is_non_special(cfg.q0, cfg.t0, 40))
            throw ConfigError("q,t are special: some q^i t^j with i+j >= 1 equals 1");
    }
}

std::string suite_header(const std::string& suite) {
    if (suite == "kajihara")
        return "series transformation: the rank (K,L) basic hypergeometric sum equals its "
               "Euler-prefactored rank (L,K) partner, with the classical two-term transformation "
               "recovered at K=L=1";
    if (suite == "kernel")
        return "kernel identities: the deformed Noumi-Sano and Macdonald-Ruijsenaars generating "
               "series acting on (x,y) and on (z,w) agree on the kernel function";
    if (suite == "commute")
        return "commutativity: commutators of the deformed operator families certified zero by "
               "coefficient normalization and by specialization";
    if (suite == "eigen")
        return "eigenvalue equations: the deformed operators act on super-Macdonald polynomials "
               "by natural-polynomial values on spectral vectors";
    if (suite == "wronski")
        return "Wronski recurrences: the alternating bilinear relations linking the two deformed "
               "operator families, scalar and operator level";
    if (suite == "newton")
        return "Newton formulae: recurrences between deformed power sums and the natural "
               "generator polynomials";
    if (suite == "hc-generators")
        return "Harish-Chandra layer: shifted generators map onto the natural polynomials, which "
               "satisfy the shifted symmetry conditions; spectral vectors separate random "
               "generator combinations";
    if (suite == "restriction")
        return "restriction: the one-bank operators re-expressed in power sums intertwine with "
               "the deformed Newton-sum substitution";
    if (suite == "preserve")
        return "algebra preservation: operator images stay quasi-invariant bisymmetric, and the "
               "term coefficients satisfy the four hyperplane implications on x1=y1";
    if (suite == "independence")
        return "independence: the Jacobian of the deformed shifted power sums is nonzero, with "
               "the frozen witness coefficient at (2,1)";
    return "";
}

std::vector<CheckRecord> run_suite(const SuiteConfig& cfg) {
    validate(cfg);
    std::mt19937_64 rng(cfg.seed);
    FieldCtx F = make_ctx(cfg, rng);
    if (cfg.suite == "kajihara") return run_kajihara(cfg, F, rng);
    if (cfg.suite == "kernel") return run_kernel(cfg, F);
    if (cfg.suite == "commute") return run_commute(cfg, F);
    if (cfg.suite == "eigen") return run_eigen(cfg, F);
    if (cfg.suite == "wronski") return run_wronski(cfg, F);
    if (cfg.suite == "newton") return run_newton(cfg, F);
    if (cfg.suite == "hc-generators") return run_hc(cfg, F);
    if (cfg.suite == "restriction") return run_restriction(cfg, F);
    if (cfg.suite == "preserve") return run_preserve(cfg, F);
    if (cfg.suite == "independence") return run_independence(cfg, F);
    throw ConfigError("unknown suite: " + cfg.suite);
}

} // namespace qmacdo
