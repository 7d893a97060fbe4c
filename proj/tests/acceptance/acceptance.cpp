#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "qmacdo/kernels.hpp"
#include "qmacdo/spectra.hpp"
#include "qmacdo/suites.hpp"
#include "qmacdo/superpoly.hpp"

using namespace qmacdo;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& what) {
        if (ok) detail = what;
        ok = false;
    }
    void absorb(const std::vector<CheckRecord>& rs) {
        for (auto& r : rs)
            if (!r.ok()) fail(r.suite + " " + r.instance + " " + r.index + ": " + r.residual);
    }
};

SuiteConfig base_config(const std::string& suite, int n, int m) {
    SuiteConfig cfg;
    cfg.suite = suite;
    cfg.n = n;
    cfg.m = m;
    return cfg;
}

// 1. u-series transformation between the (K,L) and (L,K) hypergeometric
// series to order 4, three random parameter sets each, Heine at K=L=1
Outcome criterion_kajihara() {
    Outcome out;
    std::mt19937_64 rng(101);
    for (auto [K, L] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}, std::pair{2, 2}})
        for (int set = 0; set < 3; ++set) {
            FieldCtx F = random_eval_ctx(rng, 40);
            out.absorb(verify_kajihara(K, L, 4, F, rng));
        }
    return out;
}

// 2. kernel identities for both families at u-order 2, z,w-degree 4, plus
// the t-gauged variant at (1,1;1,0)
Outcome criterion_kernel() {
    Outcome out;
    std::mt19937_64 rng(202);
    FieldCtx F = random_eval_ctx(rng, 40);
    for (char fam : {'H', 'D'})
        for (auto [n, m, N, M] : {std::tuple{1, 1, 1, 1}, std::tuple{2, 1, 1, 1},
                                  std::tuple{1, 2, 2, 1}, std::tuple{2, 2, 1, 1}})
            out.absorb(verify_kernel_identity(fam, n, m, N, M, 2, 4, F));
    out.absorb(verify_kernel_identity('H', 1, 1, 1, 0, 2, 4, F, true));
    return out;
}

// 3. all commutators vanish structurally: r,s <= 3 symbolic on (1,1),(2,1),
// (1,2); r,s <= 4 on (2,2) at two random evaluation points
Outcome criterion_commute() {
    Outcome out;
    for (auto [n, m] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}}) {
        SuiteConfig cfg = base_config("commute", n, m);
        cfg.rmax = 3;
        cfg.symbolic = true;
        out.absorb(run_suite(cfg));
    }
    for (unsigned long long seed : {31ULL, 32ULL}) {
        SuiteConfig cfg = base_config("commute", 2, 2);
        cfg.rmax = 4;
        cfg.seed = seed;
        out.absorb(run_suite(cfg));
    }
    return out;
}

// 4. eigenvalue equations for all four operator families on SP_lam,
// |lam| <= 5, r <= 3, two random evaluation points each
Outcome criterion_eigen() {
    Outcome out;
    for (auto [n, m] : {std::pair{1, 1}, std::pair{2, 1}})
        for (unsigned long long seed : {41ULL, 42ULL}) {
            SuiteConfig cfg = base_config("eigen", n, m);
            cfg.rmax = 3;
            cfg.deg = 5;
            cfg.seed = seed;
            out.absorb(run_suite(cfg));
        }
    return out;
}

// 5. vanishing outside the fat hook to degree 6, membership in the deformed
// algebra to degree 5, and the two symmetry identities to degree 4
Outcome criterion_superpoly() {
    Outcome out;
    FieldCtx F = FieldCtx::symbolic();
    for (auto [n, m] : {std::pair{1, 1}, std::pair{2, 1}}) {
        VarTable vt(n, m);
        for (int w = 0; w <= 6; ++w)
            for (auto& lam : partitions_of_weight(w)) {
                BiSymPoly sp = super_P(lam, n, m, F, vt);
                bool inside = fat_hook_contains(n, m, lam);
                if (inside == sp.f.is_zero())
                    out.fail("vanishing mismatch at n=" + std::to_string(n) +
                             " m=" + std::to_string(m) + " lam=(" + partition_to_string(lam) + ")");
            }
        for (int w = 0; w <= 5; ++w)
            for (auto& lam : partitions_of_weight(w)) {
                if (!fat_hook_contains(n, m, lam)) continue;
                BiSymPoly sp = super_P(lam, n, m, F, vt);
                if (!is_in_Lambda_nm(sp, F, vt))
                    out.fail("membership fails at n=" + std::to_string(n) +
                             " m=" + std::to_string(m) + " lam=(" + partition_to_string(lam) + ")");
            }
    }
    {
        VarTable vt(2, 2);
        for (int w = 0; w <= 4; ++w)
            for (auto& lam : partitions_of_weight(w)) {
                if (!fat_hook_contains(2, 2, lam)) continue;
                BiSymPoly inv = super_P_generic(lam, Bank::X, 2, Bank::Y, 2, params_inv(F),
                                                params_tq_inv(F), F.qt(0, -1), F, vt);
                Rat rhs = super_P(lam, 2, 2, F, vt).f;
                for (int j = 1; j <= 2; ++j)
                    rhs = rhs.scale_var(vt.var(Bank::Y, j), QQ(1), -1, -1);
                if (!(inv.f - rhs).is_zero())
                    out.fail("parameter inversion identity fails at lam=(" +
                             partition_to_string(lam) + ")");
                Partition lc = conjugate(lam);
                BiSymPoly l = super_P_generic(lc, Bank::Y, 2, Bank::X, 2, params_tq_inv(F),
                                              params_inv(F), F.qt(-1, 0), F, vt);
                Rat lhs = b_lambda(lc, params_tq_inv(F)) * l.f;
                int w2 = weight(lam);
                FieldElem c = F.qt(-w2, 0);
                if (w2 % 2) c = -c;
                if (!(lhs - c * super_P(lam, 2, 2, F, vt).f).is_zero())
                    out.fail("conjugate duality fails at lam=(" + partition_to_string(lam) + ")");
            }
    }
    return out;
}

// 6. scalar recurrences between the families to k,r <= 5 at (2,2) and the
// operator-level alternating relation to k <= 3 at (1,1)
Outcome criterion_wronski_newton() {
    Outcome out;
    {
        SuiteConfig cfg = base_config("wronski", 2, 2);
        cfg.rmax = 5;
        cfg.symbolic = true;
        out.absorb(run_suite(cfg));
    }
    {
        SuiteConfig cfg = base_config("newton", 2, 2);
        cfg.rmax = 5;
        cfg.symbolic = true;
        out.absorb(run_suite(cfg));
    }
    {
        SuiteConfig cfg = base_config("wronski", 1, 1);
        cfg.rmax = 3;
        cfg.symbolic = true;
        out.absorb(run_suite(cfg));
    }
    return out;
}

// 7. the shifted generators map onto the operator eigenvalue generators,
// satisfy the shifted symmetry conditions, and the exp-log identity holds
Outcome criterion_harish_chandra() {
    Outcome out;
    for (auto [n, m] : {std::pair{1, 1}, std::pair{2, 1}}) {
        SuiteConfig cfg = base_config("hc-generators", n, m);
        cfg.rmax = 4;
        cfg.order = 4;
        cfg.deg = 3;
        cfg.symbolic = true;
        out.absorb(run_suite(cfg));
    }
    return out;
}

// 8. jacobian independence of the natural power sums, with the frozen
// witness coefficient at (2,1)
Outcome criterion_independence() {
    Outcome out;
    for (auto [n, m] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}, std::pair{2, 2}}) {
        SuiteConfig cfg = base_config("independence", n, m);
        cfg.symbolic = true;
        out.absorb(run_suite(cfg));
    }
    return out;
}

// 9. restriction intertwining on all p_lam, |lam| <= 3, r <= 2, at (1,1)
// with stability in the ambient size, plus algebra preservation and the
// hyperplane implications at (2,2)
Outcome criterion_restriction() {
    Outcome out;
    std::mt19937_64 rng(909);
    FieldCtx F = random_eval_ctx(rng, 40);
    for (char fam : {'H', 'D'})
        for (int r = 1; r <= 2; ++r) out.absorb(verify_restriction(fam, r, 1, 1, 3, F));
    SuiteConfig cfg = base_config("preserve", 2, 2);
    cfg.rmax = 2;
    cfg.deg = 3;
    cfg.symbolic = true;
    out.absorb(run_suite(cfg));
    return out;
}

// 10. the two zero certificates agree on ten structurally zero commutators
// and ten perturbed nonzero operators, with a pivot named for every
// nonzero case
Outcome criterion_certificates() {
    Outcome out;
    FieldCtx F = FieldCtx::symbolic();
    VarTable vt(1, 1);
    std::vector<DiffOp> H, D;
    for (int r = 1; r <= 3; ++r) {
        H.push_back(deformed_NS(r, 1, 1, F, vt));
        D.push_back(deformed_MR(r, 1, 1, F, vt));
    }
    std::vector<DiffOp> zeros;
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
            zeros.push_back(commutator(H[a], H[b], F));
            zeros.push_back(commutator(D[a], D[b], F));
        }
    zeros.push_back(commutator(H[0], D[0], F));
    zeros.push_back(commutator(H[0], D[1], F));
    zeros.push_back(commutator(H[1], D[0], F));
    zeros.push_back(commutator(H[2], D[2], F));
    int x1 = vt.var(Bank::X, 1), y1 = vt.var(Bank::Y, 1);
    for (int i = 0; i < 10; ++i) {
        std::string where;
        bool coeffs = certify_zero(zeros[i], ZeroCert::Coefficients, F, vt);
        bool spec = certify_zero(zeros[i], ZeroCert::Specialization, F, vt, &where);
        if (!coeffs || !spec) out.fail("zero operator " + std::to_string(i) + " rejected");

        Shift sh = q_shift(x1, i % 3 + 1) + t_shift(y1, i % 2);
        DiffOp nz = zeros[i] + DiffOp::from_term(sh, Rat(F.one() - F.qt(i % 4 + 1, 1)));
        if (nz.is_zero()) out.fail("perturbation " + std::to_string(i) + " collapsed");
        where.clear();
        bool ncoeffs = certify_zero(nz, ZeroCert::Coefficients, F, vt);
        bool nspec = certify_zero(nz, ZeroCert::Specialization, F, vt, &where);
        if (ncoeffs || nspec) out.fail("perturbed operator " + std::to_string(i) + " accepted");
        if (where.empty()) out.fail("no pivot located for case " + std::to_string(i));
    }
    return out;
}

} // namespace

int main() {
    struct Entry {
        const char* name;
        Outcome (*run)();
    };
    const Entry entries[] = {
        {"kajihara transformation", criterion_kajihara},
        {"kernel identities", criterion_kernel},
        {"operator commutativity", criterion_commute},
        {"eigenvalue equations", criterion_eigen},
        {"fat-hook vanishing and basis facts", criterion_superpoly},
        {"wronski and newton relations", criterion_wronski_newton},
        {"harish-chandra layer", criterion_harish_chandra},
        {"jacobian independence", criterion_independence},
        {"restriction diagrams", criterion_restriction},
        {"zero-certificate cross-validation", criterion_certificates},
    };
    int failures = 0;
    int idx = 0;
    for (auto& e : entries) {
        ++idx;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o = e.run();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (o.ok) {
            std::printf("criterion %2d: PASS  %s (%.1fs)\n", idx, e.name, secs);
        } else {
            std::printf("criterion %2d: FAIL  %s (%.1fs): %s\n", idx, e.name, secs,
                        o.detail.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
