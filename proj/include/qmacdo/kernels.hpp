#ifndef QMACDO_KERNELS_HPP
#define QMACDO_KERNELS_HPP

#include <random>

#include "report.hpp"
#include "spectra.hpp"

namespace qmacdo {

struct BasisError : std::runtime_error {
    explicit BasisError(const std::string& msg) : std::runtime_error(msg) {}
};

enum class KernelKind { Phi, Psi, Pi };

// Kernel function expanded as a series over the z,w banks, truncated at
// total z,w degree deg; coefficients are rational in x,y.
struct KernelSeries {
    TruncSeries s;
    int n = 0, m = 0, N = 0, M = 0;
    KernelKind kind = KernelKind::Phi;
};

// prod (x_i z_j;q)/(x_i z_j / t;q) * prod (y_i w_j;1/t)/(q y_i w_j;1/t)
//   * prod (1 - x_i w_j) * prod (1 - y_i z_j), infinite products over the
// gauge powers of each pair
KernelSeries phi_kernel(int n, int m, int N, int M, int d, const FieldCtx& F,
                        const VarTable& vt);

// prod (t x_i z_j;q)/(x_i z_j;q) * prod (qt y_i w_j;t)/(t y_i w_j;t)
//   * prod (1 - t x_i w_j) * prod (1 - t y_i z_j)
KernelSeries psi_kernel(int n, int m, int N, int M, int d, const FieldCtx& F,
                        const VarTable& vt);

// one-bank reproducing kernel on z: prod (t x_i z_k;q)/(x_i z_k;q)
//   * prod (1 - t y_j z_k)
KernelSeries pi_kernel(int n, int m, int N, int d, const FieldCtx& F, const VarTable& vt);

// family 'H' (full shift series) or 'D' (subset series) acting on the x,y
// banks, and the same family on the z,w banks
DiffOp xy_operator(char family, int r, int n, int m, const FieldCtx& F, const VarTable& vt);
DiffOp zw_operator(char family, int r, int N, int M, const FieldCtx& F, const VarTable& vt);

// operator on the x,y banks applied coefficientwise to a z,w series
TruncSeries apply_op_xy(const DiffOp& op, const TruncSeries& s, const FieldCtx& F);

// product of the distinct z,w denominator factors of op, each at its
// maximal multiplicity; parameter-only factors are left alone
Poly clearing_poly(const DiffOp& op);

// minimal total z,w degree among the terms of p
int zw_valuation(const Poly& p, const VarTable& vt);

// clear * (op s) for an operator on the z,w banks: shifts act on series keys
// by exponent weighting, clear absorbs every z,w denominator
TruncSeries apply_op_zw(const DiffOp& op, const TruncSeries& s, const Poly& clear,
                        const FieldCtx& F, const VarTable& vt);

// sum over |lam| <= d, length(lam) <= N of t^{-|lam|} SP_lam(x,y) Q_lam(z)
TruncSeries sp_def_expansion(int n, int m, int N, int d, const FieldCtx& F,
                             const VarTable& vt);

// the same sum with each term weighted by the u^r eigenvalue coefficient
// of lam
TruncSeries eigen_expansion(int n, int m, int N, int d, int r, const FieldCtx& F,
                            const VarTable& vt);

// truncated basic hypergeometric series sum_k (a;q)_k (b;q)_k /
// ((q;q)_k (c;q)_k) u^k
USeries<FieldElem> two_phi_one(const FieldElem& a, const FieldElem& b, const FieldElem& c,
                               int R, const FieldCtx& F);

// multiple basic hypergeometric sum over gamma in N^K with weight <= R;
// second-block entries are used as given: prod (X_i b_k;q)/(X_i c_k;q)
USeries<FieldElem> kajihara_phi(const std::vector<FieldElem>& a,
                                const std::vector<FieldElem>& X,
                                const std::vector<FieldElem>& b,
                                const std::vector<FieldElem>& c, int R, const FieldCtx& F);

// Euler-type transformation of the K,L sum against its L,K partner, the
// c=1 form, and for K=L=1 the classical two-term transformation; random
// nonzero rational data, resampled on poles
std::vector<CheckRecord> verify_kajihara(int K, int L, int R, const FieldCtx& F,
                                         std::mt19937_64& rng);

// operator identity on the kernel: family acting on x,y against the same
// family acting on z,w, both sides cleared of z,w denominators, through
// series order R and z,w degree d
std::vector<CheckRecord> verify_kernel_identity(char family, int n, int m, int N, int M,
                                                int R, int d, const FieldCtx& F,
                                                bool psi_form = false);

// restriction of the classical one-bank operator: re-express its action on
// each p_lam, |lam| <= d, in the power-sum basis at N = d+r+n+m variables,
// push through the deformed Newton sums, and compare with the two-bank
// operator; includes the N vs N+1 stability of the re-expression
std::vector<CheckRecord> verify_restriction(char family, int r, int n, int m, int d,
                                            const FieldCtx& F);

} // namespace qmacdo

#endif
