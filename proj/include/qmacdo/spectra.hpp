#ifndef QMACDO_SPECTRA_HPP
#define QMACDO_SPECTRA_HPP

#include "polyalg.hpp"
#include "superpoly.hpp"

namespace qmacdo {

// Evaluation point (q^{mu_1},...,q^{mu_n}, t^{-nu_1-n},...,t^{-nu_m-n})
// attached to a fat-hook partition through hook_split.
struct SpectralVector {
    std::vector<FieldElem> xs;
    std::vector<FieldElem> ys;
};

SpectralVector spectral_vector(const Partition& lam, int n, int m, const FieldCtx& F);

// u-series of the eigenvalue generating function for the row-type operators:
// prod_i [(X_i t'^{2-i} u; q')/(t'^{2-i} u; q')][(t'^{1-i} u; q')/(X_i t'^{1-i} u; q')]
// * prod_j (1 - t' Y_j q'^{j-1} u)/(1 - t'^{1-n} q'^{j-1} u),
// with q' = q^{qp.qe} t^{qp.te} and t' = q^{tp.qe} t^{tp.te}.
USeries<Rat> g_natural_series_generic(int order, Bank bx, int n, Bank by, int m,
                                      ShiftParam qp, ShiftParam tp, const FieldCtx& F,
                                      const VarTable& vt);
USeries<Rat> g_natural_series(int order, int n, int m, const FieldCtx& F, const VarTable& vt);

// u-series whose u^r coefficient is (-1)^r e_r; column-type generating function
// prod_i (1 - x_i t^{1-i} u)/(1 - t^{1-i} u)
// * prod_j [(t^{-n} q^j u; 1/t)/(y_j q^j u; 1/t)][(y_j q^{j-1} u; 1/t)/(t^{-n} q^{j-1} u; 1/t)]
USeries<Rat> e_natural_series(int order, int n, int m, const FieldCtx& F, const VarTable& vt);

BiSymPoly G_natural_coeff(int r, int n, int m, const FieldCtx& F, const VarTable& vt);
BiSymPoly E_natural_coeff(int r, int n, int m, const FieldCtx& F, const VarTable& vt);

// scalar eigenvalue series prod_{i <= l(lam)} of the four-Pochhammer ratio
USeries<FieldElem> script_G(const Partition& lam, int order, const FieldCtx& F);
// same value rewritten through hook_split data: x-block at q^{mu_i} plus the
// finite ratio prod_j (1 - t^{1-nu_j-n} q^{j-1} u)/(1 - t^{1-n} q^{j-1} u)
USeries<FieldElem> script_G_hook(const Partition& lam, int n, int m, int order,
                                 const FieldCtx& F);

FieldElem eval_at_spectral(const Rat& f, const SpectralVector& sv, const FieldCtx& F,
                           const VarTable& vt);
USeries<FieldElem> series_at_spectral(const USeries<Rat>& s, const SpectralVector& sv,
                                      const FieldCtx& F, const VarTable& vt);

// sum_i (x_i^r - 1) t^{r(1-i)} + (1-q^r)/(1-t^{-r}) sum_j (y_j^r - t^{-rn}) q^{r(j-1)}
BiSymPoly p_natural(int r, int n, int m, const FieldCtx& F, const VarTable& vt);

// sum_{r+s=k} (-1)^r (1 - t^r q^s) e_r g_s == 0
bool wronski_scalar_check(int k, int n, int m, const FieldCtx& F, const VarTable& vt);
// r e_r == sum_{s=1}^{r} (-1)^{s-1} p_s e_{r-s}
bool newton_check(int r, int n, int m, const FieldCtx& F, const VarTable& vt);

// polynomial in z_1..z_N symmetric in the shifted variables z_i t^{1-i},
// with deg bounding the total z-degree (the filtration index)
struct ShiftedSymPoly {
    Rat f;
    int N = 0;
    int deg = 0;
};

bool is_shifted_symmetric(const ShiftedSymPoly& g, const FieldCtx& F, const VarTable& vt);
// symmetric under the twisted adjacent swaps of x (t-shifted) and y (q-shifted)
bool is_shifted_bisymmetric(const Rat& f, int n, int m, const FieldCtx& F,
                            const VarTable& vt);
// T_{q,x_i} f == T_{t,y_j}^{-1} f along x_i t^{1-i} = y_j q^{j-1} for all i,j
bool quasi_invariant_shifted(const Rat& f, int n, int m, const FieldCtx& F,
                             const VarTable& vt);

USeries<Rat> g_star_series(int order, int N, const FieldCtx& F, const VarTable& vt);
ShiftedSymPoly shifted_g_star(int r, int N, const FieldCtx& F, const VarTable& vt);
// p_r^* = sum_i (z_i^r - 1) t^{r(1-i)}
ShiftedSymPoly shifted_p_star(int r, int N, const FieldCtx& F, const VarTable& vt);

// G*_N(u) == exp(sum_r (u^r/r) (1-t^r)/(1-q^r) p_r^*) through the given order
bool g_star_explog_check(int order, int N, const FieldCtx& F, const VarTable& vt);

// coordinates of a shifted symmetric polynomial in the products p*_lam,
// peeled degree by degree through the top-degree power-sum expansion;
// requires g.N >= g.deg
PartCoeffs pstar_coordinates(const ShiftedSymPoly& g, const FieldCtx& F, const VarTable& vt);

// multiplicative extension of p_r^* -> p_natural(r) applied to p*-coordinates
BiSymPoly phi_natural(const PartCoeffs& coords, int n, int m, const FieldCtx& F,
                      const VarTable& vt);

Rat jacobian_det_p_natural(int n, int m, const FieldCtx& F, const VarTable& vt);
// n! prod_i t^{i(1-i)} * (q^{n+1};q)_m/(t^{-n-1};1/t)_m * (n+1)_m * prod_j q^{(n+j)(j-1)}
FieldElem jacobian_witness_value(int n, int m, const FieldCtx& F);
// nonzero Jacobian of (p_1,...,p_{n+m}) plus the witness-coefficient match
bool jacobian_independence(int n, int m, const FieldCtx& F, const VarTable& vt);

} // namespace qmacdo

#endif
