#ifndef QMACDO_SUPERPOLY_HPP
#define QMACDO_SUPERPOLY_HPP

#include "diffops.hpp"

namespace qmacdo {

// Polynomial in the x and y banks whose coefficients may carry q,t
// denominators; n and m are the ambient arities.
struct BiSymPoly {
    Rat f;
    int n = 0, m = 0;
    bool checked_symmetric = false;
    bool checked_quasi_invariant = false;
};

// symmetric in x and in y separately (adjacent transposition check)
bool is_bisymmetric(BiSymPoly& p, const VarTable& vt);

// (T_{q,x_i} - T_{t,y_j}^{-1}) p vanishes along x_i = y_j for all i,j;
// returns false when p is not bisymmetric
bool is_in_Lambda_nm(BiSymPoly& p, const FieldCtx& F, const VarTable& vt);

// sum over nu inside lam of (-tbase)^{|nu|} P_{lam/nu}(bx; pp) Q_{nu'}(by; ppd)
BiSymPoly super_P_generic(const Partition& lam, Bank bx, int n, Bank by, int m,
                          const ParamPair& pp, const ParamPair& ppd, const FieldElem& tbase,
                          const FieldCtx& F, const VarTable& vt);

BiSymPoly super_P(const Partition& lam, int n, int m, const FieldCtx& F, const VarTable& vt);
BiSymPoly super_Q(const Partition& lam, int n, int m, const FieldCtx& F, const VarTable& vt);

// same value through the double sum with explicit product coefficients
BiSymPoly super_P_double(const Partition& lam, int n, int m, const FieldCtx& F,
                         const VarTable& vt);

BiSymPoly deformed_newton_sum(int r, int n, int m, const FieldCtx& F, const VarTable& vt);

// multiplicative extension of p_r -> deformed_newton_sum(r) on a power-sum
// coefficient vector
BiSymPoly phi_restriction(const PartCoeffs& pc, int n, int m, const FieldCtx& F,
                          const VarTable& vt);

} // namespace qmacdo

#endif
