#ifndef QMACDO_MACDONALD_HPP
#define QMACDO_MACDONALD_HPP

#include "partitions.hpp"
#include "polyalg.hpp"

namespace qmacdo {

struct NotContained : RankError {
    explicit NotContained(const std::string& msg) : RankError(msg) {}
};

// Parameter pair the Macdonald machinery is generic over: the ambient (q,t),
// the swap (t,q), inverted pairs, or Eval-mode numbers.
struct ParamPair {
    FieldElem qp, tp;
    std::string fingerprint() const;
};

ParamPair params_qt(const FieldCtx& F);
ParamPair params_tq(const FieldCtx& F);
ParamPair params_inv(const FieldCtx& F);      // (q^-1, t^-1)
ParamPair params_tq_inv(const FieldCtx& F);   // (t^-1, q^-1)

// qp^a tp^b
FieldElem pp_pow(const ParamPair& pp, int a, int b);

FieldElem b_lambda(const Partition& lam, const ParamPair& pp);
FieldElem z_lambda(const Partition& lam, const ParamPair& pp);

Mono mono_of_partition(const Partition& lam, Bank bank, const VarTable& vt);

Poly monomial_sym(const Partition& lam, Bank bank, int N, const VarTable& vt);
Poly power_sum_poly(int r, Bank bank, int N, const VarTable& vt);
Poly power_sum_poly(const Partition& lam, Bank bank, int N, const VarTable& vt);

// coefficients of a symmetric object on a basis labeled by partitions
using PartCoeffs = std::map<Partition, FieldElem, PartitionLess>;

struct MacBasis {
    PartCoeffs p_coeffs;  // expansion in power sums
    PartCoeffs m_coeffs;  // expansion in monomial symmetric polynomials
    FieldElem norm;       // <P, P>
};

// P_lambda in basis coordinates; computed degree-at-a-time and cached
const MacBasis& macdonald_data(const Partition& lam, const ParamPair& pp);

// <a, b> = sum_rho a_rho b_rho z_rho for p-basis coefficient vectors
FieldElem p_inner(const PartCoeffs& a, const PartCoeffs& b, const ParamPair& pp);

// basis conversions (exact, per weight component)
PartCoeffs p_to_m(const PartCoeffs& pc);
PartCoeffs m_to_p(const PartCoeffs& mc);

// read m-basis coefficients off a symmetric rational function of one bank
// whose denominator involves only q,t; faithful for partitions of length <= N
PartCoeffs to_m_basis(const Rat& f, Bank bank, int N, const VarTable& vt);
Rat from_m_basis(const PartCoeffs& mc, Bank bank, int N, const VarTable& vt);

Rat macdonald_P(const Partition& lam, Bank bank, int N, const ParamPair& pp,
                const VarTable& vt);
Rat macdonald_Q(const Partition& lam, Bank bank, int N, const ParamPair& pp,
                const VarTable& vt);

// u^r coefficient of prod_i (tp x_i u; qp)_inf / (x_i u; qp)_inf
Rat g_r_poly(int r, Bank bank, int N, const ParamPair& pp, const VarTable& vt);

// chat^lambda_{mu,nu}: Q_mu Q_nu = sum_lambda chat Q_lambda, solved in the
// monomial basis with N variables (the default takes N = |mu|+|nu|)
PartCoeffs lr_coefficients_at(const Partition& mu, const Partition& nu, const ParamPair& pp,
                              int N);
const PartCoeffs& lr_coefficients(const Partition& mu, const Partition& nu,
                                  const ParamPair& pp);

// P_{lambda/nu} = sum_mu chat^lambda_{mu,nu} P_mu, materialized in N variables
// (partitions longer than N drop out)
Rat skew_P(const Partition& lam, const Partition& nu, Bank bank, int N, const ParamPair& pp,
           const VarTable& vt);

// drop every cached basis/LR result (tests use this to control reuse)
void clear_macdonald_cache();

} // namespace qmacdo

#endif
