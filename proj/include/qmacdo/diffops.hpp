#ifndef QMACDO_DIFFOPS_HPP
#define QMACDO_DIFFOPS_HPP

#include "macdonald.hpp"

namespace qmacdo {

struct ConventionError : std::runtime_error {
    explicit ConventionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Multiplicative shift: slot v picks up q^{qs[v]} t^{ts[v]}. Composition is
// exponent addition; the identity shift has all exponents zero.
struct Shift {
    Mono qs, ts;

    bool is_identity() const { return qs.is_unit() && ts.is_unit(); }
    Shift operator+(const Shift& o) const { return {qs + o.qs, ts + o.ts}; }
    bool operator==(const Shift& o) const { return qs == o.qs && ts == o.ts; }
};

struct ShiftLess {
    bool operator()(const Shift& a, const Shift& b) const {
        int c = mono_cmp(a.qs, b.qs);
        if (c != 0) return c < 0;
        return mono_cmp(a.ts, b.ts) < 0;
    }
};

// x_slot -> q^steps x_slot  /  x_slot -> t^steps x_slot
Shift q_shift(int slot, int steps);
Shift t_shift(int slot, int steps);

Poly apply_shift(const Poly& f, const Shift& s, const FieldCtx& F);
Rat apply_shift(const Rat& f, const Shift& s, const FieldCtx& F);

// q-difference operator in normal form: sum of coeff * shift with merged
// shift keys and no zero coefficients, so is_zero is structural.
class DiffOp {
public:
    using Terms = std::map<Shift, Rat, ShiftLess>;

    DiffOp() = default;
    static DiffOp identity() { return from_term(Shift{}, Rat(QQ(1))); }
    static DiffOp from_term(const Shift& s, Rat c) {
        DiffOp op;
        op.add(s, c);
        return op;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add(const Shift& s, const Rat& c);

    DiffOp& operator+=(const DiffOp& o);
    DiffOp& operator-=(const DiffOp& o);
    friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
    friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
    DiffOp operator-() const;

    DiffOp& scale(const FieldElem& c);

    Rat apply(const Rat& f, const FieldCtx& F) const;

    bool operator==(const DiffOp& o) const;

    std::string to_string(const VarTable& vt) const;

private:
    Terms terms_;
};

DiffOp compose(const DiffOp& a, const DiffOp& b, const FieldCtx& F);
DiffOp commutator(const DiffOp& a, const DiffOp& b, const FieldCtx& F);

// parameter of a shift family written as q^qe t^te
struct ShiftParam {
    int qe, te;
};

// enumeration helpers for operator sums
std::vector<std::vector<int>> compositions(int n, int w);
std::vector<std::vector<int>> subsets_of_size(int m, int c);

// coefficient of the (mu, I) term of the two-bank shift family: mu in N^n on
// the x bank, I a sorted list of 1-based y indices
Rat B_coeff(const std::vector<int>& mu, const std::vector<int>& I, int n, int m,
            const FieldCtx& F, const VarTable& vt);

// coefficient of the (I, mu) term of the dual family: I on the x bank, mu on y
Rat A_coeff(const std::vector<int>& I, const std::vector<int>& mu, int n, int m,
            const FieldCtx& F, const VarTable& vt);

// u^r coefficient of the raw generating series with banks (bx arity n, by
// arity m) and shift parameters qp = q^{qs.qe} t^{qs.te}, tp likewise
DiffOp ns_u_coeff_generic(int r, Bank bx, int n, Bank by, int m, ShiftParam qs, ShiftParam ts,
                          const FieldCtx& F, const VarTable& vt);

// u^r coefficient of the prefactored series (q-binomial prefactor folded in)
DiffOp deformed_ns_generic(int r, Bank bx, int n, Bank by, int m, ShiftParam qs, ShiftParam ts,
                           const FieldCtx& F, const VarTable& vt);

DiffOp deformed_NS(int r, int n, int m, const FieldCtx& F, const VarTable& vt);
DiffOp deformed_MR(int r, int n, int m, const FieldCtx& F, const VarTable& vt);
DiffOp deformed_MR_direct(int r, int n, int m, const FieldCtx& F, const VarTable& vt);

// classical one-bank operators: u^r coefficients of the subset generating
// series D_N and of the full shift series H_N
DiffOp classical_D_coeff(int r, int N, Bank bank, const FieldCtx& F, const VarTable& vt);
DiffOp classical_H_coeff(int r, int N, Bank bank, const FieldCtx& F, const VarTable& vt);

// parameter-inverted operators with y rescaled by qt (coefficients only;
// slot multipliers are unchanged by the rescale)
DiffOp hat_NS(int r, int n, int m, const FieldCtx& F, const VarTable& vt);
DiffOp hat_MR(int r, int n, int m, const FieldCtx& F, const VarTable& vt);

enum class ZeroCert { Coefficients, Specialization };

// Coefficients mode: every normal-form coefficient is the zero function.
// Specialization mode: kernel-specialization pivots, walking the operator's
// own shift keys (alpha, beta) by increasing level, substituting the kernel
// points z_{alpha,beta} into (op Phi)/Phi and testing the pivot.
bool certify_zero(const DiffOp& op, ZeroCert via, const FieldCtx& F, const VarTable& vt,
                  std::string* where = nullptr);

} // namespace qmacdo

#endif
