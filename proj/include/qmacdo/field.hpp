#ifndef QMACDO_FIELD_HPP
#define QMACDO_FIELD_HPP

#include <random>

#include "rat.hpp"

namespace qmacdo {

// Scalars of the coefficient field: rational functions of q,t in symbolic
// mode, plain rationals in Eval mode. Both are carried by Rat values whose
// support stays inside the two parameter slots; the ambient FieldCtx decides
// which mode new scalars are built in and holds the Eval values of q,t.
using FieldElem = Rat;

enum class Mode { Symbolic, Eval };

struct DegenerateBase : std::runtime_error {
    explicit DegenerateBase(const std::string& msg) : std::runtime_error(msg) {}
};
struct SpecialParams : std::runtime_error {
    explicit SpecialParams(const std::string& msg) : std::runtime_error(msg) {}
};

class FieldCtx {
public:
    static FieldCtx symbolic() { return FieldCtx(Mode::Symbolic, QQ(0), QQ(0)); }
    static FieldCtx eval(const QQ& q0, const QQ& t0) {
        return FieldCtx(Mode::Eval, q0, t0);
    }

    Mode mode() const { return mode_; }
    bool is_symbolic() const { return mode_ == Mode::Symbolic; }
    const QQ& q0() const { return q0_; }
    const QQ& t0() const { return t0_; }

    FieldElem q() const { return qt(1, 0); }
    FieldElem t() const { return qt(0, 1); }
    // q^a t^b c as one scalar
    FieldElem qt(int a, int b, const QQ& c = QQ(1)) const {
        if (mode_ == Mode::Symbolic) {
            Mono m;
            m.e[kParamQ] = static_cast<int16_t>(a);
            m.e[kParamT] = static_cast<int16_t>(b);
            return Rat(Poly::term(m, c));
        }
        return Rat(c * qq_pow(q0_, a) * qq_pow(t0_, b));
    }
    FieldElem integer(long v) const { return Rat(QQ(v)); }
    FieldElem rational(const QQ& v) const { return Rat(v); }
    FieldElem zero() const { return Rat(); }
    FieldElem one() const { return Rat(QQ(1)); }

    // numeric value of q^a t^b in Eval mode
    QQ qt_value(int a, int b) const { return qq_pow(q0_, a) * qq_pow(t0_, b); }

private:
    FieldCtx(Mode m, QQ q0, QQ t0) : mode_(m), q0_(std::move(q0)), t0_(std::move(t0)) {}
    Mode mode_;
    QQ q0_, t0_;
};

// (a; base)_k. Negative k uses (a;q)_{-k} = 1/(a q^{-k}; q)_k.
FieldElem qpochhammer(const FieldElem& a, const FieldElem& base, int k);

// (a; base)_k / (base; base)_k, the universal series coefficient
FieldElem poch_ratio(const FieldElem& a, const FieldElem& base, int k);

// Exact dense solve of M c = rhs; throws SpecialParams on a singular matrix.
std::vector<FieldElem> solve_linear(std::vector<std::vector<FieldElem>> M,
                                    std::vector<FieldElem> rhs);

// true iff q^i t^j != 1 for all 0 <= i,j <= bound with i+j >= 1
bool is_non_special(const QQ& q0, const QQ& t0, int bound);

// uniformly drawn p/q with p,q in [2,97], p != q
QQ random_rational(std::mt19937_64& rng);

// Eval context at a random non-special point; redraws until the bound holds
FieldCtx random_eval_ctx(std::mt19937_64& rng, int bound);

std::string field_to_string(const FieldElem& f);

} // namespace qmacdo

#endif
