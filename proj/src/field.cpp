#include "qmacdo/field.hpp"

#include <sstream>

namespace qmacdo {

FieldElem qpochhammer(const FieldElem& a, const FieldElem& base, int k) {
    if (k < 0) {
        FieldElem shifted = a * base.pow(k);
        FieldElem p = qpochhammer(shifted, base, -k);
        if (p.is_zero()) throw NonInvertible("negative Pochhammer hits zero");
        return p.inverse();
    }
    FieldElem acc(QQ(1));
    FieldElem one(QQ(1));
    FieldElem ab = a;
    for (int i = 0; i < k; ++i) {
        acc *= one - ab;
        ab *= base;
    }
    return acc;
}

bool is_non_special(const QQ& q0, const QQ& t0, int bound) {
    if (q0 == 0 || t0 == 0) return false;
    std::vector<QQ> qp(bound + 1), tp(bound + 1);
    qp[0] = tp[0] = QQ(1);
    for (int i = 1; i <= bound; ++i) {
        qp[i] = qp[i - 1] * q0;
        tp[i] = tp[i - 1] * t0;
    }
    for (int i = 0; i <= bound; ++i)
        for (int j = 0; j <= bound; ++j) {
            if (i + j == 0) continue;
            if (qp[i] * tp[j] == 1) return false;
        }
    return true;
}

QQ random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(2, 97);
    int num = d(rng);
    int den = d(rng);
    while (den == num) den = d(rng);
    QQ r(num, den);
    r.canonicalize();
    return r;
}

FieldCtx random_eval_ctx(std::mt19937_64& rng, int bound) {
    for (;;) {
        QQ q0 = random_rational(rng);
        QQ t0 = random_rational(rng);
        if (is_non_special(q0, t0, bound)) return FieldCtx::eval(q0, t0);
    }
}

FieldElem poch_ratio(const FieldElem& a, const FieldElem& base, int k) {
    return qpochhammer(a, base, k) / qpochhammer(base, base, k);
}

std::vector<FieldElem> solve_linear(std::vector<std::vector<FieldElem>> M,
                                    std::vector<FieldElem> rhs) {
    size_t n = M.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && M[piv][col].is_zero()) ++piv;
        if (piv == n) throw SpecialParams("singular linear system");
        std::swap(M[piv], M[col]);
        std::swap(rhs[piv], rhs[col]);
        FieldElem inv = M[col][col].inverse();
        for (size_t j = col; j < n; ++j) M[col][j] *= inv;
        rhs[col] *= inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == col || M[r][col].is_zero()) continue;
            FieldElem f = M[r][col];
            for (size_t j = col; j < n; ++j) M[r][j] -= f * M[col][j];
            rhs[r] -= f * rhs[col];
        }
    }
    return rhs;
}

namespace {

std::string qt_terms_to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : p.terms()) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        if (m.e[kParamQ] != 0) os << " * q^" << m.e[kParamQ];
        if (m.e[kParamT] != 0) os << " * t^" << m.e[kParamT];
    }
    return os.str();
}

} // namespace

std::string field_to_string(const FieldElem& f) {
    if (f.is_poly()) return qt_terms_to_string(f.num());
    return "(" + qt_terms_to_string(f.num()) + ")/(" + qt_terms_to_string(f.den_expanded()) +
           ")";
}

} // namespace qmacdo
