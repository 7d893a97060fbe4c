#include "qmacdo/poly.hpp"

#include <sstream>

namespace qmacdo {

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    // iterate over the smaller factor for fewer map passes
    const Poly& s = a.size() <= b.size() ? a : b;
    const Poly& l = a.size() <= b.size() ? b : a;
    for (auto& [ms, cs] : s.terms()) {
        for (auto& [ml, cl] : l.terms()) r.add_term(ms + ml, cs * cl);
    }
    return r;
}

Poly& Poly::scale_term(const Mono& m, const QQ& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    Terms out;
    for (auto& [mm, cc] : terms_) out.emplace(mm + m, cc * c);
    terms_ = std::move(out);
    return *this;
}

Poly Poly::pow(int k) const {
    if (k < 0) throw std::domain_error("Poly::pow negative");
    Poly acc(QQ(1));
    Poly b = *this;
    while (k > 0) {
        if (k & 1) acc *= b;
        if (k >>= 1) b *= b;
    }
    return acc;
}

Mono Poly::monomial_content() const {
    Mono m;
    bool first = true;
    for (auto& [mm, cc] : terms_) {
        if (first) {
            m = mm;
            first = false;
        } else {
            for (int i = 0; i < kMaxVars; ++i)
                if (mm.e[i] < m.e[i]) m.e[i] = mm.e[i];
        }
    }
    return m;
}

Poly Poly::shifted(const Mono& m) const {
    Poly r;
    for (auto& [mm, cc] : terms_) r.terms_.emplace(mm + m, cc);
    return r;
}

int Poly::max_exponent(int slot) const {
    int v = 0;
    for (auto& [m, c] : terms_)
        if (m.e[slot] > v) v = m.e[slot];
    return v;
}

int Poly::min_exponent(int slot) const {
    int v = 0;
    for (auto& [m, c] : terms_)
        if (m.e[slot] < v) v = m.e[slot];
    return v;
}

int Poly::degree_banks_max() const {
    int v = 0;
    for (auto& [m, c] : terms_)
        if (m.degree_banks() > v) v = m.degree_banks();
    return v;
}

std::optional<Poly> try_divide(const Poly& d, const Poly& f) {
    if (f.is_zero()) throw std::domain_error("division by zero polynomial");
    if (d.is_zero()) return Poly();
    // strip monomial content so the term order is a well-order on what remains
    Mono md = d.monomial_content(), mf = f.monomial_content();
    Poly dn = d.shifted(Mono{} - md);
    Poly fn = f.shifted(Mono{} - mf);
    const Mono& fl = fn.leading_mono();
    const QQ& fc = fn.leading_coeff();
    Poly quot;
    Poly rem = dn;
    while (!rem.is_zero()) {
        Mono qm = rem.leading_mono() - fl;
        for (int i = 0; i < kMaxVars; ++i)
            if (qm.e[i] < 0) return std::nullopt;
        QQ qc = rem.leading_coeff() / fc;
        quot.add_term(qm, qc);
        for (auto& [m, c] : fn.terms()) rem.add_term(m + qm, -c * qc);
    }
    return quot.shifted(md - mf);
}

Poly Poly::subst_var(int slot, const Poly& repl) const {
    // group by exponent, then Horner from the highest power down
    std::map<int, Poly> groups;
    for (auto& [m, c] : terms_) {
        int e = m.e[slot];
        if (e < 0) throw std::domain_error("subst_var on negative exponent");
        Mono mm = m;
        mm.e[slot] = 0;
        groups[e].add_term(mm, c);
    }
    Poly acc;
    int prev = -1;
    for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
        if (prev >= 0) {
            for (int k = it->first; k < prev; ++k) acc *= repl;
        }
        acc += it->second;
        prev = it->first;
    }
    if (prev > 0)
        for (int k = 0; k < prev; ++k) acc *= repl;
    return acc;
}

Poly Poly::rename_var(int slot, int target) const {
    Poly r;
    for (auto& [m, c] : terms_) {
        Mono mm = m;
        mm.e[target] = static_cast<int16_t>(mm.e[target] + mm.e[slot]);
        mm.e[slot] = 0;
        r.add_term(mm, c);
    }
    return r;
}

Poly Poly::scale_var(int slot, const QQ& c, int qexp, int texp) const {
    Poly r;
    for (auto& [m, cc] : terms_) {
        int e = m.e[slot];
        Mono mm = m;
        mm.e[kParamQ] = static_cast<int16_t>(mm.e[kParamQ] + qexp * e);
        mm.e[kParamT] = static_cast<int16_t>(mm.e[kParamT] + texp * e);
        r.add_term(mm, cc * qq_pow(c, e));
    }
    return r;
}

Poly Poly::eval_var(int slot, const QQ& v) const {
    Poly r;
    for (auto& [m, c] : terms_) {
        Mono mm = m;
        int e = mm.e[slot];
        mm.e[slot] = 0;
        r.add_term(mm, c * qq_pow(v, e));
    }
    return r;
}

Poly Poly::eval_params(const QQ& q0, const QQ& t0) const {
    Poly r;
    for (auto& [m, c] : terms_) {
        Mono mm = m;
        int eq = mm.e[kParamQ], et = mm.e[kParamT];
        mm.e[kParamQ] = 0;
        mm.e[kParamT] = 0;
        r.add_term(mm, c * qq_pow(q0, eq) * qq_pow(t0, et));
    }
    return r;
}

int Poly::cmp(const Poly& a, const Poly& b) {
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        int c = mono_cmp(ia->first, ib->first);
        if (c != 0) return c;
        if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
    }
    if (ia != a.terms_.end()) return 1;
    if (ib != b.terms_.end()) return -1;
    return 0;
}

std::string Poly::to_string(const VarTable& vt) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        bool any = false;
        for (int i = 0; i < vt.width(); ++i) {
            if (m.e[i] == 0) continue;
            os << (any ? " " : " * ") << vt.name(i) << "^" << m.e[i];
            any = true;
        }
    }
    return os.str();
}

} // namespace qmacdo
