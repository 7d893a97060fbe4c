#include "qmacdo/polyalg.hpp"

#include <sstream>

namespace qmacdo {

bool TruncSeries::is_zero() const {
    for (auto& [m, v] : c_)
        if (!v.is_zero()) return false;
    return true;
}

void TruncSeries::add(const Mono& key, const Rat& v) {
    if (key.degree_banks() > deg_) return;
    if (v.is_zero()) return;
    auto [it, fresh] = c_.emplace(key, v);
    if (!fresh) {
        it->second += v;
        if (it->second.is_zero()) c_.erase(it);
    }
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
    if (o.deg_ != deg_) throw TruncationTooSmall("series degree mismatch");
    for (auto& [m, v] : o.c_) add(m, v);
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
    if (o.deg_ != deg_) throw TruncationTooSmall("series degree mismatch");
    for (auto& [m, v] : o.c_) add(m, -v);
    return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    if (a.deg_ != b.deg_) throw TruncationTooSmall("series degree mismatch");
    TruncSeries r(a.deg_);
    for (auto& [ma, va] : a.c_) {
        int da = ma.degree_banks();
        for (auto& [mb, vb] : b.c_) {
            if (da + mb.degree_banks() > r.deg_) continue;
            r.add(ma + mb, va * vb);
        }
    }
    return r;
}

TruncSeries& TruncSeries::scale(const Rat& r) {
    if (r.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& [m, v] : c_) v *= r;
    return *this;
}

void split_series_mono(const Mono& m, const VarTable& vt, Mono& zw, Mono& rest) {
    zw = Mono{};
    rest = m;
    int z0 = vt.size(Bank::Z) ? vt.var(Bank::Z, 1) : -1;
    int w0 = vt.size(Bank::W) ? vt.var(Bank::W, 1) : -1;
    auto move_bank = [&](int base, int count) {
        for (int i = 0; i < count; ++i) {
            zw.e[base + i] = rest.e[base + i];
            rest.e[base + i] = 0;
        }
    };
    if (z0 >= 0) move_bank(z0, vt.size(Bank::Z));
    if (w0 >= 0) move_bank(w0, vt.size(Bank::W));
}

TruncSeries TruncSeries::mul_poly(const Poly& p, const VarTable& vt) const {
    TruncSeries r(deg_);
    for (auto& [pm, pc] : p.terms()) {
        Mono zw, rest;
        split_series_mono(pm, vt, zw, rest);
        Rat factor = Rat::from_term(rest, pc);
        int dz = zw.degree_banks();
        for (auto& [m, v] : c_) {
            if (m.degree_banks() + dz > deg_) continue;
            r.add(m + zw, v * factor);
        }
    }
    return r;
}

TruncSeries TruncSeries::truncated(int d) const {
    TruncSeries r(d);
    for (auto& [m, v] : c_)
        if (m.degree_banks() <= d) r.add(m, v);
    return r;
}

std::string TruncSeries::to_string(const VarTable& vt) const {
    std::ostringstream os;
    bool first = true;
    for (auto& [m, v] : c_) {
        if (!first) os << "\n";
        first = false;
        bool any = false;
        for (int i = 0; i < vt.width(); ++i) {
            if (m.e[i] == 0) continue;
            os << (any ? " " : "") << vt.name(i) << "^" << m.e[i];
            any = true;
        }
        if (!any) os << "1";
        os << " : " << v.to_string(vt);
    }
    if (first) os << "0";
    return os.str();
}

TruncSeries series_one(int deg) {
    TruncSeries s(deg);
    s.add(Mono{}, Rat(QQ(1)));
    return s;
}

TruncSeries series_binomial(const Mono& mono, const FieldElem& c, int deg) {
    TruncSeries s = series_one(deg);
    s.add(mono, c);
    return s;
}

TruncSeries q_binomial_series(const FieldElem& a, const FieldElem& base, const Mono& gauge_mono,
                              const FieldElem& gauge_coeff, int deg, const VarTable& vt) {
    Mono zw, rest;
    split_series_mono(gauge_mono, vt, zw, rest);
    int step = zw.degree_banks();
    if (step < 1) throw TruncationTooSmall("gauge must carry a z or w variable");
    TruncSeries s(deg);
    FieldElem one(QQ(1));
    FieldElem num = one;  // (a;base)_k
    FieldElem den = one;  // (base;base)_k
    FieldElem apow = a, bpow = base;
    Rat gauge_rest = Rat::from_term(rest, QQ(1)) * gauge_coeff;
    Rat gk(QQ(1));
    Mono key{};
    for (int k = 0; k * step <= deg; ++k) {
        if (k > 0) {
            num *= one - apow;
            den *= one - bpow;
            if (den.is_zero()) throw DegenerateBase("base is a root of unity");
            apow *= base;
            bpow *= base;
            gk *= gauge_rest;
            key = key + zw;
        }
        s.add(key, gk * (num / den));
    }
    return s;
}

FieldElem bank_coefficient(const Rat& f, const Mono& bank_mono) {
    for (auto& [fac, mult] : f.den_factors())
        if (!fac.params_only())
            throw std::logic_error("bank_coefficient needs a q,t-only denominator");
    Mono target = bank_mono;
    target.e[kParamQ] = 0;
    target.e[kParamT] = 0;
    Poly acc;
    for (auto& [m, c] : f.num().terms()) {
        Mono bankPart = m;
        bankPart.e[kParamQ] = 0;
        bankPart.e[kParamT] = 0;
        if (!(bankPart == target)) continue;
        Mono par{};
        par.e[kParamQ] = m.e[kParamQ];
        par.e[kParamT] = m.e[kParamT];
        acc.add_term(par, c);
    }
    Rat out(acc);
    for (auto& [fac, mult] : f.den_factors()) out.div_factor(fac, mult);
    return out;
}

Rat swap_vars(const Rat& f, int a, int b) {
    if (a == b) return f;
    int scratch = kMaxVars - 1;
    if (a == scratch || b == scratch)
        throw std::logic_error("swap_vars scratch slot is occupied");
    return f.rename_var(a, scratch).rename_var(b, a).rename_var(scratch, b);
}

TruncSeries geometric_series(const Mono& gauge_mono, const FieldElem& gauge_coeff, int deg,
                             const VarTable& vt) {
    Mono zw, rest;
    split_series_mono(gauge_mono, vt, zw, rest);
    int step = zw.degree_banks();
    if (step < 1) throw TruncationTooSmall("gauge must carry a z or w variable");
    TruncSeries s(deg);
    Rat gauge_rest = Rat::from_term(rest, QQ(1)) * gauge_coeff;
    Rat gk(QQ(1));
    Mono key{};
    for (int k = 0; k * step <= deg; ++k) {
        if (k > 0) {
            gk *= gauge_rest;
            key = key + zw;
        }
        s.add(key, gk);
    }
    return s;
}

} // namespace qmacdo
