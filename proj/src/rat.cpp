#include "qmacdo/rat.hpp"

#include <algorithm>
#include <sstream>

namespace qmacdo {

Poly Rat::den_expanded() const {
    Poly d(QQ(1));
    for (auto& [f, e] : den_) d *= f.pow(e);
    return d;
}

bool Rat::params_only() const {
    if (!num_.params_only()) return false;
    for (auto& [f, e] : den_)
        if (!f.params_only()) return false;
    return true;
}

void Rat::sort_den(std::vector<Factor>& den) {
    std::sort(den.begin(), den.end(), [](const Factor& a, const Factor& b) {
        return Poly::cmp(a.first, b.first) < 0;
    });
}

// Divide f by its leading term so it starts with a clean bank monomial; the
// removed unit is pushed onto the numerator.
void Rat::push_den(const Poly& f, int mult) {
    if (mult == 0) return;
    if (f.is_zero()) throw PoleError("zero denominator factor");
    if (f.is_single_term()) {
        const Mono& m = f.leading_mono();
        QQ inv = QQ(1) / f.leading_coeff();
        Mono neg = Mono{} - m;
        for (int k = 0; k < mult; ++k) num_.scale_term(neg, inv);
        return;
    }
    Mono lead = f.leading_mono();
    Mono unit{};
    unit.e[kParamQ] = lead.e[kParamQ];
    unit.e[kParamT] = lead.e[kParamT];
    QQ lc = f.leading_coeff();
    Poly norm = f.shifted(Mono{} - unit);
    norm.scale(QQ(1) / lc);
    // compensate: 1/f = (1/(lc * unit)) * (1/norm)
    for (int k = 0; k < mult; ++k) num_.scale_term(Mono{} - unit, QQ(1) / lc);
    for (auto& [g, e] : den_) {
        if (g == norm) {
            e += mult;
            return;
        }
    }
    den_.emplace_back(std::move(norm), mult);
    sort_den(den_);
}

void Rat::reduce() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    bool erased = false;
    for (auto& [f, e] : den_) {
        while (e > 0) {
            auto q = try_divide(num_, f);
            if (!q) break;
            num_ = std::move(*q);
            --e;
        }
        if (e == 0) erased = true;
    }
    if (erased)
        den_.erase(std::remove_if(den_.begin(), den_.end(),
                                  [](const Factor& f) { return f.second == 0; }),
                   den_.end());
}

Rat& Rat::mul_factor(const Poly& f, int mult) {
    if (mult < 0) return div_factor(f, -mult);
    if (mult == 0) return *this;
    if (f.is_zero()) {
        num_ = Poly();
        den_.clear();
        return *this;
    }
    if (f.is_single_term()) {
        for (int k = 0; k < mult; ++k) num_.scale_term(f.leading_mono(), f.leading_coeff());
        return *this;
    }
    // cancel against an equal stored factor before multiplying through
    Mono lead = f.leading_mono();
    Mono unit{};
    unit.e[kParamQ] = lead.e[kParamQ];
    unit.e[kParamT] = lead.e[kParamT];
    QQ lc = f.leading_coeff();
    Poly norm = f.shifted(Mono{} - unit);
    norm.scale(QQ(1) / lc);
    for (auto& [g, e] : den_) {
        if (g == norm) {
            int cancel = std::min(e, mult);
            e -= cancel;
            mult -= cancel;
            for (int k = 0; k < cancel; ++k) num_.scale_term(unit, lc);
            break;
        }
    }
    den_.erase(std::remove_if(den_.begin(), den_.end(),
                              [](const Factor& fa) { return fa.second == 0; }),
               den_.end());
    for (int k = 0; k < mult; ++k) num_ *= f;
    if (mult > 0) reduce();
    return *this;
}

Rat& Rat::div_factor(const Poly& f, int mult) {
    if (mult < 0) return mul_factor(f, -mult);
    if (mult == 0) return *this;
    if (f.is_zero()) throw PoleError("division by zero factor");
    if (num_.is_zero()) return *this;
    // cancel into the numerator when possible, otherwise store the factor
    for (int k = 0; k < mult; ++k) {
        auto q = try_divide(num_, f);
        if (q) {
            num_ = std::move(*q);
        } else {
            push_den(f, mult - k);
            break;
        }
    }
    return *this;
}

Rat operator*(const Rat& a, const Rat& b) {
    if (a.is_zero() || b.is_zero()) return Rat();
    Rat r;
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_;
    for (auto& [f, e] : b.den_) {
        bool merged = false;
        for (auto& [g, ee] : r.den_) {
            if (g == f) {
                ee += e;
                merged = true;
                break;
            }
        }
        if (!merged) r.den_.emplace_back(f, e);
    }
    Rat::sort_den(r.den_);
    r.reduce();
    return r;
}

Rat& Rat::operator+=(const Rat& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    // lcm of the factored denominators; multiply each numerator by the
    // complementary part of the other side
    std::vector<Factor> lcm = den_;
    for (auto& [f, e] : o.den_) {
        bool found = false;
        for (auto& [g, ee] : lcm) {
            if (g == f) {
                ee = std::max(ee, e);
                found = true;
                break;
            }
        }
        if (!found) lcm.emplace_back(f, e);
    }
    auto mult_in = [&lcm](const std::vector<Factor>& own) {
        Poly comp(QQ(1));
        for (auto& [f, e] : lcm) {
            int have = 0;
            for (auto& [g, ee] : own)
                if (g == f) {
                    have = ee;
                    break;
                }
            if (e > have) comp *= f.pow(e - have);
        }
        return comp;
    };
    Poly mine = num_ * mult_in(den_);
    Poly theirs = o.num_ * mult_in(o.den_);
    num_ = mine + theirs;
    den_ = std::move(lcm);
    sort_den(den_);
    reduce();
    return *this;
}

Rat& Rat::operator-=(const Rat& o) { return *this += -o; }

Rat Rat::inverse() const {
    if (num_.is_zero()) throw NonInvertible("inverse of zero");
    Rat r;
    r.num_ = den_expanded();
    r.push_den(num_, 1);
    r.reduce();
    return r;
}

Rat Rat::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    Rat acc(QQ(1));
    Rat b = *this;
    while (k > 0) {
        if (k & 1) acc *= b;
        if (k >>= 1) b *= b;
    }
    return acc;
}

bool Rat::operator==(const Rat& o) const {
    if (num_.is_zero()) return o.num_.is_zero();
    if (o.num_.is_zero()) return false;
    // cross-multiply through the denominator lcm complements
    Rat d = *this;
    d -= o;
    return d.is_zero();
}

Rat Rat::substitute(int slot, const Rat& repl) const {
    // numerator: group powers of slot, Horner in repl (handles Laurent)
    std::map<int, Poly> groups;
    for (auto& [m, c] : num_.terms()) {
        Mono mm = m;
        int e = mm.e[slot];
        mm.e[slot] = 0;
        groups[e].add_term(mm, c);
    }
    Rat acc;
    if (!groups.empty()) {
        int prev = 0;
        bool first = true;
        for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
            if (!first)
                for (int k = it->first; k < prev; ++k) acc *= repl;
            acc += Rat(it->second);
            prev = it->first;
            first = false;
        }
        if (prev != 0) acc *= repl.pow(prev);
    }
    try {
        for (auto& [f, e] : den_) {
            Rat fs = Rat(f).substitute(slot, repl);
            if (fs.is_zero()) throw PoleError("substitution lands on a pole");
            acc /= fs.pow(e);
        }
    } catch (const NonInvertible&) {
        throw PoleError("substitution lands on a pole");
    }
    return acc;
}

Rat Rat::rename_var(int slot, int target) const {
    Rat r;
    r.num_ = num_.rename_var(slot, target);
    for (auto& [f, e] : den_) {
        Poly g = f.rename_var(slot, target);
        if (g.is_zero()) throw PoleError("rename lands on a pole");
        r.push_den(g, e);
    }
    r.reduce();
    return r;
}

Rat Rat::scale_var(int slot, const QQ& c, int qexp, int texp) const {
    Rat r;
    r.num_ = num_.scale_var(slot, c, qexp, texp);
    for (auto& [f, e] : den_) r.push_den(f.scale_var(slot, c, qexp, texp), e);
    r.reduce();
    return r;
}

Rat Rat::eval_var(int slot, const QQ& v) const {
    Rat r;
    r.num_ = num_.eval_var(slot, v);
    for (auto& [f, e] : den_) {
        Poly g = f.eval_var(slot, v);
        if (g.is_zero()) throw PoleError("evaluation hits a pole");
        r.push_den(g, e);
    }
    r.reduce();
    return r;
}

Rat Rat::eval_params(const QQ& q0, const QQ& t0) const {
    Rat r;
    r.num_ = num_.eval_params(q0, t0);
    for (auto& [f, e] : den_) {
        Poly g = f.eval_params(q0, t0);
        if (g.is_zero()) throw PoleError("parameter values hit a pole");
        r.push_den(g, e);
    }
    r.reduce();
    return r;
}

std::string Rat::to_string(const VarTable& vt) const {
    if (den_.empty()) return num_.to_string(vt);
    std::ostringstream os;
    os << "(" << num_.to_string(vt) << ")/(" << den_expanded().to_string(vt) << ")";
    return os.str();
}

int Rat::cmp(const Rat& a, const Rat& b) {
    int c = Poly::cmp(a.num_, b.num_);
    if (c != 0) return c;
    if (a.den_.size() != b.den_.size()) return a.den_.size() < b.den_.size() ? -1 : 1;
    for (size_t i = 0; i < a.den_.size(); ++i) {
        c = Poly::cmp(a.den_[i].first, b.den_[i].first);
        if (c != 0) return c;
        if (a.den_[i].second != b.den_[i].second)
            return a.den_[i].second < b.den_[i].second ? -1 : 1;
    }
    return 0;
}

} // namespace qmacdo
