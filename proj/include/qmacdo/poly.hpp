#ifndef QMACDO_POLY_HPP
#define QMACDO_POLY_HPP

#include <map>
#include <optional>
#include <vector>

#include "rational.hpp"
#include "vartab.hpp"

namespace qmacdo {

// Sparse Laurent polynomial over QQ in the fixed slot layout. Terms are kept
// in descending monomial order, so begin() is the leading term. No zero
// coefficients are stored.
class Poly {
public:
    using Terms = std::map<Mono, QQ, MonoGt>;

    Poly() = default;
    explicit Poly(const QQ& c) {
        if (c != 0) terms_.emplace(Mono{}, c);
    }
    static Poly term(const Mono& m, const QQ& c) {
        Poly p;
        if (c != 0) p.terms_.emplace(m, c);
        return p;
    }
    static Poly var(int slot, int exp = 1) { return term(mono_of(slot, exp), QQ(1)); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
    }
    bool is_single_term() const { return terms_.size() == 1; }
    bool params_only() const {
        for (auto& [m, c] : terms_)
            if (!m.params_only()) return false;
        return true;
    }
    size_t size() const { return terms_.size(); }

    const Mono& leading_mono() const { return terms_.begin()->first; }
    const QQ& leading_coeff() const { return terms_.begin()->second; }

    QQ coeff(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? QQ(0) : it->second;
    }

    void add_term(const Mono& m, const QQ& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const {
        Poly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly& scale(const QQ& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, cc] : terms_) cc *= c;
        return *this;
    }
    // multiply by c * (slot-wise monomial), exact in the Laurent ring
    Poly& scale_term(const Mono& m, const QQ& c);

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly pow(int k) const;

    // Per-slot minimum exponent over all terms (zero poly gives the unit).
    Mono monomial_content() const;
    Poly shifted(const Mono& m) const;

    int max_exponent(int slot) const;
    int min_exponent(int slot) const;
    int degree_banks_max() const;

    // Exact division; nullopt when f does not divide. f must be nonzero.
    friend std::optional<Poly> try_divide(const Poly& d, const Poly& f);

    // x_slot^k -> repl^k termwise; every exponent of slot must be >= 0.
    Poly subst_var(int slot, const Poly& repl) const;
    // move all powers of slot onto target (substitution by another variable)
    Poly rename_var(int slot, int target) const;
    // multiply each term by c^e * q^(a*e) t^(b*e) where e is the slot exponent
    Poly scale_var(int slot, const QQ& c, int qexp = 0, int texp = 0) const;
    // drop a variable by setting it to a rational value (Laurent needs v != 0)
    Poly eval_var(int slot, const QQ& v) const;
    // collapse q,t slots to numeric values
    Poly eval_params(const QQ& q0, const QQ& t0) const;

    // total ordering for use as a sorted-container key
    static int cmp(const Poly& a, const Poly& b);

    std::string to_string(const VarTable& vt) const;

private:
    Terms terms_;
};

std::optional<Poly> try_divide(const Poly& d, const Poly& f);

} // namespace qmacdo

#endif
