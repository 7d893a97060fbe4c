#ifndef QMACDO_POLYALG_HPP
#define QMACDO_POLYALG_HPP

#include "field.hpp"

namespace qmacdo {

// Public aliases for the polynomial-algebra contract: multivariate Laurent
// polynomials and rational functions over the coefficient field, living in
// the shared slot layout of vartab.hpp.
using MPoly = Poly;
using MRat = Rat;

struct TruncationTooSmall : std::runtime_error {
    explicit TruncationTooSmall(const std::string& msg) : std::runtime_error(msg) {}
};

// Truncated power series in a distinguished gauge variable u with
// coefficients in any ring T. c[r] is the u^r coefficient; every series
// carries coefficients 0..order.
template <class T>
struct USeries {
    std::vector<T> c;

    explicit USeries(int order = 0) : c(order + 1) {}
    int order() const { return static_cast<int>(c.size()) - 1; }

    T& operator[](int r) { return c[r]; }
    const T& operator[](int r) const { return c[r]; }

    USeries& operator+=(const USeries& o) {
        if (o.order() != order()) throw TruncationTooSmall("series order mismatch");
        for (size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
        return *this;
    }
    friend USeries operator+(USeries a, const USeries& b) { return a += b; }
    USeries operator-() const {
        USeries r = *this;
        for (auto& x : r.c) x = -x;
        return r;
    }
    friend USeries operator-(USeries a, const USeries& b) { return a + (-b); }

    friend USeries operator*(const USeries& a, const USeries& b) {
        if (a.order() != b.order()) throw TruncationTooSmall("series order mismatch");
        USeries r(a.order());
        for (int i = 0; i <= a.order(); ++i)
            for (int j = 0; i + j <= a.order(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        return r;
    }

    // u -> s*u rescale: coefficient r picks up s^r
    template <class S>
    USeries rescaled(const S& s) const {
        USeries r = *this;
        S p = s;
        for (int i = 1; i <= order(); ++i) {
            r.c[i] = r.c[i] * p;
            if (i < order()) p = p * s;
        }
        return r;
    }
};

// Multivariate series truncated at total z,w degree <= deg. Keys are
// monomials supported on the z and w banks only; values live over the
// remaining variables (and q,t).
class TruncSeries {
public:
    using Map = std::map<Mono, Rat, MonoGt>;

    explicit TruncSeries(int deg = 0) : deg_(deg) {}

    int deg() const { return deg_; }
    const Map& coeffs() const { return c_; }
    bool is_zero() const;

    void add(const Mono& key, const Rat& v);
    Rat coeff(const Mono& key) const {
        auto it = c_.find(key);
        return it == c_.end() ? Rat() : it->second;
    }

    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);

    // multiply by a rational function of the non-series variables only
    TruncSeries& scale(const Rat& r);
    // multiply by a polynomial that may involve z,w slots; exact up to deg
    TruncSeries mul_poly(const Poly& p, const VarTable& vt) const;

    // keep only keys of total degree <= d
    TruncSeries truncated(int d) const;

    std::string to_string(const VarTable& vt) const;

private:
    int deg_;
    Map c_;
};

// Split a monomial into its z,w part and the rest.
void split_series_mono(const Mono& m, const VarTable& vt, Mono& zw, Mono& rest);

// Coefficient of a bank monomial inside a rational function whose denominator
// involves only q,t: collects every numerator term with that exact bank part.
FieldElem bank_coefficient(const Rat& f, const Mono& bank_mono);

// exchange two variable slots (uses the last engine slot as scratch)
Rat swap_vars(const Rat& f, int a, int b);

// prod over k of the q-binomial expansion of (a*g; base)_inf / (g; base)_inf
// as a series in the gauge monomial g: sum_k [(a;base)_k / (base;base)_k] g^k.
// The gauge is a single term c*mono whose z,w degree must be >= 1.
TruncSeries q_binomial_series(const FieldElem& a, const FieldElem& base, const Mono& gauge_mono,
                              const FieldElem& gauge_coeff, int deg, const VarTable& vt);

// sum_k g^k (geometric series in the gauge term)
TruncSeries geometric_series(const Mono& gauge_mono, const FieldElem& gauge_coeff, int deg,
                             const VarTable& vt);

// series with the single term 1
TruncSeries series_one(int deg);

// (1 + c*mono) as a truncated series
TruncSeries series_binomial(const Mono& mono, const FieldElem& c, int deg);

} // namespace qmacdo

#endif
