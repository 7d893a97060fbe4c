#ifndef QMACDO_RAT_HPP
#define QMACDO_RAT_HPP

#include <utility>
#include <vector>

#include "poly.hpp"

namespace qmacdo {

struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& msg) : std::runtime_error(msg) {}
};
struct NonInvertible : std::runtime_error {
    explicit NonInvertible(const std::string& msg) : std::runtime_error(msg) {}
};

// Fraction num / prod(factor^mult). Denominator factors are kept separately
// instead of expanded: they are normalized so the leading term is a bank
// monomial with coefficient 1 and no q,t part, sorted, and never single-term
// (units are folded into the numerator, which may be Laurent). Reduction is
// trial exact division of the numerator by each factor; every zero or
// equality test goes through a numerator, so it is exact regardless of how
// fine the factor list is.
class Rat {
public:
    using Factor = std::pair<Poly, int>;

    Rat() = default;
    explicit Rat(const QQ& c) : num_(c) {}
    explicit Rat(Poly p) : num_(std::move(p)) {}

    static Rat from_term(const Mono& m, const QQ& c) { return Rat(Poly::term(m, c)); }

    const Poly& num() const { return num_; }
    const std::vector<Factor>& den_factors() const { return den_; }
    Poly den_expanded() const;

    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.empty(); }
    bool params_only() const;

    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    Rat operator-() const {
        Rat r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend Rat operator*(const Rat& a, const Rat& b);
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    friend Rat operator/(const Rat& a, const Rat& b) { return a * b.inverse(); }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    Rat inverse() const;

    // multiply or divide by an explicit polynomial factor, cancelling against
    // the stored factorization first; the cheap path used when assembling
    // products of binomials
    Rat& mul_factor(const Poly& f, int mult = 1);
    Rat& div_factor(const Poly& f, int mult = 1);

    Rat& scale(const QQ& c) {
        num_.scale(c);
        if (num_.is_zero()) den_.clear();
        return *this;
    }
    Rat& scale_term(const Mono& m, const QQ& c) {
        num_.scale_term(m, c);
        if (num_.is_zero()) den_.clear();
        return *this;
    }

    Rat pow(int k) const;

    bool operator==(const Rat& o) const;
    bool operator!=(const Rat& o) const { return !(*this == o); }

    Rat substitute(int slot, const Rat& repl) const;
    Rat rename_var(int slot, int target) const;
    Rat scale_var(int slot, const QQ& c, int qexp = 0, int texp = 0) const;
    Rat eval_var(int slot, const QQ& v) const;
    Rat eval_params(const QQ& q0, const QQ& t0) const;

    std::string to_string(const VarTable& vt) const;

    static int cmp(const Rat& a, const Rat& b);

private:
    void reduce();
    void push_den(const Poly& f, int mult); // normalizes, folds units, merges
    static void sort_den(std::vector<Factor>& den);

    Poly num_;
    std::vector<Factor> den_;
};

} // namespace qmacdo

#endif
