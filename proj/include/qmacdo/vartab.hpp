#ifndef QMACDO_VARTAB_HPP
#define QMACDO_VARTAB_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>

namespace qmacdo {

// Variable layout shared by every polynomial: slots 0,1 are reserved for the
// parameters q,t (used only in symbolic mode), then the x, y, z, w banks in
// that order. kMaxVars caps the total; desk-scale instances stay well inside.
inline constexpr int kMaxVars = 16;
inline constexpr int kParamQ = 0;
inline constexpr int kParamT = 1;
inline constexpr int kBankBase = 2;

enum class Bank : uint8_t { X = 0, Y = 1, Z = 2, W = 3 };

struct RankError : std::runtime_error {
    explicit RankError(const std::string& msg) : std::runtime_error(msg) {}
};

class VarTable {
public:
    VarTable(int nx, int ny, int nz, int nw) : sizes_{nx, ny, nz, nw} {
        if (nx < 0 || ny < 0 || nz < 0 || nw < 0)
            throw RankError("negative bank arity");
        if (kBankBase + nx + ny + nz + nw > kMaxVars)
            throw RankError("variable banks exceed engine capacity");
    }

    int size(Bank b) const { return sizes_[static_cast<int>(b)]; }
    int width() const {
        return kBankBase + sizes_[0] + sizes_[1] + sizes_[2] + sizes_[3];
    }

    // i is 1-based within its bank, matching the printed names x1, y2, ...
    int var(Bank b, int i) const {
        int bi = static_cast<int>(b);
        if (i < 1 || i > sizes_[bi]) throw RankError("variable index out of range");
        int off = kBankBase;
        for (int k = 0; k < bi; ++k) off += sizes_[k];
        return off + (i - 1);
    }

    std::string name(int slot) const {
        if (slot == kParamQ) return "q";
        if (slot == kParamT) return "t";
        int off = slot - kBankBase;
        static const char* letters[4] = {"x", "y", "z", "w"};
        for (int k = 0; k < 4; ++k) {
            if (off < sizes_[k]) return letters[k] + std::to_string(off + 1);
            off -= sizes_[k];
        }
        throw RankError("slot out of range");
    }

private:
    std::array<int, 4> sizes_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

inline VarTablePtr make_table(int nx, int ny = 0, int nz = 0, int nw = 0) {
    return std::make_shared<const VarTable>(nx, ny, nz, nw);
}

// Exponent vector over the fixed slot layout. Entries may be negative
// (Laurent); unused slots stay zero so monomials from narrower tables compose
// directly with wider ones.
struct Mono {
    std::array<int16_t, kMaxVars> e{};

    int16_t operator[](int i) const { return e[i]; }
    int16_t& operator[](int i) { return e[i]; }

    bool operator==(const Mono& o) const { return e == o.e; }

    Mono operator+(const Mono& o) const {
        Mono r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<int16_t>(e[i] + o.e[i]);
        return r;
    }
    Mono operator-(const Mono& o) const {
        Mono r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<int16_t>(e[i] - o.e[i]);
        return r;
    }

    int degree_banks() const {
        int d = 0;
        for (int i = kBankBase; i < kMaxVars; ++i) d += e[i];
        return d;
    }
    int degree_params() const { return e[kParamQ] + e[kParamT]; }

    bool is_unit() const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] != 0) return false;
        return true;
    }
    bool params_only() const {
        for (int i = kBankBase; i < kMaxVars; ++i)
            if (e[i] != 0) return false;
        return true;
    }
};

// Graded lex over the banks (x before y before z before w), parameters q,t as
// graded-lex tiebreak. Total order; "greater" so that map iteration starts at
// the leading term.
inline int mono_cmp(const Mono& a, const Mono& b) {
    int da = a.degree_banks(), db = b.degree_banks();
    if (da != db) return da < db ? -1 : 1;
    for (int i = kBankBase; i < kMaxVars; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    da = a.degree_params();
    db = b.degree_params();
    if (da != db) return da < db ? -1 : 1;
    for (int i = 0; i < kBankBase; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
}

struct MonoGt {
    bool operator()(const Mono& a, const Mono& b) const { return mono_cmp(a, b) > 0; }
};

inline Mono mono_of(int slot, int exp = 1) {
    Mono m;
    m.e[slot] = static_cast<int16_t>(exp);
    return m;
}

} // namespace qmacdo

#endif
