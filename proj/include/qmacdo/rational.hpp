#ifndef QMACDO_RATIONAL_HPP
#define QMACDO_RATIONAL_HPP

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qmacdo {

using QQ = mpq_class;

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Accepts "p", "-p", "p/q" with optional sign on the numerator only.
inline QQ parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    for (char c : s)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-'))
            throw ParseError("bad rational literal: " + s);
    try {
        QQ r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal: " + s);
    }
}

inline std::string to_string(const QQ& r) {
    return r.get_str();
}

inline QQ qq_pow(const QQ& base, long e) {
    if (e == 0) return QQ(1);
    QQ b = base;
    if (e < 0) {
        if (b == 0) throw std::domain_error("0^negative");
        b = QQ(1) / b;
        e = -e;
    }
    QQ acc(1);
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

} // namespace qmacdo

#endif
