#include "qmacdo/partitions.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qmacdo {

bool is_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) return false;
        if (i && p[i] > p[i - 1]) return false;
    }
    return true;
}

int weight(const Partition& p) {
    int w = 0;
    for (int x : p) w += x;
    return w;
}

Partition conjugate(const Partition& p) {
    Partition c;
    if (p.empty()) return c;
    c.resize(p[0]);
    for (int j = 1; j <= p[0]; ++j) {
        int cnt = 0;
        for (int x : p)
            if (x >= j) ++cnt;
        c[j - 1] = cnt;
    }
    return c;
}

int arm(const Partition& p, int i, int j) { return part(p, i) - j; }

int leg(const Partition& p, int i, int j) { return part(conjugate(p), j) - i; }

namespace {

void gen_parts(int k, int maxpart, Partition& cur, std::vector<Partition>& out) {
    if (k == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(k, maxpart); p >= 1; --p) {
        cur.push_back(p);
        gen_parts(k - p, p, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of_weight(int k) {
    std::vector<Partition> out;
    Partition cur;
    gen_parts(k, k, cur, out);
    return out;
}

void for_partitions_up_to(int bound, const std::function<bool(const Partition&)>& visit) {
    for (int k = 0; k <= bound; ++k)
        for (const Partition& p : partitions_of_weight(k))
            if (!visit(p)) return;
}

bool fat_hook_contains(int n, int m, const Partition& lam) {
    return part(lam, n + 1) <= m;
}

void hook_split(int n, int m, const Partition& lam, Partition& mu, Partition& nu) {
    if (!fat_hook_contains(n, m, lam))
        throw RankError("partition outside the fat hook");
    mu.clear();
    for (int i = 1; i <= n; ++i)
        if (part(lam, i) > 0) mu.push_back(part(lam, i));
    Partition tail(lam.begin() + std::min<size_t>(n, lam.size()), lam.end());
    nu = conjugate(tail);
}

bool contains(const Partition& outer, const Partition& inner) {
    for (size_t i = 0; i < inner.size(); ++i)
        if (part(outer, static_cast<int>(i) + 1) < inner[i]) return false;
    return true;
}

std::vector<Partition> subpartitions(const Partition& lam) {
    std::vector<Partition> out{{}};
    for (size_t i = 0; i < lam.size(); ++i) {
        std::vector<Partition> next;
        for (const Partition& p : out) {
            int hi = lam[i];
            if (!p.empty()) hi = std::min(hi, p.back());
            for (int v = 0; v <= hi; ++v) {
                Partition np = p;
                if (v > 0) np.push_back(v);
                next.push_back(np);
            }
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

FieldElem b_lambda(const Partition& lam, const FieldCtx& F) {
    FieldElem acc = F.one();
    for (int i = 1; i <= length(lam); ++i)
        for (int j = 1; j <= part(lam, i); ++j) {
            int a = arm(lam, i, j), l = leg(lam, i, j);
            FieldElem numf = F.one() - F.qt(a, l + 1);
            FieldElem denf = F.one() - F.qt(a + 1, l);
            acc *= numf / denf;
        }
    return acc;
}

FieldElem z_lambda(const Partition& lam, const FieldCtx& F) {
    std::map<int, int> mult;
    for (int x : lam) ++mult[x];
    QQ zz(1);
    for (auto& [v, m] : mult) {
        for (int k = 0; k < m; ++k) zz *= v;
        for (int k = 2; k <= m; ++k) zz *= k;
    }
    FieldElem acc = F.rational(zz);
    for (int x : lam) {
        FieldElem numf = F.one() - F.qt(x, 0);
        FieldElem denf = F.one() - F.qt(0, x);
        acc *= numf / denf;
    }
    return acc;
}

Partition parse_partition(const std::string& s) {
    Partition p;
    if (s.empty()) return p;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            p.push_back(std::stoi(tok));
        } catch (...) {
            throw ParseError("bad partition literal: " + s);
        }
    }
    if (!is_partition(p)) throw ParseError("parts must be weakly decreasing positive: " + s);
    return p;
}

std::string partition_to_string(const Partition& p) {
    std::ostringstream os;
    for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    return os.str();
}

} // namespace qmacdo
