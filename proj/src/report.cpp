#include "qmacdo/report.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace qmacdo {

bool all_ok(const std::vector<CheckRecord>& rs) {
    return std::all_of(rs.begin(), rs.end(), [](const CheckRecord& r) { return r.ok(); });
}

void emit_lines(std::ostream& os, const std::vector<CheckRecord>& rs) {
    for (const CheckRecord& r : rs) {
        nlohmann::ordered_json j;
        j["suite"] = r.suite;
        j["instance"] = r.instance;
        j["index"] = r.index;
        j["residual"] = r.residual;
        j["ok"] = r.ok();
        os << j.dump() << "\n";
    }
}

void emit_table(std::ostream& os, const std::vector<CheckRecord>& rs) {
    std::size_t ws = 5, wi = 8, wx = 5;
    for (const CheckRecord& r : rs) {
        ws = std::max(ws, r.suite.size());
        wi = std::max(wi, r.instance.size());
        wx = std::max(wx, r.index.size());
    }
    os << std::left << std::setw(static_cast<int>(ws) + 2) << "suite"
       << std::setw(static_cast<int>(wi) + 2) << "instance"
       << std::setw(static_cast<int>(wx) + 2) << "index"
       << std::setw(10) << "elapsed" << "residual" << "\n";
    for (const CheckRecord& r : rs) {
        std::ostringstream el;
        el << std::fixed << std::setprecision(2) << r.elapsed << "s";
        os << std::left << std::setw(static_cast<int>(ws) + 2) << r.suite
           << std::setw(static_cast<int>(wi) + 2) << r.instance
           << std::setw(static_cast<int>(wx) + 2) << r.index
           << std::setw(10) << el.str() << r.residual << "\n";
    }
}

} // namespace qmacdo
