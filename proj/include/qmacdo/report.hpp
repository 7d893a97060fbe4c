#ifndef QMACDO_REPORT_HPP
#define QMACDO_REPORT_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qmacdo {

// One verification record: a suite name, the instance parameters, the index
// within the instance (series order, partition, ...), and the residual in
// canonical text, "0" on success.
struct CheckRecord {
    std::string suite;
    std::string instance;
    std::string index;
    std::string residual;
    double elapsed = 0.0;

    bool ok() const { return residual == "0"; }
};

bool all_ok(const std::vector<CheckRecord>& rs);

// line-delimited JSON, one record per line; elapsed is omitted so that runs
// with identical results diff clean
void emit_lines(std::ostream& os, const std::vector<CheckRecord>& rs);

// aligned human-readable table, elapsed shown per record
void emit_table(std::ostream& os, const std::vector<CheckRecord>& rs);

} // namespace qmacdo

#endif
