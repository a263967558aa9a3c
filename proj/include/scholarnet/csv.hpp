#pragma once

#include <string>
#include <vector>

namespace scholarnet {

// One parsed CSV record plus the physical line it started on (1-based).
struct CsvRecord {
    std::vector<std::string> fields;
    int line = 0;
};

// RFC 4180 style reader. Quoted fields may contain commas, doubled quotes
// and newlines; LF and CRLF endings are accepted; blank lines are skipped.
std::vector<CsvRecord> read_csv(const std::string& text);

// Quotes a field when it contains a comma, quote, CR or LF.
std::string csv_escape(const std::string& field);

// Joins escaped fields with commas (no trailing newline).
std::string csv_join(const std::vector<std::string>& fields);

}  // namespace scholarnet
