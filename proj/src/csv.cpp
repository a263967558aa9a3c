#include "scholarnet/csv.hpp"

namespace scholarnet {

std::vector<CsvRecord> read_csv(const std::string& text) {
    std::vector<CsvRecord> records;
    const std::size_t n = text.size();
    std::size_t i = 0;
    int line = 1;

    while (i < n) {
        // skip blank lines between records
        if (text[i] == '\n') {
            ++line;
            ++i;
            continue;
        }
        if (text[i] == '\r') {
            if (i + 1 < n && text[i + 1] == '\n') ++i;
            ++line;
            ++i;
            continue;
        }

        CsvRecord rec;
        rec.line = line;
        std::string field;
        bool quoted = false;
        while (true) {
            if (i >= n) {  // EOF terminates the record
                rec.fields.push_back(std::move(field));
                break;
            }
            const char c = text[i];
            if (quoted) {
                if (c == '"') {
                    if (i + 1 < n && text[i + 1] == '"') {
                        field += '"';
                        i += 2;
                    } else {
                        quoted = false;
                        ++i;
                    }
                } else {
                    if (c == '\n') ++line;
                    field += c;
                    ++i;
                }
            } else if (c == '"' && field.empty()) {
                quoted = true;
                ++i;
            } else if (c == ',') {
                rec.fields.push_back(std::move(field));
                field.clear();
                ++i;
            } else if (c == '\n' || c == '\r') {
                rec.fields.push_back(std::move(field));
                if (c == '\r' && i + 1 < n && text[i + 1] == '\n') ++i;
                ++i;
                ++line;
                break;
            } else {
                field += c;
                ++i;
            }
        }
        records.push_back(std::move(rec));
    }
    return records;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out;
    out.reserve(field.size() + 2);
    out += '"';
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_join(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) out += ',';
        out += csv_escape(fields[i]);
    }
    return out;
}

}  // namespace scholarnet
