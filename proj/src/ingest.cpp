#include "scholarnet/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "scholarnet/csv.hpp"
#include "scholarnet/errors.hpp"

namespace scholarnet {

namespace {

constexpr const char* kWhitespace = " \t\r\n\f\v";

std::string trim(const std::string& s) {
    const std::size_t b = s.find_first_not_of(kWhitespace);
    if (b == std::string::npos) return "";
    const std::size_t e = s.find_last_not_of(kWhitespace);
    return s.substr(b, e - b + 1);
}

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
           c == '\v';
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

long long parse_integer(const std::string& raw, int line, const char* what) {
    const std::string t = trim(raw);
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
        throw MalformedRowError(line, std::string(what) +
                                          " is not an integer: '" + t + "'");
    }
    return value;
}

// splits on `sep` and trims each element; empty elements are kept so the
// caller can decide whether they are an error
std::vector<std::string> split_list(const std::string& field, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : field) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

std::vector<std::string> parse_authors_field(const std::string& field,
                                             int line) {
    if (trim(field).empty())
        throw MalformedRowError(line, "authors field is empty");
    std::vector<std::string> names = split_list(field, ';');
    for (const auto& name : names) {
        if (name.empty())
            throw MalformedRowError(line, "empty author name in authors field");
    }
    return names;
}

std::vector<std::string> parse_keywords_field(const std::string& field) {
    std::vector<std::string> out;
    for (auto& kw : split_list(field, ';')) {
        if (!kw.empty()) out.push_back(std::move(kw));
    }
    return out;
}

void validate_record(PublicationRecord& rec, int line,
                     std::set<std::string>& seen_ids) {
    if (rec.pub_id.empty()) throw MalformedRowError(line, "pub_id is empty");
    if (rec.citations < 0)
        throw MalformedRowError(line, "citations must be non-negative, got " +
                                          std::to_string(rec.citations));
    if (rec.authors.empty())
        throw MalformedRowError(line, "authors list is empty");
    if (!seen_ids.insert(rec.pub_id).second)
        throw DuplicatePubIdError(rec.pub_id);
}

const std::vector<std::string> kCsvHeader = {"pub_id", "title",     "year",
                                             "venue",  "citations", "authors"};

std::vector<PublicationRecord> parse_csv_records(const std::string& text) {
    const auto rows = read_csv(text);
    if (rows.empty()) throw MalformedRowError(1, "missing header row");

    const auto& header = rows[0];
    bool has_keywords = false;
    if (header.fields.size() == kCsvHeader.size() + 1 &&
        trim(header.fields.back()) == "keywords") {
        has_keywords = true;
    } else if (header.fields.size() != kCsvHeader.size()) {
        throw MalformedRowError(
            header.line,
            "expected header pub_id,title,year,venue,citations,authors[,keywords]");
    }
    for (std::size_t k = 0; k < kCsvHeader.size(); ++k) {
        if (trim(header.fields[k]) != kCsvHeader[k])
            throw MalformedRowError(header.line,
                                    "unexpected header column '" +
                                        trim(header.fields[k]) + "', expected '" +
                                        kCsvHeader[k] + "'");
    }

    const std::size_t arity = kCsvHeader.size() + (has_keywords ? 1 : 0);
    std::vector<PublicationRecord> records;
    std::set<std::string> seen_ids;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.fields.size() != arity)
            throw MalformedRowError(row.line,
                                    "expected " + std::to_string(arity) +
                                        " fields, got " +
                                        std::to_string(row.fields.size()));
        PublicationRecord rec;
        rec.pub_id = trim(row.fields[0]);
        rec.title = trim(row.fields[1]);
        const long long year = parse_integer(row.fields[2], row.line, "year");
        rec.year = static_cast<int>(year);
        rec.venue = trim(row.fields[3]);
        rec.citations = parse_integer(row.fields[4], row.line, "citations");
        rec.authors = parse_authors_field(row.fields[5], row.line);
        if (has_keywords) rec.keywords = parse_keywords_field(row.fields[6]);
        validate_record(rec, row.line, seen_ids);
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<PublicationRecord> parse_jsonl_records(const std::string& text) {
    using nlohmann::json;
    std::vector<PublicationRecord> records;
    std::set<std::string> seen_ids;
    std::istringstream in(text);
    std::string raw_line;
    int line = 0;
    while (std::getline(in, raw_line)) {
        ++line;
        if (trim(raw_line).empty()) continue;

        json obj;
        try {
            obj = json::parse(raw_line);
        } catch (const json::parse_error& e) {
            throw MalformedRowError(line, std::string("invalid JSON: ") + e.what());
        }
        if (!obj.is_object())
            throw MalformedRowError(line, "expected a JSON object");

        auto require = [&](const char* key) -> const json& {
            auto it = obj.find(key);
            if (it == obj.end())
                throw MalformedRowError(line,
                                        std::string("missing field '") + key + "'");
            return *it;
        };
        auto as_string = [&](const char* key) {
            const json& v = require(key);
            if (!v.is_string())
                throw MalformedRowError(line,
                                        std::string("field '") + key +
                                            "' must be a string");
            return trim(v.get<std::string>());
        };
        auto as_integer = [&](const char* key) {
            const json& v = require(key);
            if (!v.is_number_integer())
                throw MalformedRowError(line, std::string("field '") + key +
                                                  "' must be an integer");
            return v.get<long long>();
        };

        PublicationRecord rec;
        rec.pub_id = as_string("pub_id");
        rec.title = as_string("title");
        rec.year = static_cast<int>(as_integer("year"));
        rec.venue = as_string("venue");
        rec.citations = as_integer("citations");

        const json& authors = require("authors");
        if (!authors.is_array())
            throw MalformedRowError(line, "field 'authors' must be an array");
        for (const auto& a : authors) {
            if (!a.is_string())
                throw MalformedRowError(line, "author names must be strings");
            std::string name = trim(a.get<std::string>());
            if (name.empty())
                throw MalformedRowError(line, "empty author name in authors array");
            rec.authors.push_back(std::move(name));
        }

        if (auto it = obj.find("keywords"); it != obj.end() && !it->is_null()) {
            if (!it->is_array())
                throw MalformedRowError(line, "field 'keywords' must be an array");
            for (const auto& k : *it) {
                if (!k.is_string())
                    throw MalformedRowError(line, "keywords must be strings");
                std::string kw = trim(k.get<std::string>());
                if (!kw.empty()) rec.keywords.push_back(std::move(kw));
            }
        }

        validate_record(rec, line, seen_ids);
        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace

std::vector<PublicationRecord> parse_records(const std::string& path,
                                             InputFormat format) {
    const std::string text = read_file(path);
    return format == InputFormat::Csv ? parse_csv_records(text)
                                      : parse_jsonl_records(text);
}

std::string normalize_name(const std::string& raw) {
    std::string out;
    out.reserve(raw.size());
    bool pending_space = false;
    for (char c : raw) {
        if (c == '.') continue;  // initials lose their periods
        if (is_space(c)) {
            pending_space = true;
            continue;
        }
        if (pending_space && !out.empty()) out += ' ';
        pending_space = false;
        out += (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
    }
    if (out.empty()) throw EmptyNameError();
    return out;
}

AliasMap load_aliases(const std::string& path) {
    const auto rows = read_csv(read_file(path));
    if (rows.empty() || rows[0].fields.size() != 2 ||
        trim(rows[0].fields[0]) != "from_name" ||
        trim(rows[0].fields[1]) != "to_name") {
        throw MalformedRowError(rows.empty() ? 1 : rows[0].line,
                                "alias file must start with header from_name,to_name");
    }

    AliasMap raw;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.fields.size() != 2)
            throw MalformedRowError(row.line, "expected 2 fields, got " +
                                                  std::to_string(row.fields.size()));
        const std::string from = normalize_name(row.fields[0]);
        const std::string to = normalize_name(row.fields[1]);
        if (from == to) continue;
        raw[from] = to;
    }

    // resolve chains a -> b -> c; a cycle is a configuration error
    AliasMap resolved;
    for (const auto& [from, _] : raw) {
        std::set<std::string> seen{from};
        std::string target = raw.at(from);
        while (raw.count(target)) {
            if (!seen.insert(target).second)
                throw Error("alias cycle involving '" + from + "'");
            target = raw.at(target);
        }
        resolved[from] = target;
    }
    return resolved;
}

Corpus build_corpus(const std::vector<PublicationRecord>& records,
                    const AliasMap& aliases) {
    Corpus corpus;
    corpus.publications = records;

    // resolve every publication's author list to canonical names; duplicate
    // names within one publication collapse to a single authorship
    std::vector<std::vector<std::string>> pub_names;
    pub_names.reserve(records.size());
    for (const auto& rec : records) {
        std::set<std::string> names;
        for (const auto& raw : rec.authors) {
            std::string name = normalize_name(raw);
            if (auto it = aliases.find(name); it != aliases.end())
                name = it->second;
            names.insert(std::move(name));
        }
        pub_names.emplace_back(names.begin(), names.end());
    }

    // dense ids in lexicographic name order
    std::set<std::string> all_names;
    for (const auto& names : pub_names)
        all_names.insert(names.begin(), names.end());
    corpus.authors.reserve(all_names.size());
    for (const auto& name : all_names) {
        const int id = static_cast<int>(corpus.authors.size());
        corpus.author_index.emplace(name, id);
        AuthorProfile profile;
        profile.author_id = id;
        profile.canonical_name = name;
        corpus.authors.push_back(std::move(profile));
    }

    corpus.pub_authors.reserve(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        std::vector<int> ids;
        ids.reserve(pub_names[i].size());
        for (const auto& name : pub_names[i]) {
            const int id = corpus.author_index.at(name);
            ids.push_back(id);
            auto& profile = corpus.authors[id];
            profile.publication_ids.push_back(records[i].pub_id);
            profile.citation_vector.push_back(records[i].citations);
        }
        // pub_names is name-sorted and ids follow name order
        corpus.pub_authors.push_back(std::move(ids));
    }
    return corpus;
}

}  // namespace scholarnet
