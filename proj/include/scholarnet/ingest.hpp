#pragma once

#include <map>
#include <string>
#include <vector>

namespace scholarnet {

enum class InputFormat { Csv, Jsonl };

// One publication as read from the input file. Author names are kept raw
// (trimmed only); identity resolution happens in build_corpus.
struct PublicationRecord {
    std::string pub_id;
    std::string title;
    int year = 0;
    std::string venue;
    long long citations = 0;  // >= 0
    std::vector<std::string> authors;
    std::vector<std::string> keywords;

    bool operator==(const PublicationRecord&) const = default;
};

// An author after identity resolution. The canonical name is the identity
// key; author ids are dense and assigned in lexicographic name order.
struct AuthorProfile {
    int author_id = -1;
    std::string canonical_name;
    std::vector<std::string> publication_ids;  // input order
    std::vector<long long> citation_vector;    // aligned with publication_ids

    bool operator==(const AuthorProfile&) const = default;
};

// The cleaned in-memory dataset shared by the graph and metrics stages.
// Immutable once built; safe to share across concurrent readers.
struct Corpus {
    std::vector<PublicationRecord> publications;
    std::vector<AuthorProfile> authors;        // indexed by author_id
    std::map<std::string, int> author_index;   // canonical_name -> author_id
    // per publication: distinct resolved author ids, ascending
    std::vector<std::vector<int>> pub_authors;

    bool operator==(const Corpus&) const = default;
};

// canonical from-name -> canonical to-name, chains already resolved
using AliasMap = std::map<std::string, std::string>;

// Reads publication records from a CSV file (header required:
// pub_id,title,year,venue,citations,authors[,keywords]; authors and
// keywords are ';'-separated lists) or a JSONL file (one object per line,
// same field names, authors/keywords as arrays).
//
// Throws MalformedRowError on a bad row, DuplicatePubIdError on a repeated
// pub_id and Error when the file cannot be read.
std::vector<PublicationRecord> parse_records(const std::string& path,
                                             InputFormat format);

// Deterministic name key: trim, collapse whitespace runs, lowercase, drop
// periods. "  M.  Thelwall " -> "m thelwall". Idempotent. Throws
// EmptyNameError when nothing is left.
std::string normalize_name(const std::string& raw);

// Loads a CSV alias file (header "from_name,to_name"). Both sides are
// normalized and chains are resolved; a cycle is an Error.
AliasMap load_aliases(const std::string& path);

// Deduplicates authors by normalized name (aliases applied first) and
// assembles the corpus. Deterministic: identical records give an
// identical Corpus.
Corpus build_corpus(const std::vector<PublicationRecord>& records,
                    const AliasMap& aliases = {});

}  // namespace scholarnet
