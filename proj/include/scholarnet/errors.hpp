#pragma once

#include <stdexcept>
#include <string>

namespace scholarnet {

// Base class for every error this library throws deliberately.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A row/line of an input file that cannot become a PublicationRecord.
struct MalformedRowError : Error {
    int line;
    std::string reason;
    MalformedRowError(int line_, std::string reason_)
        : Error("line " + std::to_string(line_) + ": " + reason_),
          line(line_),
          reason(std::move(reason_)) {}
};

struct DuplicatePubIdError : Error {
    std::string pub_id;
    explicit DuplicatePubIdError(std::string id)
        : Error("duplicate pub_id: " + id), pub_id(std::move(id)) {}
};

struct EmptyNameError : Error {
    EmptyNameError() : Error("author name is empty after normalization") {}
};

struct UnknownAuthorError : Error {
    int author_id;
    explicit UnknownAuthorError(int id)
        : Error("unknown author id: " + std::to_string(id)), author_id(id) {}
};

struct LengthMismatchError : Error {
    LengthMismatchError(std::size_t a, std::size_t b)
        : Error("aligned lists differ in length: " + std::to_string(a) +
                " vs " + std::to_string(b)) {}
};

// A correlation input without enough variation to rank (constant column,
// or sample too small).
struct DegenerateInputError : Error {
    using Error::Error;
};

struct UnknownMeasureError : Error {
    std::string measure;
    explicit UnknownMeasureError(std::string m)
        : Error("unknown measure: " + m), measure(std::move(m)) {}
};

}  // namespace scholarnet
