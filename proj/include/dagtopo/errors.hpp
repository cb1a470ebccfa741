#pragma once

#include <stdexcept>
#include <string>

namespace dagtopo {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad input data: malformed lines, unknown ids, unreadable files.
struct IngestError : Error {
    using Error::Error;
};

// Edge violates the type policy in strict mode.
struct ValidationError : Error {
    using Error::Error;
};

// Binary file problems: bad magic, version, CRC, truncation.
struct FormatError : Error {
    using Error::Error;
};

// Mathematically undefined request (e.g. power-law fit with no positive key).
struct DomainError : Error {
    using Error::Error;
};

}  // namespace dagtopo
