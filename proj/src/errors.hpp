// Error taxonomy shared by the C++ core and the C API layer.
// Every failure the core can raise maps onto one of these statuses;
// the C API translates them 1:1 into gb_status codes.

#pragma once

#include <stdexcept>
#include <string>

namespace goldbach {

enum class Status {
    ok = 0,
    invalid_argument,  // bad parameter value (n < 3, r unsupported, ...)
    out_of_range,      // index/limit outside the structure queried
    domain_error,      // value outside the mathematical domain (m <= 4, odd where even required)
    resource,          // memory budget / table size / truncation limit exceeded
    overflow,          // exact integer accumulation would exceed the configured width
    corrupt_cache,     // cache file failed validation (magic/version/size/checksum)
    precision,         // internal exactness guarantee violated; no result returned
    io_error,          // file could not be opened/read/written
    internal,          // invariant breakage that should never happen
};

class Error : public std::runtime_error {
public:
    Error(Status status, const std::string& what)
        : std::runtime_error(what), status_(status) {}

    Status status() const noexcept { return status_; }

private:
    Status status_;
};

[[noreturn]] inline void fail(Status status, const std::string& msg) {
    throw Error(status, msg);
}

}  // namespace goldbach
