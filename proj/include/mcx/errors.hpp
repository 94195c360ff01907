#ifndef MCX_ERRORS_HPP
#define MCX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mcx {

// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text (facet files, family spec strings).
struct parse_error : error {
    explicit parse_error(const std::string& msg) : error(msg) {}
};

// A configured resource guard (vertex cap, simplex budget, restart budget)
// was exceeded.  Callers map this to a distinct process exit code.
struct resource_error : error {
    explicit resource_error(const std::string& msg) : error(msg) {}
};

// An operation was called outside its documented domain
// (e.g. rooting a gradient field on a graph with a cycle).
struct precondition_error : error {
    explicit precondition_error(const std::string& msg) : error(msg) {}
};

} // namespace mcx

#endif
