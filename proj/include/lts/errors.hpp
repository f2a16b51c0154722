#ifndef LTS_ERRORS_HPP
#define LTS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lts {

// Caller passed structurally invalid arguments (arity/dimension mismatch,
// wrong algebra kind, ...).  Maps to CLI exit code 2.
struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A precondition on mathematical content failed (input algebra does not
// satisfy the axioms the operation requires).  Maps to CLI exit code 1.
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Something the library guarantees internally did not hold; signals a bug
// in a formula or an inconsistent representation, never a user mistake.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Text could not be parsed as a document at all.
struct parse_error : std::runtime_error {
    parse_error(const std::string& msg, std::size_t line, std::size_t column)
        : std::runtime_error(msg), line(line), column(column) {}
    std::size_t line;
    std::size_t column;
};

// Document parsed but violates the schema; `path` names the offending node.
struct validation_error : std::runtime_error {
    validation_error(const std::string& msg, const std::string& path)
        : std::runtime_error(msg + " (at " + path + ")"), path(path) {}
    std::string path;
};

}  // namespace lts

#endif
