#pragma once

#include <stdexcept>
#include <string>

namespace acdlab {

// Bad user-supplied data: malformed files, invalid parameters, non-groups.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration or construction exceeded its configured size cap.
class size_limit_error : public std::runtime_error {
public:
    explicit size_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// A product/quotient construction received incompatible ingredients.
class construction_error : public std::runtime_error {
public:
    explicit construction_error(const std::string& what) : std::runtime_error(what) {}
};

// A check was invoked on data that does not satisfy its stated hypotheses.
class precondition_error : public std::runtime_error {
public:
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// File system trouble distinct from malformed content.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical invariant the algorithms guarantee failed to hold; always a bug.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline void internal_check(bool ok, const std::string& what) {
    if (!ok) throw internal_error(what);
}

} // namespace acdlab
