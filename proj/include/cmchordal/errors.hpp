#ifndef CMCHORDAL_ERRORS_HPP
#define CMCHORDAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cmchordal {

// Malformed input text (edge-list files, inline graph specs).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// An operation was called outside its contract (isolated vertex where none
// is allowed, non-chordal input to the classifier, non-face link, ...).
class precondition_error : public std::runtime_error {
public:
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// Input exceeds a size cap.
class cap_error : public std::runtime_error {
public:
    explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cmchordal

#endif
