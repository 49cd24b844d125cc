#ifndef MGTD_ERROR_HPP
#define MGTD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mgtd {

// All validation and I/O failures surface as this type; the CLI turns it
// into a single-line "error: ..." message and a nonzero exit status.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace mgtd

#endif
