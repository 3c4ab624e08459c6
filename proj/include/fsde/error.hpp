#pragma once

#include <stdexcept>
#include <string>

namespace fsde {

// Input outside an operation's mathematical domain (bad alpha, bad step, ...).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class division_by_zero_interval : public domain_error {
public:
    using domain_error::domain_error;
};

// Raised when R does not divide the number of fine increments.
class divisibility_error : public domain_error {
public:
    using domain_error::domain_error;
};

class parse_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace fsde
