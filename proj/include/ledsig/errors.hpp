#ifndef LEDSIG_ERRORS_HPP
#define LEDSIG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ledsig {

// Malformed or insufficient input (files, rows, configs). CLI exit code 1.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Undefined statistic or failed numerical routine. CLI exit code 2.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ledsig

#endif
