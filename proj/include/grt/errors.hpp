#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grt {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class invalid_group_spec : public error {
public:
    using error::error;
};

class group_mismatch : public error {
public:
    using error::error;
};

class index_error : public error {
public:
    using error::error;
};

class invalid_ring_spec : public error {
public:
    using error::error;
};

/// Operands built over different groups, orders or coefficient layouts.
class mismatch_error : public error {
public:
    using error::error;
};

/// Operation needs a floating-point (real or complex) coefficient ring.
class unsupported_ring : public error {
public:
    using error::error;
};

class not_invertible : public error {
public:
    not_invertible(std::size_t character, const std::string& what)
        : error(what), character_(character) {}

    /// Index of the character whose transform-domain slice failed.
    std::size_t character() const noexcept { return character_; }

private:
    std::size_t character_;
};

class inapplicable_witness : public error {
public:
    using error::error;
};

class generation_failed : public error {
public:
    using error::error;
};

class too_large_for_demo : public error {
public:
    using error::error;
};

}  // namespace grt
