#pragma once

#include <stdexcept>
#include <string>

namespace schurkit {

/// Well-formed request with mathematically invalid content (bad chain,
/// mismatched sizes, non-decodable matrix, ...). The CLI maps this to exit 1.
class domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unparseable text input. The CLI maps this to exit 2.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace schurkit
