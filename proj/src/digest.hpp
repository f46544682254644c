#pragma once

#include <string>
#include <string_view>

namespace zc::detail {

/// Lowercase hex SHA-256 of `bytes`. Throws IoError on library failure.
std::string sha256_hex(std::string_view bytes);

}  // namespace zc::detail
