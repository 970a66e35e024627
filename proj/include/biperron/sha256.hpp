#ifndef BIPERRON_SHA256_HPP
#define BIPERRON_SHA256_HPP

#include <cstdint>
#include <string>

namespace biperron {

/// SHA-256 of `data`, lowercase hex. Self-contained; used for
/// content-addressed cache keys and envelope hashes.
std::string sha256_hex(const std::string& data);

}  // namespace biperron

#endif
