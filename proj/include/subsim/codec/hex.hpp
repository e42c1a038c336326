#pragma once

#include "subsim/codec/ber.hpp"

#include <string>

namespace subsim::codec {

/// Two-digit uppercase bytes separated by single spaces: "01 0C CD ...".
std::string to_hex(ByteView bytes);

/// Accepts the same format, case-insensitive, with any whitespace between
/// bytes. Throws CodecError on stray characters or half bytes.
Bytes from_hex(const std::string& text);

} // namespace subsim::codec
