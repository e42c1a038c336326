#pragma once

#include "subsim/codec/frames.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace subsim::codec {

// Capture files hold raw frames as length-prefixed binary records behind an
// 8-byte magic:
//   magic   "SSCAP\x01\r\n"
//   record  u64-le capture timestamp (microseconds)
//           u32-le frame length
//           frame bytes
// repeated until end of file.

void write_capture(std::ostream& out, const std::vector<RawFrame>& frames);
void write_capture_file(const std::string& path,
                        const std::vector<RawFrame>& frames);
std::vector<RawFrame> read_capture(std::istream& in);
std::vector<RawFrame> read_capture_file(const std::string& path);

} // namespace subsim::codec
