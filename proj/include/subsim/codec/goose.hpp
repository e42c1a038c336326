#pragma once

#include "subsim/codec/frames.hpp"

namespace subsim::codec {

RawFrame encode_goose(const GooseFrame& frame, std::uint64_t timestamp_us = 0);
GooseFrame decode_goose(const RawFrame& raw);

} // namespace subsim::codec
