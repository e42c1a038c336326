#pragma once

#include "subsim/codec/frames.hpp"

namespace subsim::codec {

/// Deterministic byte-exact encoding; same frame, same bytes. VLAN tagging
/// is emitted only when the frame asks for it.
RawFrame encode_sv(const SvFrame& frame, std::uint64_t timestamp_us = 0);

/// Strict decoder: wrong Ethertype, truncation, a dataset that is not
/// exactly eight entries, and an APDU length field that disagrees with the
/// actual payload are each a distinct CodecError.
SvFrame decode_sv(const RawFrame& raw);

} // namespace subsim::codec
