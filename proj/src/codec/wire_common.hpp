#pragma once

#include "subsim/codec/frames.hpp"

namespace subsim::codec::detail {

/// Ethernet header plus the APPID/Length/Reserved quartet shared by the SV
/// and GOOSE wire formats.
void append_header(Bytes& out, const Mac& dst, const Mac& src, bool vlan,
                   std::uint16_t tci, std::uint16_t ethertype,
                   std::uint16_t appid, std::size_t apdu_len);

struct Header {
    Mac dst{}, src{};
    bool has_vlan = false;
    std::uint16_t vlan_tci = 0;
    std::uint16_t appid = 0;
    ByteView apdu;
};

Header parse_header(ByteView b, std::uint16_t want_ethertype, const char* what);

} // namespace subsim::codec::detail
