#include "wire_common.hpp"

namespace subsim::codec::detail {

void append_header(Bytes& out, const Mac& dst, const Mac& src, bool vlan,
                   std::uint16_t tci, std::uint16_t ethertype,
                   std::uint16_t appid, std::size_t apdu_len) {
    out.insert(out.end(), dst.begin(), dst.end());
    out.insert(out.end(), src.begin(), src.end());
    if (vlan) {
        append_fixed_be(out, kEthertypeVlan, 2);
        append_fixed_be(out, tci, 2);
    }
    append_fixed_be(out, ethertype, 2);
    append_fixed_be(out, appid, 2);
    append_fixed_be(out, 8 + apdu_len, 2); // APPID..APDU inclusive
    append_fixed_be(out, 0, 2);            // reserved 1
    append_fixed_be(out, 0, 2);            // reserved 2
}

Header parse_header(ByteView b, std::uint16_t want_ethertype,
                    const char* what) {
    Header h;
    if (b.size() < 14)
        throw CodecError(DecodeErrorKind::Truncated, "Ethernet header");
    std::copy(b.begin(), b.begin() + 6, h.dst.begin());
    std::copy(b.begin() + 6, b.begin() + 12, h.src.begin());
    std::size_t off = 12;
    std::uint16_t ethertype =
        static_cast<std::uint16_t>(parse_fixed_be(b.subspan(off, 2)));
    if (ethertype == kEthertypeVlan) {
        if (b.size() < 18)
            throw CodecError(DecodeErrorKind::Truncated, "VLAN tag");
        h.has_vlan = true;
        h.vlan_tci = static_cast<std::uint16_t>(parse_fixed_be(b.subspan(14, 2)));
        off = 16;
        ethertype = static_cast<std::uint16_t>(parse_fixed_be(b.subspan(off, 2)));
    }
    if (ethertype != want_ethertype)
        throw CodecError(DecodeErrorKind::UnsupportedEthertype,
                         std::string(what) + " expects a different Ethertype");
    off += 2;
    if (b.size() < off + 8)
        throw CodecError(DecodeErrorKind::Truncated, "APPID/length header");
    h.appid = static_cast<std::uint16_t>(parse_fixed_be(b.subspan(off, 2)));
    const std::size_t declared = parse_fixed_be(b.subspan(off + 2, 2));
    const std::size_t actual = b.size() - off;
    if (declared != actual)
        throw CodecError(DecodeErrorKind::LengthMismatch,
                         "header declares " + std::to_string(declared) +
                             " bytes, frame carries " + std::to_string(actual));
    h.apdu = b.subspan(off + 8);
    return h;
}

} // namespace subsim::codec::detail
