#include "subsim/codec/hex.hpp"

#include <cctype>

namespace subsim::codec {

std::string to_hex(ByteView bytes) {
    static const char digits[] = "0123456789ABCDEF";
    std::string out;
    out.reserve(bytes.size() * 3);
    for (std::size_t i = 0; i < bytes.size(); ++i) {
        if (i) out.push_back(' ');
        out.push_back(digits[bytes[i] >> 4]);
        out.push_back(digits[bytes[i] & 0xF]);
    }
    return out;
}

Bytes from_hex(const std::string& text) {
    Bytes out;
    int hi = -1;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (hi >= 0)
                throw CodecError(DecodeErrorKind::BadValue,
                                 "half byte in hex input");
            continue;
        }
        int v;
        if (c >= '0' && c <= '9') v = c - '0';
        else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
        else
            throw CodecError(DecodeErrorKind::BadValue,
                             std::string("invalid hex character '") + c + "'");
        if (hi < 0) {
            hi = v;
        } else {
            out.push_back(static_cast<std::uint8_t>((hi << 4) | v));
            hi = -1;
        }
    }
    if (hi >= 0)
        throw CodecError(DecodeErrorKind::BadValue, "odd number of hex digits");
    return out;
}

} // namespace subsim::codec
