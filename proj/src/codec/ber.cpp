#include "subsim/codec/ber.hpp"

namespace subsim::codec {

const char* to_string(DecodeErrorKind k) {
    switch (k) {
    case DecodeErrorKind::Truncated: return "truncated";
    case DecodeErrorKind::IndefiniteLength: return "indefinite length";
    case DecodeErrorKind::UnsupportedEncoding: return "unsupported encoding";
    case DecodeErrorKind::UnsupportedEthertype: return "unsupported Ethertype";
    case DecodeErrorKind::LengthMismatch: return "length-field mismatch";
    case DecodeErrorKind::BadDatasetLength: return "bad dataset length";
    case DecodeErrorKind::BadValue: return "bad value";
    case DecodeErrorKind::Oversize: return "oversize";
    }
    return "codec error";
}

void append_tlv(Bytes& out, std::uint8_t tag, ByteView payload) {
    const std::size_t n = payload.size();
    if (n >= 0x10000)
        throw CodecError(DecodeErrorKind::Oversize,
                         "TLV payload of " + std::to_string(n) + " bytes");
    out.push_back(tag);
    if (n < 0x80) {
        out.push_back(static_cast<std::uint8_t>(n));
    } else if (n < 0x100) {
        out.push_back(0x81);
        out.push_back(static_cast<std::uint8_t>(n));
    } else {
        out.push_back(0x82);
        out.push_back(static_cast<std::uint8_t>(n >> 8));
        out.push_back(static_cast<std::uint8_t>(n & 0xFF));
    }
    out.insert(out.end(), payload.begin(), payload.end());
}

Bytes encode_tlv(std::uint8_t tag, ByteView payload) {
    Bytes out;
    out.reserve(payload.size() + 4);
    append_tlv(out, tag, payload);
    return out;
}

Tlv decode_tlv(ByteView in) {
    if (in.size() < 2)
        throw CodecError(DecodeErrorKind::Truncated, "TLV header");
    const std::uint8_t tag = in[0];
    std::size_t len = 0, hdr = 2;
    const std::uint8_t l0 = in[1];
    if (l0 < 0x80) {
        len = l0;
    } else if (l0 == 0x80) {
        throw CodecError(DecodeErrorKind::IndefiniteLength,
                         "indefinite-length TLV");
    } else if (l0 == 0x81) {
        if (in.size() < 3)
            throw CodecError(DecodeErrorKind::Truncated, "TLV long-form length");
        len = in[2];
        hdr = 3;
    } else if (l0 == 0x82) {
        if (in.size() < 4)
            throw CodecError(DecodeErrorKind::Truncated, "TLV long-form length");
        len = (static_cast<std::size_t>(in[2]) << 8) | in[3];
        hdr = 4;
    } else {
        throw CodecError(DecodeErrorKind::UnsupportedEncoding,
                         "length form beyond two octets");
    }
    if (in.size() < hdr + len)
        throw CodecError(DecodeErrorKind::Truncated,
                         "TLV payload needs " + std::to_string(len) +
                             " bytes, " + std::to_string(in.size() - hdr) +
                             " available");
    Tlv t;
    t.tag = tag;
    t.payload = in.subspan(hdr, len);
    t.consumed = hdr + len;
    return t;
}

void append_uint_tlv(Bytes& out, std::uint8_t tag, std::uint64_t value) {
    // Minimal two's-complement octets; a leading zero keeps the value
    // non-negative when its high bit is set.
    Bytes payload;
    if (value == 0) {
        payload.push_back(0);
    } else {
        while (value > 0) {
            payload.insert(payload.begin(),
                           static_cast<std::uint8_t>(value & 0xFF));
            value >>= 8;
        }
        if (payload.front() & 0x80) payload.insert(payload.begin(), 0);
    }
    append_tlv(out, tag, payload);
}

std::uint64_t parse_uint(ByteView payload, std::uint64_t max_value) {
    if (payload.empty())
        throw CodecError(DecodeErrorKind::BadValue, "empty integer");
    if (payload.size() > 9)
        throw CodecError(DecodeErrorKind::BadValue, "integer too wide");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < payload.size(); ++i) {
        if (v > (max_value >> 8))
            throw CodecError(DecodeErrorKind::BadValue,
                             "integer exceeds field range");
        v = (v << 8) | payload[i];
    }
    if (v > max_value)
        throw CodecError(DecodeErrorKind::BadValue,
                         "integer exceeds field range");
    return v;
}

void append_fixed_be(Bytes& out, std::uint64_t value, int width) {
    for (int i = width - 1; i >= 0; --i)
        out.push_back(static_cast<std::uint8_t>((value >> (8 * i)) & 0xFF));
}

std::uint64_t parse_fixed_be(ByteView payload) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < payload.size(); ++i) v = (v << 8) | payload[i];
    return v;
}

} // namespace subsim::codec
