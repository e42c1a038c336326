#pragma once

#include "subsim/core/errors.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace subsim::codec {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

enum class DecodeErrorKind {
    Truncated,
    IndefiniteLength,
    UnsupportedEncoding,
    UnsupportedEthertype,
    LengthMismatch,
    BadDatasetLength,
    BadValue,
    Oversize,
};

const char* to_string(DecodeErrorKind k);

/// Every malformed input maps to one of these; nothing in the codec throws
/// anything else for bad bytes.
class CodecError : public Error {
  public:
    CodecError(DecodeErrorKind kind, const std::string& msg)
        : Error(std::string(to_string(kind)) + ": " + msg), kind(kind) {}
    DecodeErrorKind kind;
};

struct Tlv {
    std::uint8_t tag = 0;
    ByteView payload;
    std::size_t consumed = 0; // header + payload
};

/// Definite-length BER: short form below 128, long form 0x81/0x82 up to
/// 65535. Payloads of 2^16 bytes or more are rejected.
Bytes encode_tlv(std::uint8_t tag, ByteView payload);
void append_tlv(Bytes& out, std::uint8_t tag, ByteView payload);

/// Decodes one TLV from the front of `in`. Throws CodecError on truncation,
/// on the indefinite-length marker 0x80, and on length forms longer than
/// two octets.
Tlv decode_tlv(ByteView in);

// Integer helpers shared by both protocols: minimal-length two's-complement
// BER integers for unsigned values, and fixed-width big-endian fields.
void append_uint_tlv(Bytes& out, std::uint8_t tag, std::uint64_t value);
std::uint64_t parse_uint(ByteView payload, std::uint64_t max_value);
void append_fixed_be(Bytes& out, std::uint64_t value, int width);
std::uint64_t parse_fixed_be(ByteView payload);

} // namespace subsim::codec
