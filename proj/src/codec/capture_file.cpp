#include "subsim/codec/capture_file.hpp"

#include <array>
#include <fstream>

namespace subsim::codec {

namespace {

constexpr std::array<std::uint8_t, 8> kMagic = {'S', 'S', 'C', 'A',
                                                'P', 0x01, '\r', '\n'};
constexpr std::uint32_t kMaxFrameLen = 1 << 20;

void put_u64le(std::ostream& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i)
        out.put(static_cast<char>((v >> (8 * i)) & 0xFF));
}
void put_u32le(std::ostream& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i)
        out.put(static_cast<char>((v >> (8 * i)) & 0xFF));
}

bool get_u64le(std::istream& in, std::uint64_t& v) {
    std::uint8_t b[8];
    if (!in.read(reinterpret_cast<char*>(b), 8)) return false;
    v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
    return true;
}

} // namespace

void write_capture(std::ostream& out, const std::vector<RawFrame>& frames) {
    out.write(reinterpret_cast<const char*>(kMagic.data()), kMagic.size());
    for (const auto& f : frames) {
        put_u64le(out, f.timestamp_us);
        put_u32le(out, static_cast<std::uint32_t>(f.bytes.size()));
        out.write(reinterpret_cast<const char*>(f.bytes.data()),
                  static_cast<std::streamsize>(f.bytes.size()));
    }
}

void write_capture_file(const std::string& path,
                        const std::vector<RawFrame>& frames) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw CodecError(DecodeErrorKind::BadValue,
                         "cannot write capture file " + path);
    write_capture(out, frames);
}

std::vector<RawFrame> read_capture(std::istream& in) {
    std::array<std::uint8_t, 8> magic{};
    if (!in.read(reinterpret_cast<char*>(magic.data()), magic.size()) ||
        magic != kMagic)
        throw CodecError(DecodeErrorKind::BadValue, "not a capture file");
    std::vector<RawFrame> frames;
    for (;;) {
        std::uint64_t ts;
        if (!get_u64le(in, ts)) break;
        std::uint8_t lenb[4];
        if (!in.read(reinterpret_cast<char*>(lenb), 4))
            throw CodecError(DecodeErrorKind::Truncated, "capture record header");
        std::uint32_t len = 0;
        for (int i = 3; i >= 0; --i) len = (len << 8) | lenb[i];
        if (len > kMaxFrameLen)
            throw CodecError(DecodeErrorKind::Oversize,
                             "capture record of " + std::to_string(len) +
                                 " bytes");
        RawFrame f;
        f.timestamp_us = ts;
        f.bytes.resize(len);
        if (!in.read(reinterpret_cast<char*>(f.bytes.data()), len))
            throw CodecError(DecodeErrorKind::Truncated, "capture record body");
        frames.push_back(std::move(f));
    }
    return frames;
}

std::vector<RawFrame> read_capture_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw CodecError(DecodeErrorKind::BadValue,
                         "cannot open capture file " + path);
    return read_capture(in);
}

} // namespace subsim::codec
