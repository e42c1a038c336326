#include "subsim/codec/sv.hpp"

#include "wire_common.hpp"

#include <cstdio>

namespace subsim::codec {

using detail::Header;
using detail::append_header;
using detail::parse_header;

std::string mac_to_string(const Mac& m) {
    char buf[18];
    std::snprintf(buf, sizeof(buf), "%02X-%02X-%02X-%02X-%02X-%02X", m[0], m[1],
                  m[2], m[3], m[4], m[5]);
    return buf;
}

std::uint64_t make_goose_timestamp(double seconds) {
    const auto whole = static_cast<std::uint64_t>(seconds);
    const double frac = seconds - static_cast<double>(whole);
    const auto frac24 = static_cast<std::uint64_t>(frac * 16777216.0) & 0xFFFFFF;
    return (whole << 32) | (frac24 << 8); // low octet: time quality, zero here
}

double goose_timestamp_seconds(std::uint64_t t_raw) {
    const double whole = static_cast<double>(t_raw >> 32);
    const double frac =
        static_cast<double>((t_raw >> 8) & 0xFFFFFF) / 16777216.0;
    return whole + frac;
}

namespace {

constexpr std::uint8_t kTagSavPdu = 0x60;
constexpr std::uint8_t kTagNoAsdu = 0x80;
constexpr std::uint8_t kTagSeqAsdu = 0xA2;
constexpr std::uint8_t kTagAsdu = 0x30;
constexpr std::uint8_t kTagSvId = 0x80;
constexpr std::uint8_t kTagSmpCnt = 0x82;
constexpr std::uint8_t kTagConfRev = 0x83;
constexpr std::uint8_t kTagSmpSynch = 0x85;
constexpr std::uint8_t kTagSeqData = 0x87;

} // namespace

RawFrame encode_sv(const SvFrame& frame, std::uint64_t timestamp_us) {
    Bytes asdu;
    append_tlv(asdu, kTagSvId,
               ByteView(reinterpret_cast<const std::uint8_t*>(frame.sv_id.data()),
                        frame.sv_id.size()));
    Bytes tmp;
    append_fixed_be(tmp, frame.smp_cnt, 2);
    append_tlv(asdu, kTagSmpCnt, tmp);
    tmp.clear();
    append_fixed_be(tmp, frame.conf_rev, 4);
    append_tlv(asdu, kTagConfRev, tmp);
    tmp.clear();
    tmp.push_back(frame.smp_synch);
    append_tlv(asdu, kTagSmpSynch, tmp);
    tmp.clear();
    for (const auto& m : frame.dataset) {
        append_fixed_be(tmp, static_cast<std::uint32_t>(m.value), 4);
        append_fixed_be(tmp, m.quality, 4);
    }
    append_tlv(asdu, kTagSeqData, tmp);

    Bytes seq;
    append_tlv(seq, kTagAsdu, asdu);
    Bytes pdu_body;
    tmp.clear();
    tmp.push_back(1); // one ASDU per frame
    append_tlv(pdu_body, kTagNoAsdu, tmp);
    append_tlv(pdu_body, kTagSeqAsdu, seq);
    Bytes apdu;
    append_tlv(apdu, kTagSavPdu, pdu_body);

    RawFrame raw;
    raw.timestamp_us = timestamp_us;
    raw.bytes.reserve(apdu.size() + 26);
    append_header(raw.bytes, frame.dst, frame.src, frame.has_vlan,
                  frame.vlan_tci, kEthertypeSv, frame.appid, apdu.size());
    raw.bytes.insert(raw.bytes.end(), apdu.begin(), apdu.end());
    return raw;
}

SvFrame decode_sv(const RawFrame& raw) {
    const Header h = parse_header(raw.bytes, kEthertypeSv, "sampled values");
    SvFrame f;
    f.dst = h.dst;
    f.src = h.src;
    f.has_vlan = h.has_vlan;
    if (h.has_vlan) f.vlan_tci = h.vlan_tci;
    f.appid = h.appid;

    const Tlv pdu = decode_tlv(h.apdu);
    if (pdu.tag != kTagSavPdu)
        throw CodecError(DecodeErrorKind::BadValue, "missing savPdu");
    if (pdu.consumed != h.apdu.size())
        throw CodecError(DecodeErrorKind::LengthMismatch,
                         "trailing bytes after savPdu");

    ByteView body = pdu.payload;
    bool saw_asdu = false;
    while (!body.empty()) {
        const Tlv t = decode_tlv(body);
        body = body.subspan(t.consumed);
        switch (t.tag) {
        case kTagNoAsdu:
            if (parse_uint(t.payload, 0xFF) != 1)
                throw CodecError(DecodeErrorKind::BadValue,
                                 "exactly one ASDU per frame");
            break;
        case kTagSeqAsdu: {
            const Tlv asdu = decode_tlv(t.payload);
            if (asdu.tag != kTagAsdu)
                throw CodecError(DecodeErrorKind::BadValue, "missing ASDU");
            if (asdu.consumed != t.payload.size())
                throw CodecError(DecodeErrorKind::BadValue,
                                 "exactly one ASDU per frame");
            saw_asdu = true;
            ByteView fields = asdu.payload;
            while (!fields.empty()) {
                const Tlv fv = decode_tlv(fields);
                fields = fields.subspan(fv.consumed);
                switch (fv.tag) {
                case kTagSvId:
                    f.sv_id.assign(fv.payload.begin(), fv.payload.end());
                    break;
                case kTagSmpCnt:
                    if (fv.payload.size() != 2)
                        throw CodecError(DecodeErrorKind::BadValue,
                                         "sample counter width");
                    f.smp_cnt =
                        static_cast<std::uint16_t>(parse_fixed_be(fv.payload));
                    break;
                case kTagConfRev:
                    if (fv.payload.size() != 4)
                        throw CodecError(DecodeErrorKind::BadValue,
                                         "confRev width");
                    f.conf_rev =
                        static_cast<std::uint32_t>(parse_fixed_be(fv.payload));
                    break;
                case kTagSmpSynch:
                    if (fv.payload.size() != 1)
                        throw CodecError(DecodeErrorKind::BadValue,
                                         "smpSynch width");
                    f.smp_synch = fv.payload[0];
                    break;
                case kTagSeqData: {
                    if (fv.payload.size() != 64)
                        throw CodecError(
                            DecodeErrorKind::BadDatasetLength,
                            "dataset carries " +
                                std::to_string(fv.payload.size() / 8) +
                                " entries, expected 8");
                    for (int i = 0; i < 8; ++i) {
                        f.dataset[i].value = static_cast<std::int32_t>(
                            parse_fixed_be(fv.payload.subspan(8 * i, 4)));
                        f.dataset[i].quality = static_cast<std::uint32_t>(
                            parse_fixed_be(fv.payload.subspan(8 * i + 4, 4)));
                    }
                    break;
                }
                default:
                    throw CodecError(DecodeErrorKind::BadValue,
                                     "unexpected ASDU field tag");
                }
            }
            break;
        }
        default:
            throw CodecError(DecodeErrorKind::BadValue,
                             "unexpected savPdu field tag");
        }
    }
    if (!saw_asdu)
        throw CodecError(DecodeErrorKind::Truncated, "truncated APDU");
    return f;
}

} // namespace subsim::codec
