#include "subsim/codec/goose.hpp"

#include "wire_common.hpp"

namespace subsim::codec {

using detail::Header;
using detail::append_header;
using detail::parse_header;

namespace {

constexpr std::uint8_t kTagGoosePdu = 0x61;
constexpr std::uint8_t kTagGocbRef = 0x80;
constexpr std::uint8_t kTagTimeAllowedToLive = 0x81;
constexpr std::uint8_t kTagDatSet = 0x82;
constexpr std::uint8_t kTagGoId = 0x83;
constexpr std::uint8_t kTagT = 0x84;
constexpr std::uint8_t kTagStNum = 0x85;
constexpr std::uint8_t kTagSqNum = 0x86;
constexpr std::uint8_t kTagTest = 0x87;
constexpr std::uint8_t kTagConfRev = 0x88;
constexpr std::uint8_t kTagNdsCom = 0x89;
constexpr std::uint8_t kTagNumEntries = 0x8A;
constexpr std::uint8_t kTagAllData = 0xAB;
// Data choice tags within allData.
constexpr std::uint8_t kTagStructure = 0xA2;
constexpr std::uint8_t kTagBoolean = 0x83;

void append_string_tlv(Bytes& out, std::uint8_t tag, const std::string& s) {
    append_tlv(out, tag,
               ByteView(reinterpret_cast<const std::uint8_t*>(s.data()),
                        s.size()));
}

void append_bool_tlv(Bytes& out, bool v) {
    const std::uint8_t payload = v ? 0x01 : 0x00;
    append_tlv(out, kTagBoolean, ByteView(&payload, 1));
}

bool parse_bool(ByteView payload) {
    if (payload.size() != 1)
        throw CodecError(DecodeErrorKind::BadValue, "boolean width");
    return payload[0] != 0;
}

} // namespace

RawFrame encode_goose(const GooseFrame& frame, std::uint64_t timestamp_us) {
    Bytes body;
    append_string_tlv(body, kTagGocbRef, frame.gocb_ref);
    append_uint_tlv(body, kTagTimeAllowedToLive, frame.time_allowed_to_live_ms);
    append_string_tlv(body, kTagDatSet, frame.dat_set);
    append_string_tlv(body, kTagGoId, frame.go_id);
    Bytes tmp;
    append_fixed_be(tmp, frame.t_raw, 8);
    append_tlv(body, kTagT, tmp);
    append_uint_tlv(body, kTagStNum, frame.st_num);
    append_uint_tlv(body, kTagSqNum, frame.sq_num);
    tmp.assign(1, frame.test ? 0x01 : 0x00);
    append_tlv(body, kTagTest, tmp);
    append_uint_tlv(body, kTagConfRev, frame.conf_rev);
    tmp.assign(1, frame.nds_com ? 0x01 : 0x00);
    append_tlv(body, kTagNdsCom, tmp);
    append_uint_tlv(body, kTagNumEntries, frame.all_data.size());

    Bytes all;
    for (const auto& e : frame.all_data) {
        Bytes pair;
        append_bool_tlv(pair, e.trip);
        append_bool_tlv(pair, e.cb_closed);
        append_tlv(all, kTagStructure, pair);
    }
    append_tlv(body, kTagAllData, all);

    Bytes apdu;
    append_tlv(apdu, kTagGoosePdu, body);

    RawFrame raw;
    raw.timestamp_us = timestamp_us;
    raw.bytes.reserve(apdu.size() + 26);
    append_header(raw.bytes, frame.dst, frame.src, frame.has_vlan,
                  frame.vlan_tci, kEthertypeGoose, frame.appid, apdu.size());
    raw.bytes.insert(raw.bytes.end(), apdu.begin(), apdu.end());
    return raw;
}

GooseFrame decode_goose(const RawFrame& raw) {
    const Header h = parse_header(raw.bytes, kEthertypeGoose, "GOOSE");
    GooseFrame f;
    f.dst = h.dst;
    f.src = h.src;
    f.has_vlan = h.has_vlan;
    if (h.has_vlan) f.vlan_tci = h.vlan_tci;
    f.appid = h.appid;
    f.all_data.clear();

    const Tlv pdu = decode_tlv(h.apdu);
    if (pdu.tag != kTagGoosePdu)
        throw CodecError(DecodeErrorKind::BadValue, "missing goosePdu");
    if (pdu.consumed != h.apdu.size())
        throw CodecError(DecodeErrorKind::LengthMismatch,
                         "trailing bytes after goosePdu");

    std::uint64_t declared_entries = 0;
    bool saw_entries = false;
    ByteView body = pdu.payload;
    while (!body.empty()) {
        const Tlv t = decode_tlv(body);
        body = body.subspan(t.consumed);
        switch (t.tag) {
        case kTagGocbRef:
            f.gocb_ref.assign(t.payload.begin(), t.payload.end());
            break;
        case kTagTimeAllowedToLive:
            f.time_allowed_to_live_ms =
                static_cast<std::uint32_t>(parse_uint(t.payload, 0xFFFFFFFFull));
            break;
        case kTagDatSet:
            f.dat_set.assign(t.payload.begin(), t.payload.end());
            break;
        case kTagGoId:
            f.go_id.assign(t.payload.begin(), t.payload.end());
            break;
        case kTagT:
            if (t.payload.size() != 8)
                throw CodecError(DecodeErrorKind::BadValue, "timestamp width");
            f.t_raw = parse_fixed_be(t.payload);
            break;
        case kTagStNum:
            f.st_num =
                static_cast<std::uint32_t>(parse_uint(t.payload, 0xFFFFFFFFull));
            break;
        case kTagSqNum:
            f.sq_num =
                static_cast<std::uint32_t>(parse_uint(t.payload, 0xFFFFFFFFull));
            break;
        case kTagTest:
            f.test = parse_bool(t.payload);
            break;
        case kTagConfRev:
            f.conf_rev =
                static_cast<std::uint32_t>(parse_uint(t.payload, 0xFFFFFFFFull));
            break;
        case kTagNdsCom:
            f.nds_com = parse_bool(t.payload);
            break;
        case kTagNumEntries:
            declared_entries = parse_uint(t.payload, 0xFFFFull);
            saw_entries = true;
            break;
        case kTagAllData: {
            ByteView entries = t.payload;
            while (!entries.empty()) {
                const Tlv ent = decode_tlv(entries);
                entries = entries.subspan(ent.consumed);
                if (ent.tag != kTagStructure)
                    throw CodecError(DecodeErrorKind::BadValue,
                                     "allData entry must be a structure");
                const Tlv trip = decode_tlv(ent.payload);
                if (trip.tag != kTagBoolean)
                    throw CodecError(DecodeErrorKind::BadValue,
                                     "entry member must be boolean");
                const Tlv closed = decode_tlv(ent.payload.subspan(trip.consumed));
                if (closed.tag != kTagBoolean)
                    throw CodecError(DecodeErrorKind::BadValue,
                                     "entry member must be boolean");
                if (trip.consumed + closed.consumed != ent.payload.size())
                    throw CodecError(DecodeErrorKind::BadValue,
                                     "entry carries extra members");
                f.all_data.push_back(
                    {parse_bool(trip.payload), parse_bool(closed.payload)});
            }
            break;
        }
        default:
            throw CodecError(DecodeErrorKind::BadValue,
                             "unexpected goosePdu field tag");
        }
    }
    if (!saw_entries)
        throw CodecError(DecodeErrorKind::Truncated, "truncated goosePdu");
    if (declared_entries != f.all_data.size())
        throw CodecError(DecodeErrorKind::LengthMismatch,
                         "numDatSetEntries declares " +
                             std::to_string(declared_entries) + ", allData has " +
                             std::to_string(f.all_data.size()));
    return f;
}

} // namespace subsim::codec
