#include "subsim/codec/ber.hpp"
#include "subsim/codec/capture_file.hpp"
#include "subsim/codec/goose.hpp"
#include "subsim/codec/hex.hpp"
#include "subsim/codec/sv.hpp"

#include "codec_gen.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace subsim::codec;

TEST_CASE("short-form TLV: hand-computed bytes") {
    const std::uint8_t payload[] = {0x01};
    auto enc = encode_tlv(0x85, ByteView(payload, 1));
    REQUIRE(enc.size() == 3);
    CHECK(enc[0] == 0x85);
    CHECK(enc[1] == 0x01);
    CHECK(enc[2] == 0x01);
}

TEST_CASE("long-form TLV: 200-byte payload uses the 0x81 prefix") {
    Bytes payload(200, 0xAA);
    auto enc = encode_tlv(0x61, payload);
    REQUIRE(enc.size() == 203);
    CHECK(enc[0] == 0x61);
    CHECK(enc[1] == 0x81);
    CHECK(enc[2] == 0xC8);
}

TEST_CASE("two-octet long form above 255 bytes") {
    Bytes payload(0x1234, 0x00);
    auto enc = encode_tlv(0x30, payload);
    CHECK(enc[1] == 0x82);
    CHECK(enc[2] == 0x12);
    CHECK(enc[3] == 0x34);
}

TEST_CASE("TLV round-trip for random tags and payloads") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> byte(0, 255);
    std::uniform_int_distribution<size_t> len(0, 400);
    for (int i = 0; i < 500; ++i) {
        const auto tag = static_cast<std::uint8_t>(byte(rng));
        Bytes payload(len(rng));
        for (auto& b : payload) b = static_cast<std::uint8_t>(byte(rng));
        auto enc = encode_tlv(tag, payload);
        auto dec = decode_tlv(enc);
        CHECK(dec.tag == tag);
        CHECK(dec.consumed == enc.size());
        CHECK(Bytes(dec.payload.begin(), dec.payload.end()) == payload);
    }
}

TEST_CASE("TLV decode errors are typed") {
    const std::uint8_t indefinite[] = {0x30, 0x80, 0x00, 0x00};
    try {
        decode_tlv(ByteView(indefinite, 4));
        FAIL("expected CodecError");
    } catch (const CodecError& e) {
        CHECK(e.kind == DecodeErrorKind::IndefiniteLength);
    }
    const std::uint8_t truncated[] = {0x30, 0x05, 0x01};
    try {
        decode_tlv(ByteView(truncated, 3));
        FAIL("expected CodecError");
    } catch (const CodecError& e) {
        CHECK(e.kind == DecodeErrorKind::Truncated);
    }
    Bytes big(70000, 0);
    CHECK_THROWS_AS(encode_tlv(0x30, big), CodecError);
}

TEST_CASE("SV frame round-trips and pins the Ethertype") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        auto f = testgen::random_sv(rng);
        auto raw = encode_sv(f, 123);
        const size_t off = f.has_vlan ? 16 : 12;
        CHECK(raw.bytes[off] == 0x88);
        CHECK(raw.bytes[off + 1] == 0xBA);
        if (f.has_vlan) {
            CHECK(raw.bytes[12] == 0x81);
            CHECK(raw.bytes[13] == 0x00);
        }
        auto back = decode_sv(raw);
        CHECK(back == f);
    }
}

TEST_CASE("SV encoding is deterministic") {
    std::mt19937_64 rng(3);
    auto f = testgen::random_sv(rng);
    CHECK(encode_sv(f).bytes == encode_sv(f).bytes);
}

TEST_CASE("SV decode errors are distinct") {
    std::mt19937_64 rng(5);
    auto f = testgen::random_sv(rng);
    f.has_vlan = false;
    auto raw = encode_sv(f);

    SUBCASE("wrong ethertype") {
        auto bad = raw;
        bad.bytes[12] = 0x08;
        bad.bytes[13] = 0x00;
        try {
            decode_sv(bad);
            FAIL("expected CodecError");
        } catch (const CodecError& e) {
            CHECK(e.kind == DecodeErrorKind::UnsupportedEthertype);
        }
    }
    SUBCASE("plain truncation trips the length check") {
        auto bad = raw;
        bad.bytes.resize(bad.bytes.size() - 10);
        try {
            decode_sv(bad);
            FAIL("expected CodecError");
        } catch (const CodecError& e) {
            CHECK(e.kind == DecodeErrorKind::LengthMismatch);
        }
    }
    SUBCASE("length-consistent truncation mid-dataset") {
        // Re-declare the outer length so the cut lands inside the dataset
        // TLV: the decoder must fault on the truncated APDU, not crash.
        auto bad = raw;
        bad.bytes.resize(bad.bytes.size() - 10);
        const size_t declared = bad.bytes.size() - 14;
        bad.bytes[16] = static_cast<std::uint8_t>(declared >> 8);
        bad.bytes[17] = static_cast<std::uint8_t>(declared & 0xFF);
        try {
            decode_sv(bad);
            FAIL("expected CodecError");
        } catch (const CodecError& e) {
            CHECK(e.kind == DecodeErrorKind::Truncated);
        }
    }
    SUBCASE("dataset with seven entries is rejected as such") {
        // Build the frame by hand with consistent nesting so the short
        // dataset is the only violation.
        Bytes asdu;
        append_tlv(asdu, 0x80, Bytes{'x'});             // svID
        append_tlv(asdu, 0x82, Bytes{0x00, 0x05});      // smpCnt
        append_tlv(asdu, 0x83, Bytes{0, 0, 0, 1});      // confRev
        append_tlv(asdu, 0x85, Bytes{0x02});            // smpSynch
        append_tlv(asdu, 0x87, Bytes(56, 0x00));        // 7 entries only
        Bytes seq;
        append_tlv(seq, 0x30, asdu);
        Bytes body;
        append_tlv(body, 0x80, Bytes{0x01});
        append_tlv(body, 0xA2, seq);
        Bytes apdu;
        append_tlv(apdu, 0x60, body);
        RawFrame bad;
        bad.bytes.assign(12, 0x00);                     // dst + src
        bad.bytes.push_back(0x88);
        bad.bytes.push_back(0xBA);
        append_fixed_be(bad.bytes, 0x4000, 2);
        append_fixed_be(bad.bytes, 8 + apdu.size(), 2);
        append_fixed_be(bad.bytes, 0, 4);
        bad.bytes.insert(bad.bytes.end(), apdu.begin(), apdu.end());
        try {
            decode_sv(bad);
            FAIL("expected CodecError");
        } catch (const CodecError& e) {
            CHECK(e.kind == DecodeErrorKind::BadDatasetLength);
        }
    }
}

TEST_CASE("GOOSE frame round-trips and pins the Ethertype") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 1000; ++i) {
        auto f = testgen::random_goose(rng);
        auto raw = encode_goose(f, 55);
        const size_t off = f.has_vlan ? 16 : 12;
        CHECK(raw.bytes[off] == 0x88);
        CHECK(raw.bytes[off + 1] == 0xB8);
        auto back = decode_goose(raw);
        CHECK(back == f);
    }
}

TEST_CASE("GOOSE trip flag and counters survive the wire") {
    GooseFrame f;
    f.gocb_ref = "S8IED1/LLN0$GO$gcb1";
    f.dat_set = "S8IED1/LLN0$trips";
    f.go_id = "s8.bay1";
    f.st_num = 41;
    f.sq_num = 7;
    f.all_data = {{false, true}};
    auto back = decode_goose(encode_goose(f));
    CHECK(back.st_num == 41);
    CHECK(back.sq_num == 7);
    CHECK(back.all_data.size() == 1);
    CHECK_FALSE(back.all_data[0].trip);
    CHECK(back.all_data[0].cb_closed);
}

TEST_CASE("GOOSE entry-count disagreement is a length error") {
    GooseFrame f;
    f.all_data = {{true, false}, {false, true}};
    auto raw = encode_goose(f);
    // numDatSetEntries is a one-byte uint TLV 8A 01 02; flip it to 3.
    bool patched = false;
    for (size_t i = 0; i + 2 < raw.bytes.size(); ++i) {
        if (raw.bytes[i] == 0x8A && raw.bytes[i + 1] == 0x01 &&
            raw.bytes[i + 2] == 0x02) {
            raw.bytes[i + 2] = 0x03;
            patched = true;
            break;
        }
    }
    REQUIRE(patched);
    try {
        decode_goose(raw);
        FAIL("expected CodecError");
    } catch (const CodecError& e) {
        CHECK(e.kind == DecodeErrorKind::LengthMismatch);
    }
}

TEST_CASE("goose timestamp packs seconds and fraction") {
    const double t = 1234.75;
    const auto raw = make_goose_timestamp(t);
    CHECK(goose_timestamp_seconds(raw) == doctest::Approx(t).epsilon(1e-7));
    CHECK((raw & 0xFF) == 0); // quality octet reserved as zero
}

TEST_CASE("hex round-trip and errors") {
    Bytes b = {0x00, 0x7F, 0xFF, 0x10};
    CHECK(to_hex(b) == "00 7F FF 10");
    CHECK(from_hex("00 7f Ff 10") == b);
    CHECK(from_hex("  00\n7F  FF\t10 ") == b);
    CHECK_THROWS_AS(from_hex("0"), CodecError);
    CHECK_THROWS_AS(from_hex("zz"), CodecError);
}

TEST_CASE("capture file round-trip") {
    std::mt19937_64 rng(17);
    std::vector<RawFrame> frames;
    for (int i = 0; i < 20; ++i) {
        auto raw = encode_sv(testgen::random_sv(rng),
                             static_cast<std::uint64_t>(1000 + i));
        frames.push_back(raw);
    }
    std::stringstream ss;
    write_capture(ss, frames);
    auto back = read_capture(ss);
    REQUIRE(back.size() == frames.size());
    for (size_t i = 0; i < frames.size(); ++i) CHECK(back[i] == frames[i]);

    std::stringstream bad("not a capture");
    CHECK_THROWS_AS(read_capture(bad), CodecError);
}

TEST_CASE("fuzzed mutations never escape the typed error set") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> byte(0, 255);
    int decoded = 0, rejected = 0;
    for (int iter = 0; iter < 4000; ++iter) {
        RawFrame raw = (iter & 1) ? encode_goose(testgen::random_goose(rng))
                                  : encode_sv(testgen::random_sv(rng));
        std::uniform_int_distribution<size_t> pos(0, raw.bytes.size() - 1);
        std::uniform_int_distribution<int> nmut(1, 8);
        for (int m = nmut(rng); m > 0; --m)
            raw.bytes[pos(rng)] = static_cast<std::uint8_t>(byte(rng));
        if (iter % 5 == 0) raw.bytes.resize(pos(rng));
        try {
            if (iter & 1)
                decode_goose(raw);
            else
                decode_sv(raw);
            ++decoded;
        } catch (const CodecError&) {
            ++rejected;
        }
    }
    CHECK(rejected > 0);
    CHECK(decoded + rejected == 4000);
}
