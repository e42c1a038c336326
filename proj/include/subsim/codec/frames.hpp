#pragma once

#include "subsim/codec/ber.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace subsim::codec {

using Mac = std::array<std::uint8_t, 6>;

std::string mac_to_string(const Mac& m);

constexpr std::uint16_t kEthertypeGoose = 0x88B8;
constexpr std::uint16_t kEthertypeSv = 0x88BA;
constexpr std::uint16_t kEthertypeVlan = 0x8100;

/// A complete Ethernet frame plus its capture timestamp.
struct RawFrame {
    Bytes bytes;
    std::uint64_t timestamp_us = 0;

    bool operator==(const RawFrame&) const = default;
};

/// Scaled-integer measurement entry: 1 unit is 1 mA for currents and 10 mV
/// for voltages. Values carry the instantaneous sample of the phase signal.
struct SvMeasurement {
    std::int32_t value = 0;
    std::uint32_t quality = 0;

    bool operator==(const SvMeasurement&) const = default;
};

constexpr double kSvCurrentUnitA = 1e-3;  // amperes per count
constexpr double kSvVoltageUnitV = 1e-2;  // volts per count

/// Sampled-value frame: fixed dataset of eight entries, four currents then
/// four voltages, phases a, b, c and neutral.
struct SvFrame {
    Mac dst{{0x01, 0x0C, 0xCD, 0x04, 0x00, 0x00}};
    Mac src{};
    bool has_vlan = false;
    std::uint16_t vlan_tci = 0x8000;
    std::uint16_t appid = 0x4000;
    std::string sv_id;
    std::uint16_t smp_cnt = 0;
    std::uint32_t conf_rev = 1;
    std::uint8_t smp_synch = 2;
    std::array<SvMeasurement, 8> dataset{};

    bool operator==(const SvFrame&) const = default;
};

struct GooseEntry {
    bool trip = false;
    bool cb_closed = true;

    bool operator==(const GooseEntry&) const = default;
};

/// GOOSE frame carrying trip/position pairs. The 8-byte timestamp packs a
/// 32-bit second count from simulation epoch 0, a 24-bit second fraction and
/// one quality octet.
struct GooseFrame {
    Mac dst{{0x01, 0x0C, 0xCD, 0x01, 0x00, 0x00}};
    Mac src{};
    bool has_vlan = false;
    std::uint16_t vlan_tci = 0x8000;
    std::uint16_t appid = 0x0001;
    std::string gocb_ref;
    std::string dat_set;
    std::string go_id;
    std::uint64_t t_raw = 0;
    std::uint32_t st_num = 1;
    std::uint32_t sq_num = 0;
    bool test = false;
    bool nds_com = false;
    std::uint32_t time_allowed_to_live_ms = 1000;
    std::uint32_t conf_rev = 1;
    std::vector<GooseEntry> all_data;

    bool operator==(const GooseFrame&) const = default;
};

std::uint64_t make_goose_timestamp(double seconds);
double goose_timestamp_seconds(std::uint64_t t_raw);

} // namespace subsim::codec
