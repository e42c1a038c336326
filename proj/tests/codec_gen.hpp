#pragma once

#include "subsim/codec/frames.hpp"

#include <random>
#include <string>

namespace testgen {

inline std::string random_string(std::mt19937_64& rng, size_t min_len,
                                 size_t max_len) {
    std::uniform_int_distribution<size_t> len(min_len, max_len);
    std::uniform_int_distribution<int> ch('0', 'z');
    std::string s(len(rng), ' ');
    for (auto& c : s) c = static_cast<char>(ch(rng));
    return s;
}

inline subsim::codec::Mac random_mac(std::mt19937_64& rng) {
    subsim::codec::Mac m;
    std::uniform_int_distribution<int> byte(0, 255);
    for (auto& b : m) b = static_cast<std::uint8_t>(byte(rng));
    return m;
}

inline subsim::codec::SvFrame random_sv(std::mt19937_64& rng) {
    using namespace subsim::codec;
    SvFrame f;
    std::uniform_int_distribution<int> byte(0, 255);
    std::uniform_int_distribution<std::uint32_t> u32;
    std::uniform_int_distribution<int> cnt(0, 4799);
    f.dst = random_mac(rng);
    f.src = random_mac(rng);
    f.appid = static_cast<std::uint16_t>(0x4000 + (u32(rng) & 0x3FFF));
    f.sv_id = random_string(rng, 0, 40);
    f.smp_cnt = static_cast<std::uint16_t>(cnt(rng));
    f.conf_rev = u32(rng);
    f.smp_synch = static_cast<std::uint8_t>(byte(rng));
    f.has_vlan = (u32(rng) & 7) == 0;
    if (f.has_vlan) f.vlan_tci = static_cast<std::uint16_t>(u32(rng) & 0xFFFF);
    for (auto& m : f.dataset) {
        m.value = static_cast<std::int32_t>(u32(rng));
        m.quality = u32(rng);
    }
    return f;
}

inline subsim::codec::GooseFrame random_goose(std::mt19937_64& rng) {
    using namespace subsim::codec;
    GooseFrame f;
    std::uniform_int_distribution<std::uint32_t> u32;
    std::uniform_int_distribution<int> entries(0, 6);
    f.dst = random_mac(rng);
    f.src = random_mac(rng);
    f.appid = static_cast<std::uint16_t>(u32(rng) & 0x3FFF);
    f.gocb_ref = random_string(rng, 0, 60);
    f.dat_set = random_string(rng, 0, 60);
    f.go_id = random_string(rng, 0, 30);
    f.t_raw = (static_cast<std::uint64_t>(u32(rng)) << 32) | u32(rng);
    f.st_num = u32(rng);
    f.sq_num = u32(rng);
    f.test = u32(rng) & 1;
    f.nds_com = u32(rng) & 1;
    f.time_allowed_to_live_ms = u32(rng) & 0xFFFF;
    f.conf_rev = u32(rng);
    f.has_vlan = (u32(rng) & 7) == 0;
    if (f.has_vlan) f.vlan_tci = static_cast<std::uint16_t>(u32(rng) & 0xFFFF);
    const int n = entries(rng);
    for (int i = 0; i < n; ++i)
        f.all_data.push_back({(u32(rng) & 1) != 0, (u32(rng) & 1) != 0});
    return f;
}

} // namespace testgen
