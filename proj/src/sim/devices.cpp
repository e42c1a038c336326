#include "subsim/sim/devices.hpp"

#include "subsim/codec/goose.hpp"
#include "subsim/codec/sv.hpp"
#include "subsim/core/errors.hpp"

#include <cmath>

namespace subsim::sim {

void IedConfig::validate() const {
    if (pickup_pu <= 0.0) throw Error("relay pickup must be positive");
    if (trip_delay_cycles < 1 || trip_delay_cycles > 3)
        throw Error("trip delay must be within [1, 3] cycles");
}

// ---------------------------------------------------------------- MergingUnit

MergingUnit::MergingUnit(const Bay& bay, TimeBase tb) : bay_(&bay), tb_(tb) {}

codec::SvFrame MergingUnit::frame_at(Tick t, const BayMeasurements& m) const {
    codec::SvFrame f;
    f.dst = bay_->sv_mac;
    f.src = codec::Mac{0x02, 0x00, 0x00, static_cast<std::uint8_t>(bay_->bus),
                       0x01, static_cast<std::uint8_t>(bay_->id)};
    f.appid = bay_->sv_appid;
    f.sv_id = bay_->sv_id;
    f.smp_cnt = static_cast<std::uint16_t>(t % tb_.samples_per_second());
    f.conf_rev = 1;
    f.smp_synch = 2;

    const double wt = 2.0 * M_PI * static_cast<double>(t % tb_.samples_per_cycle) /
                      tb_.samples_per_cycle;
    const double c = std::cos(wt), s = std::sin(wt);
    auto instantaneous = [&](const std::complex<double>& phasor) {
        return std::sqrt(2.0) * (phasor.real() * c - phasor.imag() * s);
    };
    for (int k = 0; k < 4; ++k) {
        const double amps = instantaneous(m.current_a[k]);
        f.dataset[k].value =
            static_cast<std::int32_t>(std::lround(amps / codec::kSvCurrentUnitA));
        f.dataset[k].quality = 0;
    }
    for (int k = 0; k < 4; ++k) {
        const double volts = instantaneous(m.voltage_v[k]);
        f.dataset[4 + k].value =
            static_cast<std::int32_t>(std::lround(volts / codec::kSvVoltageUnitV));
        f.dataset[4 + k].quality = 0;
    }
    return f;
}

codec::RawFrame MergingUnit::publish(Tick t, const BayMeasurements& m) const {
    const auto us = static_cast<std::uint64_t>(tb_.seconds(t) * 1e6);
    return codec::encode_sv(frame_at(t, m), us);
}

// -------------------------------------------------------------- GoosePublisher

GoosePublisher::GoosePublisher(const Bay& bay, TimeBase tb,
                               std::uint32_t time_allowed_to_live_ms)
    : bay_(&bay), tb_(tb), tal_ms_(time_allowed_to_live_ms) {
    heartbeat_ticks_ = tb_.from_seconds(tal_ms_ / 2000.0);
    if (heartbeat_ticks_ < 1) heartbeat_ticks_ = 1;
}

codec::GooseFrame GoosePublisher::make(Tick t) const {
    codec::GooseFrame f;
    f.dst = bay_->goose_mac;
    f.src = codec::Mac{0x02, 0x00, 0x00, static_cast<std::uint8_t>(bay_->bus),
                       0x02, static_cast<std::uint8_t>(bay_->id)};
    f.appid = bay_->goose_appid;
    f.gocb_ref = bay_->name + "/LLN0$GO$gcb";
    f.dat_set = bay_->name + "/LLN0$ds";
    f.go_id = bay_->name;
    f.t_raw = codec::make_goose_timestamp(tb_.seconds(t));
    f.st_num = st_num_;
    f.sq_num = sq_num_;
    f.time_allowed_to_live_ms = tal_ms_;
    f.conf_rev = 1;
    f.all_data = {last_};
    return f;
}

std::optional<codec::GooseFrame> GoosePublisher::poll(
    Tick t, const codec::GooseEntry& state, bool& heartbeat_out) {
    heartbeat_out = false;
    if (!published_ || !(state == last_)) {
        last_ = state;
        st_num_ += 1;
        sq_num_ = 0;
        published_ = true;
        next_heartbeat_ = t + heartbeat_ticks_;
        return make(t);
    }
    if (t >= next_heartbeat_) {
        sq_num_ += 1;
        next_heartbeat_ = t + heartbeat_ticks_;
        heartbeat_out = true;
        return make(t);
    }
    return std::nullopt;
}

codec::GooseFrame GoosePublisher::snapshot(Tick t) const { return make(t); }

// ------------------------------------------------------------------------ Ied

Ied::Ied(const Bay& bay, IedConfig cfg, bool differential, double amps_per_pu,
         TimeBase tb)
    : bay_(&bay), cfg_(cfg), differential_(differential),
      amps_per_pu_(amps_per_pu), tb_(tb),
      local_i_{PhasorEstimator(tb.samples_per_cycle),
               PhasorEstimator(tb.samples_per_cycle),
               PhasorEstimator(tb.samples_per_cycle),
               PhasorEstimator(tb.samples_per_cycle)},
      remote_i_{PhasorEstimator(tb.samples_per_cycle),
                PhasorEstimator(tb.samples_per_cycle),
                PhasorEstimator(tb.samples_per_cycle),
                PhasorEstimator(tb.samples_per_cycle)} {
    cfg_.validate();
}

void Ied::on_local_sv(Tick t, const codec::SvFrame& f) {
    for (int k = 0; k < 4; ++k)
        local_i_[k].push(t, static_cast<double>(f.dataset[k].value));
}

void Ied::on_remote_sv(Tick t, const codec::SvFrame& f) {
    for (int k = 0; k < 4; ++k)
        remote_i_[k].push(t, static_cast<double>(f.dataset[k].value));
}

Ied::Decision Ied::evaluate(Tick t) {
    (void)t;
    Decision d;
    const double counts_per_pu = amps_per_pu_ / codec::kSvCurrentUnitA;
    double op = 0.0;
    bool have = false;
    for (int p = 0; p < 3; ++p) {
        if (!local_i_[p].valid()) continue;
        std::complex<double> i = local_i_[p].phasor();
        if (differential_) {
            if (!remote_i_[p].valid()) continue; // window not yet filled
            i += remote_i_[p].phasor();
        }
        have = true;
        op = std::max(op, std::abs(i) / counts_per_pu);
    }
    d.operating_pu = have ? op : 0.0;
    if (!have) {
        // Missing samples extend the continuity requirement.
        above_ticks_ = 0;
        return d;
    }
    if (op > cfg_.pickup_pu) {
        ++above_ticks_;
        const long need = static_cast<long>(cfg_.trip_delay_cycles) *
                          tb_.samples_per_cycle;
        if (above_ticks_ >= need && !tripped_) {
            tripped_ = true;
            d.trip_now = true;
        }
    } else {
        above_ticks_ = 0;
    }
    return d;
}

// -------------------------------------------------------------------- Breaker

bool Breaker::command_trip(Tick t) {
    if (!closed_ || open_at_ >= 0) return false;
    open_at_ = t + tb_.samples_per_cycle; // mechanical travel: one cycle
    return true;
}

bool Breaker::update(Tick t) {
    if (open_at_ >= 0 && t >= open_at_) {
        open_at_ = -1;
        closed_ = false;
        return true;
    }
    return false;
}

void Breaker::close() {
    closed_ = true;
    open_at_ = -1;
}

} // namespace subsim::sim
