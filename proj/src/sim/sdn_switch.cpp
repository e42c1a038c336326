#include "subsim/sim/sdn_switch.hpp"

#include "subsim/core/errors.hpp"

namespace subsim::sim {

void SdnSwitch::add_port(int id, const std::string& device, bool enabled) {
    if (ports_.count(id))
        throw Error(name_ + ": duplicate port " + std::to_string(id));
    ports_[id] = Port{id, device, enabled};
}

void SdnSwitch::add_rule(const codec::Mac& dst, int egress_port) {
    if (!ports_.count(egress_port))
        throw Error(name_ + ": rule references unknown port " +
                    std::to_string(egress_port));
    rules_[dst].insert(egress_port);
}

bool SdnSwitch::port_enabled(int id) const {
    auto it = ports_.find(id);
    if (it == ports_.end())
        throw Error(name_ + ": unknown port " + std::to_string(id));
    return it->second.enabled;
}

void SdnSwitch::set_port_enabled(int id, bool on) {
    auto it = ports_.find(id);
    if (it == ports_.end())
        throw Error(name_ + ": unknown port " + std::to_string(id));
    it->second.enabled = on;
}

const std::string& SdnSwitch::port_device(int id) const {
    auto it = ports_.find(id);
    if (it == ports_.end())
        throw Error(name_ + ": unknown port " + std::to_string(id));
    return it->second.device;
}

std::vector<int> SdnSwitch::ports_of_device(const std::string& device) const {
    std::vector<int> out;
    for (const auto& [id, p] : ports_)
        if (p.device == device) out.push_back(id);
    return out;
}

SdnSwitch::Forwarded SdnSwitch::forward(int ingress_port,
                                        const codec::RawFrame& frame) const {
    Forwarded fw;
    if (!port_enabled(ingress_port)) {
        fw.dropped_at_ingress = true;
        return fw;
    }
    if (frame.bytes.size() < 6) return fw;
    codec::Mac dst;
    std::copy(frame.bytes.begin(), frame.bytes.begin() + 6, dst.begin());
    auto it = rules_.find(dst);
    if (it != rules_.end()) {
        for (int port : it->second) {
            if (port == ingress_port) continue;
            if (!ports_.at(port).enabled) {
                ++egress_drops_;
                continue;
            }
            fw.egress.push_back(port);
        }
    }
    if (monitor_ >= 0 && ports_.at(monitor_).enabled) fw.monitor_copy = true;
    return fw;
}

} // namespace subsim::sim
