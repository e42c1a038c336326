#pragma once

#include "subsim/codec/frames.hpp"

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace subsim::sim {

/// Ethernet switch whose forwarding is a static multicast rule table plus a
/// per-port enable flag controlled from outside (the isolation mechanism).
/// Disabled ports neither accept ingress nor receive egress. An optional
/// monitor port receives a copy of every frame the switch accepts.
class SdnSwitch {
  public:
    struct Port {
        int id = 0;
        std::string device;
        bool enabled = true;
    };

    SdnSwitch() = default;
    explicit SdnSwitch(std::string name) : name_(std::move(name)) {}

    const std::string& name() const { return name_; }

    void add_port(int id, const std::string& device, bool enabled = true);
    void add_rule(const codec::Mac& dst, int egress_port);
    void set_monitor_port(int id) { monitor_ = id; }
    int monitor_port() const { return monitor_; }

    bool port_enabled(int id) const;
    void set_port_enabled(int id, bool on);
    const std::string& port_device(int id) const;
    const std::map<int, Port>& ports() const { return ports_; }
    std::vector<int> ports_of_device(const std::string& device) const;

    /// Result of switching one frame: egress ports that receive a copy.
    /// Ingress from a disabled port yields an empty set and marks `dropped`.
    struct Forwarded {
        std::vector<int> egress;
        bool dropped_at_ingress = false;
        bool monitor_copy = false;
    };
    Forwarded forward(int ingress_port, const codec::RawFrame& frame) const;

    std::uint64_t egress_drop_count() const { return egress_drops_; }

  private:
    std::string name_;
    std::map<int, Port> ports_;
    std::map<codec::Mac, std::set<int>> rules_;
    int monitor_ = -1;
    mutable std::uint64_t egress_drops_ = 0;
};

} // namespace subsim::sim
