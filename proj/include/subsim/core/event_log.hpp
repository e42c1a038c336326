#pragma once

#include "subsim/core/time.hpp"

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace subsim {

enum class EventKind {
    SV_PUBLISH,
    GOOSE_PUBLISH,
    TRIP_ISSUED,
    CB_OPENED,
    CB_CLOSED,
    ATTACK_STARTED,
    SCADA_FLAG_SET,
    PORT_DISABLED,
    PORT_ENABLED,
    CIED_ACTIVATED,
    CLASSIFICATION,
    FRAME_DROPPED,
    FAULT_APPLIED,
    FAULT_CLEARED,
    NOTE,
};

const char* to_string(EventKind k);

struct EventRecord {
    Tick tick = 0;
    std::string source;
    EventKind kind = EventKind::NOTE;
    std::string detail;
};

// Timestamped record of everything observable in a run. Periodic traffic
// (SV publications, GOOSE heartbeats) is only recorded when trace mode is
// on; state changes are always recorded.
class EventLog {
  public:
    explicit EventLog(TimeBase tb = {}, bool trace = false)
        : tb_(tb), trace_(trace) {}

    void set_trace(bool on) { trace_ = on; }
    bool trace() const { return trace_; }

    void add(Tick t, const std::string& source, EventKind kind,
             const std::string& detail);
    // Dropped unless trace mode is enabled.
    void add_trace(Tick t, const std::string& source, EventKind kind,
                   const std::string& detail);

    const std::vector<EventRecord>& records() const { return records_; }

    std::vector<EventRecord> of_kind(EventKind k) const;
    const EventRecord* first_of(EventKind k) const;
    const EventRecord* first_of_after(EventKind k, Tick t) const;

    // One line per record: <seconds>\t<source>\t<kind>\t<detail>
    void write(std::ostream& os) const;
    std::string to_text() const;

    double seconds(Tick t) const { return tb_.seconds(t); }
    const TimeBase& time_base() const { return tb_; }

  private:
    TimeBase tb_;
    bool trace_ = false;
    std::vector<EventRecord> records_;
};

std::string format_seconds(const TimeBase& tb, Tick t);

} // namespace subsim
