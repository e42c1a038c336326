#include "subsim/core/event_log.hpp"

#include "subsim/core/errors.hpp"

#include <sstream>

namespace subsim {

const char* to_string(EventKind k) {
    switch (k) {
    case EventKind::SV_PUBLISH: return "SV_PUBLISH";
    case EventKind::GOOSE_PUBLISH: return "GOOSE_PUBLISH";
    case EventKind::TRIP_ISSUED: return "TRIP_ISSUED";
    case EventKind::CB_OPENED: return "CB_OPENED";
    case EventKind::CB_CLOSED: return "CB_CLOSED";
    case EventKind::ATTACK_STARTED: return "ATTACK_STARTED";
    case EventKind::SCADA_FLAG_SET: return "SCADA_FLAG_SET";
    case EventKind::PORT_DISABLED: return "PORT_DISABLED";
    case EventKind::PORT_ENABLED: return "PORT_ENABLED";
    case EventKind::CIED_ACTIVATED: return "CIED_ACTIVATED";
    case EventKind::CLASSIFICATION: return "CLASSIFICATION";
    case EventKind::FRAME_DROPPED: return "FRAME_DROPPED";
    case EventKind::FAULT_APPLIED: return "FAULT_APPLIED";
    case EventKind::FAULT_CLEARED: return "FAULT_CLEARED";
    case EventKind::NOTE: return "NOTE";
    }
    return "UNKNOWN";
}

void EventLog::add(Tick t, const std::string& source, EventKind kind,
                   const std::string& detail) {
    if (!records_.empty() && t < records_.back().tick)
        throw Error("event log timestamps must be non-decreasing: " +
                    std::to_string(t) + " after " +
                    std::to_string(records_.back().tick));
    records_.push_back({t, source, kind, detail});
}

void EventLog::add_trace(Tick t, const std::string& source, EventKind kind,
                         const std::string& detail) {
    if (trace_) add(t, source, kind, detail);
}

std::vector<EventRecord> EventLog::of_kind(EventKind k) const {
    std::vector<EventRecord> out;
    for (const auto& r : records_)
        if (r.kind == k) out.push_back(r);
    return out;
}

const EventRecord* EventLog::first_of(EventKind k) const {
    for (const auto& r : records_)
        if (r.kind == k) return &r;
    return nullptr;
}

const EventRecord* EventLog::first_of_after(EventKind k, Tick t) const {
    for (const auto& r : records_)
        if (r.kind == k && r.tick >= t) return &r;
    return nullptr;
}

std::string format_seconds(const TimeBase& tb, Tick t) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", tb.seconds(t));
    return buf;
}

void EventLog::write(std::ostream& os) const {
    for (const auto& r : records_) {
        os << format_seconds(tb_, r.tick) << '\t' << r.source << '\t'
           << to_string(r.kind) << '\t' << r.detail << '\n';
    }
}

std::string EventLog::to_text() const {
    std::ostringstream ss;
    write(ss);
    return ss.str();
}

} // namespace subsim
