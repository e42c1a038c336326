#include "subsim/grid/case_file.hpp"

#include "subsim/core/errors.hpp"

#include <fstream>
#include <sstream>

namespace subsim::grid {

namespace {

BusType parse_bus_type(const std::string& s) {
    if (s == "slack") return BusType::Slack;
    if (s == "pv") return BusType::PV;
    if (s == "pq") return BusType::PQ;
    throw ModelError("unknown bus type '" + s + "'");
}

const char* bus_type_name(BusType t) {
    switch (t) {
    case BusType::Slack: return "slack";
    case BusType::PV: return "pv";
    case BusType::PQ: return "pq";
    }
    return "pq";
}

} // namespace

NetworkModel read_case(std::istream& in) {
    NetworkModel net;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag)) continue;
        auto fail = [&](const std::string& what) {
            throw ModelError("case file line " + std::to_string(lineno) + ": " +
                             what);
        };
        if (tag == "case") {
            if (!(ss >> net.name >> net.base_mva)) fail("bad case record");
        } else if (tag == "bus") {
            Bus b;
            std::string type;
            if (!(ss >> b.id >> type >> b.nominal_kv >> b.shunt_g >> b.shunt_b))
                fail("bad bus record");
            b.type = parse_bus_type(type);
            net.buses.push_back(b);
        } else if (tag == "branch") {
            Branch br;
            double r1, x1, r0, x0;
            if (!(ss >> br.id >> br.from >> br.to >> r1 >> x1 >> r0 >> x0 >>
                  br.charging_b >> br.tap))
                fail("bad branch record");
            br.z1 = Complex(r1, x1);
            br.z0 = Complex(r0, x0);
            net.branches.push_back(br);
        } else if (tag == "gen") {
            Generator g;
            double x1, x0g;
            if (!(ss >> g.id >> g.bus >> g.p_mw >> g.v_setpoint >> x1 >> x0g))
                fail("bad gen record");
            g.z1 = Complex(0.0, x1);
            g.z0_ground = Complex(0.0, x0g);
            net.generators.push_back(g);
        } else if (tag == "load") {
            Load l;
            if (!(ss >> l.id >> l.bus >> l.p_mw >> l.q_mvar))
                fail("bad load record");
            net.loads.push_back(l);
        } else {
            fail("unknown record '" + tag + "'");
        }
    }
    net.validate();
    return net;
}

NetworkModel read_case_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ModelError("cannot open case file: " + path);
    return read_case(in);
}

void write_case(std::ostream& out, const NetworkModel& net) {
    char buf[256];
    out << "# network case\n";
    std::snprintf(buf, sizeof(buf), "case %s %.9g\n",
                  net.name.empty() ? "unnamed" : net.name.c_str(),
                  net.base_mva);
    out << buf;
    for (const auto& b : net.buses) {
        std::snprintf(buf, sizeof(buf), "bus %d %s %.9g %.9g %.9g\n", b.id,
                      bus_type_name(b.type), b.nominal_kv, b.shunt_g, b.shunt_b);
        out << buf;
    }
    for (const auto& br : net.branches) {
        std::snprintf(buf, sizeof(buf),
                      "branch %d %d %d %.9g %.9g %.9g %.9g %.9g %.9g\n", br.id,
                      br.from, br.to, br.z1.real(), br.z1.imag(), br.z0.real(),
                      br.z0.imag(), br.charging_b, br.tap);
        out << buf;
    }
    for (const auto& g : net.generators) {
        std::snprintf(buf, sizeof(buf), "gen %d %d %.9g %.9g %.9g %.9g\n", g.id,
                      g.bus, g.p_mw, g.v_setpoint, g.z1.imag(),
                      g.z0_ground.imag());
        out << buf;
    }
    for (const auto& l : net.loads) {
        std::snprintf(buf, sizeof(buf), "load %d %d %.9g %.9g\n", l.id, l.bus,
                      l.p_mw, l.q_mvar);
        out << buf;
    }
}

void write_case_file(const std::string& path, const NetworkModel& net) {
    std::ofstream out(path);
    if (!out) throw ModelError("cannot write case file: " + path);
    write_case(out, net);
}

} // namespace subsim::grid
