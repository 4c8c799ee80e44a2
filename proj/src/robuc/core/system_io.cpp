// SPDX-License-Identifier: Apache-2.0
#include "robuc/core/system_io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace robuc::core {

namespace {

struct Section {
    std::string kind, id;
    int line = 0;
    std::map<std::string, std::string> entries;     // key -> raw value text
    std::vector<std::string> order;                 // keys in file order
};

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

[[noreturn]] void fail(const std::string& src, int line, const std::string& msg) {
    throw ParseError(src + ":" + std::to_string(line) + ": " + msg);
}

class SectionReader {
public:
    SectionReader(const Section& sec, const std::string& src) : sec_(sec), src_(src) {}

    bool has(const std::string& key) const { return sec_.entries.count(key) > 0; }

    std::string raw(const std::string& key) {
        auto it = sec_.entries.find(key);
        if (it == sec_.entries.end())
            fail(src_, sec_.line, sec_.kind + " '" + sec_.id + "': missing key '" + key + "'");
        seen_.insert(key);
        return it->second;
    }

    double number(const std::string& key) {
        const std::string text = raw(key);
        try {
            std::size_t pos = 0;
            double val = std::stod(text, &pos);
            if (trim(text.substr(pos)).empty()) return val;
        } catch (const std::exception&) {
        }
        fail(src_, sec_.line, "key '" + key + "': expected a number, got '" + text + "'");
    }

    int integer(const std::string& key) {
        const double val = number(key);
        const int i = static_cast<int>(val);
        if (static_cast<double>(i) != val)
            fail(src_, sec_.line, "key '" + key + "': expected an integer");
        return i;
    }

    bool boolean(const std::string& key) {
        const std::string text = raw(key);
        if (text == "true" || text == "1") return true;
        if (text == "false" || text == "0") return false;
        fail(src_, sec_.line, "key '" + key + "': expected true/false");
    }

    Eigen::VectorXd vector(const std::string& key, int expected) {
        std::istringstream iss(raw(key));
        std::vector<double> vals;
        double x;
        while (iss >> x) vals.push_back(x);
        if (!iss.eof())
            fail(src_, sec_.line, "key '" + key + "': non-numeric token in vector");
        if (static_cast<int>(vals.size()) != expected)
            fail(src_, sec_.line, "key '" + key + "': expected " + std::to_string(expected) +
                                      " values, got " + std::to_string(vals.size()));
        return Eigen::Map<Eigen::VectorXd>(vals.data(), vals.size());
    }

    /// Per-period field: a single scalar is broadcast to length T.
    Profile profile(const std::string& key, int T) {
        std::istringstream iss(raw(key));
        std::vector<double> vals;
        double x;
        while (iss >> x) vals.push_back(x);
        if (!iss.eof())
            fail(src_, sec_.line, "key '" + key + "': non-numeric token in profile");
        if (vals.size() == 1) return Profile::Constant(T, vals[0]);
        if (static_cast<int>(vals.size()) != T)
            fail(src_, sec_.line, "key '" + key + "': expected 1 or " + std::to_string(T) +
                                      " values, got " + std::to_string(vals.size()));
        return Eigen::Map<Profile>(vals.data(), vals.size());
    }

    void reject_unknown() const {
        for (const std::string& key : sec_.order)
            if (!seen_.count(key))
                fail(src_, sec_.line,
                     sec_.kind + " '" + sec_.id + "': unknown key '" + key + "'");
    }

private:
    const Section& sec_;
    std::string src_;
    std::set<std::string> seen_;
};

std::vector<Section> split_sections(std::istream& in, const std::string& src) {
    std::vector<Section> sections;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (trim(line).empty()) continue;
        const bool indented = line[0] == ' ' || line[0] == '\t';
        const std::string body = trim(line);
        if (!indented && body.find('=') == std::string::npos) {
            std::istringstream iss(body);
            Section sec;
            sec.line = lineno;
            iss >> sec.kind >> sec.id;
            std::string extra;
            if (iss >> extra) fail(src, lineno, "trailing tokens after section header");
            sections.push_back(std::move(sec));
            continue;
        }
        if (sections.empty()) fail(src, lineno, "key before any section header");
        const auto eq = body.find('=');
        if (eq == std::string::npos) fail(src, lineno, "expected 'key = value'");
        const std::string key = trim(body.substr(0, eq));
        const std::string val = trim(body.substr(eq + 1));
        Section& sec = sections.back();
        if (sec.entries.count(key))
            fail(src, lineno, "duplicate key '" + key + "' in section '" + sec.kind + "'");
        sec.entries[key] = val;
        sec.order.push_back(key);
    }
    return sections;
}

}  // namespace

PowerSystem read_system(std::istream& in, const std::string& src) {
    std::vector<Section> sections = split_sections(in, src);

    PowerSystem sys;
    // The system header must come first so per-period fields know T.
    if (sections.empty() || sections[0].kind != "system")
        throw ParseError(src + ": file must start with a 'system' section");
    {
        SectionReader r(sections[0], src);
        sys.horizon = r.integer("horizon");
        sys.period_hours = r.has("period_hours") ? r.number("period_hours") : 1.0;
        r.reject_unknown();
    }
    if (sys.horizon <= 0)
        throw ParseError(src + ": horizon must be a positive integer");
    const int T = sys.horizon;

    std::vector<Eigen::VectorXd> demand_rows;
    std::vector<const Section*> line_secs;
    for (std::size_t k = 1; k < sections.size(); ++k) {
        const Section& sec = sections[k];
        SectionReader r(sec, src);
        if (sec.kind == "generator") {
            Generator g;
            g.id = sec.id;
            g.node = r.raw("node");
            g.variable_cost = r.number("variable_cost");
            g.no_load_cost = r.number("no_load_cost");
            g.startup_cost = r.number("startup_cost");
            g.shutdown_cost = r.number("shutdown_cost");
            g.p_min = r.profile("p_min", T);
            g.p_max = r.profile("p_max", T);
            g.ramp_up = r.profile("ramp_up", T);
            g.ramp_down = r.profile("ramp_down", T);
            g.startup_ramp = r.profile("startup_ramp", T);
            g.shutdown_ramp = r.profile("shutdown_ramp", T);
            g.min_up = r.integer("min_up");
            g.min_down = r.integer("min_down");
            g.initial_on = r.boolean("initial_on");
            g.initial_output = r.number("initial_output");
            g.initial_hours_in_state = r.integer("initial_hours_in_state");
            sys.generators.push_back(std::move(g));
        } else if (sec.kind == "renewable") {
            RenewableUnit u;
            u.id = sec.id;
            u.node = r.raw("node");
            u.kind = r.raw("kind");
            if (u.kind != "wind" && u.kind != "solar")
                fail(src, sec.line, "renewable kind must be wind or solar");
            u.p_max_profile = r.profile("p_max_profile", T);
            sys.renewables.push_back(std::move(u));
        } else if (sec.kind == "storage") {
            StorageUnit s;
            s.id = sec.id;
            s.node = r.raw("node");
            s.discharge_min = r.profile("discharge_min", T);
            s.discharge_max = r.profile("discharge_max", T);
            s.charge_min = r.profile("charge_min", T);
            s.charge_max = r.profile("charge_max", T);
            s.energy_capacity = r.number("energy_capacity");
            s.initial_level = r.number("initial_level");
            s.efficiency = r.number("efficiency");
            sys.storages.push_back(std::move(s));
        } else if (sec.kind == "line") {
            // Shift-factor rows are sized by the unit counts, so lines are
            // resolved after every other section has been read.
            line_secs.push_back(&sec);
            continue;
        } else if (sec.kind == "demand") {
            sys.demand_nodes.push_back(sec.id);
            demand_rows.push_back(r.profile("values", T));
        } else {
            fail(src, sec.line, "unknown section kind '" + sec.kind + "'");
        }
        r.reject_unknown();
    }

    sys.demand.resize(static_cast<int>(demand_rows.size()), T);
    for (std::size_t j = 0; j < demand_rows.size(); ++j)
        sys.demand.row(static_cast<int>(j)) = demand_rows[j].transpose();

    for (const Section* secp : line_secs) {
        SectionReader r(*secp, src);
        TransmissionLine l;
        l.id = secp->id;
        l.flow_limit = r.number("flow_limit");
        l.alpha_demand = r.vector("alpha_demand", static_cast<int>(sys.demand_nodes.size()));
        l.alpha_generator = r.vector("alpha_generator", sys.num_gen());
        l.alpha_renewable = r.vector("alpha_renewable", sys.num_ren());
        l.alpha_storage = r.vector("alpha_storage", sys.num_sto());
        r.reject_unknown();
        sys.lines.push_back(std::move(l));
    }

    try {
        sys.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(src + ": " + e.what());
    }
    return sys;
}

PowerSystem read_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open system file: " + path);
    return read_system(in, path);
}

namespace {

void put_profile(std::ostream& out, const std::string& key, const Profile& p) {
    out << "  " << key << " =";
    const bool constant = (p.array() == p[0]).all();
    const int n = constant ? 1 : static_cast<int>(p.size());
    char buf[32];
    for (int t = 0; t < n; ++t) {
        std::snprintf(buf, sizeof(buf), " %.12g", p[t]);
        out << buf;
    }
    out << "\n";
}

void put_vector(std::ostream& out, const std::string& key, const Eigen::VectorXd& v) {
    out << "  " << key << " =";
    char buf[32];
    for (int j = 0; j < v.size(); ++j) {
        std::snprintf(buf, sizeof(buf), " %.12g", v[j]);
        out << buf;
    }
    out << "\n";
}

}  // namespace

void write_system(std::ostream& out, const PowerSystem& sys) {
    out << "system\n"
        << "  horizon = " << sys.horizon << "\n"
        << "  period_hours = " << sys.period_hours << "\n";
    for (const Generator& g : sys.generators) {
        out << "\ngenerator " << g.id << "\n"
            << "  node = " << g.node << "\n"
            << "  variable_cost = " << g.variable_cost << "\n"
            << "  no_load_cost = " << g.no_load_cost << "\n"
            << "  startup_cost = " << g.startup_cost << "\n"
            << "  shutdown_cost = " << g.shutdown_cost << "\n";
        put_profile(out, "p_min", g.p_min);
        put_profile(out, "p_max", g.p_max);
        put_profile(out, "ramp_up", g.ramp_up);
        put_profile(out, "ramp_down", g.ramp_down);
        put_profile(out, "startup_ramp", g.startup_ramp);
        put_profile(out, "shutdown_ramp", g.shutdown_ramp);
        out << "  min_up = " << g.min_up << "\n"
            << "  min_down = " << g.min_down << "\n"
            << "  initial_on = " << (g.initial_on ? "true" : "false") << "\n"
            << "  initial_output = " << g.initial_output << "\n"
            << "  initial_hours_in_state = " << g.initial_hours_in_state << "\n";
    }
    for (const RenewableUnit& u : sys.renewables) {
        out << "\nrenewable " << u.id << "\n"
            << "  node = " << u.node << "\n"
            << "  kind = " << u.kind << "\n";
        put_profile(out, "p_max_profile", u.p_max_profile);
    }
    for (const StorageUnit& s : sys.storages) {
        out << "\nstorage " << s.id << "\n"
            << "  node = " << s.node << "\n";
        put_profile(out, "discharge_min", s.discharge_min);
        put_profile(out, "discharge_max", s.discharge_max);
        put_profile(out, "charge_min", s.charge_min);
        put_profile(out, "charge_max", s.charge_max);
        out << "  energy_capacity = " << s.energy_capacity << "\n"
            << "  initial_level = " << s.initial_level << "\n"
            << "  efficiency = " << s.efficiency << "\n";
    }
    for (const TransmissionLine& l : sys.lines) {
        out << "\nline " << l.id << "\n"
            << "  flow_limit = " << l.flow_limit << "\n";
        put_vector(out, "alpha_demand", l.alpha_demand);
        put_vector(out, "alpha_generator", l.alpha_generator);
        put_vector(out, "alpha_renewable", l.alpha_renewable);
        put_vector(out, "alpha_storage", l.alpha_storage);
    }
    for (std::size_t j = 0; j < sys.demand_nodes.size(); ++j) {
        out << "\ndemand " << sys.demand_nodes[j] << "\n";
        put_profile(out, "values", sys.demand.row(static_cast<int>(j)).transpose());
    }
}

void write_system_file(const std::string& path, const PowerSystem& sys) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open output file: " + path);
    write_system(out, sys);
}

}  // namespace robuc::core
