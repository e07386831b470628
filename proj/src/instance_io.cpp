#include "itp/instance_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "itp/errors.hpp"

namespace itp {

namespace {

using nlohmann::ordered_json;

void throw_if_invalid(const IntervalTpInstance& inst) {
    auto report = validate(inst);
    if (!report.empty())
        throw ValidationError(report.front().field + ": " + report.front().reason);
}

Value get_int(const ordered_json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw ParseError(where + ": expected an integer");
    return j.get<Value>();
}

std::vector<Interval> zip_intervals(const ordered_json& lo, const ordered_json& hi,
                                    const std::string& field) {
    if (!lo.is_array() || !hi.is_array())
        throw ParseError(field + "_lo/" + field + "_hi: expected arrays");
    if (lo.size() != hi.size())
        throw ValidationError(field + ": dimension mismatch between _lo and _hi arrays");
    std::vector<Interval> out(lo.size());
    for (std::size_t k = 0; k < lo.size(); ++k)
        out[k] = {get_int(lo[k], field + "_lo[" + std::to_string(k) + "]"),
                  get_int(hi[k], field + "_hi[" + std::to_string(k) + "]")};
    return out;
}

IntervalTpInstance read_json(std::istream& in) {
    ordered_json j;
    try {
        j = ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    for (const char* field : {"m", "n", "cost_lo", "cost_hi", "supply_lo", "supply_hi",
                              "demand_lo", "demand_hi"})
        if (!j.contains(field))
            throw ParseError(std::string("missing field: ") + field);

    IntervalTpInstance inst;
    inst.m = static_cast<int>(get_int(j["m"], "m"));
    inst.n = static_cast<int>(get_int(j["n"], "n"));
    inst.cost = zip_intervals(j["cost_lo"], j["cost_hi"], "cost");
    inst.supply = zip_intervals(j["supply_lo"], j["supply_hi"], "supply");
    inst.demand = zip_intervals(j["demand_lo"], j["demand_hi"], "demand");
    if (j.contains("name")) {
        if (!j["name"].is_string())
            throw ParseError("name: expected a string");
        inst.name = j["name"].get<std::string>();
    }
    throw_if_invalid(inst);
    return inst;
}

void write_json(const IntervalTpInstance& inst, std::ostream& out) {
    ordered_json j;
    if (!inst.name.empty())
        j["name"] = inst.name;
    j["m"] = inst.m;
    j["n"] = inst.n;
    auto split = [](const std::vector<Interval>& v) {
        std::pair<std::vector<Value>, std::vector<Value>> p;
        for (const auto& iv : v) {
            p.first.push_back(iv.lo);
            p.second.push_back(iv.hi);
        }
        return p;
    };
    auto [clo, chi] = split(inst.cost);
    auto [slo, shi] = split(inst.supply);
    auto [dlo, dhi] = split(inst.demand);
    j["cost_lo"] = clo;
    j["cost_hi"] = chi;
    j["supply_lo"] = slo;
    j["supply_hi"] = shi;
    j["demand_lo"] = dlo;
    j["demand_hi"] = dhi;
    out << j.dump(2) << "\n";
}

// ---------------------------------------------------------------- flat csv

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string tok;
    for (char c : line) {
        if (c == ',') {
            out.push_back(tok);
            tok.clear();
        } else if (c != '\r') {
            tok.push_back(c);
        }
    }
    out.push_back(tok);
    return out;
}

Value parse_value(const std::string& tok, int line_no, const char* what) {
    try {
        std::size_t pos = 0;
        Value v = std::stoll(tok, &pos);
        if (pos != tok.size())
            throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": bad " + what + " '" + tok + "'");
    }
}

IntervalTpInstance read_csv(std::istream& in) {
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    std::string name;
    std::map<int, Interval> supply, demand;
    std::map<std::pair<int, int>, Interval> cost;

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r")
            continue;
        if (line[0] == '#') {
            const std::string prefix = "# name: ";
            if (line.rfind(prefix, 0) == 0)
                name = line.substr(prefix.size());
            continue;
        }
        auto tok = split_csv_line(line);
        if (!header_seen) {
            if (tok != std::vector<std::string>{"kind", "index1", "index2", "lo", "hi"})
                throw ParseError("line " + std::to_string(line_no) +
                                 ": expected header 'kind,index1,index2,lo,hi'");
            header_seen = true;
            continue;
        }
        if (tok.size() != 5)
            throw ParseError("line " + std::to_string(line_no) + ": expected 5 fields, got " +
                             std::to_string(tok.size()));
        const std::string& kind = tok[0];
        Value lo = parse_value(tok[3], line_no, "lo");
        Value hi = parse_value(tok[4], line_no, "hi");
        if (kind == "supply" || kind == "demand") {
            int idx = static_cast<int>(parse_value(tok[1], line_no, "index1"));
            auto& dst = kind == "supply" ? supply : demand;
            if (!dst.emplace(idx, Interval{lo, hi}).second)
                throw ParseError("line " + std::to_string(line_no) + ": duplicate " + kind +
                                 " index " + std::to_string(idx));
        } else if (kind == "cost") {
            int i = static_cast<int>(parse_value(tok[1], line_no, "index1"));
            int j = static_cast<int>(parse_value(tok[2], line_no, "index2"));
            if (!cost.emplace(std::make_pair(i, j), Interval{lo, hi}).second)
                throw ParseError("line " + std::to_string(line_no) + ": duplicate cost cell (" +
                                 std::to_string(i) + "," + std::to_string(j) + ")");
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": unknown kind '" + kind + "'");
        }
    }
    if (!header_seen)
        throw ParseError("missing header row 'kind,index1,index2,lo,hi'");
    if (supply.empty())
        throw ParseError("missing field: supply rows");
    if (demand.empty())
        throw ParseError("missing field: demand rows");
    if (cost.empty())
        throw ParseError("missing field: cost rows");

    IntervalTpInstance inst;
    inst.name = name;
    inst.m = supply.rbegin()->first;
    inst.n = demand.rbegin()->first;
    // Indices are 1-based and must be gap-free.
    inst.supply.resize(inst.m);
    for (int i = 1; i <= inst.m; ++i) {
        auto it = supply.find(i);
        if (it == supply.end())
            throw ParseError("missing supply index " + std::to_string(i));
        inst.supply[i - 1] = it->second;
    }
    inst.demand.resize(inst.n);
    for (int j = 1; j <= inst.n; ++j) {
        auto it = demand.find(j);
        if (it == demand.end())
            throw ParseError("missing demand index " + std::to_string(j));
        inst.demand[j - 1] = it->second;
    }
    inst.cost.resize(static_cast<std::size_t>(inst.m) * inst.n);
    for (const auto& [ij, iv] : cost)
        if (ij.first < 1 || ij.first > inst.m || ij.second < 1 || ij.second > inst.n)
            throw ValidationError("cost: dimension mismatch at cell (" + std::to_string(ij.first) +
                                  "," + std::to_string(ij.second) + ")");
    for (int i = 1; i <= inst.m; ++i)
        for (int j = 1; j <= inst.n; ++j) {
            auto it = cost.find({i, j});
            if (it == cost.end())
                throw ParseError("missing cost cell (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
            inst.cost_at(i - 1, j - 1) = it->second;
        }
    throw_if_invalid(inst);
    return inst;
}

void write_csv(const IntervalTpInstance& inst, std::ostream& out) {
    if (!inst.name.empty())
        out << "# name: " << inst.name << "\n";
    out << "kind,index1,index2,lo,hi\n";
    for (int i = 0; i < inst.m; ++i)
        out << "supply," << i + 1 << ",," << inst.supply[i].lo << "," << inst.supply[i].hi << "\n";
    for (int j = 0; j < inst.n; ++j)
        out << "demand," << j + 1 << ",," << inst.demand[j].lo << "," << inst.demand[j].hi << "\n";
    for (int i = 0; i < inst.m; ++i)
        for (int j = 0; j < inst.n; ++j)
            out << "cost," << i + 1 << "," << j + 1 << "," << inst.cost_at(i, j).lo << ","
                << inst.cost_at(i, j).hi << "\n";
}

} // namespace

FileFormat format_from_path(const std::string& path) {
    if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0)
        return FileFormat::FlatCsv;
    return FileFormat::CanonicalJson;
}

IntervalTpInstance read_instance(std::istream& in, FileFormat fmt) {
    return fmt == FileFormat::CanonicalJson ? read_json(in) : read_csv(in);
}

IntervalTpInstance read_instance_file(const std::string& path) {
    return read_instance_file(path, format_from_path(path));
}

IntervalTpInstance read_instance_file(const std::string& path, FileFormat fmt) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open file: " + path);
    return read_instance(in, fmt);
}

void write_instance(const IntervalTpInstance& inst, std::ostream& out, FileFormat fmt) {
    if (fmt == FileFormat::CanonicalJson)
        write_json(inst, out);
    else
        write_csv(inst, out);
}

void write_instance_file(const IntervalTpInstance& inst, const std::string& path) {
    write_instance_file(inst, path, format_from_path(path));
}

void write_instance_file(const IntervalTpInstance& inst, const std::string& path, FileFormat fmt) {
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write file: " + path);
    write_instance(inst, out, fmt);
}

std::string instance_to_string(const IntervalTpInstance& inst, FileFormat fmt) {
    std::ostringstream os;
    write_instance(inst, os, fmt);
    return os.str();
}

IntervalTpInstance instance_from_string(const std::string& text, FileFormat fmt) {
    std::istringstream is(text);
    return read_instance(is, fmt);
}

} // namespace itp
