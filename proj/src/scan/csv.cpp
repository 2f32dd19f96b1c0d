#include <cstdio>
#include <fstream>
#include <sstream>

#include "fakemu/core/errors.hpp"
#include "fakemu/scan/scan.hpp"

namespace fakemu {
namespace {

void put(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    out += buf;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    return cells;
}

}  // namespace

std::string to_csv(const std::vector<ScanRecord>& records, bool with_envelope) {
    std::string out = with_envelope ? "x,F,G,E,e_norm,env_lo,env_hi\n" : "x,F,G,E,e_norm\n";
    for (const auto& r : records) {
        out += std::to_string(r.x);
        out += ',';
        out += std::to_string(r.F);
        for (double v : {r.G, r.E, r.e_norm}) {
            out += ',';
            put(out, v);
        }
        if (with_envelope) {
            for (double v : {r.env_lo, r.env_hi}) {
                out += ',';
                put(out, v);
            }
        }
        out += '\n';
    }
    return out;
}

void export_csv(const std::vector<ScanRecord>& records, const std::string& path, bool with_envelope) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw Error("io_error", "cannot open " + path + " for writing");
    file << to_csv(records, with_envelope);
    if (!file.flush()) throw Error("io_error", "write to " + path + " failed");
}

std::vector<ScanRecord> parse_csv(const std::string& text) {
    std::stringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw InvalidArgument("csv: missing header");
    const auto header = split(line);
    const bool envelope = header.size() == 7;
    if (!(header.size() == 5 || envelope) || header[0] != "x" || header[4] != "e_norm")
        throw InvalidArgument("csv: unexpected header");
    std::vector<ScanRecord> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto cells = split(line);
        if (cells.size() != header.size()) throw InvalidArgument("csv: wrong column count");
        try {
            ScanRecord r;
            r.x = std::stoll(cells[0]);
            r.F = std::stoll(cells[1]);
            r.G = std::stod(cells[2]);
            r.E = std::stod(cells[3]);
            r.e_norm = std::stod(cells[4]);
            if (envelope) {
                r.env_lo = std::stod(cells[5]);
                r.env_hi = std::stod(cells[6]);
            }
            out.push_back(r);
        } catch (const std::logic_error&) {
            throw InvalidArgument("csv: malformed number in '" + line + "'");
        }
    }
    return out;
}

}  // namespace fakemu
