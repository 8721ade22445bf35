#include "ctxkit/report.hpp"

#include <cstdio>

#include "ctxkit/common.hpp"

namespace ctxkit {

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    std::string s = buf;
    if (s == "-0") s = "0";
    return s;
}

json make_document(const std::string& command) {
    json doc;
    doc["schema"] = 1;
    doc["version"] = kVersion;
    doc["command"] = command;
    return doc;
}

json witness_json(const WitnessReport& report) {
    json j;
    j["name"] = report.name;
    j["value"] = format_number(report.evaluated_value);
    j["classical_bound"] = format_number(report.classical_bound);
    j["quantum_reference"] = format_number(report.quantum_reference);
    j["violated"] = report.violated;
    j["margin"] = format_number(report.margin);
    return j;
}

std::string dump_document(const json& doc) { return doc.dump(2) + "\n"; }

} // namespace ctxkit
