#include "report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace deltaspin {

void Report::add(std::string name, double value, std::optional<double> threshold) {
    Check c;
    c.name = std::move(name);
    c.value = value;
    c.threshold = threshold;
    c.pass = !threshold || value <= *threshold;
    checks.push_back(std::move(c));
}

bool Report::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string render_human(const Report& report) {
    std::ostringstream out;
    out << "command: " << report.command << "\n";
    out << "digest:  " << report.digest << "\n";
    out << std::left << std::setw(36) << "check" << std::setw(16) << "value" << std::setw(16)
        << "threshold" << "result\n";
    for (const auto& c : report.checks) {
        out << std::setw(36) << c.name;
        std::ostringstream val;
        val << std::setprecision(6) << std::scientific << c.value;
        out << std::setw(16) << val.str();
        if (c.threshold) {
            std::ostringstream thr;
            thr << std::setprecision(2) << std::scientific << *c.threshold;
            out << std::setw(16) << thr.str() << (c.pass ? "pass" : "FAIL") << "\n";
        } else {
            out << std::setw(16) << "-" << "info\n";
        }
    }
    out << "overall: " << (report.pass() ? "pass" : "FAIL") << "  (" << std::setprecision(3)
        << std::fixed << report.seconds << " s)\n";
    return out.str();
}

std::string render_json(const Report& report) {
    nlohmann::json doc;
    doc["command"] = report.command;
    doc["digest"] = report.digest;
    doc["checks"] = nlohmann::json::array();
    for (const auto& c : report.checks) {
        nlohmann::json jc;
        jc["name"] = c.name;
        jc["value"] = c.value;
        if (c.threshold)
            jc["threshold"] = *c.threshold;
        else
            jc["threshold"] = nullptr;
        jc["pass"] = c.pass;
        doc["checks"].push_back(jc);
    }
    doc["pass"] = report.pass();
    doc["seconds"] = 0.0;
    return doc.dump(2) + "\n";
}

}  // namespace deltaspin
