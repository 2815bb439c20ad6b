#pragma once

#include <optional>
#include <string>
#include <vector>

namespace deltaspin {

struct Check {
    std::string name;
    double value = 0.0;
    std::optional<double> threshold;  // absent for informative entries
    bool pass = true;
};

struct Report {
    std::string command;
    std::string digest;
    std::vector<Check> checks;
    double seconds = 0.0;

    void add(std::string name, double value, std::optional<double> threshold);
    void note(std::string name, double value) { add(std::move(name), value, std::nullopt); }
    bool pass() const;
};

/// Plain-text table with measured wall time.
std::string render_human(const Report& report);

/// Machine document. Deterministic by construction: "seconds" is emitted as
/// 0.0 so identical inputs and seeds give byte-identical output.
std::string render_json(const Report& report);

}  // namespace deltaspin
