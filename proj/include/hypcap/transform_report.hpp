#pragma once

#include <map>
#include <string>

namespace hypcap {

// Audit record emitted by every set transformation.  Preserved quantities are
// recomputed on both sides, never copied through.
struct TransformReport {
    std::string transform;
    std::map<std::string, double> parameters;
    struct BeforeAfter {
        double before = 0.0;
        double after = 0.0;
    };
    std::map<std::string, BeforeAfter> preserved;

    void record(const std::string& what, double before, double after) {
        preserved[what] = {before, after};
    }
};

} // namespace hypcap
