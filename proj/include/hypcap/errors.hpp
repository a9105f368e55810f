#pragma once

#include <stdexcept>
#include <string>

namespace hypcap {

// Input violates a mathematical domain (radius outside [0,1), modulus >= 1, ...).
using domain_error = std::domain_error;

// A grid is too coarse to carry out the requested transform faithfully.
struct resolution_error : std::runtime_error {
    explicit resolution_error(const std::string& what) : std::runtime_error(what) {}
};

// A dispersion schedule is invalid (inward motion, colliding parts, shared rays).
struct schedule_error : std::runtime_error {
    explicit schedule_error(const std::string& what) : std::runtime_error(what) {}
};

// A transform precondition on the input set fails (e.g. required core not contained).
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hypcap
