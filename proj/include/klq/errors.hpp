#pragma once

#include <stdexcept>
#include <string>

namespace klq {

// Raised when a computation contradicts one of the theorems the toolkit
// verifies (e.g. a ladder search exhausts in simply-laced type). These
// must surface prominently: they mean a correctness bug, not bad input.
struct TheoremViolation : std::runtime_error {
    explicit TheoremViolation(const std::string& what) : std::runtime_error(what) {}
};

} // namespace klq
