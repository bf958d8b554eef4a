#pragma once

#include <stdexcept>
#include <string>

namespace skew {

enum class errc {
    invalid_input,
    non_integral_exponent,
    weight_outside_interval,
    divisibility_failure,
    division_near_zero,
    empty_band,
    empty_region,
    branch_domain,
    no_contraction,
    no_convergence,
    guard_violation,
    inclusion_violation,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

}  // namespace skew
