#pragma once

#include <stdexcept>
#include <string>

namespace oddrank {

enum class errc {
    degenerate_precision, // empty or exhausted validity range
    non_invertible,       // leading coefficient is not a unit
    fractional_power,     // eta prefactor is not an integer
    zero_factor,          // bracket residue congruent to 0 mod M
    level,                // delta does not divide the level N
    pole,                 // Lambert denominator vanishes at an integer
    divergence,           // Lambert spec not truncatable
    domain,               // argument outside the documented domain
    budget,               // precision / oracle budget exceeded
    coverage,             // array window too small for the requested build
    integrity,            // internal consistency violated
    unknown_name,         // no such catalog entry / family
    parse,                // malformed expression or CLI input
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

} // namespace oddrank
