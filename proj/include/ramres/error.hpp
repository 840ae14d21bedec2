#ifndef RAMRES_ERROR_HPP
#define RAMRES_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ramres {

// Every failure mode of the library is one of these codes. Callers that
// want to recover (e.g. retry with more precision) dispatch on the code.
enum class Errc {
    descriptor_mismatch,
    not_a_unit,
    non_unit_lambda_image,
    insufficient_precision,
    fractional_exponent,
    zero_series,
    negative_exponent_present,
    non_unit_leading_coefficient,
    not_invertible,
    integral_input,
    residue_not_integral,
    trivial_residue,
    wrong_characteristic,
    search_bound_exceeded,
    not_a_field,
    linear_system_inconsistent,
    unsupported_cell_type,
    syntax_error,
    dimension_error,
    non_unit_leading_jet_coefficient,
    non_integral_index,
    internal_check,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc c, const std::string& msg)
        : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

} // namespace ramres

#endif
