#ifndef LERCH_ERROR_HPP
#define LERCH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lerch
{

enum class errc {
    argument_excluded,
    pole_at_one,
    outside_series_region,
    convergence_failure,
    pole_on_path,
    ill_conditioned,
    branch_config_invalid,
    invalid_params
};

inline const char *to_string(errc code)
{
    switch (code) {
        case errc::argument_excluded:
            return "ArgumentExcluded";
        case errc::pole_at_one:
            return "PoleAtOne";
        case errc::outside_series_region:
            return "OutsideSeriesRegion";
        case errc::convergence_failure:
            return "ConvergenceFailure";
        case errc::pole_on_path:
            return "PoleOnPath";
        case errc::ill_conditioned:
            return "IllConditioned";
        case errc::branch_config_invalid:
            return "BranchConfigInvalid";
        case errc::invalid_params:
            return "InvalidParams";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class error : public std::runtime_error
{
public:
    error(errc code, const std::string &what) : std::runtime_error(what), m_code(code) {}

    errc code() const noexcept
    {
        return m_code;
    }

private:
    errc m_code;
};

} // namespace lerch

#endif
