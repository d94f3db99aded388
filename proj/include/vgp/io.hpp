#pragma once

#include <istream>
#include <string>
#include <vector>

namespace vgp {

// Fixed-point text with `decimals` digits; exact binary ties round to even.
std::string fmt_fixed(double v, int decimals = 4);

struct ReturnsSeries {
    std::vector<std::string> dates;
    std::vector<double> closes;
    std::vector<double> log_returns_pct;  // 100 * diff(log close)
};

// CSV with a header containing `date` and `close` columns (any order, extra columns ignored).
ReturnsSeries read_returns_csv(std::istream& in);

struct SampleMoments {
    std::size_t n = 0;
    double mean = 0.0;
    double variance = 0.0;
    double skewness = 0.0;
    double kurtosis = 0.0;  // full (not excess)
};

SampleMoments sample_moments(const std::vector<double>& x);

} // namespace vgp
