#include "vgp/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "vgp/errors.hpp"

namespace vgp {

std::string fmt_fixed(double v, int decimals) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    std::string s(buf);
    // Avoid "-0.0000".
    if (s[0] == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
    return s;
}

namespace {

std::string trim(std::string s) {
    auto ns = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), ns));
    s.erase(std::find_if(s.rbegin(), s.rend(), ns).base(), s.end());
    return s;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

bool iso_date(const std::string& d) {
    if (d.size() != 10 || d[4] != '-' || d[7] != '-') return false;
    for (int i : {0, 1, 2, 3, 5, 6, 8, 9})
        if (!std::isdigit(static_cast<unsigned char>(d[i]))) return false;
    const int mo = std::stoi(d.substr(5, 2)), da = std::stoi(d.substr(8, 2));
    return mo >= 1 && mo <= 12 && da >= 1 && da <= 31;
}

} // namespace

ReturnsSeries read_returns_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) fail(ErrorKind::InputError, "returns file is empty");
    if (line.size() >= 3 && static_cast<unsigned char>(line[0]) == 0xEF) line.erase(0, 3);
    auto header = split(line);
    int di = -1, ci = -1;
    for (std::size_t i = 0; i < header.size(); ++i) {
        std::string h = header[i];
        std::transform(h.begin(), h.end(), h.begin(), [](unsigned char c) { return std::tolower(c); });
        if (h == "date") di = static_cast<int>(i);
        if (h == "close") ci = static_cast<int>(i);
    }
    if (di < 0 || ci < 0) fail(ErrorKind::InputError, "header must contain date and close columns");
    ReturnsSeries r;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        auto cells = split(line);
        if (static_cast<int>(cells.size()) <= std::max(di, ci))
            fail(ErrorKind::InputError, "row " + std::to_string(row) + " has too few columns");
        const std::string& d = cells[di];
        if (!iso_date(d)) fail(ErrorKind::InputError, "row " + std::to_string(row) + ": date is not YYYY-MM-DD");
        double c = 0.0;
        try {
            std::size_t pos = 0;
            c = std::stod(cells[ci], &pos);
            if (pos != cells[ci].size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            fail(ErrorKind::InputError, "row " + std::to_string(row) + ": close is not a number");
        }
        if (!(c > 0.0) || !std::isfinite(c)) fail(ErrorKind::InputError, "row " + std::to_string(row) + ": close must be > 0");
        if (!r.dates.empty() && !(d > r.dates.back()))
            fail(ErrorKind::InputError, "row " + std::to_string(row) + ": dates must be strictly increasing");
        r.dates.push_back(d);
        r.closes.push_back(c);
    }
    if (r.closes.size() < 2) fail(ErrorKind::InputError, "need at least two prices");
    for (std::size_t i = 1; i < r.closes.size(); ++i)
        r.log_returns_pct.push_back(100.0 * std::log(r.closes[i] / r.closes[i - 1]));
    return r;
}

SampleMoments sample_moments(const std::vector<double>& x) {
    SampleMoments m;
    m.n = x.size();
    if (x.size() < 2) fail(ErrorKind::InputError, "need at least two observations");
    double s = 0.0;
    for (double v : x) s += v;
    m.mean = s / static_cast<double>(m.n);
    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double v : x) {
        const double d = v - m.mean;
        m2 += d * d;
        m3 += d * d * d;
        m4 += d * d * d * d;
    }
    const double n = static_cast<double>(m.n);
    m2 /= n;
    m3 /= n;
    m4 /= n;
    m.variance = m.n > 1 ? m2 * n / (n - 1.0) : 0.0;
    if (m2 > 0.0) {
        m.skewness = m3 / std::pow(m2, 1.5);
        m.kurtosis = m4 / (m2 * m2);
    }
    return m;
}

} // namespace vgp
