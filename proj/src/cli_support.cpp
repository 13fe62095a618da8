#include "parisian/cli_support.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>

namespace parisian {

std::vector<double> GridSpec::values() const {
    std::vector<double> out;
    if (step == 0.0) throw GridParseError("grid step must be nonzero");
    if ((stop - start) * step < 0.0)
        throw GridParseError("grid step must move start towards stop");
    const int count = static_cast<int>(std::floor((stop - start) / step + 1e-9)) + 1;
    out.reserve(count);
    for (int i = 0; i < count; ++i) out.push_back(start + i * step);
    return out;
}

GridSpec parse_grid(const std::string& text) {
    auto to_double = [&](const std::string& s) {
        char* end = nullptr;
        const double v = std::strtod(s.c_str(), &end);
        if (end == s.c_str() || *end != '\0')
            throw GridParseError("malformed grid component '" + s + "'");
        return v;
    };
    const auto c1 = text.find(':');
    if (c1 == std::string::npos) {
        const double v = to_double(text);
        return {v, v, 1.0};
    }
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos)
        throw GridParseError("grid must be 'start:stop:step' or a single value: '" + text + "'");
    GridSpec g{to_double(text.substr(0, c1)), to_double(text.substr(c1 + 1, c2 - c1 - 1)),
               to_double(text.substr(c2 + 1))};
    g.values();  // validate now
    return g;
}

std::string format_number(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

std::string csv_line(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += cells[i];
    }
    out += '\n';
    return out;
}

}  // namespace parisian
