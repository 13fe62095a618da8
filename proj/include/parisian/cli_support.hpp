#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace parisian {

// "start:stop:step" or a single value; step must move start towards stop.
struct GridSpec {
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;

    std::vector<double> values() const;
};

class GridParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

GridSpec parse_grid(const std::string& text);

// locale-independent, 12 significant digits
std::string format_number(double v);

std::string csv_line(const std::vector<std::string>& cells);

}  // namespace parisian
