#pragma once

#include <string>
#include <vector>

namespace cobbdouglas::svg {

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    std::string color;
    bool markers = false;
    bool line = true;
};

struct Chart {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<Series> series;
    int width = 640;
    int height = 400;
};

std::string render(const Chart& chart);

} // namespace cobbdouglas::svg
