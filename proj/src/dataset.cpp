#include "cobbdouglas/dataset.hpp"

#include "cobbdouglas/errors.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string_view>

namespace cobbdouglas {

SeriesTable::SeriesTable(std::vector<Observation> observations) : observations_(std::move(observations)) {
    if (observations_.size() < kMinRows) {
        throw InputError("fewer than 3 rows (got " + std::to_string(observations_.size()) + ")");
    }
    for (std::size_t i = 0; i < observations_.size(); ++i) {
        const auto& o = observations_[i];
        if (!std::isfinite(o.ln_output) || !std::isfinite(o.ln_capital) || !std::isfinite(o.ln_labor)) {
            throw InputError("non-finite value in year " + std::to_string(o.year));
        }
        if (i > 0 && o.year != observations_[i - 1].year + 1) {
            throw InputError("non-consecutive years: " + std::to_string(observations_[i - 1].year) + " followed by " +
                             std::to_string(o.year));
        }
    }
}

std::vector<double> SeriesTable::ln_output() const {
    std::vector<double> v;
    v.reserve(size());
    for (const auto& o : observations_) v.push_back(o.ln_output);
    return v;
}

std::vector<double> SeriesTable::ln_capital() const {
    std::vector<double> v;
    v.reserve(size());
    for (const auto& o : observations_) v.push_back(o.ln_capital);
    return v;
}

std::vector<double> SeriesTable::ln_labor() const {
    std::vector<double> v;
    v.reserve(size());
    for (const auto& o : observations_) v.push_back(o.ln_labor);
    return v;
}

SeriesTable embedded_table1() {
    // year, output Y, capital K, labour L
    return SeriesTable({
        {1899, 4.605170, 4.605170, 4.605170},
        {1900, 4.615121, 4.672829, 4.653960},
        {1901, 4.718499, 4.736198, 4.700480},
        {1902, 4.804021, 4.804021, 4.770685},
        {1903, 4.820282, 4.875197, 4.812184},
        {1904, 4.804021, 4.927254, 4.753590},
        {1905, 4.962845, 5.003946, 4.828314},
        {1906, 5.023881, 5.093750, 4.890349},
        {1907, 5.017280, 5.170484, 4.927254},
        {1908, 4.836282, 5.220356, 4.795791},
        {1909, 5.043425, 5.288267, 4.941642},
        {1910, 5.068904, 5.337538, 4.969813},
        {1911, 5.030438, 5.375278, 4.976734},
        {1912, 5.176150, 5.420535, 5.023881},
        {1913, 5.214936, 5.463832, 5.036953},
        {1914, 5.129899, 5.497168, 5.003946},
        {1915, 5.241747, 5.583469, 5.036953},
        {1916, 5.416100, 5.697093, 5.204007},
        {1917, 5.424950, 5.814131, 5.278115},
        {1918, 5.407172, 5.902633, 5.298317},
        {1919, 5.384495, 5.958425, 5.262690},
        {1920, 5.442418, 6.008813, 5.262690},
        {1921, 5.187386, 6.033086, 4.990433},
        {1922, 5.480639, 6.066108, 5.081404},
    });
}

namespace {

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    const auto begin = s.find_first_not_of(ws);
    if (begin == std::string_view::npos) return {};
    const auto end = s.find_last_not_of(ws);
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        fields.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

template <typename T>
bool parse_number(std::string_view field, T& out) {
    if (field.empty()) return false;
    if (field.front() == '+') field.remove_prefix(1);
    const auto* end = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(field.data(), end, out);
    return ec == std::errc{} && ptr == end;
}

[[noreturn]] void fail_line(std::size_t line_no, const std::string& what) {
    throw InputError("line " + std::to_string(line_no) + ": " + what);
}

} // namespace

SeriesTable parse_csv(std::istream& in, bool values_are_logs) {
    std::vector<Observation> rows;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;

    while (std::getline(in, line)) {
        ++line_no;
        auto content = trim(line);
        if (line_no == 1 && content.starts_with("\xEF\xBB\xBF")) content.remove_prefix(3);
        if (content.empty() || content.front() == '#') continue;

        const auto fields = split_fields(content);
        if (!header_seen) {
            if (fields.size() != 4 || fields[0] != "year" || fields[1] != "output" || fields[2] != "capital" ||
                fields[3] != "labor") {
                fail_line(line_no, "expected header 'year,output,capital,labor'");
            }
            header_seen = true;
            continue;
        }
        if (fields.size() != 4) {
            fail_line(line_no, "malformed row: expected 4 fields, got " + std::to_string(fields.size()));
        }

        Observation obs;
        if (!parse_number(fields[0], obs.year)) fail_line(line_no, "malformed row: bad year '" + std::string(fields[0]) + "'");
        double values[3];
        for (int i = 0; i < 3; ++i) {
            if (!parse_number(fields[i + 1], values[i]) || !std::isfinite(values[i])) {
                fail_line(line_no, "malformed row: bad number '" + std::string(fields[i + 1]) + "'");
            }
            if (!values_are_logs) {
                if (values[i] <= 0.0) fail_line(line_no, "non-positive raw value " + std::string(fields[i + 1]));
                values[i] = std::log(values[i]);
            }
        }
        obs.ln_output = values[0];
        obs.ln_capital = values[1];
        obs.ln_labor = values[2];

        if (!rows.empty() && obs.year != rows.back().year + 1) {
            fail_line(line_no, "non-consecutive years: " + std::to_string(rows.back().year) + " followed by " +
                                   std::to_string(obs.year));
        }
        rows.push_back(obs);
    }
    if (!header_seen) throw InputError("empty input: missing header 'year,output,capital,labor'");
    return SeriesTable(std::move(rows));
}

SeriesTable parse_csv(const std::string& text, bool values_are_logs) {
    std::istringstream in(text);
    return parse_csv(in, values_are_logs);
}

void write_csv(std::ostream& out, const SeriesTable& table) {
    out << "year,output,capital,labor\n";
    char buf[128];
    for (const auto& o : table.observations()) {
        std::snprintf(buf, sizeof buf, "%d,%.6f,%.6f,%.6f\n", o.year, o.ln_output, o.ln_capital, o.ln_labor);
        out << buf;
    }
}

std::vector<double> time_index(const SeriesTable& table, TimeOrigin origin) {
    const int shift = origin == TimeOrigin::One ? 1 : 0;
    std::vector<double> t;
    t.reserve(table.size());
    for (const auto& o : table.observations()) t.push_back(static_cast<double>(o.year - table.first_year() + shift));
    return t;
}

const char* to_string(TimeOrigin origin) {
    return origin == TimeOrigin::One ? "one" : "zero";
}

} // namespace cobbdouglas
