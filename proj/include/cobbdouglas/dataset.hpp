#pragma once

#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace cobbdouglas {

/// One year of the series, all three values on the natural-log scale.
struct Observation {
    int year = 0;
    double ln_output = 0.0;
    double ln_capital = 0.0;
    double ln_labor = 0.0;

    bool operator==(const Observation&) const = default;
};

enum class TimeOrigin { Zero, One };

/// Consecutive annual observations. Construction validates: at least three
/// rows, years increasing by exactly one, all values finite.
class SeriesTable {
public:
    static constexpr std::size_t kMinRows = 3;

    explicit SeriesTable(std::vector<Observation> observations);

    std::span<const Observation> observations() const { return observations_; }
    std::size_t size() const { return observations_.size(); }
    int first_year() const { return observations_.front().year; }
    const Observation& operator[](std::size_t i) const { return observations_[i]; }

    std::vector<double> ln_output() const;
    std::vector<double> ln_capital() const;
    std::vector<double> ln_labor() const;

    bool operator==(const SeriesTable&) const = default;

private:
    std::vector<Observation> observations_;
};

/// The 1899-1922 US manufacturing series (log index numbers, base 1899 = 100),
/// stored as the printed 6-decimal values.
SeriesTable embedded_table1();

/// Reads `year,output,capital,labor` CSV. Lines starting with '#' and blank
/// lines are skipped. When `values_are_logs` is false the natural log of each
/// value is taken, which requires strictly positive values.
/// Throws InputError with the offending line number.
SeriesTable parse_csv(std::istream& in, bool values_are_logs);
SeriesTable parse_csv(const std::string& text, bool values_are_logs);

/// Writes the log values back out in the same CSV layout (6 decimals).
void write_csv(std::ostream& out, const SeriesTable& table);

/// t_j = year_j - first_year (+1 for TimeOrigin::One).
std::vector<double> time_index(const SeriesTable& table, TimeOrigin origin = TimeOrigin::Zero);

const char* to_string(TimeOrigin origin);

} // namespace cobbdouglas
