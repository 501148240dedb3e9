#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace flyq::cli {

/// Comma-separated output with LF line endings and locale-independent
/// number formatting (15 significant digits).
class CsvWriter {
public:
    using Field = std::variant<double, long long, std::string>;

    explicit CsvWriter(std::ostream& out) : out_(out) {}

    void header(const std::vector<std::string>& columns);
    void row(const std::vector<Field>& fields);

    std::size_t rows_written() const noexcept { return rows_; }

private:
    std::ostream& out_;
    std::size_t columns_ = 0;
    std::size_t rows_ = 0;
};

} // namespace flyq::cli
