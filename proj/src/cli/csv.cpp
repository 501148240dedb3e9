#include "flyq/cli/csv.hpp"

#include "flyq/format.hpp"

#include <stdexcept>

namespace flyq::cli {

void CsvWriter::header(const std::vector<std::string>& columns) {
    columns_ = columns.size();
    for (std::size_t i = 0; i < columns.size(); ++i) {
        out_ << (i ? "," : "") << columns[i];
    }
    out_ << '\n';
}

void CsvWriter::row(const std::vector<Field>& fields) {
    if (columns_ != 0 && fields.size() != columns_) {
        throw std::logic_error("CSV row width does not match header");
    }
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) {
            out_ << ',';
        }
        std::visit(
            [this](const auto& v) {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, double>) {
                    out_ << format_double(v);
                } else if constexpr (std::is_same_v<T, long long>) {
                    out_ << std::to_string(v);
                } else {
                    out_ << v;
                }
            },
            fields[i]);
    }
    out_ << '\n';
    ++rows_;
}

} // namespace flyq::cli
