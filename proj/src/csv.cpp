#include "mimo/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "mimo/errors.hpp"

namespace mimo {

CsvWriter::CsvWriter(std::initializer_list<std::string_view> header)
    : columns_(header.size()) {
    if (columns_ == 0) throw std::invalid_argument("CSV needs at least one column");
    for (const std::string_view h : header) cell(h);
    end_row();
}

void CsvWriter::sep() {
    if (in_row_ > 0) out_ += ',';
    ++in_row_;
    if (in_row_ > columns_) throw std::logic_error("CSV row has too many cells");
}

CsvWriter& CsvWriter::cell(std::string_view v) {
    sep();
    const bool quote = v.find_first_of(",\"\n") != std::string_view::npos;
    if (!quote) {
        out_ += v;
        return *this;
    }
    out_ += '"';
    for (const char c : v) {
        if (c == '"') out_ += '"';
        out_ += c;
    }
    out_ += '"';
    return *this;
}

CsvWriter& CsvWriter::cell(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    // guard against a non-C global locale sneaking a decimal comma in
    for (char& c : buf) {
        if (c == '\0') break;
        if (c == ',') c = '.';
    }
    return cell(std::string_view(buf));
}

CsvWriter& CsvWriter::cell(std::int64_t v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(v));
    return cell(std::string_view(buf));
}

CsvWriter& CsvWriter::cell(std::uint64_t v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%llu", static_cast<unsigned long long>(v));
    return cell(std::string_view(buf));
}

void CsvWriter::end_row() {
    if (in_row_ != columns_)
        throw std::logic_error("CSV row has " + std::to_string(in_row_) + " cells, expected " +
                               std::to_string(columns_));
    out_ += '\n';
    in_row_ = 0;
}

void CsvWriter::save(const std::string& path) const {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << out_;
    if (!f) throw std::runtime_error("short write to " + path);
}

}  // namespace mimo
