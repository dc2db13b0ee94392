#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>

namespace mimo {

// Minimal CSV emitter: header row fixed at construction, locale-independent
// number formatting, one row per row() call.
class CsvWriter {
public:
    explicit CsvWriter(std::initializer_list<std::string_view> header);

    CsvWriter& cell(std::string_view v);
    CsvWriter& cell(const char* v) { return cell(std::string_view(v)); }
    CsvWriter& cell(double v);
    CsvWriter& cell(std::int64_t v);
    CsvWriter& cell(std::uint64_t v);
    CsvWriter& cell(int v) { return cell(static_cast<std::int64_t>(v)); }
    CsvWriter& cell(unsigned v) { return cell(static_cast<std::uint64_t>(v)); }
    void end_row();

    template <class... Ts>
    void row(const Ts&... vs) {
        (cell(vs), ...);
        end_row();
    }

    const std::string& str() const { return out_; }
    void save(const std::string& path) const;

private:
    void sep();
    std::string out_;
    std::size_t columns_;
    std::size_t in_row_ = 0;
};

}  // namespace mimo
