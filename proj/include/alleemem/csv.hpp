#pragma once

#include <string>
#include <vector>

namespace alleemem {

// Shortest round-trip decimal form of x (std::to_chars); deterministic and
// exact under re-parsing.
std::string format_double(double x);

// Minimal CSV emitter: header row + rows, comma separator, LF endings,
// '.' decimal point. Cells are numeric or identifier strings (no quoting).
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header);
    void add_row(std::vector<std::string> cells);  // throws on width mismatch
    const std::string& str() const { return buf_; }
    void write_file(const std::string& path) const;  // throws on I/O failure

private:
    std::size_t width_;
    std::string buf_;
};

}  // namespace alleemem
