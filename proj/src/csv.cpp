#include "alleemem/csv.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>
#include <system_error>

namespace alleemem {

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    if (res.ec != std::errc())
        throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, res.ptr);
}

namespace {

void append_row(std::string& buf, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) buf += ',';
        buf += cells[i];
    }
    buf += '\n';
}

}  // namespace

CsvWriter::CsvWriter(std::vector<std::string> header) : width_(header.size()) {
    if (width_ == 0) throw std::invalid_argument("CsvWriter: empty header");
    append_row(buf_, header);
}

void CsvWriter::add_row(std::vector<std::string> cells) {
    if (cells.size() != width_)
        throw std::invalid_argument("CsvWriter: row width " + std::to_string(cells.size()) +
                                    " != header width " + std::to_string(width_));
    append_row(buf_, cells);
}

void CsvWriter::write_file(const std::string& path) const {
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) throw std::runtime_error("CsvWriter: cannot open " + path);
    const std::size_t n = std::fwrite(buf_.data(), 1, buf_.size(), f);
    const bool ok = n == buf_.size() && std::fclose(f) == 0;
    if (!ok) throw std::runtime_error("CsvWriter: short write to " + path);
}

}  // namespace alleemem
