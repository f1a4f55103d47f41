#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace extremis {

// Formats with 10 significant digits ("%.10g"); all numeric CSV output
// goes through this so reruns are byte-identical.
std::string format_number(double v);

std::string csv_quote(const std::string& field);

// RFC 4180 style reader: quoted fields, escaped quotes, embedded
// newlines inside quotes. Records are returned row by row.
class CsvReader {
public:
    explicit CsvReader(const std::string& path);

    bool good() const { return in_.good() || !buffered_.empty(); }

    // Reads the next record; returns false at end of input.
    bool next(std::vector<std::string>& fields);

private:
    std::ifstream in_;
    std::string buffered_;
};

class CsvWriter {
public:
    explicit CsvWriter(const std::string& path);

    void row(const std::vector<std::string>& fields);
    bool good() const { return out_.good(); }
    void flush() { out_.flush(); }

private:
    std::ofstream out_;
};

}  // namespace extremis
