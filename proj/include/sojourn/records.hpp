#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sojourn::records {

/// One output row. `index` is k for counting tables and r for limit tables;
/// it is kept as the exact text that was written.
struct OutputRecord {
  std::string index;
  std::optional<std::string> count;
  std::optional<std::string> probability;
  std::string path_class;
  std::string source;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

enum class Format { Csv, Json };
Format parse_format(const std::string& name);

/// Header is `k,count,probability,class,source` (or `r,...` when
/// `index_name` is "r"); LF line endings; absent fields are empty.
void write_csv(std::ostream& out, const std::vector<OutputRecord>& rows,
               const std::string& index_name = "k");
/// JSON array of objects with the same fields; absent fields are null and
/// count/probability are strings.
void write_json(std::ostream& out, const std::vector<OutputRecord>& rows,
                const std::string& index_name = "k");
void write(std::ostream& out, Format format, const std::vector<OutputRecord>& rows,
           const std::string& index_name = "k");

/// Inverses of the writers. Throws ArgumentError on malformed input.
std::vector<OutputRecord> read_csv(std::istream& in);
std::vector<OutputRecord> read_json(std::istream& in);
/// Detects JSON by a leading '[' and otherwise parses CSV.
std::vector<OutputRecord> read_any(std::istream& in);

}  // namespace sojourn::records
