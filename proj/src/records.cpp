#include "sojourn/records.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "sojourn/errors.hpp"

namespace sojourn::records {

using nlohmann::json;

namespace {

constexpr const char* kFieldsAfterIndex = "count,probability,class,source";

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) {
    fields.push_back(field);
  }
  if (!line.empty() && line.back() == ',') {
    fields.emplace_back();
  }
  return fields;
}

std::optional<std::string> non_empty(const std::string& s) {
  if (s.empty()) {
    return std::nullopt;
  }
  return s;
}

json optional_field(const std::optional<std::string>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "csv") {
    return Format::Csv;
  }
  if (name == "json") {
    return Format::Json;
  }
  throw ArgumentError("unknown format '" + name + "' (expected csv or json)");
}

void write_csv(std::ostream& out, const std::vector<OutputRecord>& rows,
               const std::string& index_name) {
  out << index_name << ',' << kFieldsAfterIndex << '\n';
  for (const auto& row : rows) {
    out << row.index << ',' << row.count.value_or("") << ',' << row.probability.value_or("")
        << ',' << row.path_class << ',' << row.source << '\n';
  }
}

void write_json(std::ostream& out, const std::vector<OutputRecord>& rows,
                const std::string& index_name) {
  json doc = json::array();
  for (const auto& row : rows) {
    json obj;
    if (index_name == "k") {
      obj[index_name] = std::stoll(row.index);
    } else {
      obj[index_name] = row.index;
    }
    obj["count"] = optional_field(row.count);
    obj["probability"] = optional_field(row.probability);
    obj["class"] = row.path_class;
    obj["source"] = row.source;
    doc.push_back(std::move(obj));
  }
  out << doc.dump(2) << '\n';
}

void write(std::ostream& out, Format format, const std::vector<OutputRecord>& rows,
           const std::string& index_name) {
  if (format == Format::Csv) {
    write_csv(out, rows, index_name);
  } else {
    write_json(out, rows, index_name);
  }
}

std::vector<OutputRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ArgumentError("empty CSV input");
  }
  const std::string tail = std::string(",") + kFieldsAfterIndex;
  if (line != "k" + tail && line != "r" + tail) {
    throw ArgumentError("unexpected CSV header '" + line + "'");
  }
  std::vector<OutputRecord> rows;
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    const auto fields = split_commas(line);
    if (fields.size() != 5) {
      throw ArgumentError("CSV row has " + std::to_string(fields.size()) +
                          " fields, expected 5: '" + line + "'");
    }
    rows.push_back(OutputRecord{fields[0], non_empty(fields[1]), non_empty(fields[2]),
                                fields[3], fields[4]});
  }
  return rows;
}

std::vector<OutputRecord> read_json(std::istream& in) {
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_array()) {
    throw ArgumentError("expected a JSON array of records");
  }
  std::vector<OutputRecord> rows;
  try {
    for (const auto& obj : doc) {
      OutputRecord row;
      const auto& index = obj.contains("k") ? obj.at("k") : obj.at("r");
      row.index = index.is_string() ? index.get<std::string>() : index.dump();
      if (!obj.at("count").is_null()) {
        row.count = obj.at("count").get<std::string>();
      }
      if (!obj.at("probability").is_null()) {
        row.probability = obj.at("probability").get<std::string>();
      }
      row.path_class = obj.at("class").get<std::string>();
      row.source = obj.at("source").get<std::string>();
      rows.push_back(std::move(row));
    }
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("malformed record: ") + e.what());
  }
  return rows;
}

std::vector<OutputRecord> read_any(std::istream& in) {
  in >> std::ws;
  if (in.peek() == '[') {
    return read_json(in);
  }
  return read_csv(in);
}

}  // namespace sojourn::records
