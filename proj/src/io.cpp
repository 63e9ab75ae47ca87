#include "compgf/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "compgf/errors.hpp"
#include "json.hpp"

namespace compgf {

namespace {

using ordered_json = nlohmann::ordered_json;

int parse_int_field(const std::string& text, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw table_parse_error("malformed integer field '" + text + "'", line);
  }
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(text);
  while (std::getline(in, field, sep)) fields.push_back(field);
  if (!text.empty() && text.back() == sep) fields.emplace_back();
  return fields;
}

// Reads the next line, dropping a trailing '\r' so CRLF input parses too.
bool next_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

int checked_order(const ordered_json& value, int line) {
  if (!value.is_number_integer()) {
    throw table_parse_error("\"n\" must be an integer", line);
  }
  int n = value.get<int>();
  if (n < 1) throw table_parse_error("\"n\" must be >= 1", line);
  return n;
}

int checked_statistic(const ordered_json& value, int line) {
  if (!value.is_number_integer()) {
    throw table_parse_error("statistic must be an integer", line);
  }
  int k = value.get<int>();
  if (k < 0) throw table_parse_error("statistic must be >= 0", line);
  return k;
}

std::string checked_string(const ordered_json& object, const char* field,
                           int line) {
  if (!object.contains(field) || !object[field].is_string()) {
    throw table_parse_error(std::string("\"") + field +
                                "\" must be a decimal string",
                            line);
  }
  return object[field].get<std::string>();
}

ordered_json parse_line(const std::string& line, int line_number) {
  ordered_json object = ordered_json::parse(line, nullptr, false);
  if (object.is_discarded() || !object.is_object()) {
    throw table_parse_error("not a JSON object", line_number);
  }
  return object;
}

}  // namespace

void write_count_table_csv(std::ostream& out, const CountTable& table) {
  out << "n,k,nu,count\n";
  for (const auto& [key, count] : table.counts) {
    out << key.n << ',' << key.k << ',' << format_rational(key.nu) << ','
        << count.get_str() << '\n';
  }
}

CountTable read_count_table_csv(std::istream& in) {
  std::string line;
  if (!next_line(in, line) || line != "n,k,nu,count") {
    throw table_parse_error("expected header n,k,nu,count", 1);
  }
  CountTable table;
  int line_number = 1;
  while (next_line(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    std::vector<std::string> fields = split(line, ',');
    if (fields.size() != 4) {
      throw table_parse_error("expected 4 comma-separated fields", line_number);
    }
    WeightedKey key;
    key.n = parse_int_field(fields[0], line_number);
    key.k = parse_int_field(fields[1], line_number);
    if (key.n < 1 || key.k < 0) {
      throw table_parse_error("order must be >= 1 and statistic >= 0",
                              line_number);
    }
    Integer count;
    try {
      key.nu = parse_rational(fields[2]);
      count = parse_count(fields[3]);
    } catch (const std::invalid_argument& err) {
      throw table_parse_error(err.what(), line_number);
    }
    if (table.counts.count(key) != 0) {
      throw table_parse_error("duplicate key", line_number);
    }
    table.set(key, count);
  }
  return table;
}

void write_count_table_jsonl(std::ostream& out, const CountTable& table) {
  for (const auto& [key, count] : table.counts) {
    ordered_json object;
    object["n"] = key.n;
    object["k"] = key.k;
    object["nu"] = format_rational(key.nu);
    object["count"] = count.get_str();
    out << object.dump() << '\n';
  }
}

CountTable read_count_table_jsonl(std::istream& in) {
  CountTable table;
  std::string line;
  int line_number = 0;
  while (next_line(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    ordered_json object = parse_line(line, line_number);
    if (!object.contains("n") || !object.contains("k")) {
      throw table_parse_error("missing \"n\" or \"k\"", line_number);
    }
    WeightedKey key;
    key.n = checked_order(object["n"], line_number);
    key.k = checked_statistic(object["k"], line_number);
    Integer count;
    try {
      key.nu = parse_rational(checked_string(object, "nu", line_number));
      count = parse_count(checked_string(object, "count", line_number));
    } catch (const std::invalid_argument& err) {
      throw table_parse_error(err.what(), line_number);
    }
    if (table.counts.count(key) != 0) {
      throw table_parse_error("duplicate key", line_number);
    }
    table.set(key, count);
  }
  return table;
}

void write_connected_table_jsonl(std::ostream& out,
                                 const ConnectedCountTable& table) {
  for (const auto& [key, count] : table.counts) {
    ordered_json object;
    object["n"] = key.n;
    object["k"] = key.k;
    object["count"] = count.get_str();
    out << object.dump() << '\n';
  }
}

ConnectedCountTable read_connected_table_jsonl(std::istream& in) {
  ConnectedCountTable table;
  bool arity_known = false;
  std::string line;
  int line_number = 0;
  while (next_line(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    ordered_json object = parse_line(line, line_number);
    if (!object.contains("n") || !object.contains("k")) {
      throw table_parse_error("missing \"n\" or \"k\"", line_number);
    }
    TableKey key;
    key.n = checked_order(object["n"], line_number);
    if (!object["k"].is_array()) {
      throw table_parse_error("\"k\" must be an array", line_number);
    }
    for (const auto& entry : object["k"]) {
      key.k.push_back(checked_statistic(entry, line_number));
    }
    if (!arity_known) {
      table.y_arity = static_cast<int>(key.k.size());
      arity_known = true;
    } else if (static_cast<int>(key.k.size()) != table.y_arity) {
      throw table_parse_error("inconsistent statistic arity", line_number);
    }
    Integer count;
    try {
      count = parse_count(checked_string(object, "count", line_number));
    } catch (const std::invalid_argument& err) {
      throw table_parse_error(err.what(), line_number);
    }
    if (table.counts.count(key) != 0) {
      throw table_parse_error("duplicate key", line_number);
    }
    table.set(std::move(key), count);
  }
  return table;
}

void write_series_dump(std::ostream& out, const Series& s) {
  for (const auto& [m, c] : s.terms()) {
    ordered_json object;
    object["x"] = m.x;
    object["y"] = m.y;
    if (m.z_kind() == ZKind::multi_index) {
      ordered_json tags = ordered_json::object();
      for (const auto& [index, exponent] : m.z_multi()) {
        tags[std::to_string(index)] = exponent;
      }
      object["z"] = tags;
    } else {
      object["z"] = format_rational(m.z_weight());
    }
    object["coeff"] = format_rational(c);
    out << object.dump() << '\n';
  }
}

std::string format_table_key(const TableKey& key) {
  std::ostringstream out;
  out << key.n << ':';
  for (std::size_t i = 0; i < key.k.size(); ++i) {
    if (i > 0) out << ',';
    out << key.k[i];
  }
  return out.str();
}

}  // namespace compgf
