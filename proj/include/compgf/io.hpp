#pragma once

#include <iosfwd>
#include <string>

#include "compgf/series.hpp"
#include "compgf/tables.hpp"

namespace compgf {

// CSV with header n,k,nu,count. nu uses the usual rational formatting
// ("p" or "p/q"), count is a plain decimal string.
void write_count_table_csv(std::ostream& out, const CountTable& table);
CountTable read_count_table_csv(std::istream& in);

// One JSON object per line: {"n":..., "k":..., "nu":"...", "count":"..."}.
void write_count_table_jsonl(std::ostream& out, const CountTable& table);
CountTable read_count_table_jsonl(std::istream& in);

// Connected-structure counts, one object per line:
// {"n":..., "k":[...], "count":"..."}.
void write_connected_table_jsonl(std::ostream& out,
                                 const ConnectedCountTable& table);
ConnectedCountTable read_connected_table_jsonl(std::istream& in);

// Series dump, one term per line in canonical monomial order:
// {"x":n, "y":[...], "z":{"2":3,...} or "3/2", "coeff":"p/q"}.
void write_series_dump(std::ostream& out, const Series& s);

std::string format_table_key(const TableKey& key);

}  // namespace compgf
