#pragma once

#include <stdexcept>
#include <string>

namespace compgf {

// Base class for everything the engine can throw.
struct engine_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// add/mul on series with different truncation order, y-arity or z kind.
struct incompatible_series_error : engine_error {
  using engine_error::engine_error;
};

// Operation applied to a series of the wrong z kind (e.g. tau on an already
// weighted series).
struct series_kind_error : engine_error {
  using engine_error::engine_error;
};

// exp input contains a term of x-degree 0.
struct nonzero_constant_term_error : engine_error {
  using engine_error::engine_error;
};

// log input whose constant term is not exactly 1, or that carries other
// x-degree-0 terms.
struct bad_constant_term_error : engine_error {
  using engine_error::engine_error;
};

// Count extraction produced a negative or non-integer value: the input table
// was not a valid homogeneous-property count table.
struct inconsistent_table_error : engine_error {
  using engine_error::engine_error;
};

// An internal identity failed. Must never fire for valid input.
struct internal_inconsistency_error : engine_error {
  using engine_error::engine_error;
};

// Exhaustive graph enumeration requested beyond the hard cap.
struct oracle_cap_error : engine_error {
  using engine_error::engine_error;
};

// A table file was rejected; carries the offending 1-based line number.
struct table_parse_error : engine_error {
  table_parse_error(const std::string& message, int line_number)
      : engine_error(message + " (line " + std::to_string(line_number) + ")"),
        line(line_number) {}
  int line;
};

}  // namespace compgf
