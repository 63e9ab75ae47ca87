#include "compgf/weights.hpp"

#include <sstream>
#include <stdexcept>

namespace compgf {

Rational WeightVector::weight(int order) const {
  if (order < 1) throw std::invalid_argument("component order must be >= 1");
  std::size_t i = static_cast<std::size_t>(order) - 1;
  return i < entries.size() ? entries[i] : fill;
}

WeightVector trivial_weights() { return WeightVector{}; }

WeightVector parse_weights(const std::string& list, const Rational& fill) {
  WeightVector w;
  w.fill = fill;
  if (list.empty()) throw std::invalid_argument("empty weight list");
  std::istringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    w.entries.push_back(parse_rational(item));
  }
  if (list.back() == ',') throw std::invalid_argument("trailing comma in weight list");
  return w;
}

WeightVector size_weighted(const WeightVector& w, int max_order) {
  WeightVector out;
  out.fill = 0;  // unused: every order up to max_order is explicit
  out.entries.reserve(static_cast<std::size_t>(max_order));
  for (int order = 1; order <= max_order; ++order) {
    out.entries.push_back(Rational(order) * w.weight(order));
  }
  return out;
}

}  // namespace compgf
