#include "compgf/tables.hpp"

#include <sstream>

namespace compgf {

Integer ConnectedCountTable::count(const TableKey& key) const {
  auto it = counts.find(key);
  return it == counts.end() ? Integer(0) : it->second;
}

void ConnectedCountTable::set(TableKey key, Integer value) {
  if (value == 0) {
    counts.erase(key);
  } else {
    counts[std::move(key)] = std::move(value);
  }
}

bool WeightedKey::operator<(const WeightedKey& other) const {
  if (n != other.n) return n < other.n;
  if (k != other.k) return k < other.k;
  return cmp(nu, other.nu) < 0;
}

bool WeightedKey::operator==(const WeightedKey& other) const {
  return n == other.n && k == other.k && nu == other.nu;
}

Integer CountTable::count(const WeightedKey& key) const {
  auto it = counts.find(key);
  return it == counts.end() ? Integer(0) : it->second;
}

void CountTable::set(WeightedKey key, Integer value) {
  if (value == 0) {
    counts.erase(key);
  } else {
    counts[std::move(key)] = std::move(value);
  }
}

std::vector<std::string> diff_tables(const CountTable& a,
                                     const CountTable& b) {
  std::vector<std::string> lines;
  auto describe = [&](const WeightedKey& key, const Integer& lhs,
                      const Integer& rhs) {
    std::ostringstream line;
    line << "n=" << key.n << " k=" << key.k << " nu=" << format_rational(key.nu)
         << ": " << lhs.get_str() << " vs " << rhs.get_str();
    lines.push_back(line.str());
  };
  for (const auto& [key, count] : a.counts) {
    Integer other = b.count(key);
    if (count != other) describe(key, count, other);
  }
  for (const auto& [key, count] : b.counts) {
    if (a.counts.find(key) == a.counts.end()) {
      describe(key, Integer(0), count);
    }
  }
  return lines;
}

}  // namespace compgf
