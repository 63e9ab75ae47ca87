#include "compgf/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace compgf {

MultiIndex make_multi_index(std::vector<std::pair<int, int>> raw) {
  for (const auto& [index, exponent] : raw) {
    if (index < 1) throw std::invalid_argument("z index must be >= 1");
    if (exponent < 0) throw std::invalid_argument("z exponent must be >= 0");
  }
  std::sort(raw.begin(), raw.end());
  MultiIndex out;
  for (const auto& [index, exponent] : raw) {
    if (exponent == 0) continue;
    if (!out.empty() && out.back().first == index) {
      out.back().second += exponent;
    } else {
      out.emplace_back(index, exponent);
    }
  }
  return out;
}

MultiIndex z_tag(int order) { return make_multi_index({{order, 1}}); }

bool Monomial::is_constant() const {
  if (x != 0) return false;
  for (int e : y) {
    if (e != 0) return false;
  }
  if (z_kind() == ZKind::multi_index) return z_multi().empty();
  return z_weight() == 0;
}

Monomial constant_monomial(int y_arity, ZKind kind) {
  Monomial m;
  m.y.assign(static_cast<std::size_t>(y_arity), 0);
  if (kind == ZKind::weighted) m.z = Rational(0);
  return m;
}

int compare(const Monomial& a, const Monomial& b) {
  if (a.x != b.x) return a.x < b.x ? -1 : 1;
  if (a.y != b.y) return a.y < b.y ? -1 : 1;
  if (a.z.index() != b.z.index()) return a.z.index() < b.z.index() ? -1 : 1;
  if (a.z_kind() == ZKind::multi_index) {
    const MultiIndex& za = a.z_multi();
    const MultiIndex& zb = b.z_multi();
    if (za != zb) return za < zb ? -1 : 1;
    return 0;
  }
  return cmp(a.z_weight(), b.z_weight());
}

bool operator<(const Monomial& a, const Monomial& b) {
  return compare(a, b) < 0;
}

bool operator==(const Monomial& a, const Monomial& b) {
  return compare(a, b) == 0;
}

}  // namespace compgf
