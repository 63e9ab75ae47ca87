#include "compgf/series.hpp"

#include <omp.h>

#include <algorithm>
#include <utility>

#include "compgf/errors.hpp"

namespace compgf {

namespace {

// Below this many term pairs the OpenMP fork/merge overhead dominates.
constexpr std::size_t kParallelPairThreshold = 4096;

MultiIndex merge_multi(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) {
      out.push_back(*ia++);
    } else if (ib->first < ia->first) {
      out.push_back(*ib++);
    } else {
      out.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  out.insert(out.end(), ia, a.end());
  out.insert(out.end(), ib, b.end());
  return out;
}

Monomial combine(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.x = a.x + b.x;
  m.y.resize(a.y.size());
  for (std::size_t i = 0; i < a.y.size(); ++i) m.y[i] = a.y[i] + b.y[i];
  if (a.z_kind() == ZKind::multi_index) {
    m.z = merge_multi(a.z_multi(), b.z_multi());
  } else {
    m.z = a.z_weight() + b.z_weight();
  }
  return m;
}

void check_same_shape(const Series& a, const Series& b) {
  if (a.y_arity() != b.y_arity()) {
    throw incompatible_series_error("series have different y arities");
  }
  if (a.z_kind() != b.z_kind()) {
    throw series_kind_error("series have different z kinds");
  }
}

using TermRef = const std::pair<const Monomial, Rational>*;

std::vector<TermRef> term_refs(const Series& s) {
  std::vector<TermRef> refs;
  refs.reserve(s.terms().size());
  for (const auto& term : s.terms()) refs.push_back(&term);
  return refs;
}

void accumulate(std::map<Monomial, Rational>& sink, const Monomial& m,
                const Rational& c) {
  auto [it, inserted] = sink.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) sink.erase(it);
  }
}

}  // namespace

Series::Series(int trunc_order, int y_arity, ZKind z_kind)
    : trunc_order_(trunc_order), y_arity_(y_arity), z_kind_(z_kind) {
  if (trunc_order < 0) throw incompatible_series_error("negative truncation order");
  if (y_arity < 0) throw incompatible_series_error("negative y arity");
}

Series Series::one(int trunc_order, int y_arity, ZKind z_kind) {
  Series s(trunc_order, y_arity, z_kind);
  s.add_term(constant_monomial(y_arity, z_kind), 1);
  return s;
}

void Series::check_monomial(const Monomial& m) const {
  if (m.x < 0) throw incompatible_series_error("negative x degree");
  if (static_cast<int>(m.y.size()) != y_arity_) {
    throw incompatible_series_error("monomial y arity does not match series");
  }
  for (int e : m.y) {
    if (e < 0) throw incompatible_series_error("negative y degree");
  }
  if (m.z_kind() != z_kind_) {
    throw series_kind_error("monomial z kind does not match series");
  }
}

void Series::add_term(const Monomial& m, const Rational& c) {
  check_monomial(m);
  if (m.x > trunc_order_ || c == 0) return;
  accumulate(terms_, m, c);
}

Rational Series::coefficient(const Monomial& m) const {
  check_monomial(m);
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Series::constant_term() const {
  return coefficient(constant_monomial(y_arity_, z_kind_));
}

Series Series::with_trunc_order(int trunc_order) const {
  Series out(trunc_order, y_arity_, z_kind_);
  for (const auto& [m, c] : terms_) out.add_term(m, c);
  return out;
}

bool Series::operator==(const Series& other) const {
  return trunc_order_ == other.trunc_order_ && y_arity_ == other.y_arity_ &&
         z_kind_ == other.z_kind_ && terms_ == other.terms_;
}

Series add(const Series& a, const Series& b) {
  check_same_shape(a, b);
  Series out(std::min(a.trunc_order(), b.trunc_order()), a.y_arity(),
             a.z_kind());
  for (const auto& [m, c] : a.terms()) out.add_term(m, c);
  for (const auto& [m, c] : b.terms()) out.add_term(m, c);
  return out;
}

Series sub(const Series& a, const Series& b) {
  check_same_shape(a, b);
  Series out(std::min(a.trunc_order(), b.trunc_order()), a.y_arity(),
             a.z_kind());
  for (const auto& [m, c] : a.terms()) out.add_term(m, c);
  for (const auto& [m, c] : b.terms()) out.add_term(m, -c);
  return out;
}

Series scale(const Series& a, const Rational& c) {
  Series out(a.trunc_order(), a.y_arity(), a.z_kind());
  if (c == 0) return out;
  for (const auto& [m, coeff] : a.terms()) out.add_term(m, coeff * c);
  return out;
}

Series mul_serial(const Series& a, const Series& b) {
  check_same_shape(a, b);
  const int order = std::min(a.trunc_order(), b.trunc_order());
  Series out(order, a.y_arity(), a.z_kind());
  for (const auto& [ma, ca] : a.terms()) {
    if (ma.x > order) continue;
    for (const auto& [mb, cb] : b.terms()) {
      if (ma.x + mb.x > order) continue;
      out.add_term(combine(ma, mb), ca * cb);
    }
  }
  return out;
}

Series mul(const Series& a, const Series& b) {
  check_same_shape(a, b);
  const std::size_t pairs = a.terms().size() * b.terms().size();
  if (pairs < kParallelPairThreshold) return mul_serial(a, b);

  // Parallelize over the larger operand's terms; exact arithmetic makes the
  // merged result independent of the thread partition.
  const Series& outer = a.terms().size() >= b.terms().size() ? a : b;
  const Series& inner = a.terms().size() >= b.terms().size() ? b : a;
  const int order = std::min(a.trunc_order(), b.trunc_order());
  const std::vector<TermRef> outer_terms = term_refs(outer);

  const int max_threads = omp_get_max_threads();
  std::vector<std::map<Monomial, Rational>> partial(
      static_cast<std::size_t>(max_threads));

#pragma omp parallel num_threads(max_threads)
  {
    auto& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (std::size_t i = 0; i < outer_terms.size(); ++i) {
      const auto& [mo, co] = *outer_terms[i];
      if (mo.x > order) continue;
      for (const auto& [mi, ci] : inner.terms()) {
        if (mo.x + mi.x > order) continue;
        accumulate(local, combine(mo, mi), co * ci);
      }
    }
  }

  Series out(order, a.y_arity(), a.z_kind());
  for (auto& local : partial) {
    for (const auto& [m, c] : local) out.add_term(m, c);
  }
  return out;
}

Series exp_series(const Series& s) {
  for (const auto& [m, c] : s.terms()) {
    if (m.x == 0) {
      throw nonzero_constant_term_error(
          "exp requires every term to have positive x degree");
    }
  }
  const int order = s.trunc_order();
  Series out = Series::one(order, s.y_arity(), s.z_kind());
  Series power = Series::one(order, s.y_arity(), s.z_kind());
  for (int k = 1; k <= order; ++k) {
    power = mul(power, s);
    if (power.is_zero()) break;
    out = add(out, scale(power, make_ratio(1, factorial(static_cast<unsigned long>(k)))));
  }
  return out;
}

Series log_series(const Series& s) {
  for (const auto& [m, c] : s.terms()) {
    if (m.x == 0 && !m.is_constant()) {
      throw bad_constant_term_error(
          "log input carries x-degree-0 terms besides the constant 1");
    }
  }
  if (s.constant_term() != 1) {
    throw bad_constant_term_error("log requires constant term exactly 1");
  }
  const int order = s.trunc_order();
  Series u = sub(s, Series::one(order, s.y_arity(), s.z_kind()));
  Series out(order, s.y_arity(), s.z_kind());
  Series power = Series::one(order, s.y_arity(), s.z_kind());
  for (int k = 1; k <= order; ++k) {
    power = mul(power, u);
    if (power.is_zero()) break;
    Rational coeff = make_ratio(k % 2 == 1 ? 1 : -1, k);
    out = add(out, scale(power, coeff));
  }
  return out;
}

Series apply_tau(const Series& s, const WeightVector& w) {
  if (s.z_kind() != ZKind::multi_index) {
    throw series_kind_error("tau expects a multi-index series");
  }
  Series out(s.trunc_order(), s.y_arity(), ZKind::weighted);
  for (const auto& [m, c] : s.terms()) {
    Rational exponent = 0;
    for (const auto& [index, count] : m.z_multi()) {
      exponent += w.weight(index) * count;
    }
    Monomial image;
    image.x = m.x;
    image.y = m.y;
    image.z = exponent;
    out.add_term(image, c);
  }
  return out;
}

Series specialize_y_to_one(const Series& s) {
  Series out(s.trunc_order(), 0, s.z_kind());
  for (const auto& [m, c] : s.terms()) {
    Monomial image;
    image.x = m.x;
    image.z = m.z;
    out.add_term(image, c);
  }
  return out;
}

Series specialize_z_to_one(const Series& s) {
  Series out(s.trunc_order(), s.y_arity(), ZKind::multi_index);
  for (const auto& [m, c] : s.terms()) {
    Monomial image;
    image.x = m.x;
    image.y = m.y;
    out.add_term(image, c);
  }
  return out;
}

}  // namespace compgf
