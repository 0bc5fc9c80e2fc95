#include "ordalloc/rounding.hpp"

#include <algorithm>
#include <stdexcept>

namespace ordalloc {

Direction direction_for(Mode mode) { return mode == Mode::MaxMin ? Direction::Up : Direction::Down; }

int category_count(int k) {
  if (k < 2) throw std::invalid_argument("category_count: k must be >= 2");
  // (1+1/k)^c >= k  <=>  (k+1)^c >= k^(c+1)
  mpz_class lhs = 1;
  mpz_class rhs = k;
  int c = 0;
  while (lhs < rhs) {
    lhs *= k + 1;
    rhs *= k;
    ++c;
  }
  return c;
}

RoundingScheme::RoundingScheme(int k, Direction direction)
    : k_(k), direction_(direction), categories_(category_count(k)) {
  grid_.reserve(static_cast<std::size_t>(categories_) + 1);
  Value q(1, k);
  const Value step(k + 1, k);
  for (int tau = 0; tau <= categories_; ++tau) {
    grid_.push_back(q);
    q *= step;
  }
}

const Value& RoundingScheme::category_value(int c) const {
  if (c < 1 || c > categories_) throw std::out_of_range("category_value: category out of range");
  return direction_ == Direction::Up ? grid_[static_cast<std::size_t>(c)] : grid_[static_cast<std::size_t>(c) - 1];
}

int RoundingScheme::category_of(const Value& v) const {
  if (v <= 0 || v > 1) throw std::invalid_argument("category_of: value must lie in (0,1]");
  if (v <= grid_.front()) return 0;
  if (direction_ == Direction::Up) {
    // first tau with v <= q_tau; v > q_0 so tau >= 1
    auto it = std::lower_bound(grid_.begin(), grid_.end(), v);
    return static_cast<int>(it - grid_.begin());
  }
  // first tau with v < q_tau; the category is tau
  auto it = std::upper_bound(grid_.begin(), grid_.end(), v);
  return static_cast<int>(it - grid_.begin());
}

Value RoundingScheme::round(const Value& v) const {
  const int c = category_of(v);
  return c == 0 ? v : category_value(c);
}

RoundingScheme scheme(int k, Direction direction) {
  if (k < 4) throw std::invalid_argument("rounding scheme requires k >= 4");
  return RoundingScheme(k, direction);
}

bool InputVector::is_zero() const {
  return std::all_of(counts.begin(), counts.end(), [](int c) { return c == 0; });
}

bool InputVector::dominated_by(const InputVector& other) const {
  if (counts.size() != other.counts.size()) throw std::invalid_argument("input vectors of different length");
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] > other.counts[i]) return false;
  }
  return true;
}

std::string InputVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(counts[i]);
  }
  return out;
}

std::size_t InputVectorHash::operator()(const InputVector& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (int c : v.counts) {
    h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

RoundedInstance round_instance(const ConvexInstance& instance, const RoundingScheme& rounding) {
  if (direction_for(instance.mode) != rounding.direction())
    throw std::invalid_argument("round_instance: rounding direction does not match the instance mode");
  RoundedInstance out{instance, {}, {}, {}, rounding};
  const std::size_t m = instance.item_count();
  out.values.reserve(m);
  out.original.reserve(m);
  out.category.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Value& v = instance.items[i].value;
    if (v <= 0 || v > 1)
      throw std::invalid_argument("round_instance: item " + instance.items[i].id + " has value outside (0,1]");
    const int c = rounding.category_of(v);
    out.original.push_back(v);
    out.category.push_back(c);
    out.values.push_back(c == 0 ? v : rounding.category_value(c));
    out.instance.items[i].value = out.values.back();
  }
  return out;
}

int small_units(const Value& small_total, int k, Direction direction) {
  const Value scaled = small_total * k;
  mpz_class units;
  if (direction == Direction::Up) {
    mpz_cdiv_q(units.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  } else {
    mpz_fdiv_q(units.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  }
  return static_cast<int>(units.get_si());
}

InputVector input_vector(const RoundedInstance& rounded, const ItemSet& items) {
  InputVector nu = InputVector::zero(rounded.rounding.categories());
  Value small_total = 0;
  for (auto i = items.find_first(); i != ItemSet::npos; i = items.find_next(i)) {
    const int c = rounded.category[i];
    if (c == 0) {
      small_total += rounded.values[i];
    } else {
      ++nu.counts[static_cast<std::size_t>(c)];
    }
  }
  nu.counts[0] = small_units(small_total, rounded.rounding.k(), rounded.rounding.direction());
  return nu;
}

InputVector input_vector(const RoundedInstance& rounded, const Subgraph& sub) {
  return input_vector(rounded, sub.items);
}

InputVector full_vector(const RoundedInstance& rounded) {
  return input_vector(rounded, full_graph(rounded.instance));
}

}  // namespace ordalloc
