#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "ordalloc/instance.hpp"

namespace ordalloc {

/// Up rounds big values to the next grid point (Max-Min), Down to the
/// previous one (Min-Max).
enum class Direction { Up, Down };

Direction direction_for(Mode mode);

/// Geometric value grid q_tau = (1/k)(1+1/k)^tau, tau = 0..C, stored exactly.
///
/// Big values (> 1/k) fall into one of C categories numbered 1..C. With
/// Direction::Up a value in (q_{c-1}, q_c] belongs to category c and is
/// replaced by q_c; with Direction::Down a value in [q_{c-1}, q_c) belongs
/// to category c and is replaced by q_{c-1}. Either way the category index
/// is shared by the input vector coordinate nu_c.
class RoundingScheme {
 public:
  RoundingScheme(int k, Direction direction);

  int k() const { return k_; }
  Direction direction() const { return direction_; }
  int categories() const { return categories_; }

  /// q_tau for 0 <= tau <= C.
  const Value& grid(int tau) const { return grid_.at(static_cast<std::size_t>(tau)); }

  /// Rounded value shared by every item of category c (1 <= c <= C).
  const Value& category_value(int c) const;

  Value small_threshold() const { return Value(1, k_); }

  /// 0 for small values, else the category in 1..C. Requires 0 < v <= 1.
  int category_of(const Value& v) const;

  /// Rounded replacement of v. Requires 0 < v <= 1.
  Value round(const Value& v) const;

 private:
  int k_;
  Direction direction_;
  int categories_;
  std::vector<Value> grid_;
};

/// Throws std::invalid_argument when k < 4.
RoundingScheme scheme(int k, Direction direction);

/// Smallest C with (1+1/k)^C >= k, i.e. ceil(log k / log(1+1/k)), computed
/// in exact integer arithmetic.
int category_count(int k);

/// Configuration vector (nu_0, nu_1, ..., nu_C): nu_0 counts small value in
/// units of 1/k, nu_c counts big items of category c.
struct InputVector {
  std::vector<int> counts;

  InputVector() = default;
  explicit InputVector(std::vector<int> c) : counts(std::move(c)) {}
  static InputVector zero(int categories) { return InputVector(std::vector<int>(static_cast<std::size_t>(categories) + 1, 0)); }

  int small_units() const { return counts.front(); }
  int big(int c) const { return counts.at(static_cast<std::size_t>(c)); }
  std::size_t size() const { return counts.size(); }
  bool is_zero() const;

  /// Componentwise <=.
  bool dominated_by(const InputVector& other) const;

  /// "nu_0,nu_1,...,nu_C".
  std::string to_string() const;

  friend auto operator<=>(const InputVector&, const InputVector&) = default;
  friend bool operator==(const InputVector&, const InputVector&) = default;
};

struct InputVectorHash {
  std::size_t operator()(const InputVector& v) const noexcept;
};

/// Instance whose values have been replaced by their rounded counterparts.
/// Item order and agent intervals are those of the source instance.
struct RoundedInstance {
  ConvexInstance instance;      // item values are the rounded ones
  std::vector<Value> values;    // rounded values in item order
  std::vector<Value> original;  // values before rounding
  std::vector<int> category;    // 0 = small
  RoundingScheme rounding;

  bool is_small(std::size_t item) const { return category[item] == 0; }
  std::size_t item_count() const { return values.size(); }
  std::size_t agent_count() const { return instance.agent_count(); }
  Mode mode() const { return instance.mode; }
};

/// Requires every value in (0, 1]; throws std::invalid_argument otherwise.
RoundedInstance round_instance(const ConvexInstance& instance, const RoundingScheme& rounding);

/// nu_0 for a small-value total: ceil(k*S) when rounding up (total in
/// ((nu_0-1)/k, nu_0/k]), floor(k*S) when rounding down (total in
/// [nu_0/k, (nu_0+1)/k)).
int small_units(const Value& small_total, int k, Direction direction);

InputVector input_vector(const RoundedInstance& rounded, const ItemSet& items);
InputVector input_vector(const RoundedInstance& rounded, const Subgraph& sub);

/// Vector of the whole rounded instance.
InputVector full_vector(const RoundedInstance& rounded);

}  // namespace ordalloc
