#include "ordalloc/value.hpp"

#include <cctype>
#include <stdexcept>

namespace ordalloc {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("malformed integer");
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

}  // namespace

Value parse_value(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");

  try {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      mpz_class num = parse_integer(text.substr(0, slash));
      mpz_class den = parse_integer(text.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator");
      Value v(num, den);
      v.canonicalize();
      return v;
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      std::string_view whole = text.substr(0, dot);
      std::string_view frac = text.substr(dot + 1);
      bool negative = !whole.empty() && whole.front() == '-';
      if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
      if (whole.empty()) whole = "0";
      if (!all_digits(whole) || (!frac.empty() && !all_digits(frac)))
        throw std::invalid_argument("malformed decimal");
      mpz_class den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
      mpz_class num = mpz_class(std::string(whole), 10) * den;
      if (!frac.empty()) num += mpz_class(std::string(frac), 10);
      Value v(negative ? mpz_class(-num) : num, den);
      v.canonicalize();
      return v;
    }
    return Value(parse_integer(text));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
}

std::string format_value(const Value& v) {
  Value c = v;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Value make_value(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Value v(num, den);
  v.canonicalize();
  return v;
}

Value sum_over(const ItemSet& items, std::span<const Value> values) {
  Value total = 0;
  for (auto i = items.find_first(); i != ItemSet::npos; i = items.find_next(i)) total += values[i];
  return total;
}

std::vector<std::size_t> members(const ItemSet& items) {
  std::vector<std::size_t> out;
  out.reserve(items.count());
  for (auto i = items.find_first(); i != ItemSet::npos; i = items.find_next(i)) out.push_back(i);
  return out;
}

ItemSet interval_set(std::size_t m, std::size_t first, std::size_t last) {
  ItemSet s(m);
  if (first <= last && first < m) s.set(first, std::min(last, m - 1) - first + 1, true);
  return s;
}

}  // namespace ordalloc
