#include "ordalloc/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace ordalloc {

namespace {

void guard(const ConvexInstance& instance) {
  const auto report = validate(instance);
  if (!report.ok()) throw std::invalid_argument("invalid instance: " + report.violations.front().message);
  if (placement_count(instance) > kOracleMaxPlacements)
    throw std::length_error("oracle: more than 6^14 item placements");
}

// Values brought to a common denominator; all search arithmetic is on
// 64-bit integers.
struct Scaled {
  std::vector<long long> weight;
  mpz_class denominator;
};

Scaled common_denominator(const ConvexInstance& instance) {
  mpz_class den = 1;
  for (const auto& item : instance.items) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), item.value.get_den_mpz_t());
  Scaled out{{}, den};
  mpz_class total = 0;
  for (const auto& item : instance.items) {
    mpz_class w = item.value.get_num() * (den / item.value.get_den());
    total += w;
    out.weight.push_back(0);
    if (!total.fits_slong_p()) throw std::overflow_error("oracle: values too fine for exact integer search");
    out.weight.back() = w.get_si();
  }
  return out;
}

class Search {
 public:
  Search(const ConvexInstance& instance, const std::vector<long long>& weight)
      : instance_(instance), weight_(weight), m_(instance.item_count()), n_(instance.agent_count()) {
    // Heavy items first for earlier pruning.
    order_.resize(m_);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return weight_[a] > weight_[b]; });
    remaining_.assign(n_, std::vector<long long>(m_ + 1, 0));
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t pos = m_; pos-- > 0;)
        remaining_[a][pos] = remaining_[a][pos + 1] + (instance.agents[a].covers(order_[pos]) ? weight_[order_[pos]] : 0);
    load_.assign(n_, 0);
    owner_.assign(m_, 0);
    best_owner_.assign(m_, 0);
  }

  long long run_maxmin() {
    best_ = -1;
    maxmin(0);
    return best_;
  }

  long long run_minmax() {
    best_ = std::numeric_limits<long long>::max();
    minmax(0, 0);
    return best_;
  }

  const std::vector<std::size_t>& best_owner() const { return best_owner_; }

 private:
  void maxmin(std::size_t pos) {
    long long bound = std::numeric_limits<long long>::max();
    for (std::size_t a = 0; a < n_; ++a) bound = std::min(bound, load_[a] + remaining_[a][pos]);
    if (bound <= best_) return;
    if (pos == m_) {
      best_ = bound;
      best_owner_ = owner_;
      return;
    }
    const std::size_t item = order_[pos];
    for (std::size_t a = 0; a < n_; ++a) {
      if (!instance_.agents[a].covers(item)) continue;
      load_[a] += weight_[item];
      owner_[item] = a;
      maxmin(pos + 1);
      load_[a] -= weight_[item];
    }
  }

  void minmax(std::size_t pos, long long current) {
    if (current >= best_) return;
    if (pos == m_) {
      best_ = current;
      best_owner_ = owner_;
      return;
    }
    const std::size_t item = order_[pos];
    for (std::size_t a = 0; a < n_; ++a) {
      if (!instance_.agents[a].covers(item)) continue;
      load_[a] += weight_[item];
      owner_[item] = a;
      minmax(pos + 1, std::max(current, load_[a]));
      load_[a] -= weight_[item];
    }
  }

  const ConvexInstance& instance_;
  const std::vector<long long>& weight_;
  std::size_t m_;
  std::size_t n_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<long long>> remaining_;
  std::vector<long long> load_;
  std::vector<std::size_t> owner_;
  std::vector<std::size_t> best_owner_;
  long long best_ = 0;
};

OracleResult finish(const ConvexInstance& instance, const Scaled& scaled, long long best,
                    const std::vector<std::size_t>& owner) {
  OracleResult result{Value(mpz_class(static_cast<long>(best)), scaled.denominator), Assignment::from_owners(instance.mode, instance.agent_count(), owner)};
  result.opt.canonicalize();
  return result;
}

}  // namespace

double placement_count(const ConvexInstance& instance) {
  double count = 1;
  for (std::size_t i = 0; i < instance.item_count(); ++i) {
    double degree = 0;
    for (const auto& agent : instance.agents) degree += agent.covers(i) ? 1 : 0;
    count *= degree;
  }
  return count;
}

OracleResult opt_maxmin(const ConvexInstance& instance) {
  guard(instance);
  const auto scaled = common_denominator(instance);
  Search search(instance, scaled.weight);
  const long long best = search.run_maxmin();
  return finish(instance, scaled, best, search.best_owner());
}

OracleResult opt_minmax(const ConvexInstance& instance) {
  guard(instance);
  const auto scaled = common_denominator(instance);
  Search search(instance, scaled.weight);
  const long long best = search.run_minmax();
  return finish(instance, scaled, best, search.best_owner());
}

OracleResult opt(const ConvexInstance& instance) {
  return instance.mode == Mode::MaxMin ? opt_maxmin(instance) : opt_minmax(instance);
}

}  // namespace ordalloc
