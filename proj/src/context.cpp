#include "tdshuffle/context.hpp"

namespace tdshuffle {

namespace {

std::pair<TensorWord, TensorWord> sorted_pair(const TensorWord& a,
                                              const TensorWord& b) {
  return a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
}

// Upper bound on the total number of terms held by the shuffle cache,
// roughly a few hundred MB. A single product's working set stays well under
// this, so flushes land between top-level computations in practice.
constexpr std::size_t kShuffleTermBudget = 400000;

}  // namespace

Context::Context(std::shared_ptr<const BaseOps> base)
    : base_(std::move(base)), caches_(std::make_unique<Caches>()) {
  if (!base_) {
    throw std::invalid_argument("context requires a base bialgebra");
  }
}

Context Context::polynomial(std::size_t vars) {
  return Context(std::make_shared<PolynomialBialgebra>(vars));
}

bool Context::lookup_shuffle(const TensorWord& a, const TensorWord& b,
                             TensorElement* out) const {
  std::lock_guard lock(caches_->mutex);
  auto it = caches_->shuffle.find(sorted_pair(a, b));
  if (it == caches_->shuffle.end()) return false;
  *out = it->second;
  return true;
}

void Context::store_shuffle(const TensorWord& a, const TensorWord& b,
                            const TensorElement& value) const {
  std::lock_guard lock(caches_->mutex);
  const std::size_t cost = value.terms().size() + 1;
  if (caches_->shuffle_terms + cost > kShuffleTermBudget) {
    caches_->shuffle.clear();
    caches_->shuffle_terms = 0;
  }
  if (caches_->shuffle.emplace(sorted_pair(a, b), value).second) {
    caches_->shuffle_terms += cost;
  }
}

bool Context::lookup_coproduct(const TensorWord& w,
                               TensorSquareElement* out) const {
  std::lock_guard lock(caches_->mutex);
  auto it = caches_->coproduct.find(w);
  if (it == caches_->coproduct.end()) return false;
  *out = it->second;
  return true;
}

void Context::store_coproduct(const TensorWord& w,
                              const TensorSquareElement& value) const {
  std::lock_guard lock(caches_->mutex);
  caches_->coproduct.emplace(w, value);
}

bool Context::lookup_antipode(const TensorWord& w, TensorElement* out) const {
  std::lock_guard lock(caches_->mutex);
  auto it = caches_->antipode.find(w);
  if (it == caches_->antipode.end()) return false;
  *out = it->second;
  return true;
}

void Context::store_antipode(const TensorWord& w,
                             const TensorElement& value) const {
  std::lock_guard lock(caches_->mutex);
  caches_->antipode.emplace(w, value);
}

}  // namespace tdshuffle
