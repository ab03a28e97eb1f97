#ifndef TDSHUFFLE_CONTEXT_HPP
#define TDSHUFFLE_CONTEXT_HPP

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "tdshuffle/tensor.hpp"

namespace tdshuffle {

// Thrown when a structural guarantee the algorithms rely on is observed to
// fail at runtime (e.g. the antipode recursion seeing a non-decreasing
// degree). Reaching one of these is a bug, not a usage error.
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// Bundles the base bialgebra with the memo caches the recursive operations
// share. All caches are keyed purely on basis data, and every cached
// operation is deterministic given the base, so concurrent readers may race
// to fill an entry without affecting results.
class Context {
 public:
  explicit Context(std::shared_ptr<const BaseOps> base);
  // Convenience constructor for the shipped polynomial base.
  static Context polynomial(std::size_t vars);

  Context(Context&&) noexcept = default;
  Context& operator=(Context&&) noexcept = default;
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;

  const BaseOps& base() const { return *base_; }
  std::size_t vars() const { return base_->vars(); }

  TensorWord unit_word() const { return TensorWord::unit(vars()); }
  TensorElement unit_element(Space space) const {
    return TensorElement::unit_word(space, vars());
  }
  TensorElement zero(Space space) const { return TensorElement(space, vars()); }

  // Cache accessors: a copy of the entry if present.
  bool lookup_shuffle(const TensorWord& a, const TensorWord& b,
                      TensorElement* out) const;
  void store_shuffle(const TensorWord& a, const TensorWord& b,
                     const TensorElement& value) const;
  bool lookup_coproduct(const TensorWord& w, TensorSquareElement* out) const;
  void store_coproduct(const TensorWord& w,
                       const TensorSquareElement& value) const;
  bool lookup_antipode(const TensorWord& w, TensorElement* out) const;
  void store_antipode(const TensorWord& w, const TensorElement& value) const;

 private:
  struct Caches {
    std::mutex mutex;
    // Keyed on the sorted word pair; the shuffle is commutative. The cache
    // is flushed wholesale when its stored-term budget is exceeded: the
    // entries that matter for the recursion rebuild cheaply, while one-shot
    // results of large random products would otherwise grow without bound.
    std::map<std::pair<TensorWord, TensorWord>, TensorElement> shuffle;
    std::size_t shuffle_terms = 0;
    std::map<TensorWord, TensorSquareElement> coproduct;
    std::map<TensorWord, TensorElement> antipode;
  };

  std::shared_ptr<const BaseOps> base_;
  std::unique_ptr<Caches> caches_;
};

}  // namespace tdshuffle

#endif
