#pragma once

// Buchberger's algorithm, normal forms and ideals with cached Groebner bases.

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "gitfan/polynomial.hpp"

namespace gitfan {

/// Remainder of f on division by G: no term is divisible by a leading
/// monomial of G, and f - result lies in the ideal generated by G.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& g, const MonomialOrder& ord);

/// lcm/LT(f) * f - lcm/LT(g) * g with monic leading terms.
Polynomial spoly(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

struct BuchbergerOptions {
  /// Variables (bit i = variable i) whose maximal powers are divided out of
  /// every new basis element. Zero gives the plain algorithm.
  std::uint64_t divide_mask = 0;
  /// Return {1} as soon as a nonzero constant appears.
  bool stop_on_unit = false;
  /// Polled between pair reductions; when set the run is abandoned.
  const std::atomic<bool>* cancel = nullptr;
};

/// Reduced Groebner basis with monic elements, sorted by descending leading
/// monomial. Uses the product and chain criteria and the normal selection
/// strategy. Returns nullopt only when cancelled.
std::optional<std::vector<Polynomial>> buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& ord,
                                                  const BuchbergerOptions& opts);
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& ord);

/// True iff every s-polynomial of G reduces to zero modulo G.
bool is_groebner_basis(const std::vector<Polynomial>& g, const MonomialOrder& ord);

/// Finitely generated ideal. Zero generators are dropped. Groebner bases are
/// computed on demand and cached per ordering; the cache is shared between
/// copies and is safe for concurrent readers.
class Ideal {
 public:
  explicit Ideal(RingPtr ring, std::vector<Polynomial> gens = {});

  [[nodiscard]] const RingPtr& ring() const { return ring_; }
  [[nodiscard]] const std::vector<Polynomial>& generators() const { return gens_; }
  [[nodiscard]] bool is_zero() const { return gens_.empty(); }

  void add_generator(const Polynomial& f);

  [[nodiscard]] const std::vector<Polynomial>& groebner_basis(const MonomialOrder& ord) const;
  /// Groebner basis under the standard-degree ordering.
  [[nodiscard]] const std::vector<Polynomial>& groebner_basis() const;

  [[nodiscard]] bool contains(const Polynomial& f) const;
  [[nodiscard]] bool contains(const Ideal& other) const;
  [[nodiscard]] bool is_unit() const;

  /// Equality as ideals by mutual membership.
  friend bool operator==(const Ideal& a, const Ideal& b) { return a.contains(b) && b.contains(a); }

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::string, std::shared_ptr<const std::vector<Polynomial>>> bases;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

}  // namespace gitfan
