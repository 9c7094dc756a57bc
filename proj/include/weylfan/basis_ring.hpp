#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "weylfan/intersect.hpp"
#include "weylfan/weyl.hpp"

namespace weylfan {

// Sparse integer combination of basis classes [X_u]; zero coefficients are
// never stored.
struct BasisCombination {
  std::map<WeylElement, long long> terms;

  void add(const WeylElement& w, long long c) {
    if (c == 0) return;
    auto [it, inserted] = terms.emplace(w, c);
    if (!inserted && (it->second += c) == 0) terms.erase(it);
  }
  friend bool operator==(const BasisCombination& a, const BasisCombination& b) {
    return a.terms == b.terms;
  }
};

std::string format_combination(const BasisCombination& c);

struct PairingEntry {
  std::size_t row;  // index of u in <[Y^u][X_v]>
  std::size_t col;  // index of v
  long long value;
};

struct PairingMatrix {
  RootSystem system;
  std::vector<PairingEntry> entries;  // nonzero entries, row-major order
};

class SizeCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The cohomology ring of the toric manifold of one Weyl-chamber fan: the
// pairing matrix I_{u,v} = <[Y^u][X_v]> and the structure constants of the
// basis {[X_u]}.  The pairing is unitriangular for any ordering of W that
// refines length, so the structure constants come out of an integral
// forward substitution; no division is ever performed.
class CohomologyRing {
 public:
  explicit CohomologyRing(const RootSystem& sys,
                          std::size_t size_cap = default_size_cap());

  // default cap on |W| for full-matrix work; the WEYLFAN_SIZE_CAP
  // environment variable overrides the built-in 50000
  static std::size_t default_size_cap();

  const WeylGroup& group() const { return group_; }

  long long pairing(std::size_t u_idx, std::size_t v_idx) const;
  PairingMatrix pairing_matrix() const;

  // coefficients of [X_u][X_v] = sum_w c_{u,v}^w [X_w]
  BasisCombination structure_constants(const WeylElement& u,
                                       const WeylElement& v) const;

  // left fold of structure_constants over a list of classes
  BasisCombination expand_product(const std::vector<WeylElement>& classes) const;

  // checks <[Y^w][X_u][X_v]> = sum_{w'} I_{w,w'} c_{u,v}^{w'} for every w
  bool duality_check(const WeylElement& u, const WeylElement& v) const;

 private:
  struct DegreeBlock {
    std::vector<std::size_t> order;  // element indices, (length, lex) order
    std::vector<long long> inner;    // row-major pairing restricted to order
  };
  const DegreeBlock& block(int degree) const;

  WeylGroup group_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::unique_ptr<DegreeBlock>> blocks_;
};

}  // namespace weylfan
