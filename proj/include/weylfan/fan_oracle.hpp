#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "weylfan/intersect.hpp"
#include "weylfan/weyl.hpp"

namespace weylfan {

// A ray of the Weyl-chamber fan: a coweight with its subset name and its
// integer coordinates in the basis of fundamental coweights.
struct Ray {
  SubsetLabel label;
  std::vector<long long> coords;
};

// The Weyl-chamber fan over the coweight lattice.  Maximal cones are indexed
// by Weyl group elements in enumeration order; every cone matrix is
// unimodular, so the dual basis vectors are integral.
class FanModel {
 public:
  static FanModel build(const RootSystem& sys);

  const RootSystem& system() const { return system_; }
  int rank() const { return system_.rank; }

  const std::vector<Ray>& rays() const { return rays_; }
  std::size_t ray_index(const SubsetLabel& label) const;

  std::size_t cone_count() const { return cone_rays_.size(); }
  // ray indices of the cone of u (ordered as u(omega_1), ..., u(omega_n))
  const std::vector<std::size_t>& cone_rays(std::size_t cone) const {
    return cone_rays_[cone];
  }
  // dual basis m_{sigma,j}, row j paired with cone ray j
  const std::vector<std::vector<long long>>& cone_dual(std::size_t cone) const {
    return cone_dual_[cone];
  }
  long long cone_det(std::size_t cone) const { return cone_det_[cone]; }

  // every root, written in simple-root coordinates; the pairing of a ray
  // with a root is the dot product of the two coordinate vectors
  const std::vector<std::vector<long long>>& root_coords() const {
    return root_coords_;
  }

 private:
  RootSystem system_;
  std::vector<Ray> rays_;
  std::map<SubsetLabel, std::size_t> ray_index_;
  std::vector<std::vector<std::size_t>> cone_rays_;
  std::vector<std::vector<std::vector<long long>>> cone_dual_;
  std::vector<long long> cone_det_;
  std::vector<std::vector<long long>> root_coords_;
};

inline constexpr unsigned long kDefaultOracleSeed = 20240229UL;

// Fixed-point localization on the fan: the integral of a degree-n product
// of divisor classes equals the sum over maximal cones of the product of
// dual-basis forms of the factors over the product over the cone's own
// forms, all evaluated at a generic lattice point.  Everything is exact
// rational arithmetic; the computation runs at two independent generic
// points which must agree and be integral.
class LocalizationOracle {
 public:
  explicit LocalizationOracle(const FanModel& fan,
                              unsigned long seed = kDefaultOracleSeed,
                              int resample_limit = 64);
  ~LocalizationOracle();
  LocalizationOracle(const LocalizationOracle&) = delete;
  LocalizationOracle& operator=(const LocalizationOracle&) = delete;

  const FanModel& fan() const { return fan_; }
  unsigned long seed() const { return seed_; }

  long long integral(const TauMonomial& m) const;

  // <x, alpha> for ray x and the given root, used by the linear-relation
  // identity sum_x <x,alpha> tau_x = 0
  long long ray_root_pairing(std::size_t ray, std::size_t root) const;

 private:
  struct Impl;
  const FanModel& fan_;
  unsigned long seed_;
  std::unique_ptr<Impl> impl_;
};

enum class VerifyMode {
  ExhaustiveAll,     // every degree-n multiset of rays
  ExhaustiveChains,  // every degree-n chain monomial
  SampledMonomials,  // sample_size random degree-n multisets
  SampledNonChain,   // sample_size random non-chain multisets (0 vs 0)
};
const char* verify_mode_name(VerifyMode mode);

struct VerifyMismatch {
  TauMonomial monomial;
  long long formula;
  long long oracle;
};

struct VerifyReport {
  RootSystem system;
  VerifyMode mode = VerifyMode::ExhaustiveAll;
  unsigned long seed = 0;
  std::size_t total = 0;
  std::vector<VerifyMismatch> mismatches;
};

// Compares the closed-form intersection numbers against the localization
// oracle over the requested family of monomials.
VerifyReport verify_family(const LocalizationOracle& oracle, VerifyMode mode,
                           std::size_t sample_size = 1000,
                           unsigned long sample_seed = kDefaultOracleSeed);

// All degree-n chain monomials of the fan, in canonical order.
std::vector<TauMonomial> enumerate_chain_monomials(const FanModel& fan);

// Number of degree-n multisets of rays (the exhaustive sweep size).
unsigned long long count_degree_n_multisets(const FanModel& fan);

}  // namespace weylfan
