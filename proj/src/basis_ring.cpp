#include "weylfan/basis_ring.hpp"

#include <algorithm>
#include <cstdlib>

namespace weylfan {

std::string format_combination(const BasisCombination& c) {
  if (c.terms.empty()) return "0";
  std::string out;
  for (const auto& [w, coeff] : c.terms) {
    if (out.empty()) {
      if (coeff < 0) out += "-";
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    long long mag = std::abs(coeff);
    if (mag != 1) out += std::to_string(mag) + "*";
    out += "[X_" + format_element(w) + "]";
  }
  return out;
}

std::size_t CohomologyRing::default_size_cap() {
  if (const char* env = std::getenv("WEYLFAN_SIZE_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 50000;
}

namespace {

// refuse before enumerating anything
const RootSystem& check_cap(const RootSystem& sys, std::size_t size_cap) {
  if (weyl_order(sys) > size_cap)
    throw SizeCapError("Weyl group of " + sys.name() + " has " +
                       std::to_string(weyl_order(sys)) +
                       " elements, above the size cap of " +
                       std::to_string(size_cap));
  return sys;
}

}  // namespace

CohomologyRing::CohomologyRing(const RootSystem& sys, std::size_t size_cap)
    : group_(check_cap(sys, size_cap)) {}

long long CohomologyRing::pairing(std::size_t u_idx, std::size_t v_idx) const {
  // I_{u,v} = <[Y^u][X_v]> = triple(v, id, u)
  return triple_number(group_.element(v_idx),
                       group_.element(group_.identity_index()),
                       group_.element(u_idx));
}

PairingMatrix CohomologyRing::pairing_matrix() const {
  PairingMatrix out{group_.system(), {}};
  for (std::size_t u = 0; u < group_.size(); ++u)
    for (std::size_t v = 0; v < group_.size(); ++v) {
      if (group_.descent_count(u) != group_.descent_count(v)) continue;
      long long value = pairing(u, v);
      if (value != 0) out.entries.push_back(PairingEntry{u, v, value});
    }
  return out;
}

const CohomologyRing::DegreeBlock& CohomologyRing::block(int degree) const {
  std::scoped_lock lock(mutex_);
  auto it = blocks_.find(degree);
  if (it != blocks_.end()) return *it->second;

  auto blk = std::make_unique<DegreeBlock>();
  for (std::size_t idx = 0; idx < group_.size(); ++idx)
    if (group_.descent_count(idx) == degree) blk->order.push_back(idx);
  // ordering that refines the Bruhat order: length, then one-line notation
  std::sort(blk->order.begin(), blk->order.end(),
            [&](std::size_t a, std::size_t b) {
              if (group_.length(a) != group_.length(b))
                return group_.length(a) < group_.length(b);
              return group_.element(a) < group_.element(b);
            });
  const std::size_t size = blk->order.size();
  blk->inner.assign(size * size, 0);
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c)
      blk->inner[r * size + c] = pairing(blk->order[r], blk->order[c]);
  return *blocks_.emplace(degree, std::move(blk)).first->second;
}

BasisCombination CohomologyRing::structure_constants(const WeylElement& u,
                                                     const WeylElement& v) const {
  if (u.system != group_.system() || v.system != group_.system())
    throw std::invalid_argument("elements do not belong to this ring");
  validate_element(u);
  validate_element(v);
  BasisCombination result;
  const int degree = descent_count(u) + descent_count(v);
  if (degree > group_.system().rank) return result;  // above the top degree

  const DegreeBlock& blk = block(degree);
  const std::size_t size = blk.order.size();
  // forward substitution in I c = t: the pairing vanishes unless the row
  // element dominates the column element in Bruhat order, so with rows in
  // length order the system is unitriangular and c stays integral
  std::vector<long long> c(size, 0);
  for (std::size_t r = 0; r < size; ++r) {
    long long value =
        triple_number(u, v, group_.element(blk.order[r]));
    for (std::size_t p = 0; p < r; ++p) {
      if (c[p] == 0) continue;
      value -= blk.inner[r * size + p] * c[p];
    }
    c[r] = value;
  }
  for (std::size_t r = 0; r < size; ++r)
    result.add(group_.element(blk.order[r]), c[r]);
  return result;
}

BasisCombination CohomologyRing::expand_product(
    const std::vector<WeylElement>& classes) const {
  BasisCombination acc;
  acc.add(group_.element(group_.identity_index()), 1);
  for (const WeylElement& cls : classes) {
    BasisCombination next;
    for (const auto& [w, coeff] : acc.terms) {
      BasisCombination partial = structure_constants(w, cls);
      for (const auto& [x, c2] : partial.terms) next.add(x, coeff * c2);
    }
    acc = std::move(next);
  }
  return acc;
}

bool CohomologyRing::duality_check(const WeylElement& u,
                                   const WeylElement& v) const {
  BasisCombination c = structure_constants(u, v);
  for (std::size_t w = 0; w < group_.size(); ++w) {
    long long lhs = triple_number(u, v, group_.element(w));
    long long rhs = 0;
    for (const auto& [wp, coeff] : c.terms)
      rhs += pairing(w, group_.index_of(wp)) * coeff;
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace weylfan
