#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "weylfan/root_system.hpp"
#include "weylfan/subset_label.hpp"

namespace weylfan {

// A Weyl group element in one-line notation.  Type A: a permutation of
// {1,...,n+1}, all entries positive.  B/C: a signed permutation of
// {±1,...,±n}.  D: a signed permutation with an even number of negative
// entries.  G2: a signed permutation of {±1,±2,±3} whose entries all carry
// the same sign.
struct WeylElement {
  RootSystem system;
  std::vector<int> oneline;

  // Image of a signed index: u(-i) = -u(i).
  int image(int i) const {
    return i > 0 ? oneline[static_cast<std::size_t>(i) - 1]
                 : -oneline[static_cast<std::size_t>(-i) - 1];
  }

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.system == b.system && a.oneline == b.oneline;
  }
  friend bool operator!=(const WeylElement& a, const WeylElement& b) {
    return !(a == b);
  }
  friend bool operator<(const WeylElement& a, const WeylElement& b) {
    return a.oneline < b.oneline;
  }
};

void validate_element(const WeylElement& u);  // throws std::invalid_argument

WeylElement identity_element(const RootSystem& sys);
WeylElement simple_reflection(const RootSystem& sys, int i);  // i in [1, rank]
WeylElement compose(const WeylElement& u, const WeylElement& v);  // u after v
WeylElement inverse(const WeylElement& u);

// All |W| elements, ordered lexicographically on one-line notation.
std::vector<WeylElement> enumerate_weyl(const RootSystem& sys);

// Descent positions of u: the i in [1, rank] with u(alpha_i) a negative
// root.  For the classical types these are evaluated by the literal
// one-line comparisons; ascents are the complement in [1, rank].
std::vector<int> descents(const WeylElement& u);
std::vector<int> ascents(const WeylElement& u);
int descent_count(const WeylElement& u);

// Same set computed by acting on the simple roots; used to cross-check the
// combinatorial conditions.
std::vector<int> descents_by_root_action(const WeylElement& u);

// Number of positive roots sent to negative roots by u.
int length(const WeylElement& u);

// The unique element with a descent at every position.
WeylElement longest_element(const RootSystem& sys);

// The subset naming the coweight u(omega_i), per the identification of the
// family.  For type D, i = rank-1 and i = rank name the two full-size sets
// u[n]_+ and u[n]_-.
SubsetLabel coweight_label(const WeylElement& u, int i);

// The Weyl action on coweight names: u applied member-wise.
SubsetLabel act(const WeylElement& u, const SubsetLabel& s);

// Labels of the descent (resp. ascent) positions, in position order.
std::vector<SubsetLabel> descent_labels(const WeylElement& u);
std::vector<SubsetLabel> ascent_labels(const WeylElement& u);

// One-line text formats: comma-separated signed integers everywhere; plain
// digit strings are additionally accepted and produced for type A when
// n+1 <= 9.
std::string format_element(const WeylElement& u);
WeylElement parse_element(const RootSystem& sys, std::string_view text);

// An enumerated Weyl group with cached lengths and descent counts,
// addressable by index in the canonical order.
class WeylGroup {
 public:
  explicit WeylGroup(const RootSystem& sys);

  const RootSystem& system() const { return system_; }
  std::size_t size() const { return elements_.size(); }
  const WeylElement& element(std::size_t idx) const { return elements_[idx]; }
  std::size_t index_of(const WeylElement& u) const;
  int length(std::size_t idx) const { return lengths_[idx]; }
  int descent_count(std::size_t idx) const { return descent_counts_[idx]; }
  std::size_t identity_index() const { return identity_; }

 private:
  RootSystem system_;
  std::vector<WeylElement> elements_;
  std::map<std::vector<int>, std::size_t> index_;
  std::vector<int> lengths_;
  std::vector<int> descent_counts_;
  std::size_t identity_ = 0;
};

}  // namespace weylfan
