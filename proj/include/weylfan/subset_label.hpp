#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace weylfan {

// A coweight name: a finite set of nonzero integers.  For type A these are
// subsets of {1,...,n+1}; for the signed types subsets of {±1,...,±n} that
// never contain both i and -i.  Elements are kept sorted by absolute value
// so that equal sets compare equal and print identically.
class SubsetLabel {
 public:
  SubsetLabel() = default;
  explicit SubsetLabel(std::vector<int> elems);

  static SubsetLabel parse(std::string_view text);

  const std::vector<int>& elems() const { return elems_; }
  int size() const { return static_cast<int>(elems_.size()); }
  bool contains(int value) const;
  bool subset_of(const SubsetLabel& other) const;
  // Number of negative members; size-n labels of type D are "even" or "odd"
  // according to this count.
  int negatives() const;

  std::string str() const;

  friend bool operator==(const SubsetLabel& a, const SubsetLabel& b) {
    return a.elems_ == b.elems_;
  }
  friend bool operator!=(const SubsetLabel& a, const SubsetLabel& b) {
    return !(a == b);
  }
  // Total order: by cardinality first, then lexicographic on the canonical
  // element list.  Used for all deterministic iteration.
  friend bool operator<(const SubsetLabel& a, const SubsetLabel& b);

 private:
  std::vector<int> elems_;
};

}  // namespace weylfan
