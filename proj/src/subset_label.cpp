#include "weylfan/subset_label.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace weylfan {

namespace {

bool abs_less(int a, int b) {
  int aa = std::abs(a), ab = std::abs(b);
  if (aa != ab) return aa < ab;
  return a < b;
}

}  // namespace

SubsetLabel::SubsetLabel(std::vector<int> elems) : elems_(std::move(elems)) {
  for (int v : elems_) {
    if (v == 0) throw std::invalid_argument("subset label may not contain 0");
  }
  std::sort(elems_.begin(), elems_.end(), abs_less);
  for (std::size_t i = 1; i < elems_.size(); ++i) {
    if (elems_[i] == elems_[i - 1])
      throw std::invalid_argument("repeated element in subset label");
  }
}

SubsetLabel SubsetLabel::parse(std::string_view text) {
  std::vector<int> elems;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ',')) {
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(token, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad subset element '" + token + "'");
    }
    while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
    if (pos != token.size())
      throw std::invalid_argument("bad subset element '" + token + "'");
    elems.push_back(value);
  }
  if (elems.empty()) throw std::invalid_argument("empty subset label");
  return SubsetLabel(std::move(elems));
}

bool SubsetLabel::contains(int value) const {
  return std::find(elems_.begin(), elems_.end(), value) != elems_.end();
}

bool SubsetLabel::subset_of(const SubsetLabel& other) const {
  for (int v : elems_) {
    if (!other.contains(v)) return false;
  }
  return true;
}

int SubsetLabel::negatives() const {
  return static_cast<int>(std::count_if(elems_.begin(), elems_.end(),
                                        [](int v) { return v < 0; }));
}

std::string SubsetLabel::str() const {
  std::string out;
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(elems_[i]);
  }
  return out;
}

bool operator<(const SubsetLabel& a, const SubsetLabel& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.elems_.begin(), a.elems_.end(),
                                      b.elems_.begin(), b.elems_.end(),
                                      abs_less);
}

}  // namespace weylfan
