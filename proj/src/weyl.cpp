#include "weylfan/weyl.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace weylfan {

namespace {

bool same_sign(int a, int b) { return (a > 0) == (b > 0); }

// Descent test at position i (1-based) by the one-line conditions of the
// signed types:
//   i < last:  u(i) > u(i+1) with the same sign, or u(i) < u(i+1) with
//              different signs;
// plus the family-specific conditions at the tail positions.
bool signed_adjacent_descent(int a, int b) {
  if (same_sign(a, b)) return a > b;
  return a < b;
}

std::vector<long long> apply_ambient(const WeylElement& u,
                                     const std::vector<long long>& vec) {
  std::vector<long long> out(vec.size(), 0);
  for (std::size_t k = 0; k < u.oneline.size(); ++k) {
    int img = u.oneline[k];
    if (img > 0)
      out[static_cast<std::size_t>(img) - 1] += vec[k];
    else
      out[static_cast<std::size_t>(-img) - 1] -= vec[k];
  }
  return out;
}

long long dot(const std::vector<long long>& a, const std::vector<long long>& b) {
  long long s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

bool is_negative_root(const RootSystemGeometry& g, const std::vector<long long>& v) {
  return dot(g.dominant, v) < 0;
}

}  // namespace

void validate_element(const WeylElement& u) {
  const int m = oneline_size(u.system);
  if (static_cast<int>(u.oneline.size()) != m)
    throw std::invalid_argument("element '" + format_element(u) + "' must have " +
                                std::to_string(m) + " entries");
  std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
  int negative = 0;
  for (int v : u.oneline) {
    int a = std::abs(v);
    if (v == 0 || a > m || seen[static_cast<std::size_t>(a)])
      throw std::invalid_argument("bad one-line entry '" + std::to_string(v) +
                                  "' in element");
    seen[static_cast<std::size_t>(a)] = true;
    if (v < 0) ++negative;
  }
  switch (u.system.family) {
    case Family::A:
      if (negative > 0)
        throw std::invalid_argument("type A elements have positive entries");
      break;
    case Family::B:
    case Family::C:
      break;
    case Family::D:
      if (negative % 2 != 0)
        throw std::invalid_argument(
            "type D elements need an even number of negative entries");
      break;
    case Family::G2:
      if (negative != 0 && negative != 3)
        throw std::invalid_argument("G2 elements have all entries of one sign");
      break;
  }
}

WeylElement identity_element(const RootSystem& sys) {
  WeylElement u{sys, std::vector<int>(static_cast<std::size_t>(oneline_size(sys)))};
  std::iota(u.oneline.begin(), u.oneline.end(), 1);
  return u;
}

WeylElement simple_reflection(const RootSystem& sys, int i) {
  const int n = sys.rank;
  if (i < 1 || i > n) throw std::invalid_argument("simple reflection index out of range");
  WeylElement s = identity_element(sys);
  switch (sys.family) {
    case Family::A:
      std::swap(s.oneline[i - 1], s.oneline[i]);
      break;
    case Family::B:
    case Family::C:
      if (i < n)
        std::swap(s.oneline[i - 1], s.oneline[i]);
      else
        s.oneline[n - 1] = -n;
      break;
    case Family::D:
      if (i <= n - 2) {
        std::swap(s.oneline[i - 1], s.oneline[i]);
      } else if (i == n - 1) {  // reflection for t_{n-1} + t_n
        s.oneline[n - 2] = -n;
        s.oneline[n - 1] = -(n - 1);
      } else {  // reflection for t_{n-1} - t_n
        std::swap(s.oneline[n - 2], s.oneline[n - 1]);
      }
      break;
    case Family::G2:
      if (i == 1) {
        s.oneline = {2, 1, 3};
      } else {
        s.oneline = {-1, -3, -2};
      }
      break;
  }
  return s;
}

WeylElement compose(const WeylElement& u, const WeylElement& v) {
  if (u.system != v.system)
    throw std::invalid_argument("cannot compose elements of different systems");
  WeylElement w{u.system, std::vector<int>(u.oneline.size())};
  for (std::size_t k = 0; k < v.oneline.size(); ++k)
    w.oneline[k] = u.image(v.oneline[k]);
  return w;
}

WeylElement inverse(const WeylElement& u) {
  WeylElement w{u.system, std::vector<int>(u.oneline.size())};
  for (std::size_t k = 0; k < u.oneline.size(); ++k) {
    int img = u.oneline[k];
    if (img > 0)
      w.oneline[static_cast<std::size_t>(img) - 1] = static_cast<int>(k) + 1;
    else
      w.oneline[static_cast<std::size_t>(-img) - 1] = -(static_cast<int>(k) + 1);
  }
  return w;
}

std::vector<WeylElement> enumerate_weyl(const RootSystem& sys) {
  const int m = oneline_size(sys);
  std::vector<int> base(static_cast<std::size_t>(m));
  std::iota(base.begin(), base.end(), 1);
  std::vector<WeylElement> out;
  out.reserve(weyl_order(sys));
  do {
    switch (sys.family) {
      case Family::A:
        out.push_back(WeylElement{sys, base});
        break;
      case Family::G2:
        out.push_back(WeylElement{sys, base});
        {
          std::vector<int> neg(base.size());
          for (std::size_t k = 0; k < base.size(); ++k) neg[k] = -base[k];
          out.push_back(WeylElement{sys, std::move(neg)});
        }
        break;
      case Family::B:
      case Family::C:
      case Family::D:
        // every sign pattern on the current permutation
        for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
          if (sys.family == Family::D &&
              (std::popcount(mask) % 2) != 0)
            continue;
          std::vector<int> line(base.size());
          for (std::size_t k = 0; k < base.size(); ++k)
            line[k] = (mask >> k) & 1u ? -base[k] : base[k];
          out.push_back(WeylElement{sys, std::move(line)});
        }
        break;
    }
  } while (std::next_permutation(base.begin(), base.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> descents(const WeylElement& u) {
  const int n = u.system.rank;
  const auto& line = u.oneline;
  std::vector<int> out;
  switch (u.system.family) {
    case Family::A:
      for (int i = 1; i <= n; ++i)
        if (line[i - 1] > line[i]) out.push_back(i);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= n - 1; ++i)
        if (signed_adjacent_descent(line[i - 1], line[i])) out.push_back(i);
      if (line[n - 1] < 0) out.push_back(n);
      break;
    case Family::D: {
      for (int i = 1; i <= n - 2; ++i)
        if (signed_adjacent_descent(line[i - 1], line[i])) out.push_back(i);
      const int a = line[n - 2], b = line[n - 1];
      // position n-1: both entries negative, or mixed signs with the
      // negative entry smaller in absolute value than the positive one
      bool descent_here = a < 0 && b < 0;
      if (!same_sign(a, b)) descent_here = -std::min(a, b) < std::max(a, b);
      if (descent_here) out.push_back(n - 1);
      if (signed_adjacent_descent(a, b)) out.push_back(n);
      break;
    }
    case Family::G2:
      return descents_by_root_action(u);
  }
  return out;
}

std::vector<int> descents_by_root_action(const WeylElement& u) {
  const auto& g = geometry(u.system);
  std::vector<int> out;
  for (int i = 1; i <= u.system.rank; ++i) {
    if (is_negative_root(g, apply_ambient(u, g.simple_roots[i - 1])))
      out.push_back(i);
  }
  return out;
}

std::vector<int> ascents(const WeylElement& u) {
  std::vector<int> des = descents(u);
  std::vector<int> out;
  std::size_t k = 0;
  for (int i = 1; i <= u.system.rank; ++i) {
    if (k < des.size() && des[k] == i)
      ++k;
    else
      out.push_back(i);
  }
  return out;
}

int descent_count(const WeylElement& u) {
  return static_cast<int>(descents(u).size());
}

int length(const WeylElement& u) {
  const auto& g = geometry(u.system);
  int count = 0;
  for (const auto& root : g.positive_roots)
    if (is_negative_root(g, apply_ambient(u, root))) ++count;
  return count;
}

WeylElement longest_element(const RootSystem& sys) {
  const WeylElement* found = nullptr;
  auto all = enumerate_weyl(sys);
  for (const auto& u : all) {
    if (descent_count(u) == sys.rank) {
      if (found)
        throw std::logic_error("multiple all-descent elements in " + sys.name());
      found = &u;
    }
  }
  if (!found) throw std::logic_error("no all-descent element in " + sys.name());
  return *found;
}

SubsetLabel coweight_label(const WeylElement& u, int i) {
  const int n = u.system.rank;
  if (i < 1 || i > n) throw std::invalid_argument("coweight index out of range");
  const auto& line = u.oneline;
  switch (u.system.family) {
    case Family::A:
    case Family::B:
    case Family::C:
      return SubsetLabel(std::vector<int>(line.begin(), line.begin() + i));
    case Family::D: {
      if (i <= n - 2)
        return SubsetLabel(std::vector<int>(line.begin(), line.begin() + i));
      std::vector<int> elems(line.begin(), line.end());
      if (i == n) elems[static_cast<std::size_t>(n) - 1] = -elems[static_cast<std::size_t>(n) - 1];
      return SubsetLabel(std::move(elems));
    }
    case Family::G2:
      if (i == 1) return SubsetLabel({line[2], -line[1]});
      return SubsetLabel({line[2]});
  }
  throw std::logic_error("unreachable");
}

SubsetLabel act(const WeylElement& u, const SubsetLabel& s) {
  std::vector<int> elems;
  elems.reserve(s.elems().size());
  for (int v : s.elems()) elems.push_back(u.image(v));
  return SubsetLabel(std::move(elems));
}

std::vector<SubsetLabel> descent_labels(const WeylElement& u) {
  std::vector<SubsetLabel> out;
  for (int i : descents(u)) out.push_back(coweight_label(u, i));
  return out;
}

std::vector<SubsetLabel> ascent_labels(const WeylElement& u) {
  std::vector<SubsetLabel> out;
  for (int i : ascents(u)) out.push_back(coweight_label(u, i));
  return out;
}

std::string format_element(const WeylElement& u) {
  const bool compact =
      u.system.family == Family::A && oneline_size(u.system) <= 9 &&
      std::all_of(u.oneline.begin(), u.oneline.end(),
                  [](int v) { return v >= 1 && v <= 9; });
  if (compact) {
    std::string out;
    for (int v : u.oneline) out += static_cast<char>('0' + v);
    return out;
  }
  std::string out;
  for (std::size_t k = 0; k < u.oneline.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(u.oneline[k]);
  }
  return out;
}

WeylElement parse_element(const RootSystem& sys, std::string_view text) {
  std::vector<int> line;
  const bool has_separator =
      text.find(',') != std::string_view::npos ||
      text.find('-') != std::string_view::npos;
  if (!has_separator && sys.family == Family::A && oneline_size(sys) <= 9) {
    for (char c : text) {
      if (c < '1' || c > '9')
        throw std::invalid_argument("bad one-line digit '" + std::string(1, c) +
                                    "'");
      line.push_back(c - '0');
    }
  } else {
    std::istringstream in{std::string(text)};
    std::string token;
    while (std::getline(in, token, ',')) {
      std::size_t pos = 0;
      int value = 0;
      try {
        value = std::stoi(token, &pos);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad one-line entry '" + token + "'");
      }
      if (pos != token.size())
        throw std::invalid_argument("bad one-line entry '" + token + "'");
      line.push_back(value);
    }
  }
  WeylElement u{sys, std::move(line)};
  validate_element(u);
  return u;
}

WeylGroup::WeylGroup(const RootSystem& sys) : system_(sys) {
  elements_ = enumerate_weyl(sys);
  lengths_.reserve(elements_.size());
  descent_counts_.reserve(elements_.size());
  for (std::size_t idx = 0; idx < elements_.size(); ++idx) {
    index_.emplace(elements_[idx].oneline, idx);
    lengths_.push_back(weylfan::length(elements_[idx]));
    descent_counts_.push_back(weylfan::descent_count(elements_[idx]));
    if (lengths_.back() == 0) identity_ = idx;
  }
}

std::size_t WeylGroup::index_of(const WeylElement& u) const {
  auto it = index_.find(u.oneline);
  if (it == index_.end())
    throw std::invalid_argument("element '" + format_element(u) +
                                "' not in group " + system_.name());
  return it->second;
}

}  // namespace weylfan
