#include "pomega/upset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pomega {

UpSet::UpSet(std::vector<bool> stem, std::vector<bool> loop)
    : stem_(std::move(stem)), loop_(std::move(loop)) {
  if (loop_.empty()) throw std::invalid_argument("UpSet loop must be nonempty");
  canonicalize();
}

UpSet UpSet::empty() { return UpSet(); }

UpSet UpSet::all() { return UpSet({}, {true}); }

UpSet UpSet::initial() { return UpSet({true}, {false}); }

UpSet UpSet::singleton(std::uint64_t n) {
  std::vector<bool> stem(n + 1, false);
  stem[n] = true;
  return UpSet(std::move(stem), {false});
}

void UpSet::canonicalize() {
  // Shrink the loop to its minimal period.
  const std::size_t len = loop_.size();
  for (std::size_t d = 1; d < len; ++d) {
    if (len % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < len && periodic; ++i) periodic = loop_[i] == loop_[i % d];
    if (periodic) {
      loop_.resize(d);
      break;
    }
  }
  // Fold stem bits that agree with the loop one step earlier; rotating the
  // loop right keeps the denoted set unchanged.
  while (!stem_.empty() && stem_.back() == loop_.back()) {
    stem_.pop_back();
    loop_.insert(loop_.begin(), loop_.back());
    loop_.pop_back();
  }
}

bool UpSet::contains(std::uint64_t n) const {
  if (n < stem_.size()) return stem_[n];
  return loop_[(n - stem_.size()) % loop_.size()];
}

bool UpSet::is_infinite() const {
  return std::find(loop_.begin(), loop_.end(), true) != loop_.end();
}

UpSet pointwise(const UpSet& a, const UpSet& b, bool (*f)(bool, bool)) {
  const std::size_t stem_len = std::max(a.stem_.size(), b.stem_.size());
  const std::size_t loop_len = std::lcm(a.loop_.size(), b.loop_.size());
  std::vector<bool> stem(stem_len), loop(loop_len);
  for (std::size_t i = 0; i < stem_len; ++i) stem[i] = f(a.contains(i), b.contains(i));
  for (std::size_t j = 0; j < loop_len; ++j)
    loop[j] = f(a.contains(stem_len + j), b.contains(stem_len + j));
  return UpSet(std::move(stem), std::move(loop));
}

UpSet UpSet::complement() const {
  std::vector<bool> stem(stem_), loop(loop_);
  stem.flip();
  loop.flip();
  return UpSet(std::move(stem), std::move(loop));
}

UpSet UpSet::join(const UpSet& other) const {
  return pointwise(*this, other, [](bool x, bool y) { return x || y; });
}

UpSet UpSet::meet(const UpSet& other) const {
  return pointwise(*this, other, [](bool x, bool y) { return x && y; });
}

UpSet UpSet::next() const {
  std::vector<bool> stem(stem_), loop(loop_);
  if (stem.empty()) {
    // Pure loop: shift the phase left by one.
    loop.push_back(loop.front());
    loop.erase(loop.begin());
  } else {
    stem.erase(stem.begin());
  }
  return UpSet(std::move(stem), std::move(loop));
}

UpSet UpSet::eventually() const {
  if (is_infinite()) return all();
  // Finite: the downward closure of the maximum element, if any.
  std::size_t max_plus_one = 0;
  for (std::size_t i = 0; i < stem_.size(); ++i)
    if (stem_[i]) max_plus_one = i + 1;
  if (max_plus_one == 0) return empty();
  return UpSet(std::vector<bool>(max_plus_one, true), {false});
}

bool UpSet::subset_of(const UpSet& other) const {
  return meet(other.complement()).is_empty();
}

UpSet UpSet::parse(const std::string& text) {
  const auto sep = text.find(';');
  if (sep == std::string::npos)
    throw std::invalid_argument("UpSet text must have the form stem;loop: " + text);
  auto bits = [&](const std::string& part, const char* what) {
    std::vector<bool> out;
    out.reserve(part.size());
    for (char c : part) {
      if (c == '0') out.push_back(false);
      else if (c == '1') out.push_back(true);
      else
        throw std::invalid_argument(std::string("invalid character in UpSet ") + what +
                                    ": " + text);
    }
    return out;
  };
  auto stem = bits(text.substr(0, sep), "stem");
  auto loop = bits(text.substr(sep + 1), "loop");
  if (loop.empty()) throw std::invalid_argument("UpSet loop must be nonempty: " + text);
  return UpSet(std::move(stem), std::move(loop));
}

std::string UpSet::str() const {
  std::string out;
  out.reserve(stem_.size() + loop_.size() + 1);
  for (bool b : stem_) out.push_back(b ? '1' : '0');
  out.push_back(';');
  for (bool b : loop_) out.push_back(b ? '1' : '0');
  return out;
}

Valuation parse_valuation(const std::string& text) {
  Valuation v;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("valuation line must have the form name = stem;loop: " + line);
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string name = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (name.empty()) throw std::invalid_argument("missing variable name: " + line);
    v[name] = UpSet::parse(value);
  }
  return v;
}

std::string valuation_to_text(const Valuation& v) {
  std::string out;
  for (const auto& [name, set] : v) {
    out += name;
    out += " = ";
    out += set.str();
    out += '\n';
  }
  return out;
}

} // namespace pomega
