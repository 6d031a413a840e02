#include "pomega/nba.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "pomega/errors.hpp"

namespace pomega {

bool Nba::is_initial(int q) const {
  return std::binary_search(initial.begin(), initial.end(), q);
}

bool Nba::is_accepting(int q) const {
  return std::binary_search(accepting.begin(), accepting.end(), q);
}

void Nba::normalize() {
  auto dedup = [](std::vector<int>& xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  };
  dedup(initial);
  dedup(accepting);
  std::sort(transitions.begin(), transitions.end());
  transitions.erase(std::unique(transitions.begin(), transitions.end()), transitions.end());
  if (tracks.size() > 24) throw std::invalid_argument("too many tracks (limit 24)");
  auto in_range = [this](int q) { return 0 <= q && q < states; };
  for (int q : initial)
    if (!in_range(q)) throw std::invalid_argument("initial state out of range");
  for (int q : accepting)
    if (!in_range(q)) throw std::invalid_argument("accepting state out of range");
  for (const auto& t : transitions) {
    if (!in_range(t.from) || !in_range(t.to))
      throw std::invalid_argument("transition endpoint out of range");
    if (t.letter >= letter_count())
      throw std::invalid_argument("transition letter exceeds track width");
  }
}

std::vector<std::vector<Transition>> Nba::by_source() const {
  std::vector<std::vector<Transition>> out(states);
  for (const auto& t : transitions) out[t.from].push_back(t);
  return out;
}

namespace {

/// Canonicalizes a stem/loop letter sequence: shrink the loop to its minimal
/// period, then fold stem letters that match the loop one step earlier.
void canonicalize_word(std::vector<std::uint32_t>& stem, std::vector<std::uint32_t>& loop) {
  const std::size_t len = loop.size();
  for (std::size_t d = 1; d < len; ++d) {
    if (len % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < len && periodic; ++i) periodic = loop[i] == loop[i % d];
    if (periodic) {
      loop.resize(d);
      break;
    }
  }
  while (!stem.empty() && stem.back() == loop.back()) {
    stem.pop_back();
    loop.insert(loop.begin(), loop.back());
    loop.pop_back();
  }
}

} // namespace

LassoWord::LassoWord(int w, std::vector<std::uint32_t> s, std::vector<std::uint32_t> l)
    : width(w), stem(std::move(s)), loop(std::move(l)) {
  if (loop.empty()) throw std::invalid_argument("lasso loop must be nonempty");
  const std::uint32_t limit = w >= 32 ? 0xffffffffu : (1u << w) - 1;
  for (std::uint32_t c : stem)
    if (c > limit) throw std::invalid_argument("letter exceeds track width");
  for (std::uint32_t c : loop)
    if (c > limit) throw std::invalid_argument("letter exceeds track width");
  canonicalize_word(stem, loop);
}

namespace {

std::string letter_to_bits(std::uint32_t letter, std::size_t width) {
  if (width == 0) return "-";
  std::string s(width, '0');
  for (std::size_t k = 0; k < width; ++k)
    if (letter & (1u << k)) s[k] = '1';
  return s;
}

std::uint32_t bits_to_letter(const std::string& bits, std::size_t width, int lineno) {
  if (width == 0) {
    if (bits != "-")
      throw ParseError("expected '-' letter for a trackless automaton", lineno, 1);
    return 0;
  }
  if (bits.size() != width)
    throw ParseError("letter width does not match track count: " + bits, lineno, 1);
  std::uint32_t letter = 0;
  for (std::size_t k = 0; k < width; ++k) {
    if (bits[k] == '1') letter |= 1u << k;
    else if (bits[k] != '0')
      throw ParseError("invalid letter bit: " + bits, lineno, 1);
  }
  return letter;
}

} // namespace

std::string nba_to_text(const Nba& a) {
  std::ostringstream out;
  out << "tracks:";
  for (const auto& t : a.tracks) out << ' ' << t;
  out << '\n' << "states: " << a.states << '\n';
  out << "init:";
  for (int q : a.initial) out << ' ' << q;
  out << '\n' << "final:";
  for (int q : a.accepting) out << ' ' << q;
  out << '\n';
  std::vector<std::string> lines;
  lines.reserve(a.transitions.size());
  for (const auto& t : a.transitions) {
    std::ostringstream line;
    line << t.from << ' ' << letter_to_bits(t.letter, a.tracks.size()) << ' ' << t.to;
    lines.push_back(line.str());
  }
  std::sort(lines.begin(), lines.end());
  for (const auto& l : lines) out << l << '\n';
  return out.str();
}

Nba nba_from_text(const std::string& text) {
  Nba a;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto next_content_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      const auto pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos || line[pos] == '#') continue;
      return true;
    }
    return false;
  };
  auto expect_header = [&](const std::string& key) -> std::string {
    if (!next_content_line()) throw ParseError("missing '" + key + ":' line", lineno, 1);
    const std::string prefix = key + ":";
    const auto start = line.find_first_not_of(" \t");
    if (line.compare(start, prefix.size(), prefix) != 0)
      throw ParseError("expected '" + key + ":' line, found: " + line, lineno, 1);
    return line.substr(start + prefix.size());
  };
  {
    std::istringstream fields(expect_header("tracks"));
    std::string name;
    while (fields >> name) a.tracks.push_back(name);
  }
  {
    std::istringstream fields(expect_header("states"));
    if (!(fields >> a.states)) throw ParseError("invalid states count", lineno, 1);
  }
  for (const char* key : {"init", "final"}) {
    std::istringstream fields(expect_header(key));
    int q;
    auto& out = std::string(key) == "init" ? a.initial : a.accepting;
    while (fields >> q) out.push_back(q);
  }
  while (next_content_line()) {
    std::istringstream fields(line);
    int from, to;
    std::string bits;
    if (!(fields >> from >> bits >> to))
      throw ParseError("invalid transition line: " + line, lineno, 1);
    a.transitions.push_back({from, bits_to_letter(bits, a.tracks.size(), lineno), to});
  }
  a.normalize();
  return a;
}

Nba word_automaton(const LassoWord& w, std::vector<std::string> tracks) {
  if (static_cast<int>(tracks.size()) != w.width)
    throw std::invalid_argument("word width does not match track count");
  Nba a;
  a.tracks = std::move(tracks);
  const int stem_len = static_cast<int>(w.stem.size());
  const int loop_len = static_cast<int>(w.loop.size());
  a.states = stem_len + loop_len;
  a.initial = {0};
  for (int i = 0; i < stem_len; ++i) a.transitions.push_back({i, w.stem[i], i + 1});
  for (int j = 0; j < loop_len; ++j) {
    const int from = stem_len + j;
    const int to = j + 1 < loop_len ? from + 1 : stem_len;
    a.transitions.push_back({from, w.loop[j], to});
  }
  a.accepting = {stem_len};
  a.normalize();
  return a;
}

LassoWord encode_word(const Valuation& v, const std::vector<std::string>& tracks) {
  std::size_t stem_len = 0, loop_len = 1;
  std::vector<const UpSet*> sets;
  sets.reserve(tracks.size());
  for (const auto& name : tracks) {
    auto it = v.find(name);
    if (it == v.end()) throw std::out_of_range("unbound variable: " + name);
    sets.push_back(&it->second);
    stem_len = std::max(stem_len, it->second.stem().size());
    loop_len = std::lcm(loop_len, it->second.loop().size());
  }
  auto letter_at = [&](std::uint64_t i) {
    std::uint32_t letter = 0;
    for (std::size_t k = 0; k < sets.size(); ++k)
      if (sets[k]->contains(i)) letter |= 1u << k;
    return letter;
  };
  std::vector<std::uint32_t> stem(stem_len), loop(loop_len);
  for (std::size_t i = 0; i < stem_len; ++i) stem[i] = letter_at(i);
  for (std::size_t j = 0; j < loop_len; ++j) loop[j] = letter_at(stem_len + j);
  return LassoWord(static_cast<int>(tracks.size()), std::move(stem), std::move(loop));
}

Valuation decode_word(const LassoWord& w, const std::vector<std::string>& tracks) {
  if (static_cast<int>(tracks.size()) != w.width)
    throw std::invalid_argument("word width does not match track count");
  Valuation v;
  for (std::size_t k = 0; k < tracks.size(); ++k) {
    std::vector<bool> stem(w.stem.size()), loop(w.loop.size());
    for (std::size_t i = 0; i < w.stem.size(); ++i) stem[i] = (w.stem[i] >> k) & 1;
    for (std::size_t j = 0; j < w.loop.size(); ++j) loop[j] = (w.loop[j] >> k) & 1;
    v[tracks[k]] = UpSet(std::move(stem), std::move(loop));
  }
  return v;
}

} // namespace pomega
