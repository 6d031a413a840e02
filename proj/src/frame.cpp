#include "pomega/frame.hpp"

#include <sstream>
#include <stdexcept>

#include "pomega/errors.hpp"

namespace pomega {

LassoFrame LassoFrame::lasso(int size, int loop_start) {
  if (size < 2 || loop_start < 1 || loop_start >= size)
    throw std::invalid_argument("lasso frame needs size >= 2 and 1 <= loopstart < size");
  if (size > kMaxNodes) throw std::invalid_argument("frame size cap exceeded");
  LassoFrame fr;
  fr.size = size;
  fr.loop_start = loop_start;
  fr.leq.assign(size, 0);
  for (int x = 0; x < size; ++x) {
    for (int y = x; y < size; ++y) fr.leq[x] |= 1u << y;
    if (x >= loop_start)
      for (int y = loop_start; y < size; ++y) fr.leq[x] |= 1u << y;
  }
  return fr;
}

bool FrameCheckReport::ok() const {
  for (const auto& item : items)
    if (!item.pass) return false;
  return true;
}

FrameCheckReport check_frame(const LassoFrame& fr) {
  if (fr.size > LassoFrame::kMaxNodes)
    throw std::invalid_argument("frame size cap exceeded for the exhaustive subset check");
  if (fr.size < 2 || fr.loop_start < 1 || fr.loop_start >= fr.size ||
      static_cast<int>(fr.leq.size()) != fr.size)
    throw std::invalid_argument("malformed lasso frame");
  FrameCheckReport report;
  auto add = [&report](const char* name, bool pass, std::string detail) {
    report.items.push_back({name, pass, pass ? "" : std::move(detail)});
  };

  {
    bool pass = true;
    std::string detail;
    for (int x = 0; x < fr.size && pass; ++x)
      if (!fr.le(x, x)) {
        pass = false;
        detail = "not reflexive at x=" + std::to_string(x);
      }
    for (int x = 0; x < fr.size && pass; ++x)
      for (int y = 0; y < fr.size && pass; ++y)
        if (fr.le(x, y) && (fr.leq[y] & ~fr.leq[x])) {
          pass = false;
          detail = "not transitive at x=" + std::to_string(x) + ", y=" + std::to_string(y);
        }
    add("preorder", pass, std::move(detail));
  }
  {
    bool pass = true;
    std::string detail;
    for (int x = 0; x < fr.size && pass; ++x)
      if (!fr.le(x, fr.successor(x))) {
        pass = false;
        detail = "x <= f(x) fails at x=" + std::to_string(x);
      }
    for (int x = 0; x < fr.size && pass; ++x)
      for (int y = 0; y < fr.size && pass; ++y)
        if (x != y && fr.le(x, y) && !fr.le(fr.successor(x), y)) {
          pass = false;
          detail = "x < y but f(x) <= y fails at x=" + std::to_string(x) +
                   ", y=" + std::to_string(y);
        }
    add("(i) successor between", pass, std::move(detail));
  }
  {
    bool pass = true;
    std::string detail;
    const std::uint32_t full = fr.full();
    for (std::uint32_t k = 0; k <= full && pass; ++k) {
      std::uint32_t image = 0, up = 0;
      for (int x = 0; x < fr.size; ++x)
        if ((k >> x) & 1) {
          image |= 1u << fr.successor(x);
          up |= fr.leq[x];
        }
      if ((image & ~k) == 0 && (up & ~k) != 0) {
        pass = false;
        detail = "forward-closed set not upward closed: K=" + std::to_string(k);
      }
      if (k == full) break;
    }
    add("(ii) forward-closed sets upward closed", pass, std::move(detail));
  }
  {
    bool pass = true;
    std::string detail;
    for (int x = 0; x < fr.size && pass; ++x)
      if (!fr.le(0, x)) {
        pass = false;
        detail = "basepoint not below x=" + std::to_string(x);
      }
    add("(iii) basepoint minimum", pass, std::move(detail));
  }
  {
    bool pass = true;
    std::string detail;
    for (int x = 0; x < fr.size && pass; ++x)
      if (fr.successor(x) == 0) {
        pass = false;
        detail = "f(x) = basepoint at x=" + std::to_string(x);
      }
    add("(iv) successor avoids basepoint", pass, std::move(detail));
  }
  return report;
}

namespace {

std::uint32_t downset(const LassoFrame& fr, std::uint32_t k) {
  std::uint32_t out = 0;
  for (int x = 0; x < fr.size; ++x)
    if (fr.leq[x] & k) out |= 1u << x;
  return out;
}

} // namespace

std::uint32_t eval_on_frame(const TermPtr& t, const LassoFrame& fr) {
  switch (t->kind) {
    case Term::Kind::Var: {
      auto it = fr.valuation.find(t->name);
      if (it == fr.valuation.end()) throw std::out_of_range("unbound variable: " + t->name);
      return it->second & fr.full();
    }
    case Term::Kind::Bottom: return 0;
    case Term::Kind::Init: return 1u;
    case Term::Kind::Union: return eval_on_frame(t->lhs, fr) | eval_on_frame(t->rhs, fr);
    case Term::Kind::Complement: return fr.full() & ~eval_on_frame(t->lhs, fr);
    case Term::Kind::Next: {
      const std::uint32_t k = eval_on_frame(t->lhs, fr);
      std::uint32_t out = 0;
      for (int x = 0; x < fr.size; ++x)
        if ((k >> fr.successor(x)) & 1) out |= 1u << x;
      return out;
    }
    case Term::Kind::Diamond: return downset(fr, eval_on_frame(t->lhs, fr));
  }
  return 0;
}

std::uint32_t eval_on_frame(const NnfPtr& t, const LassoFrame& fr) {
  return eval_on_frame(nnf_to_term(t), fr);
}

LassoFrame parse_frame(const std::string& text) {
  LassoFrame fr;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int nodes = -1, loopstart = -1;
  bool explicit_leq = false;
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::pair<std::string, std::string>> vals;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const std::string content = line.substr(first);
    auto starts = [&content](const char* prefix) {
      return content.rfind(prefix, 0) == 0;
    };
    if (starts("nodes:")) {
      nodes = std::stoi(content.substr(6));
    } else if (starts("loopstart:")) {
      loopstart = std::stoi(content.substr(10));
    } else if (starts("leq:")) {
      explicit_leq = true;
      std::istringstream rest(content.substr(4));
      std::string pair_text;
      while (std::getline(rest, pair_text, ',')) {
        std::istringstream p(pair_text);
        int x, y;
        if (!(p >> x >> y)) throw ParseError("invalid leq pair: " + pair_text, lineno, 1);
        pairs.emplace_back(x, y);
      }
    } else {
      const auto eq = content.find('=');
      if (eq == std::string::npos)
        throw ParseError("expected `name = bits` valuation line: " + content, lineno, 1);
      auto trim = [](std::string s) {
        const auto a = s.find_first_not_of(" \t");
        const auto b = s.find_last_not_of(" \t");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
      };
      vals.emplace_back(trim(content.substr(0, eq)), trim(content.substr(eq + 1)));
    }
  }
  if (nodes < 0 || loopstart < 0) throw ParseError("missing nodes: or loopstart:", lineno, 1);
  fr = LassoFrame::lasso(nodes, loopstart);
  if (explicit_leq) {
    fr.leq.assign(nodes, 0);
    for (auto [x, y] : pairs) {
      if (x < 0 || x >= nodes || y < 0 || y >= nodes)
        throw ParseError("leq pair out of range", lineno, 1);
      fr.leq[x] |= 1u << y;
    }
  }
  for (const auto& [name, bits] : vals) {
    if (static_cast<int>(bits.size()) != nodes)
      throw ParseError("valuation width must equal node count: " + name, lineno, 1);
    std::uint32_t mask = 0;
    for (int i = 0; i < nodes; ++i) {
      if (bits[i] == '1') mask |= 1u << i;
      else if (bits[i] != '0')
        throw ParseError("invalid bit in valuation line: " + name, lineno, 1);
    }
    fr.valuation[name] = mask;
  }
  return fr;
}

std::string frame_to_text(const LassoFrame& fr) {
  std::ostringstream out;
  out << "nodes: " << fr.size << '\n';
  out << "loopstart: " << fr.loop_start << '\n';
  out << "leq:";
  bool first = true;
  for (int x = 0; x < fr.size; ++x)
    for (int y = 0; y < fr.size; ++y)
      if (fr.le(x, y)) {
        out << (first ? " " : ", ") << x << ' ' << y;
        first = false;
      }
  out << '\n';
  for (const auto& [name, mask] : fr.valuation) {
    out << name << " = ";
    for (int i = 0; i < fr.size; ++i) out << ((mask >> i) & 1);
    out << '\n';
  }
  return out.str();
}

} // namespace pomega
