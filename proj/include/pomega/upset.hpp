#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace pomega {

/// An ultimately periodic subset of the natural numbers, stored as a finite
/// stem bit pattern followed by a repeating loop bit pattern.
///
/// Instances are kept in canonical form: the loop has minimal period and the
/// stem has minimal length, so two UpSets denote the same subset of the
/// naturals exactly when they compare equal.
class UpSet {
public:
  /// The empty set.
  UpSet() : loop_{false} {}

  /// Builds from raw stem/loop patterns and canonicalizes. The loop must be
  /// nonempty.
  UpSet(std::vector<bool> stem, std::vector<bool> loop);

  static UpSet empty();
  static UpSet all();
  /// {0}
  static UpSet initial();
  /// {n}
  static UpSet singleton(std::uint64_t n);

  /// Parses the text form `stem;loop`, both bitstrings, e.g. "1;0" is {0}
  /// and ";10" is the even numbers.
  static UpSet parse(const std::string& text);
  std::string str() const;

  bool contains(std::uint64_t n) const;
  bool is_empty() const { return stem_.empty() && loop_.size() == 1 && !loop_[0]; }
  bool is_all() const { return stem_.empty() && loop_.size() == 1 && loop_[0]; }
  /// True when the set is infinite, i.e. the loop has a set bit.
  bool is_infinite() const;

  UpSet complement() const;
  UpSet join(const UpSet& other) const;
  UpSet meet(const UpSet& other) const;
  /// {n | n+1 in S}
  UpSet next() const;
  /// {n | n <= m for some m in S}: all of omega when S is infinite,
  /// {0..max S} when S is finite and nonempty, empty when S is empty.
  UpSet eventually() const;

  bool subset_of(const UpSet& other) const;

  bool operator==(const UpSet& other) const {
    return stem_ == other.stem_ && loop_ == other.loop_;
  }
  bool operator!=(const UpSet& other) const { return !(*this == other); }
  bool operator<(const UpSet& other) const {
    if (stem_ != other.stem_) return stem_ < other.stem_;
    return loop_ < other.loop_;
  }

  const std::vector<bool>& stem() const { return stem_; }
  const std::vector<bool>& loop() const { return loop_; }

private:
  void canonicalize();

  std::vector<bool> stem_;
  std::vector<bool> loop_; // nonempty

  friend UpSet pointwise(const UpSet& a, const UpSet& b, bool (*f)(bool, bool));
};

/// Assignment of ultimately periodic sets to variable names.
using Valuation = std::map<std::string, UpSet>;

/// Parses valuation file text: one `name = stem;loop` line per variable;
/// blank lines and lines starting with '#' are skipped.
Valuation parse_valuation(const std::string& text);
std::string valuation_to_text(const Valuation& v);

} // namespace pomega
