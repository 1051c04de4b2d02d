#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace odokit {

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

// Eventually periodic sequence preperiod . cycle^inf over {0..A-1}.
// The constructor normalizes to the canonical form: primitive cycle and
// shortest preperiod, so two instances denote the same infinite sequence
// iff they compare equal. raw() skips normalization; tests use it to feed
// non-canonical representations through canonicalize().
class SymbolicPoint {
public:
  SymbolicPoint(Word preperiod, Word cycle);

  static SymbolicPoint raw(Word preperiod, Word cycle);

  const Word& preperiod() const { return preperiod_; }
  const Word& cycle() const { return cycle_; }
  std::size_t preperiod_length() const { return preperiod_.size(); }
  std::size_t cycle_length() const { return cycle_.size(); }

  Symbol at(std::size_t i) const {
    return i < preperiod_.size()
               ? preperiod_[i]
               : cycle_[(i - preperiod_.size()) % cycle_.size()];
  }

  Symbol max_symbol() const;

  // Drops the first `steps` symbols; canonical in, canonical out.
  SymbolicPoint shifted(std::size_t steps = 1) const;

  SymbolicPoint canonicalized() const;

  bool operator==(const SymbolicPoint& o) const {
    return preperiod_ == o.preperiod_ && cycle_ == o.cycle_;
  }
  bool operator<(const SymbolicPoint& o) const;

private:
  struct RawTag {};
  SymbolicPoint(RawTag, Word preperiod, Word cycle);

  Word preperiod_;
  Word cycle_;
};

// True iff the two representations denote the same infinite sequence,
// decided by symbol-by-symbol comparison over a window that covers both
// preperiods plus both cycles. Independent of canonicalization; tests use
// it as the oracle for canonicalize().
bool denotes_same_sequence(const SymbolicPoint& a, const SymbolicPoint& b);

// First index where the denoted sequences disagree, or nullopt when equal.
std::optional<std::size_t> first_disagreement(const SymbolicPoint& a,
                                              const SymbolicPoint& b);

}  // namespace odokit
