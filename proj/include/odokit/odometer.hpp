#pragma once

#include <cstdint>
#include <vector>

namespace odokit {

// Finite prefix (m_1, ..., m_J) of an odometer's periodic structure:
// nondecreasing positive integers with m_j | m_{j+1}.
class PeriodicStructure {
public:
  explicit PeriodicStructure(std::vector<std::uint64_t> levels);

  std::size_t depth() const { return levels_.size(); }
  std::uint64_t level_modulus(std::size_t j) const { return levels_[j]; }
  const std::vector<std::uint64_t>& levels() const { return levels_; }

  bool operator==(const PeriodicStructure& o) const {
    return levels_ == o.levels_;
  }

private:
  std::vector<std::uint64_t> levels_;
};

// Coherent residue tower (x_1, ..., x_J), x_j in {0..m_j-1},
// x_j == x_{j+1} (mod m_j). Plain data; the host system validates.
struct OdometerPoint {
  std::vector<std::uint64_t> residues;

  bool operator==(const OdometerPoint& o) const {
    return residues == o.residues;
  }
  bool operator<(const OdometerPoint& o) const {
    return residues < o.residues;
  }
};

// Throws unless the residues form a coherent tower for the structure.
void require_coherent(const PeriodicStructure& structure,
                      const OdometerPoint& point);

// g_m^steps: coordinatewise +steps mod m_j. Coherence is preserved.
OdometerPoint advance(const PeriodicStructure& structure,
                      const OdometerPoint& point, std::uint64_t steps);

// Number of leading levels on which the two towers agree.
std::size_t agreeing_levels(const OdometerPoint& a, const OdometerPoint& b);

// Smallest coherent tower whose first `levels` entries match `point`:
// deeper residues repeat the level-`levels` value.
OdometerPoint lift_prefix(const PeriodicStructure& structure,
                          const OdometerPoint& point, std::size_t levels);

}  // namespace odokit
