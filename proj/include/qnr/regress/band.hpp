#pragma once

#include <stdexcept>
#include <vector>

namespace qnr::regress {

// Symmetric confidence band at level 1 - alpha over a grid of evaluation
// points: lower(x) = center(x) - halfwidth(x), upper(x) symmetric.
struct ConfidenceBand {
  std::vector<std::vector<double>> grid;  // evaluation points, one vector per row
  std::vector<double> lower;
  std::vector<double> center;
  std::vector<double> upper;
  double alpha = 0.0;
  double c = 0.0;  // critical constant scaling sigma_hat * ||ell(x)||

  std::size_t size() const { return grid.size(); }
};

// Training rule: an observation is accepted when it lies inside the band at
// the given grid point.  Endpoints are closed.
inline bool training_accept(double observed, const ConfidenceBand& band,
                            std::size_t grid_index) {
  if (grid_index >= band.size())
    throw std::out_of_range("training_accept: grid_index out of range");
  return band.lower[grid_index] <= observed && observed <= band.upper[grid_index];
}

}  // namespace qnr::regress
